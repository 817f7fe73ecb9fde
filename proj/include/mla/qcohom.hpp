// Cochains, differential, wedge product and the quadratic cohomology action.
#pragma once

#include <optional>
#include <vector>

#include "mla/decision.hpp"
#include "mla/equivar.hpp"

namespace mla {

// Lexicographically ordered p-subsets of {0..n-1}.
const std::vector<std::vector<std::size_t>>& subsets(std::size_t n, std::size_t p);
std::size_t subset_index(std::size_t n, const std::vector<std::size_t>& sorted);

// Alternating p-linear map on an n-dimensional algebra with values in R^m (m = 1 for scalars).
class Cochain {
 public:
  Cochain() = default;
  Cochain(std::size_t n, std::size_t p, std::size_t m, bool scalar = false);
  static Cochain scalar(std::size_t n, std::size_t p) { return Cochain(n, p, 1, true); }
  static Cochain from_vec(std::size_t n, std::size_t p, std::size_t m, bool scalar, const Vec& v);

  std::size_t n() const { return n_; }
  std::size_t degree() const { return p_; }
  std::size_t values_dim() const { return m_; }
  bool is_scalar() const { return scalar_; }
  std::size_t size() const { return data_.size(); }  // C(n,p) * m coordinates

  // Value on basis indices in any order; repeated indices give zero.
  Vec at(const std::vector<std::size_t>& idx) const;
  Q scalar_at(const std::vector<std::size_t>& idx) const { return at(idx)[0]; }
  void set(const std::vector<std::size_t>& idx, const Vec& v);
  void set(const std::vector<std::size_t>& idx, const Q& c) { set(idx, Vec{c}); }
  // Multilinear evaluation on arbitrary vectors.
  Vec eval(const std::vector<Vec>& args) const;

  const Vec& vec() const { return data_; }
  bool is_zero() const { return mla::is_zero(data_); }
  Cochain operator+(const Cochain& o) const;
  Cochain operator-(const Cochain& o) const;
  Cochain operator*(const Q& c) const;
  Cochain operator-() const { return *this * Q(-1); }
  bool operator==(const Cochain& o) const = default;

 private:
  void same_shape(const Cochain& o) const;
  std::size_t n_ = 0, p_ = 0, m_ = 1;
  bool scalar_ = true;
  Vec data_;
};

// Orthogonal l-module (rho antisymmetric for the form), optionally (h,K)-equivariant.
struct OrthogonalModule {
  LieModule module;
  Matrix form;
  std::optional<EquivPair> equiv;

  const LieAlgebra& alg() const { return module.alg; }
  std::size_t ldim() const { return module.alg.dim(); }
  std::size_t adim() const { return module.dim(); }
  Cochain zero(std::size_t p) const { return Cochain(ldim(), p, adim()); }
  Cochain scalar_zero(std::size_t p) const { return Cochain::scalar(ldim(), p); }
};
Check check_orthogonal_module(const OrthogonalModule& a);

Cochain d(const Cochain& c, const LieModule& m);  // scalar cochains ignore rho
Cochain d(const Cochain& c, const LieAlgebra& l);  // scalar cochains only
Cochain wedge(const Cochain& a, const Cochain& b, const Matrix& form);

// (S,U)^* with S: l1 -> l2 homomorphism and U: a2 -> a1 isometric embedding intertwining the actions.
Cochain pullback(const LieModule& m1, const LieModule& m2, const Matrix& s, const Matrix& u, const Cochain& c,
                 const Matrix* form1 = nullptr, const Matrix* form2 = nullptr);
Cochain pullback_scalar(const LieAlgebra& l1, const LieAlgebra& l2, const Matrix& s, const Cochain& c);

// Bases of invariant cochains under the generator-wise morphisms of pairs.
struct InvariantCochains {
  std::vector<Cochain> valued;  // C^p(l,a)^(h,K)
  std::vector<Cochain> scalar;  // C^p(l)^(h,K)
};
InvariantCochains invariant_cochains(const OrthogonalModule& a, std::size_t p);
bool is_invariant_cochain(const OrthogonalModule& a, const Cochain& c);

struct QuadCocycle {
  Cochain alpha;  // C^2(l,a)
  Cochain gamma;  // C^3(l)
  bool operator==(const QuadCocycle&) const = default;
};
struct C1Q {
  Cochain tau;    // C^1(l,a)
  Cochain sigma;  // C^2(l)
  bool operator==(const C1Q&) const = default;
};

// (S,U)^* on a quadratic cocycle of a2 (checks S, U as in pullback).
QuadCocycle pullback_cocycle(const OrthogonalModule& a1, const OrthogonalModule& a2, const Matrix& s, const Matrix& u,
                             const QuadCocycle& z);

C1Q c1q_identity(const OrthogonalModule& a);
C1Q c1q_compose(const C1Q& x, const C1Q& y, const Matrix& form);
C1Q c1q_inverse(const C1Q& x);

Check is_cocycle(const QuadCocycle& z, const OrthogonalModule& a);
// Throws std::invalid_argument when z is not a quadratic cocycle.
QuadCocycle act(const QuadCocycle& z, const C1Q& c, const OrthogonalModule& a);

// Yes: witness (tau, sigma) stored as vectors[0], vectors[1] in cochain coordinates.
// Uses invariant cochains when a carries an equivariant structure.
Decision equivalent(const QuadCocycle& z1, const QuadCocycle& z2, const OrthogonalModule& a);
C1Q witness_of(const Decision& d, const OrthogonalModule& a);

// One summand of a split of the pair (l,a): q: l -> l_i, j: a_i -> a.
struct PairSummand {
  Matrix q, j;
  OrthogonalModule module;
  QuadCocycle phi;
};
// (q,j)^* applied to a cocycle of the summand.
QuadCocycle push_summand(const PairSummand& s, const OrthogonalModule& a);
// Throws std::invalid_argument when the split is not a direct decomposition of pairs.
Decision verify_class_decomposition(const QuadCocycle& phi, const OrthogonalModule& a, const PairSummand& s1,
                                    const PairSummand& s2);

}  // namespace mla
