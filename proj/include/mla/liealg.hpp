// Lie algebras by structure constants, modules, radicals and socles.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mla/decision.hpp"
#include "mla/exactlin.hpp"

namespace mla {

class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t n, std::vector<std::string> names = {});

  std::size_t dim() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  void set_names(std::vector<std::string> names);

  const Q& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
  // Sets [e_i,e_j] = v and [e_j,e_i] = -v.
  void set_bracket(std::size_t i, std::size_t j, const Vec& v);
  // Adds x e_k to [e_i,e_j] (and the antisymmetric counterpart).
  void add_bracket(std::size_t i, std::size_t j, std::size_t k, const Q& x);

  Vec bracket(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  Matrix ad(std::size_t i) const;
  Matrix ad(const Vec& x) const;
  bool is_abelian() const;
  bool operator==(const LieAlgebra& o) const { return n_ == o.n_ && c_ == o.c_; }

  static LieAlgebra abelian(std::size_t n);

 private:
  std::size_t n_ = 0;
  std::vector<std::string> names_;
  std::vector<Q> c_;
};

struct JacobiResult {
  bool ok = true;
  std::array<std::size_t, 3> triple{0, 0, 0};
};
JacobiResult check_jacobi(const LieAlgebra& l);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
// Change of basis: columns of t are the new basis vectors in old coordinates.
LieAlgebra change_basis(const LieAlgebra& l, const Matrix& t);
// Structure of l restricted to a subalgebra with the given basis (columns).
LieAlgebra subalgebra(const LieAlgebra& l, const Subspace& s);
// Quotient by an ideal; rep holds the lifts (columns) of the quotient basis.
LieAlgebra quotient(const LieAlgebra& l, const Subspace& ideal, Matrix* rep = nullptr);

Subspace bracket_span(const LieAlgebra& l, const Subspace& u, const Subspace& v);
bool is_subalgebra(const LieAlgebra& l, const Subspace& u);
bool is_ideal(const LieAlgebra& l, const Subspace& u);
Subspace center(const LieAlgebra& l);
bool is_derivation(const LieAlgebra& l, const Matrix& d);

struct Series {
  std::vector<Subspace> derived;  // g, g', g'', ... ending at the stable term
  std::vector<Subspace> lower;    // g^1 = g, g^2 = [g,g], ... ending at the stable term
  Subspace center;
  bool solvable = false;
  bool nilpotent = false;
  std::optional<std::size_t> nilindex;  // smallest k with g^{k+1} = 0
};
Series series(const LieAlgebra& l);

Matrix killing_form(const LieAlgebra& l);
Subspace radical(const LieAlgebra& l);
Subspace nilpotent_radical(const LieAlgebra& l);

// Representation given by one matrix per basis vector of the algebra.
struct LieModule {
  LieAlgebra alg;
  std::vector<Matrix> rho;
  std::size_t space_dim = 0;  // used only when alg has dimension 0
  std::size_t dim() const { return rho.empty() ? space_dim : rho[0].rows(); }
  Matrix act(const Vec& x) const;
};
LieModule adjoint_module(const LieAlgebra& l);
LieModule trivial_module(const LieAlgebra& l, std::size_t dim);
Check check_module(const LieModule& m);

Subspace module_closure(const LieModule& m, const Subspace& u);
Subspace largest_submodule_in(const LieModule& m, const Subspace& u);
bool is_submodule(const LieModule& m, const Subspace& u);
LieModule restrict_module(const LieModule& m, const Subspace& w);
// Quotient module; rep holds lifts of the quotient basis.
LieModule quotient_module(const LieModule& m, const Subspace& w, Matrix* rep = nullptr);
Subspace invariants(const LieModule& m);
Subspace moving_part(const LieModule& m);  // span of all rho(x) V

Decision module_is_semisimple(const LieModule& m);
Subspace semisimplification_kernel(const LieModule& m);
std::vector<Subspace> radical_chain(const LieAlgebra& l);
Subspace socle(const LieModule& m);
Subspace socle_ideal(const LieAlgebra& l);

// Yes with vectors = {x, kernel basis of ad...} when ad(x) = d; throws if d is not a derivation.
Decision inner_derivation_solve(const LieAlgebra& l, const Matrix& d);

}  // namespace mla
