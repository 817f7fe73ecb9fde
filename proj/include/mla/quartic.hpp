// Complex scalars as rational pairs, symmetric powers of C^d, and the quartic constructions h_S, g_S, g_{J,S}.
#pragma once

#include <utility>
#include <vector>

#include "mla/decision.hpp"
#include "mla/equivar.hpp"
#include "mla/metric.hpp"

namespace mla {

struct Cx {
  Q re, im;
  Cx() = default;
  Cx(Q r, Q i = 0) : re(std::move(r)), im(std::move(i)) {}
  Cx operator+(const Cx& o) const { return {re + o.re, im + o.im}; }
  Cx operator-(const Cx& o) const { return {re - o.re, im - o.im}; }
  Cx operator*(const Cx& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  Cx conj() const { return {re, -im}; }
  bool is_zero() const { return re == 0 && im == 0; }
  bool operator==(const Cx& o) const { return re == o.re && im == o.im; }
};
using CVec = std::vector<Cx>;

// Complex matrix as a pair of real matrices.
struct CMat {
  Matrix re, im;
  CMat() = default;
  CMat(std::size_t r, std::size_t c) : re(r, c), im(r, c) {}
  std::size_t rows() const { return re.rows(); }
  std::size_t cols() const { return re.cols(); }
  Cx at(std::size_t i, std::size_t j) const { return {re(i, j), im(i, j)}; }
  void set(std::size_t i, std::size_t j, const Cx& c) {
    re(i, j) = c.re;
    im(i, j) = c.im;
  }
  CVec col(std::size_t j) const;
  CVec apply(const CVec& v) const;
  CMat operator*(const CMat& o) const;
  CMat operator-(const CMat& o) const;
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

// Realification with coordinate order (Re z_1, Im z_1, Re z_2, ...).
Vec realify(const CVec& v);
CVec complexify(const Vec& v);
Matrix realify(const CMat& m);  // complex-linear map
// Real matrix of the antilinear map v -> m conj(v).
Matrix realify_antilinear(const CMat& m);
// Complex coordinates of v in a complex-independent family; throws if v is not in the span.
CVec complex_coords(const std::vector<CVec>& basis, const CVec& v);

// Monomials of degree k in d variables, sorted index tuples in lexicographic order.
class SymPower {
 public:
  SymPower(std::size_t d, std::size_t k);
  std::size_t d() const { return d_; }
  std::size_t k() const { return k_; }
  std::size_t size() const { return monos_.size(); }
  const std::vector<std::size_t>& mono(std::size_t i) const { return monos_[i]; }
  std::size_t index(std::vector<std::size_t> idx) const;
  // prod of factorials of multiplicities
  Q multiplicity_factorial(std::size_t i) const;

 private:
  std::size_t d_, k_;
  std::vector<std::vector<std::size_t>> monos_;
};

// Product S^a x S^b -> S^{a+b} of symmetric tensors on C^d (complex bilinear).
CVec sym_mul(const SymPower& a, const CVec& x, const SymPower& b, const CVec& y);
// Image of x in S^k under the antilinear map induced by v -> m conj(v) on C^d.
CVec sym_antilinear(const SymPower& p, const CMat& m, const CVec& x);
// Derivation action of a complex endomorphism of C^d on S^k.
CVec sym_derive(const SymPower& p, const CMat& a, const CVec& x);
// Contraction i_v: S^k -> S^{k-1} with i_v(f_t) = omega(v, f_t).
CVec sym_contract(const SymPower& p, const Matrix& omega, const CVec& v, const CVec& x);

// Standard symplectic form on C^{2n}: omega(f_a, f_{n+a}) = 1.
Matrix standard_omega(std::size_t n);
// Endomorphism of C^{2n} given by L in S^2: (xy) u = omega(x,u) y + omega(y,u) x.
CMat sp_action(const Matrix& omega, const SymPower& s2, const CVec& l);
// Inverse of sp_action on its image; throws if a is not in sp(E, omega).
CVec sp_element(const Matrix& omega, const SymPower& s2, const CMat& a);

struct HSpan {
  std::vector<CVec> basis;  // complex basis inside S^2 E, each a contraction S_{f_a,f_b}
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  Subspace real_span;  // realified, inside R^{2 dim S^2 E}
};
// h_S for S in S^4 C^{2n} with the standard omega.
HSpan hs_span(std::size_t n, const CVec& s);
// S in (S^4 E)^{h_S}.
Check check_cru(std::size_t n, const CVec& s);
bool hs_is_abelian(std::size_t n, const CVec& s);

struct GJS {
  LieAlgebra complex_realified;  // g_S as a real Lie algebra of twice the complex dimension
  MetricLieAlgebra g;            // g_{J,S} on the tau-fixed real subspace
  EquivStructure phi;            // Sp(1) by sigma (x) 1, quaternionic preset
  std::size_t hs_dim = 0;        // real dimension of (h_S)^tau
};
// The quaternionic structure is v -> j conj(v); throws when cru fails or j is not compatible.
GJS build_gJS(std::size_t n, const CVec& s, const CMat& j);
// E_+ complex basis: Lagrangian of dimension n with S in S^4 E_+.
bool is_tame_witness(std::size_t n, const CVec& s, const std::vector<CVec>& e_plus);

}  // namespace mla
