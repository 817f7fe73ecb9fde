// Constructors for the explicit families, each returning verified objects.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mla/applications.hpp"
#include "mla/quadext.hpp"
#include "mla/quartic.hpp"

namespace mla {

// A metric Lie algebra with optional equivariant structure; the standard-model data when built as d_{alpha,gamma}(l,a).
struct Instance {
  std::string name;
  MetricLieAlgebra g;
  std::optional<EquivStructure> phi;
  std::optional<OrthogonalModule> module;
  std::optional<QuadCocycle> cocycle;
  std::optional<QuadExtension> ext;
};

// Standard model of a verified module and cocycle.
Instance make_instance(std::string name, const OrthogonalModule& a, const QuadCocycle& z);
// Jacobi, invariance, equivariance, preset, and properness of the induced involution when graded.
Check verify_instance(const Instance& x);
// Involution induced by the equivariant structure; throws if there is none.
Matrix instance_theta(const Instance& x);

// R^{p,q} with the first p basis vectors negative.
Matrix pseudo_euclidean(std::size_t p, std::size_t q);

// --- oscillator algebras
Instance osc(const Vec& lambda);
Vec osc_normalize(const Vec& lambda);

// --- Cahen-Wallach triples d(p,q,lambda,mu); basis (l*, e_1..e_2p, e'_1..e'_2q, l)
Instance cahen_wallach(const Vec& lambda, const Vec& mu);
std::pair<Vec, Vec> cw_normalize(const Vec& lambda, const Vec& mu);
// Metric at coordinates (z, a_1..a_p, a'_1..a'_q, l).
Matrix cw_metric_at(const Vec& lambda, const Vec& mu, const Vec& coords);

// Finite sums sum c_r e^r with r in Q(i) and c in Q(i); the representation is unique.
class ExpNum {
 public:
  ExpNum() = default;
  ExpNum(const Q& c) { add_term(Q(0), Q(0), Cx(c)); }
  static ExpNum exp(const Q& re, const Q& im);  // e^{re + i im}
  static ExpNum cosh(const Q& t);
  static ExpNum sinh(const Q& t);
  static ExpNum cos(const Q& t);
  static ExpNum sin(const Q& t);

  ExpNum operator+(const ExpNum& o) const;
  ExpNum operator-(const ExpNum& o) const;
  ExpNum operator*(const ExpNum& o) const;
  ExpNum operator-() const { return *this * ExpNum(Q(-1)); }
  bool operator==(const ExpNum& o) const { return terms_ == o.terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<Q> as_rational() const;
  std::string str() const;

 private:
  void add_term(const Q& re, const Q& im, const Cx& c);
  std::map<std::pair<Q, Q>, Cx> terms_;
};

struct CWElement {
  ExpNum z;
  std::vector<ExpNum> a;  // coordinates in e_1..e_2p, e'_1..e'_2q
  Q l;
  bool operator==(const CWElement&) const = default;
};

// The simply connected group of d(p,q,lambda,mu) on l* + a + l.
class CWGroup {
 public:
  CWGroup(const Vec& lambda, const Vec& mu);
  const Instance& triple() const { return inst_; }
  CWElement multiply(const CWElement& x, const CWElement& y) const;
  // e^{-t ad l} on a
  std::vector<ExpNum> exp_action(const Q& t, const std::vector<ExpNum>& a) const;
  ExpNum bracket(const std::vector<ExpNum>& a, const std::vector<ExpNum>& b) const;  // l*-coordinate

 private:
  Vec lam_, mu_;
  Instance inst_;
  Matrix pair_;  // [e_i, e_j] = pair_(i,j) l*
};

// --- nilpotent metric Lie algebras of dimension at most 9
struct NilpotentEntry {
  std::string id;                     // "1", "2", "3", "4a", "4b", "5a", "5b", "5c", "6"
  std::vector<std::string> variants;  // a and gamma choices
};
const std::vector<NilpotentEntry>& nilpotent_entries();
Instance nilpotent_le9(const std::string& id, std::size_t variant);

// --- pseudo-Hermitian and para-Hermitian triples
// case_id in {"1a","1b","2","3","4"}; p, r, c used by cases 3 and 4.
Instance pseudo_hermitian(const std::string& case_id, std::size_t p = 0, std::size_t r = 0, const Q& c = 0);
// case_id in {1,2,3}; c used by case 3.
Instance para_hermitian(int case_id, const Q& c = 0);
Instance gm_family(std::size_t m);

// --- h(1) with theta = diag(-1,-1,1): the modules a_{1,lambda mu} and a_{2,lambda mu}
struct H1Index2 {
  OrthogonalModule module;
  Matrix theta_l, theta_a;
  std::vector<std::size_t> trivial_minus;  // basis indices of a_-^l
};
// Covectors on l_- = span{X,Y} given as (value on X, value on Y).
H1Index2 index2_h1_modules(const std::vector<std::pair<Q, Q>>& lambda, const std::vector<std::pair<Q, Q>>& mu,
                           int variant);
// alpha(X,Y) = 0, alpha(Z,X) = u, alpha(Z,Y) = w with u, w in a_-^l coordinates; throws unless in Z_{l,0}.
QuadCocycle index2_h1_cocycle(const H1Index2& m, const Vec& u, const Vec& w);
bool in_Z_l0(const H1Index2& m, const Cochain& alpha);

// --- hyper-Kaehler and hypersymplectic triples
// S_lambda = z^4 + lambda z^2 w^2 + w^4 on C^2 (coefficients in SymPower(2,4)).
CVec s_lambda(const Q& lambda);
// Real structure J f_a = f_{n+a}, J f_{n+a} = -f_a on C^{2n}, as v -> j conj(v).
CMat quaternionic_structure(std::size_t n);
// S in S^4 of the coordinate functions on H^n = C^{2n}; with hypersymplectic, S is real on R^{2n}
// and l = R^2 (x) R^{2n}.
Instance hk_oel(std::size_t n, const CVec& s, bool hypersymplectic = false);
Instance hk_essig(std::size_t n, std::size_t p, bool hypersymplectic = false);

struct Nilindices {
  std::optional<std::size_t> g, g_plus, l;
};
// nilindex of g, of g_+ for the induced involution, and of g / ri(g)^perp.
Nilindices hk_nilindices(const Instance& x);

// --- extrinsic Cahen-Wallach embeddings
struct PCWInstance {
  Instance inst;
  ExtrinsicTriple triple;
  Vec l_witness;  // X/2 in l
};
PCWInstance extrinsic_pcw(const std::string& which, std::size_t n, const Q& c);

// Names of all families reachable by family tag.
std::vector<std::string> family_names();
// Instance built from a family tag and integer parameters; throws std::invalid_argument on bad input.
// Parameters are rational strings except the nilpotent entry id and the pcw algebra name:
//   osc l_1..l_m | cw p q l_1..l_p m_1..m_q | nilpotent id variant | kahler case [p r c] | para-kahler case [c]
//   gm m | h1-index2 variant p q (2p lambda) (2q mu) [u.. w..] | hk-oel lambda | hk-essig n p | hs-oel lambda
//   hs-essig n p | pcw sl2|su2 n c
Instance construct_family(const std::string& family, const std::vector<std::string>& params);
// A fixed representative list covering every family, in a deterministic order.
std::vector<Instance> catalog_instances();

}  // namespace mla
