#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "mla/equivar.hpp"
#include "oracles.hpp"

using namespace mla;
using fx::e;

namespace {

MetricLieAlgebra osc1() { return {fx::osc_alg({1}), fx::osc_form(1)}; }

EquivStructure one_derivation(const Matrix& d, std::optional<GradingKind> kind = std::nullopt) {
  EquivStructure s = EquivStructure::trivial(d.rows());
  s.derivations.push_back({"D", d});
  s.preset = kind;
  return s;
}

// Left multiplication by i, j, k on H = R^4 with basis 1, i, j, k.
std::array<Matrix, 3> quaternion_left(bool split) {
  Q s = split ? -1 : 1;  // j^2 = k^2 = -s
  std::array<Matrix, 3> m{Matrix(4, 4), Matrix(4, 4), Matrix(4, 4)};
  auto set = [](Matrix& a, std::size_t from, std::size_t to, Q c) { a(to, from) = c; };
  // i: 1->i, i->-1, j->k, k->-j
  set(m[0], 0, 1, 1);
  set(m[0], 1, 0, -1);
  set(m[0], 2, 3, 1);
  set(m[0], 3, 2, -1);
  // j: 1->j, i->-k, j->-s, k->s i
  set(m[1], 0, 2, 1);
  set(m[1], 1, 3, -1);
  set(m[1], 2, 0, -s);
  set(m[1], 3, 1, s);
  // k: 1->k, i->j (ki = j), j -> -s*i (kj = -s i), k -> -s
  set(m[2], 0, 3, 1);
  set(m[2], 1, 2, 1);
  set(m[2], 2, 1, -s);
  set(m[2], 3, 0, -s);
  return m;
}

EquivStructure quaternionic(bool split) {
  auto q = quaternion_left(split);
  EquivStructure s = EquivStructure::trivial(4);
  s.derivations = {{"I", q[0]}, {"J", q[1]}, {"K", q[2]}};
  s.preset = split ? GradingKind::para_quaternionic : GradingKind::quaternionic;
  return s;
}

Matrix random_permutation(std::mt19937& gen, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), gen);
  Matrix t(n, n);
  for (std::size_t i = 0; i < n; ++i) t(p[i], i) = 1;
  return t;
}

}  // namespace

TEST_CASE("grading names round trip") {
  for (auto k : {GradingKind::z2, GradingKind::complex, GradingKind::para_complex, GradingKind::quaternionic,
                 GradingKind::para_quaternionic, GradingKind::extrinsic_RZ2})
    CHECK(parse_grading(grading_name(k)) == k);
  CHECK_FALSE(parse_grading("octonionic").has_value());
}

TEST_CASE("check_equivariant") {
  MetricLieAlgebra g = osc1();
  CHECK(check_equivariant(g, EquivStructure::trivial(4)).ok);
  Matrix d = g.alg.ad(3);
  EquivStructure phi = one_derivation(d, GradingKind::complex);
  CHECK(check_equivariant(g, phi).ok);
  // Perturbed entry: no longer antisymmetric (still checked for the derivation law first).
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      EquivStructure p = one_derivation(d);
      p.derivations[0].m(i, j) += 1;
      bool deriv = is_derivation(g.alg, p.derivations[0].m);
      bool anti = (p.derivations[0].m.transpose() * g.form + g.form * p.derivations[0].m).is_zero();
      CHECK(check_equivariant(g, p).ok == (deriv && anti));
    }
  // Identity is a derivation only of abelian algebras, and never antisymmetric.
  EquivStructure bad = one_derivation(Matrix::identity(4));
  auto r = check_equivariant(g, bad);
  CHECK_FALSE(r.ok);
  CHECK(r.violation.find("derivation D") != std::string::npos);
  // An isometric automorphism: theta = exp(pi ad T).
  EquivStructure z = EquivStructure::trivial(4);
  z.automorphisms.push_back({"theta", Matrix::diag({1, -1, -1, 1})});
  z.preset = GradingKind::z2;
  CHECK(check_equivariant(g, z).ok);
  z.automorphisms[0].m = Matrix::diag({-1, 1, 1, -1});
  CHECK_FALSE(check_equivariant(g, z).ok);  // [X,Y]=Z is not preserved
}

TEST_CASE("relations") {
  MetricLieAlgebra g = osc1();
  Matrix d = g.alg.ad(3);
  EquivStructure phi = one_derivation(d);
  phi.automorphisms.push_back({"theta", Matrix::diag({1, -1, -1, 1})});
  Relation conj;
  conj.kind = Relation::Kind::Conjugate;
  conj.a = "theta";
  conj.b = "D";
  conj.rhs = {{"D", 1}};
  phi.relations.push_back(conj);
  Relation pol;
  pol.kind = Relation::Kind::Polynomial;
  pol.a = "D";
  pol.poly = Poly({0, 1, 0, 1});  // t^3 + t
  phi.relations.push_back(pol);
  CHECK(check_equivariant(g, phi).ok);
  phi.relations[0].rhs = {{"D", -1}};
  auto r = check_equivariant(g, phi);
  CHECK_FALSE(r.ok);
  CHECK(r.violation.find("theta.D") != std::string::npos);
  Relation br;
  br.kind = Relation::Kind::Bracket;
  br.a = "D";
  br.b = "D";
  EquivStructure p2 = one_derivation(d);
  p2.relations.push_back(br);
  CHECK(check_relations(p2).ok);
  p2.relations[0].b = "missing";
  CHECK_FALSE(check_relations(p2).ok);
}

TEST_CASE("z2 split and symmetric pairs") {
  LieAlgebra n2 = fx::n2();
  Matrix th = Matrix::diag({-1, -1, 1});
  auto s = z2_split(n2, th);
  CHECK(s.proper);
  CHECK(s.plus == Subspace::span(3, {e(3, 2)}));
  CHECK(check_symmetric_pair(n2, th).ok);
  CHECK_FALSE(check_symmetric_pair(LieAlgebra::abelian(2), Matrix::identity(2)).ok);
  auto si = z2_split(fx::h1(), Matrix::identity(3));
  CHECK(si.minus.is_zero());
  CHECK_FALSE(si.proper);
  CHECK_THROWS(z2_split(fx::h1(), Matrix::diag({2, 1, 1})));
  // h(1) with theta = -1 on X, Y: proper, center Z lies in l_+, so not a symmetric pair.
  Matrix th1 = Matrix::diag({-1, -1, 1});
  CHECK(z2_split(fx::h1(), th1).proper);
  CHECK_FALSE(check_symmetric_pair(fx::h1(), th1).ok);
  // Properness does not depend on the basis.
  std::mt19937 gen(6);
  for (int t = 0; t < 10; ++t) {
    Matrix p = random_permutation(gen, 4);
    LieAlgebra l = change_basis(osc1().alg, p);
    Matrix theta = *inverse(p) * Matrix::diag({1, -1, -1, 1}) * p;
    CHECK(z2_split(l, theta).proper == z2_split(osc1().alg, Matrix::diag({1, -1, -1, 1})).proper);
  }
}

TEST_CASE("presets") {
  Matrix d = osc1().alg.ad(3);
  CHECK(validate_preset(one_derivation(d), GradingKind::complex).ok);
  CHECK_FALSE(validate_preset(one_derivation(d), GradingKind::para_complex).ok);
  // Para-complex on R^2 with D = diag(1,-1) and theta = -1.
  EquivStructure pc = one_derivation(Matrix::diag({1, -1}));
  pc.automorphisms.push_back({"w", Matrix::diag({-1, -1})});
  CHECK(validate_preset(pc, GradingKind::para_complex).ok);
  pc.automorphisms[0].m = Matrix::identity(2);
  CHECK_FALSE(validate_preset(pc, GradingKind::para_complex).ok);
  CHECK(validate_preset(quaternionic(false), GradingKind::quaternionic).ok);
  CHECK(validate_preset(quaternionic(true), GradingKind::para_quaternionic).ok);
  CHECK_FALSE(validate_preset(quaternionic(true), GradingKind::quaternionic).ok);
  EquivStructure flipped = quaternionic(false);
  flipped.derivations[2].m = flipped.derivations[2].m * Q(-1);
  auto r = validate_preset(flipped, GradingKind::quaternionic);
  CHECK_FALSE(r.ok);
  CHECK(r.violation.find("[I,J]=2K") != std::string::npos);
  // Extrinsic: D = ad(X/2) on sl2, theta anticommuting with D.
  LieAlgebra s = fx::sl2();
  Matrix dx = s.ad(e(3, 1, Q(1, 2)));
  EquivStructure ex = one_derivation(dx);
  Matrix th = Matrix::diag({1, -1, -1});
  ex.automorphisms.push_back({"theta", th});
  CHECK(check_equivariant_alg(s, ex).ok);
  CHECK(validate_preset(ex, GradingKind::extrinsic_RZ2).ok);
  ex.automorphisms[0].m = Matrix::identity(3);
  CHECK_FALSE(validate_preset(ex, GradingKind::extrinsic_RZ2).ok);
}

TEST_CASE("isotypic split") {
  // Complex: ker D + im D exhausts V.
  std::mt19937 gen(1);
  Matrix d = osc1().alg.ad(3);
  for (int t = 0; t < 5; ++t) {
    Matrix p = oracle::rand_matrix(gen, 4, 4, -1, 1);
    if (!inverse(p)) continue;
    Matrix dc = *inverse(p) * d * p;
    auto comps = isotypic_split(one_derivation(dc, GradingKind::complex));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].space.dim() + comps[1].space.dim() == 4);
    CHECK((comps[0].space + comps[1].space).dim() == 4);
    CHECK(comps[1].space.dim() == 2);
  }
  auto q = isotypic_split(quaternionic(false));
  CHECK(q[0].space.is_zero());
  CHECK(q[1].space.dim() == 4);
  EquivStructure pc = one_derivation(Matrix::diag({1, -1, 0}), GradingKind::para_complex);
  pc.automorphisms.push_back({"w", Matrix::diag({-1, -1, 1})});
  auto c = isotypic_split(pc);
  REQUIRE(c.size() == 3);
  CHECK(c[0].space == Subspace::span(3, {e(3, 2)}));
  CHECK(c[1].space == Subspace::span(3, {e(3, 0)}));
  CHECK(c[2].space == Subspace::span(3, {e(3, 1)}));
  Matrix nil(2, 2);
  nil(0, 1) = 1;
  CHECK_THROWS(isotypic_split(one_derivation(nil)));
  CHECK_THROWS(isotypic_split(one_derivation(Matrix::diag({1, 0}), GradingKind::complex)));
  // Components are invariant.
  for (const auto& comp : c) CHECK(is_invariant(pc, comp.space));
}

TEST_CASE("induced involution") {
  Matrix d = osc1().alg.ad(3);
  CHECK(induced_involution(one_derivation(d, GradingKind::complex)) == Matrix::diag({1, -1, -1, 1}));
  CHECK(induced_involution(quaternionic(true)) == Matrix::diag({-1, -1, -1, -1}));
}

TEST_CASE("extrinsic split") {
  auto z = extrinsic_split(Matrix(3, 3));
  CHECK(z.minus.is_zero());
  CHECK(z.tau == Matrix::identity(3));
  LieAlgebra s = fx::sl2();
  auto x = extrinsic_split(s.ad(e(3, 1, Q(1, 2))), Matrix::diag({1, -1, -1}));
  CHECK(x.plus == Subspace::span(3, {e(3, 1)}));
  CHECK(x.minus == Subspace::span(3, {e(3, 0), e(3, 2)}));
  CHECK(x.tau == Matrix::diag({-1, 1, -1}));
  REQUIRE(x.fourfold.has_value());
  // theta = +1 on H, -1 on X, Y
  CHECK((*x.fourfold)[0][0].is_zero());
  CHECK((*x.fourfold)[0][1] == Subspace::span(3, {e(3, 0)}));
  CHECK((*x.fourfold)[1][0] == Subspace::span(3, {e(3, 1)}));
  CHECK((*x.fourfold)[1][1] == Subspace::span(3, {e(3, 2)}));
  CHECK_THROWS(extrinsic_split(Matrix::identity(2)));
}

TEST_CASE("module compatibility") {
  LieAlgebra l = LieAlgebra::abelian(1);
  Matrix j(2, 2);
  j(1, 0) = 1;
  j(0, 1) = -1;
  LieModule a{l, {j}};
  EquivPair p;
  p.on_l = EquivStructure::trivial(1);
  p.on_a = EquivStructure::trivial(2);
  p.on_l.derivations.push_back({"X", Matrix(1, 1)});
  p.on_a.derivations.push_back({"X", j});
  p.on_l.automorphisms.push_back({"k", Matrix::diag({-1})});
  p.on_a.automorphisms.push_back({"k", Matrix::diag({1, -1})});
  Matrix form = Matrix::identity(2);
  CHECK(check_equivariant_module(a, form, p).ok);
  p.on_l.automorphisms[0].m = Matrix::identity(1);
  auto r = check_equivariant_module(a, form, p);
  CHECK_FALSE(r.ok);
  CHECK(r.violation.find("automorphism k") != std::string::npos);
  p.on_l.automorphisms[0].m = Matrix::diag({-1});
  p.on_a.derivations[0].m = Matrix::diag({1, 0});
  CHECK_FALSE(check_equivariant_module(a, form, p).ok);
}
