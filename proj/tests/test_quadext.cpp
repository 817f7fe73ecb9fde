#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "mla/balanced.hpp"
#include "mla/quadext.hpp"
#include "oracles.hpp"

using namespace mla;
using fx::e;

namespace {

Matrix rot(const Q& lam) {
  Matrix j(2, 2);
  j(1, 0) = lam;
  j(0, 1) = -lam;
  return j;
}

OrthogonalModule trivial_on(const LieAlgebra& l, std::size_t m, const Matrix& form) {
  return {trivial_module(l, m), form, std::nullopt};
}

// R acting on R^{2m} by rotations with speeds lam.
OrthogonalModule a_lambda(const std::vector<Q>& lam) {
  std::vector<Matrix> blocks;
  for (const auto& x : lam) blocks.push_back(rot(x));
  return {LieModule{LieAlgebra::abelian(1), {block_diag(blocks)}}, Matrix::identity(2 * lam.size()), std::nullopt};
}

Cochain eh1_alpha(const Vec& u, const Vec& w) {
  Cochain a(3, 2, u.size());
  a.set({2, 0}, u);
  a.set({2, 1}, w);
  return a;
}

// r2 + r2 = {[a1,b1]=b1, [a2,b2]=b2}
LieAlgebra r2r2() {
  LieAlgebra l(4, {"a1", "b1", "a2", "b2"});
  l.set_bracket(0, 1, e(4, 1));
  l.set_bracket(2, 3, e(4, 3));
  return l;
}

// Z2 data: R with theta = -1 rotating R^2, theta_a = diag(1,-1).
OrthogonalModule cw_module() {
  OrthogonalModule a = a_lambda({1});
  EquivStructure on_l{1, {}, {{"theta", Matrix::diag({-1})}}, {}, GradingKind::z2};
  EquivStructure on_a{2, {}, {{"theta", Matrix::diag({1, -1})}}, {}, GradingKind::z2};
  a.equiv = EquivPair{on_l, on_a};
  return a;
}

// Compares an extracted class with the original one after transporting through p o incl and the a-blocks.
Decision round_trip(const QuadExtension& model, const OrthogonalModule& a, const QuadCocycle& z,
                    const CanonicalExtension& ce, const QuadCocycle& zc) {
  std::size_t n = a.ldim(), m = a.adim();
  Matrix incl(model.g.dim(), n);
  for (std::size_t k = 0; k < n; ++k) incl(n + m + k, k) = 1;
  Matrix s = ce.ext.p_map * incl;
  Matrix u(m, ce.module.adim());
  for (std::size_t j = 0; j < ce.module.adim(); ++j)
    for (std::size_t r = 0; r < m; ++r) u(r, j) = ce.ext.i_map(n + r, j);
  return equivalent(pullback_cocycle(a, ce.module, s, u, zc), z, a);
}

}  // namespace

TEST_CASE("standard model of R acting on a_lambda is the oscillator") {
  for (const auto& lam : std::vector<std::vector<Q>>{{1}, {1, 2}, {1, Q(1, 2), 3}}) {
    OrthogonalModule a = a_lambda(lam);
    QuadExtension w = standard_model(a, {a.zero(2), a.scalar_zero(3)});
    CHECK(w.g.alg == fx::osc_alg(lam));
    CHECK(w.g.form == fx::osc_form(lam.size()));
    CHECK(signature(w.g.form) == Signature{1, 2 * lam.size() + 1, 0});
    CHECK(verify_quadratic_extension(w, a).ok());
  }
}

TEST_CASE("standard model of R^2 on a negative line") {
  LieAlgebra l = LieAlgebra::abelian(2);
  OrthogonalModule a = trivial_on(l, 1, Matrix::diag({-1}));
  Cochain al(2, 2, 1);
  al.set({0, 1}, Q(1));
  QuadExtension w = standard_model(a, {al, a.scalar_zero(3)});
  CHECK(w.g.dim() == 5);
  CHECK(signature(w.g.form) == Signature{3, 2, 0});
  Series s = series(w.g.alg);
  REQUIRE(s.nilindex);
  CHECK(*s.nilindex == 3);
  // hand expansion: [L1,L2] = A, [L1,A] = L2^*, [L2,A] = -L1^*
  CHECK(w.g.alg.bracket(3, 4) == e(5, 2));
  CHECK(w.g.alg.bracket(3, 2) == e(5, 1));
  CHECK(w.g.alg.bracket(4, 2) == e(5, 0, -1));
  Signature sg = signature(w.g.form);
  CHECK(std::min(sg.p, sg.q) >= l.dim());
}

TEST_CASE("standard model with a = 0 is the cotangent double") {
  LieAlgebra l = fx::h1();
  OrthogonalModule a = trivial_on(l, 0, Matrix(0, 0));
  QuadExtension w = standard_model(a, {a.zero(2), a.scalar_zero(3)});
  CHECK(w.g.alg == fx::h1_double());
  CHECK(w.g.form == fx::h1_double_form());
  MetricLieAlgebra ct = cotangent(l, Matrix(3, 3));
  CHECK(ct.alg == fx::h1_double());
  CHECK(ct.form == fx::h1_double_form());
  CHECK(verify_quadratic_extension(w, a).ok());
}

TEST_CASE("Jacobi of the bracket table matches the cocycle condition") {
  // r2 + r2 with alpha = a1^b1 + a2^b2: <alpha^alpha> is exact, so gamma exists for the right factor
  LieAlgebra l = r2r2();
  for (const Q& sign : {Q(1), Q(-1)}) {
    OrthogonalModule a = trivial_on(l, 1, Matrix::diag({sign}));
    Cochain al(4, 2, 1);
    al.set({0, 1}, Q(1));
    al.set({2, 3}, Q(1));
    REQUIRE(d(al, a.module).is_zero());
    Cochain w = wedge(al, al, a.form);
    REQUIRE(!w.is_zero());
    for (const Q& c : {Q(1, 2), Q(1), Q(2)}) {
      // solve d gamma = c <alpha^alpha> over the basis of C^3
      std::size_t nc = Cochain::scalar(4, 3).size();
      std::vector<Vec> cols;
      for (std::size_t k = 0; k < nc; ++k) {
        Vec v(nc);
        v[k] = 1;
        cols.push_back(d(Cochain::from_vec(4, 3, 1, true, v), l).vec());
      }
      auto sol = solve_affine(Matrix::from_cols(w.size(), cols), (w * c).vec());
      REQUIRE(sol.particular);
      QuadCocycle z{al, Cochain::from_vec(4, 3, 1, true, *sol.particular)};
      bool jac = check_jacobi(standard_model_algebra(a, z)).ok;
      CHECK(jac == (c == Q(1, 2)));
      CHECK(bool(is_cocycle(z, a)) == jac);
    }
  }
  // random pairs on n(2) acting on a plane, both verdicts
  std::mt19937 g(9);
  LieAlgebra n2 = fx::n2();
  OrthogonalModule p{LieModule{n2, {rot(1), Matrix(2, 2), Matrix(2, 2)}}, Matrix::identity(2), std::nullopt};
  int good = 0, bad = 0;
  for (int t = 0; t < 30; ++t) {
    Cochain al = Cochain::from_vec(3, 2, 2, false, oracle::rand_vec(g, 6, -1, 1));
    if (t % 2) al.set({1, 2}, Vec{0, 0});
    QuadCocycle z{al, Cochain::from_vec(3, 3, 1, true, oracle::rand_vec(g, 1))};
    bool cy = bool(is_cocycle(z, p));
    CHECK(check_jacobi(standard_model_algebra(p, z)).ok == cy);
    (cy ? good : bad)++;
  }
  CHECK(good > 0);
  CHECK(bad > 0);
}

TEST_CASE("double extension") {
  // rotation on R^{2m} by R gives the oscillator
  std::vector<Q> lam{1, 3};
  MetricLieAlgebra flat{LieAlgebra::abelian(4), Matrix::identity(4)};
  MetricLieAlgebra de = double_extension(flat, LieAlgebra::abelian(1), {block_diag({rot(1), rot(3)})}, Matrix(1, 1));
  CHECK(de.alg == fx::osc_alg(lam));
  CHECK(de.form == fx::osc_form(2));
  // signature (p+m, q+m)
  std::mt19937 g(4);
  for (int t = 0; t < 6; ++t) {
    std::size_t p = g() % 3, q = 1 + g() % 3, m = 1 + g() % 3;
    Vec dg;
    for (std::size_t i = 0; i < p; ++i) dg.push_back(-1);
    for (std::size_t i = 0; i < q; ++i) dg.push_back(1);
    MetricLieAlgebra base{LieAlgebra::abelian(p + q), Matrix::diag(dg)};
    Matrix fh = oracle::rand_matrix(g, m, m);
    fh = fh + fh.transpose();
    MetricLieAlgebra out = double_extension(base, LieAlgebra::abelian(m), std::vector<Matrix>(m, Matrix(p + q, p + q)), fh);
    CHECK(signature(out.form) == Signature{p + m, q + m, 0});
  }
  // sl2 with its Killing form, h = sl2 by ad
  LieAlgebra s = fx::sl2();
  MetricLieAlgebra ks{s, killing_form(s)};
  MetricLieAlgebra d2 = double_extension(ks, s, {s.ad(0), s.ad(1), s.ad(2)}, Matrix(3, 3));
  CHECK(check_metric(d2));
  Signature ss = signature(ks.form);
  CHECK(signature(d2.form) == Signature{ss.p + 3, ss.q + 3, 0});
  // pi not antisymmetric
  CHECK_THROWS_AS(double_extension(flat, LieAlgebra::abelian(1), {Matrix::diag({1, 0, 0, 0})}, Matrix(1, 1)),
                  std::invalid_argument);
  // h = 0 leaves g unchanged
  MetricLieAlgebra same = double_extension(ks, LieAlgebra(0), {}, Matrix(0, 0));
  CHECK(same.alg == ks.alg);
  CHECK(same.form == ks.form);
}

TEST_CASE("cotangent algebras") {
  MetricLieAlgebra ab = cotangent(LieAlgebra::abelian(3), Matrix(3, 3));
  CHECK(ab.alg.is_abelian());
  CHECK(signature(ab.form) == Signature{3, 3, 0});
  LieAlgebra s = fx::sl2();
  MetricLieAlgebra ks = cotangent(s, killing_form(s));
  CHECK(check_metric(ks));
  CHECK(signature(ks.form) == Signature{3, 3, 0});
}

TEST_CASE("quadratic extension axioms") {
  LieAlgebra l = fx::h1();
  OrthogonalModule a = trivial_on(l, 2, Matrix::identity(2));
  QuadExtension w = standard_model(a, {eh1_alpha({1, 0}, {0, 1}), a.scalar_zero(3)});
  AxiomReport ok = verify_quadratic_extension(w, a);
  CHECK(ok.ok());
  CHECK(ok.first_failure().empty());
  // non-isotropic ri
  QuadExtension bad = w;
  bad.ri = Subspace::span(w.g.dim(), {e(8, 0), e(8, 1), e(8, 5)});
  CHECK(!verify_quadratic_extension(bad, a).ok());
  // i not isometric
  QuadExtension bi = w;
  bi.i_map = w.i_map * Q(2);
  AxiomReport r = verify_quadratic_extension(bi, a);
  CHECK(!r.ok());
  CHECK(r.first_failure().find("isometry") != std::string::npos);
  // module mismatch: rho not matching the brackets
  OrthogonalModule wrong{LieModule{l, {rot(1), Matrix(2, 2), Matrix(2, 2)}}, Matrix::identity(2), std::nullopt};
  CHECK(verify_quadratic_extension(w, wrong).first_failure().find("rho") != std::string::npos);
}

TEST_CASE("h(1)* x| h(1): non-canonical and canonical structures") {
  MetricLieAlgebra g{fx::h1_double(), fx::h1_double_form()};
  LieAlgebra l = fx::h1();
  OrthogonalModule zero = trivial_on(l, 0, Matrix(0, 0));
  QuadExtension w1 = standard_model(zero, {zero.zero(2), zero.scalar_zero(3)});
  CHECK(verify_quadratic_extension(w1, zero).ok());
  CanonicalExtension ce = canonical_extension(g);
  CHECK(ce.module.alg().dim() == 3);
  CHECK(ce.module.alg().is_abelian());
  CHECK(ce.module.adim() == 0);
  CHECK(verify_quadratic_extension(ce.ext, ce.module).ok());
  CHECK(!(ce.ext.ri == w1.ri));
  Matrix s = isotropic_section(ce.ext, ce.module);
  QuadCocycle z = extract_cocycle(ce.ext, ce.module, s);
  CHECK(is_balanced(z, ce.module).aggregate.is_yes());
}

TEST_CASE("isotropic sections") {
  OrthogonalModule a = trivial_on(fx::h1(), 2, Matrix::identity(2));
  QuadExtension w = standard_model(a, {eh1_alpha({1, 0}, {0, 1}), a.scalar_zero(3)});
  std::size_t N = w.g.dim();
  Matrix s = isotropic_section(w, a);
  CHECK(w.p_map * s == Matrix::identity(3));
  CHECK((s.transpose() * w.g.form * s).is_zero());
  // canonical embedding is already isotropic
  Matrix incl(N, 3);
  for (std::size_t k = 0; k < 3; ++k) incl(5 + k, k) = 1;
  CHECK(make_isotropic(w, incl) == incl);
  // perturbed s0(L) = L + A(L) + Z(L)
  std::mt19937 g(2);
  for (int t = 0; t < 5; ++t) {
    Matrix s0 = incl;
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t r = 0; r < 5; ++r) s0(r, k) = oracle::rand_q(g);
    Matrix s1 = make_isotropic(w, s0);
    CHECK(w.p_map * s1 == Matrix::identity(3));
    CHECK((s1.transpose() * w.g.form * s1).is_zero());
    // correction moves only along ri = l*
    Matrix diff = s1 - s0;
    for (std::size_t k = 0; k < 3; ++k) CHECK(w.ri.contains(diff.col(k)));
  }
  // Z2: the section maps l_- into g_-
  OrthogonalModule cw = cw_module();
  QuadExtension wz = standard_model(cw, {cw.zero(2), cw.scalar_zero(3)});
  REQUIRE(wz.phi);
  Matrix sz = isotropic_section(wz, cw);
  Matrix th = wz.phi->automorphism(0);
  CHECK(th * sz == sz * cw.equiv->on_l.automorphism(0));
  CHECK(verify_quadratic_extension(wz, cw).ok());
}

TEST_CASE("cocycle extraction") {
  std::mt19937 g(31);
  LieAlgebra l = fx::h1();
  OrthogonalModule a = trivial_on(l, 2, Matrix::identity(2));
  QuadCocycle z{eh1_alpha({1, 0}, {0, 1}), a.scalar_zero(3)};
  z.gamma.set({0, 1, 2}, Q(3));
  QuadExtension w = standard_model(a, z);
  std::size_t N = w.g.dim();
  Matrix incl(N, 3);
  for (std::size_t k = 0; k < 3; ++k) incl(5 + k, k) = 1;
  CHECK(extract_cocycle(w, a, incl) == z);
  for (int t = 0; t < 4; ++t) {
    Matrix s0 = incl;
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t r = 0; r < 5; ++r) s0(r, k) = oracle::rand_q(g);
    QuadCocycle z2 = extract_cocycle(w, a, make_isotropic(w, s0));
    CHECK(equivalent(z, z2, a).is_yes());
  }
  CHECK_THROWS_AS(extract_cocycle(w, a, incl * Q(2)), std::invalid_argument);
}

TEST_CASE("canonical extension") {
  // balanced Eh1 model: ri(g) = l* and the class comes back
  LieAlgebra l = fx::h1();
  OrthogonalModule a = trivial_on(l, 2, Matrix::identity(2));
  QuadCocycle z{eh1_alpha({1, 0}, {0, 1}), a.scalar_zero(3)};
  REQUIRE(is_balanced(z, a).aggregate.is_yes());
  QuadExtension w = standard_model(a, z);
  CanonicalExtension ce = canonical_extension(w.g);
  CHECK(ce.ext.ri == w.ri);
  CHECK(verify_quadratic_extension(ce.ext, ce.module).ok());
  QuadCocycle zc = extract_cocycle(ce.ext, ce.module, isotropic_section(ce.ext, ce.module));
  CHECK(is_balanced(zc, ce.module).aggregate.is_yes());
  CHECK(round_trip(w, a, z, ce, zc).is_yes());
  // oscillator
  OrthogonalModule al = a_lambda({1, 2});
  QuadCocycle zo{al.zero(2), al.scalar_zero(3)};
  QuadExtension wo = standard_model(al, zo);
  CanonicalExtension co = canonical_extension(wo.g);
  CHECK(co.ext.ri == wo.ri);
  QuadCocycle zco = extract_cocycle(co.ext, co.module, isotropic_section(co.ext, co.module));
  CHECK(round_trip(wo, al, zo, co, zco).is_yes());
  // Z2-equivariant
  OrthogonalModule cw = cw_module();
  QuadCocycle zz{cw.zero(2), cw.scalar_zero(3)};
  QuadExtension wz = standard_model(cw, zz);
  CanonicalExtension cz = canonical_extension(wz.g, wz.phi);
  REQUIRE(cz.module.equiv);
  CHECK(check_orthogonal_module(cz.module));
  CHECK(verify_quadratic_extension(cz.ext, cz.module).ok());
  // abelian g
  MetricLieAlgebra ab{LieAlgebra::abelian(3), Matrix::diag({1, -1, 1})};
  CanonicalExtension ca = canonical_extension(ab);
  CHECK(ca.module.ldim() == 0);
  CHECK(ca.module.adim() == 3);
  CHECK(verify_quadratic_extension(ca.ext, ca.module).ok());
  // simple ideal: sl2 with Killing
  LieAlgebra s = fx::sl2();
  CHECK_THROWS_AS(canonical_extension(MetricLieAlgebra{s, killing_form(s)}), std::invalid_argument);
}
