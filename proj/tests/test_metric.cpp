#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "mla/metric.hpp"
#include "oracles.hpp"

using namespace mla;
using fx::e;

namespace {

MetricLieAlgebra osc(const std::vector<Q>& lam) { return {fx::osc_alg(lam), fx::osc_form(lam.size())}; }

MetricLieAlgebra sl2_killing() { return {fx::sl2(), killing_form(fx::sl2())}; }

MetricLieAlgebra h1_double() { return {fx::h1_double(), fx::h1_double_form()}; }

// sl(2) tensored with Q(sqrt 2), viewed over Q; form is Killing times the field trace.
MetricLieAlgebra sl2_sqrt2() {
  LieAlgebra s = fx::sl2();
  LieAlgebra l(6);
  // basis x_i (x) 1 at i, x_i (x) t at 3 + i, t^2 = 2
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Vec b = s.bracket(i, j);
      for (std::size_t k = 0; k < 3; ++k) {
        if (b[k] == 0) continue;
        l.add_bracket(i, j, k, b[k] / 2);  // add_bracket is applied to both orders
        l.add_bracket(i, 3 + j, 3 + k, b[k] / 2);
        l.add_bracket(3 + i, j, 3 + k, b[k] / 2);
        l.add_bracket(3 + i, 3 + j, k, b[k]);
      }
    }
  Matrix k = killing_form(s), g(6, 6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      g(i, j) = 2 * k(i, j);
      g(3 + i, 3 + j) = 4 * k(i, j);
    }
  return {l, g};
}

// Brute-force invariance by expanding all basis triples.
bool invariance_oracle(const MetricLieAlgebra& g) {
  std::size_t n = g.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Q lhs = 0, rhs = 0;
        for (std::size_t m = 0; m < n; ++m) {
          lhs += g.alg.c(x, y, m) * g.form(m, z);
          rhs += g.form(y, m) * g.alg.c(x, z, m);
        }
        if (lhs != -rhs) return false;
      }
  return true;
}

// Centroid dimension from the defining equations P[x,y] = [Px,y] and GP symmetric.
std::size_t centroid_dim_oracle(const MetricLieAlgebra& g) {
  std::size_t n = g.dim(), nv = n * n;
  std::vector<Vec> rows;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t k = 0; k < n; ++k) {
        Vec r(nv);
        for (std::size_t m = 0; m < n; ++m) {
          r[k * n + m] += g.alg.c(x, y, m);
          r[m * n + x] -= g.alg.c(m, y, k);
        }
        if (!is_zero(r)) rows.push_back(r);
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec r(nv);
      for (std::size_t k = 0; k < n; ++k) {
        r[k * n + j] += g.form(i, k);
        r[k * n + i] -= g.form(j, k);
      }
      if (!is_zero(r)) rows.push_back(r);
    }
  if (rows.empty()) return nv;
  return nv - oracle::gauss_rank(Matrix::from_rows(nv, rows));
}

Matrix random_invertible(std::mt19937& gen, std::size_t n) {
  Matrix t = oracle::rand_matrix(gen, n, n, -1, 1);
  while (!inverse(t)) t = oracle::rand_matrix(gen, n, n, -1, 1);
  return t;
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

TEST_CASE("check_metric") {
  CHECK(check_metric(osc({1})).ok);
  CHECK(check_metric(osc({1, 2})).ok);
  CHECK(check_metric(sl2_killing()).ok);
  CHECK(check_metric(h1_double()).ok);
  CHECK(check_metric(sl2_sqrt2()).ok);
  CHECK(check_jacobi(sl2_sqrt2().alg).ok);
  MetricLieAlgebra bad = osc({1});
  bad.form(1, 1) = 2;
  auto r = check_metric(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.violation.find("invariance fails") != std::string::npos);
  CHECK_FALSE(invariance_oracle(bad));
  MetricLieAlgebra degenerate = osc({1});
  degenerate.form(0, 3) = degenerate.form(3, 0) = 0;
  CHECK_FALSE(check_metric(degenerate).ok);
  // Agreement with the brute-force expansion on random perturbations.
  std::mt19937 gen(5);
  for (int t = 0; t < 20; ++t) {
    MetricLieAlgebra g = osc({1, 3});
    std::size_t i = gen() % 6, j = gen() % 6;
    Q d = oracle::rand_q(gen);
    g.form(i, j) += d;
    if (i != j) g.form(j, i) += d;
    bool nondeg = rank(g.form) == 6;
    CHECK(check_metric(g).ok == (nondeg && invariance_oracle(g)));
  }
}

TEST_CASE("perp and isotropy") {
  MetricLieAlgebra g = osc({1, 2});
  CHECK(perp(g, Subspace::whole(6)).is_zero());
  CHECK(perp(g, Subspace(6)).dim() == 6);
  CHECK(is_isotropic(g, Subspace::span(6, {e(6, 0)})));
  CHECK_FALSE(is_isotropic(g, Subspace::span(6, {e(6, 1)})));
  std::mt19937 gen(8);
  for (int t = 0; t < 20; ++t) {
    std::size_t k = 1 + gen() % 5;
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < k; ++i) vs.push_back(oracle::rand_vec(gen, 6));
    Subspace u = Subspace::span(6, vs);
    Subspace p = perp(g, u);
    CHECK(u.dim() + p.dim() == 6);
    for (auto& a : u.vecs())
      for (auto& b : p.vecs()) CHECK(g.pair(a, b) == 0);
    CHECK(perp(g, p) == u);
  }
}

TEST_CASE("canonical isotropic ideal") {
  auto c = canonical_isotropic_ideal(h1_double());
  CHECK(c.ri == Subspace::span(6, {e(6, 5), e(6, 0), e(6, 1)}));
  CHECK(c.quotient_abelian);
  MetricLieAlgebra ab{LieAlgebra::abelian(3), Matrix::identity(3)};
  CHECK(canonical_isotropic_ideal(ab).ri.is_zero());
  for (const auto& g : {osc({1}), osc({1, 2}), h1_double(), sl2_killing()}) {
    auto ci = canonical_isotropic_ideal(g);
    CHECK(is_isotropic(g, ci.ri));
    CHECK(is_ideal(g.alg, ci.ri));
  }
  // Oscillator: R_1 = span{X,Y,Z}, R_2 = span{Z}, ri = span{Z}.
  auto co = canonical_isotropic_ideal(osc({1}));
  CHECK(co.ri == Subspace::span(4, {e(4, 0)}));
  CHECK(co.quotient_abelian);
  CHECK_FALSE(canonical_isotropic_ideal(sl2_killing()).quotient_abelian);
}

TEST_CASE("ideals and their complements") {
  for (const auto& g : {osc({1, 2}), h1_double(), metric_direct_sum(osc({1}), sl2_killing())}) {
    LieModule ad = adjoint_module(g.alg);
    std::mt19937 gen(3);
    for (int t = 0; t < 10; ++t) {
      Subspace i = module_closure(ad, Subspace::span(g.dim(), {oracle::rand_vec(gen, g.dim())}));
      Subspace ip = perp(g, i);
      CHECK(is_ideal(g.alg, ip));
      // <[I^perp, I], g> = 0
      CHECK(bracket_span(g.alg, ip, i).is_zero());
    }
  }
}

TEST_CASE("symmetric centroid") {
  for (const auto& g : {osc({1}), osc({1, 2}), sl2_killing(), h1_double(), sl2_sqrt2(),
                        metric_direct_sum(osc({1}), osc({2}))}) {
    auto c = symmetric_centroid(g);
    CHECK(c.size() == centroid_dim_oracle(g));
    for (const auto& p : c) {
      for (std::size_t y = 0; y < g.dim(); ++y) CHECK(p * g.alg.ad(y) == g.alg.ad(y) * p);
      CHECK((g.form * p).is_symmetric());
    }
    // identity lies in the span
    std::vector<Vec> cols;
    for (const auto& p : c) {
      Vec v;
      for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) v.push_back(p(i, j));
      cols.push_back(v);
    }
    Vec id;
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j) id.push_back(i == j ? 1 : 0);
    CHECK(Subspace::span(id.size(), cols).contains(id));
  }
  CHECK(symmetric_centroid(osc({1})).size() == 2);
  CHECK(symmetric_centroid(sl2_killing()).size() == 1);
  CHECK(symmetric_centroid(sl2_sqrt2()).size() == 2);
}

TEST_CASE("decompose") {
  std::mt19937 gen(12);
  MetricLieAlgebra two = metric_direct_sum(osc({1}), osc({1}));
  MetricLieAlgebra relabeled = metric_change_basis(two, random_invertible(gen, 8));
  REQUIRE(check_metric(relabeled).ok);
  for (const auto& g : {two, relabeled, metric_direct_sum(sl2_killing(), h1_double())}) {
    auto d = decompose(g);
    REQUIRE(d.is_yes());
    const Matrix& p = d.matrices[0];
    std::size_t n = g.dim();
    CHECK(p * p == p);
    CHECK_FALSE(p.is_zero());
    CHECK(p != Matrix::identity(n));
    Subspace im = Subspace::from_cols(p);
    Subspace ker = Subspace::kernel_of(p);
    CHECK(is_ideal(g.alg, im));
    CHECK(is_ideal(g.alg, ker));
    CHECK(bracket_span(g.alg, im, ker).is_zero());
    CHECK(nondegenerate_on(g.form, im));
    for (auto& a : im.vecs())
      for (auto& b : ker.vecs()) CHECK(g.pair(a, b) == 0);
  }
  CHECK(decompose(osc({1})).is_no());
  CHECK(decompose(osc({1, 2})).is_no());
  CHECK(decompose(osc({1, Q(1, 2), 3})).is_no());
  CHECK(decompose(sl2_killing()).is_no());
  CHECK(decompose(h1_double()).is_no());
  CHECK(decompose(sl2_sqrt2()).is_unknown());
  MetricLieAlgebra line{LieAlgebra::abelian(1), Matrix::identity(1)};
  CHECK(decompose(line).is_no());
  MetricLieAlgebra plane{LieAlgebra::abelian(2), Matrix::diag({1, -1})};
  CHECK(decompose(plane).is_yes());
}

TEST_CASE("triple signature") {
  MetricLieAlgebra g = osc({1, 2});
  Matrix theta = Matrix::diag({1, -1, -1, -1, -1, 1});
  CHECK(triple_signature(g, theta) == Signature{0, 4, 0});
  MetricLieAlgebra s = sl2_killing();
  // Killing form of sl2 is diag(8, -8, 8).
  CHECK(triple_signature(s, Matrix::diag({1, -1, -1})) == Signature{1, 1, 0});
  CHECK(triple_signature(s, Matrix::identity(3)) == Signature{0, 0, 0});
  // Swap of Z and T negates the Z-T pair on g_-.
  Matrix sw = Matrix::identity(4);
  sw(0, 0) = sw(3, 3) = 0;
  sw(0, 3) = sw(3, 0) = 1;
  CHECK(triple_signature(osc({1}), sw) == Signature{1, 0, 0});
  Matrix bad = Matrix::diag({2, 1, 1, Q(1, 2)});
  CHECK_THROWS(triple_signature(osc({1}), bad));
  CHECK_THROWS(triple_signature(osc({1}), Matrix::diag({-1, 1, 1, 1})));
}

TEST_CASE("fingerprint") {
  std::mt19937 gen(4);
  for (const auto& g : {osc({1}), osc({1, 2}), h1_double(), metric_direct_sum(osc({1}), sl2_killing())}) {
    Fingerprint f = fingerprint(g);
    CHECK(f == fingerprint(g));
    CHECK(f == fingerprint(metric_change_basis(g, random_permutation(gen, g.dim()))));
    CHECK(f == fingerprint(metric_change_basis(g, random_invertible(gen, g.dim()))));
    CHECK(f.dim == g.dim());
  }
  CHECK(fingerprint(osc({1})).dim != fingerprint(osc({1, 2})).dim);
  CHECK_FALSE(fingerprint(osc({1, 2})) == fingerprint(h1_double()));
  CHECK(fingerprint(osc({1})).str() == fingerprint(osc({1})).str());
}
