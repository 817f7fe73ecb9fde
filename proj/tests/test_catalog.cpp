#include <doctest.h>

#include <map>

#include "fixtures.hpp"
#include "mla/balanced.hpp"
#include "mla/catalog.hpp"

using namespace mla;

namespace {

Signature sig(std::size_t neg, std::size_t pos) { return {neg, pos, 0}; }

Signature tsig(const Instance& x) { return triple_signature(x.g, instance_theta(x)); }

}  // namespace

TEST_CASE("oscillator algebras") {
  Instance x = osc({Q(1)});
  CHECK(x.g.dim() == 4);
  CHECK(signature(x.g.form) == sig(1, 3));
  CHECK(verify_instance(x).ok);
  // structure constants against the hand-written table
  Instance y = osc({Q(2), Q(3)});
  CHECK(y.g.alg == fx::osc_alg({Q(2), Q(3)}));
  CHECK(y.g.form == fx::osc_form(2));
  CHECK(signature(y.g.form) == sig(1, 5));
  CHECK(osc_normalize({Q(2), Q(4)}) == Vec{Q(1), Q(2)});
  CHECK(osc_normalize({Q(-3), Q(1, 2)}) == Vec{Q(1), Q(6)});
  Vec v = osc_normalize({Q(5), Q(-2), Q(7)});
  CHECK(osc_normalize(v) == v);
  CHECK_THROWS_AS(osc({Q(1), Q(0)}), std::invalid_argument);
  CHECK(decompose(x.g).is_no());
}

TEST_CASE("exponential numbers") {
  Q t(3, 2);
  ExpNum ch = ExpNum::cosh(t), sh = ExpNum::sinh(t);
  CHECK((ch * ch - sh * sh).as_rational() == Q(1));
  ExpNum c = ExpNum::cos(t), s = ExpNum::sin(t);
  CHECK((c * c + s * s).as_rational() == Q(1));
  CHECK(!ch.as_rational());
  CHECK((ExpNum::exp(1, 0) * ExpNum::exp(-1, 0)).as_rational() == Q(1));
  CHECK((ch - ch).is_zero());
  CHECK(ExpNum::cosh(0).as_rational() == Q(1));
}

TEST_CASE("Cahen-Wallach triples") {
  Instance x = cahen_wallach({Q(1)}, {});
  CHECK(verify_instance(x).ok);
  CHECK(tsig(x) == sig(1, 2));
  CHECK(signature(x.g.form) == sig(2, 2));
  Instance y = cahen_wallach({Q(1), Q(2)}, {Q(3)});
  CHECK(verify_instance(y).ok);
  CHECK(tsig(y) == sig(1, 4));
  CHECK(decompose(y.g).is_no());
  CHECK_THROWS_AS(cahen_wallach({}, {}), std::invalid_argument);

  Matrix g = cw_metric_at({Q(1)}, {}, {Q(0), Q(2), Q(0)});
  CHECK(g(2, 2) == 4);
  CHECK(g(0, 2) == 1);
  CHECK(g(1, 1) == 1);
  Matrix h = cw_metric_at({Q(2)}, {Q(3)}, {Q(0), Q(1), Q(1), Q(5)});
  CHECK(h(3, 3) == 4 - 9);

  auto [l, m] = cw_normalize({Q(3)}, {Q(2), Q(1)});
  CHECK(l == Vec{Q(1)});
  CHECK(m == Vec{Q(1, 3), Q(2, 3)});
  auto [l2, m2] = cw_normalize({}, {Q(-4), Q(2)});
  CHECK(l2.empty());
  CHECK(m2 == Vec{Q(1), Q(2)});
}

TEST_CASE("Cahen-Wallach group") {
  CWGroup grp({Q(1)}, {Q(2)});
  auto num = [](std::vector<int> v) {
    std::vector<ExpNum> r;
    for (int x : v) r.push_back(ExpNum(Q(x)));
    return r;
  };
  // [e_1, e_2] = <rho(L) e_1, e_2> = lambda <e_2, e_2> = 1
  CHECK(grp.bracket(num({1, 0, 0, 0}), num({0, 1, 0, 0})).as_rational() == Q(1));
  CWElement a{ExpNum(0), num({1, 2, 0, 1}), 0}, b{ExpNum(0), num({0, 3, 1, 1}), 0};
  CWElement ab = grp.multiply(a, b);
  CHECK(ab.z == ExpNum(Q(1, 2)) * grp.bracket(a.a, b.a));
  CWElement x{ExpNum(1), num({1, 0, 2, 0}), Q(1)};
  CWElement y{ExpNum(-2), num({0, 1, 1, 3}), Q(1, 2)};
  CWElement z{ExpNum(3), num({2, 1, 0, 1}), Q(-2)};
  CHECK(grp.multiply(grp.multiply(x, y), z) == grp.multiply(x, grp.multiply(y, z)));
  CWElement e{ExpNum(0), num({0, 0, 0, 0}), 0};
  CHECK(grp.multiply(x, e) == x);
  CHECK(grp.multiply(e, x) == x);
  // e^{-t ad L} at t = 0 is the identity
  CHECK(grp.exp_action(0, x.a) == x.a);
}

TEST_CASE("nilpotent metric Lie algebras up to dimension 9") {
  std::size_t count = 0;
  std::map<std::size_t, std::vector<std::pair<std::string, Fingerprint>>> by_dim;
  for (const auto& e : nilpotent_entries()) {
    for (std::size_t v = 0; v < e.variants.size(); ++v) {
      CAPTURE(e.id);
      CAPTURE(e.variants[v]);
      Instance x = nilpotent_le9(e.id, v);
      ++count;
      CHECK(verify_instance(x).ok);
      std::size_t nl = x.module->ldim(), na = x.module->adim();
      CHECK(x.g.dim() == 2 * nl + na);
      CHECK(x.g.dim() <= 9);
      Signature sa = signature(x.module->form);
      CHECK(signature(x.g.form) == sig(nl + sa.p, nl + sa.q));
      CHECK(series(x.g.alg).nilpotent);
      CHECK(!x.g.alg.is_abelian());
      CHECK_FALSE(decompose(x.g).is_yes());
      CHECK(is_balanced(*x.cocycle, *x.module).aggregate.is_yes());
      by_dim[x.g.dim()].push_back({x.name, fingerprint(x.g)});
    }
  }
  CHECK(count == 27);
  Instance five = nilpotent_le9("5a", 0);
  CHECK(five.g.dim() == 6);
  CHECK(series(five.g.alg).nilindex == 2u);
  // R^{1,1} is the third a-choice of entry 4(b)
  CHECK(nilpotent_entries()[4].variants[2] == "a=R^{1,1},gamma=0");
  CHECK(nilpotent_le9("4b", 2).g.dim() == 8);
  CHECK_THROWS_AS(nilpotent_le9("7", 0), std::invalid_argument);
  CHECK_THROWS_AS(nilpotent_le9("5a", 1), std::invalid_argument);
  std::size_t collisions = 0;
  for (const auto& [d, list] : by_dim)
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j)
        if (list[i].second == list[j].second) {
          ++collisions;
          MESSAGE("fingerprint does not separate " << list[i].first << " and " << list[j].first);
        }
  MESSAGE(collisions << " non-separated pairs among nilpotent entries");
}

TEST_CASE("pseudo-Hermitian triples") {
  Instance a = pseudo_hermitian("1a");
  CHECK(verify_instance(a).ok);
  CHECK(tsig(a) == sig(2, 2));
  Instance b = pseudo_hermitian("1b");
  CHECK(verify_instance(b).ok);
  CHECK(tsig(b) == sig(2, 2));
  Instance c = pseudo_hermitian("2");
  CHECK(verify_instance(c).ok);
  CHECK(tsig(c) == sig(2, 4));
  for (std::string id : {"3", "4"})
    for (std::size_t p : {0u, 1u, 2u})
      for (std::size_t r = 0; r <= p; ++r) {
        CAPTURE(id);
        CAPTURE(p);
        CAPTURE(r);
        Instance x = pseudo_hermitian(id, p, r, Q(1, 2));
        CHECK(verify_instance(x).ok);
        CHECK(tsig(x) == sig(2, 2 * (1 + p)));
      }
  CHECK_THROWS_AS(pseudo_hermitian("3", 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(pseudo_hermitian("5"), std::invalid_argument);
  for (const Instance& x : {a, b, c, pseudo_hermitian("3", 1, 1, 1), pseudo_hermitian("4", 1, 0, 2)}) {
    CAPTURE(x.name);
    Matrix tl = induced_involution(x.module->equiv->on_l);
    Matrix ta = induced_involution(x.module->equiv->on_a);
    CHECK(z2_split(x.module->alg(), tl).proper);
    CHECK(!admissible(*x.cocycle, *x.module, tl, ta).is_no());
    CHECK_FALSE(decompose(x.g).is_yes());
  }
}

TEST_CASE("para-Hermitian triples") {
  for (int id : {1, 2}) {
    Instance x = para_hermitian(id);
    CHECK(verify_instance(x).ok);
    CHECK(tsig(x).p + tsig(x).q == 4);
  }
  for (int c : {0, 1, -3}) {
    Instance x = para_hermitian(3, c);
    CHECK(verify_instance(x).ok);
    CHECK(x.g.dim() == 6);
  }
  CHECK_THROWS_AS(para_hermitian(4), std::invalid_argument);
}

TEST_CASE("g(m) family") {
  CHECK(gm_family(0).g.alg.is_abelian());
  CHECK(gm_family(0).g.dim() == 2);
  for (std::size_t m = 1; m <= 4; ++m) {
    CAPTURE(m);
    Instance x = gm_family(m);
    CHECK(verify_instance(x).ok);
    CHECK(series(x.g.alg).nilindex == 2 * m + 1);
    Z2Split s = z2_split(x.g.alg, instance_theta(x));
    CHECK(s.plus.dim() == m);
    CHECK(subalgebra(x.g.alg, s.plus).is_abelian());
    CHECK_FALSE(decompose(x.g).is_yes());
  }
  CHECK(series(gm_family(3).g.alg).nilindex == 7u);
  Fingerprint g1 = fingerprint(gm_family(1).g);
  CHECK((g1 == fingerprint(pseudo_hermitian("1a").g) || g1 == fingerprint(pseudo_hermitian("1b").g)));
  Fingerprint g2 = fingerprint(gm_family(2).g);
  CHECK(g2 == fingerprint(pseudo_hermitian("2").g));
}

TEST_CASE("h(1) index-2 modules") {
  H1Index2 m = index2_h1_modules({}, {}, 1);
  CHECK(m.module.adim() == 1);
  QuadCocycle z = index2_h1_cocycle(m, {Q(1)}, {Q(0)});
  Instance x = make_instance("h1", m.module, z);
  CHECK(verify_instance(x).ok);
  CHECK(tsig(x) == sig(2, 3));
  CHECK(admissible(z, m.module, m.theta_l, m.theta_a).is_yes());

  H1Index2 m2 = index2_h1_modules({}, {}, 2);
  CHECK(m2.module.adim() == 2);
  QuadCocycle z2 = index2_h1_cocycle(m2, {Q(1), Q(0)}, {Q(0), Q(1)});
  CHECK(admissible(z2, m2.module, m2.theta_l, m2.theta_a).is_yes());
  CHECK_THROWS_AS(index2_h1_cocycle(m2, {Q(1), Q(0)}, {Q(2), Q(0)}), std::invalid_argument);

  // lambda = (sigma_X), mu = (sigma_Y)
  H1Index2 m3 = index2_h1_modules({{Q(1), Q(0)}}, {{Q(0), Q(2)}}, 1);
  const auto& rho = m3.module.module.rho;
  CHECK(rho[0](1, 0) == 1);
  CHECK(rho[0](0, 1) == 1);
  CHECK(rho[1](3, 2) == 2);
  CHECK(rho[1](2, 3) == -2);
  CHECK(rho[1](1, 0) == 0);
  CHECK(rho[2].is_zero());
  CHECK(signature(m3.module.form) == sig(1, 4));
  QuadCocycle z3 = index2_h1_cocycle(m3, {Q(1)}, {Q(1)});
  Instance y = make_instance("h1", m3.module, z3);
  CHECK(verify_instance(y).ok);
  CHECK(tsig(y) == sig(2, 5));
  CHECK(admissible(z3, m3.module, m3.theta_l, m3.theta_a).is_yes());
  CHECK(is_balanced(z3, m3.module).aggregate.is_yes());
  CHECK_THROWS_AS(index2_h1_modules({{Q(0), Q(0)}}, {}, 1), std::invalid_argument);
}

TEST_CASE("hyper-Kaehler oel") {
  for (int lam : {-2, 0, 1, 2}) {
    CAPTURE(lam);
    Instance x = hk_oel(1, s_lambda(lam));
    CHECK(verify_instance(x).ok);
    CHECK(tsig(x) == sig(4, 4));
    Nilindices n = hk_nilindices(x);
    CHECK(n.g == 3u);
    CHECK(n.g_plus == 1u);
    CHECK(n.l == 1u);
    CHECK(check_T2(x.cocycle->alpha, *x.module, Matrix::identity(4) * Q(-1),
                   Matrix::identity(x.module->adim())));
  }
  SymPower s4(2, 4);
  CVec bad(s4.size());
  bad[s4.index({0, 0, 0, 0})] = Cx(1);
  CHECK_THROWS_AS(hk_oel(1, bad), std::invalid_argument);
}

TEST_CASE("hyper-Kaehler essig") {
  Instance x = hk_essig(1, 0);
  CHECK(x.module->ldim() == 7);
  CHECK(x.module->adim() == 8);
  CHECK(x.g.dim() == 22);
  CHECK(verify_instance(x).ok);
  CHECK(tsig(x) == sig(4, 12));
  Nilindices n = hk_nilindices(x);
  CHECK(n.g == 5u);
  CHECK(n.g_plus == 2u);
  CHECK(n.l == 2u);
  CHECK(!x.cocycle->gamma.is_zero());
  Instance y = hk_essig(1, 1);
  CHECK(verify_instance(y).ok);
  CHECK_THROWS_AS(hk_essig(1, 2), std::invalid_argument);
}

TEST_CASE("hypersymplectic twins") {
  Instance x = hk_oel(1, s_lambda(1), true);
  CHECK(verify_instance(x).ok);
  CHECK(x.phi->preset == GradingKind::para_quaternionic);
  Nilindices n = hk_nilindices(x);
  CHECK(n.g == 3u);
  CHECK(n.g_plus == 1u);
  Instance y = hk_essig(1, 0, true);
  CHECK(y.g.dim() == 22);
  CHECK(verify_instance(y).ok);
  Nilindices m = hk_nilindices(y);
  CHECK(m.g == 5u);
  CHECK(m.g_plus == 2u);
  CHECK(m.l == 2u);
}

TEST_CASE("extrinsic Cahen-Wallach families") {
  struct Case {
    std::string which;
    std::size_t n;
    Q c;
  };
  for (const Case& k : {Case{"sl2", 1, 0}, Case{"su2", 2, 1}, Case{"sl2", 2, Q(-1, 3)}}) {
    CAPTURE(k.which);
    PCWInstance p = extrinsic_pcw(k.which, k.n, k.c);
    CHECK(verify_instance(p.inst).ok);
    ExtrinsicReport r = check_extrinsic(p.triple);
    CHECK_MESSAGE(r.ok(), r.first_failure());
    CHECK(check_fullness(p.triple).ok);
    Matrix d = p.triple.D;
    CHECK(d * d * d == d * Q(-1));
    CHECK(p.inst.g.alg.ad(*p.triple.xi) == d);
    CHECK(p.l_witness == Vec{Q(0), Q(1, 2), Q(0)});
    Decision o4 = check_O4(*p.inst.module, *p.inst.cocycle);
    REQUIRE(o4.is_yes());
    CHECK(o4.vectors[0] == p.l_witness);
    CHECK(is_zero(o4.vectors[1]));
  }
  CHECK_THROWS_AS(extrinsic_pcw("so3", 1, 0), std::invalid_argument);
}
