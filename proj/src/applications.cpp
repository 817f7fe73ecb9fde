#include "mla/applications.hpp"

#include <stdexcept>

namespace mla {

namespace {

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

void add_wedge(Vec& v, std::size_t k, std::size_t a, std::size_t b, const Q& c) {
  if (a == b || c == 0) return;
  if (a < b)
    v[subset_index(k, {a, b})] += c;
  else
    v[subset_index(k, {b, a})] -= c;
}

Matrix restrict_operator(const Matrix& m, const Subspace& s) {
  Matrix r(s.dim(), s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    auto c = s.coords(m * s.vec(i));
    if (!c) throw std::invalid_argument("operator does not preserve the subspace");
    for (std::size_t k = 0; k < s.dim(); ++k) r(k, i) = (*c)[k];
  }
  return r;
}

}  // namespace

Check check_manin_pair(const MetricLieAlgebra& g, const Subspace& h) {
  if (2 * h.dim() != g.dim())
    return Check::fail("dim h = " + std::to_string(h.dim()) + " is not half of " + std::to_string(g.dim()));
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = i; j < h.dim(); ++j)
      if (g.pair(h.vec(i), h.vec(j)) != 0)
        return Check::fail("h not isotropic at basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = i + 1; j < h.dim(); ++j) {
      Vec b = g.alg.bracket(h.vec(i), h.vec(j));
      if (!h.contains(b))
        return Check::fail("[h_" + std::to_string(i) + ",h_" + std::to_string(j) + "] = " + vec_str(b) + " not in h");
    }
  return Check::pass();
}

Check check_manin_triple(const MetricLieAlgebra& g, const Subspace& h1, const Subspace& h2) {
  if (Check c = check_manin_pair(g, h1); !c) return Check::fail("h1: " + c.violation);
  if (Check c = check_manin_pair(g, h2); !c) return Check::fail("h2: " + c.violation);
  if (!intersect(h1, h2).is_zero()) return Check::fail("h1 and h2 intersect");
  return Check::pass();
}

ManinWitness manin_pair_build(const OrthogonalModule& a, const QuadCocycle& z, const Subspace& l_prime,
                              const Subspace& a_prime) {
  const LieAlgebra& l = a.alg();
  std::size_t n = l.dim(), m = a.adim();
  if (l_prime.ambient() != n || a_prime.ambient() != m) throw std::invalid_argument("subspace dimensions mismatch");
  if (!is_subalgebra(l, l_prime)) throw std::invalid_argument("l' is not a subalgebra");
  Signature sa = signature(a.form);
  if (sa.p != sa.q || sa.r != 0) throw std::invalid_argument("a does not have split signature");
  if (2 * a_prime.dim() != m) throw std::invalid_argument("a' does not have half dimension");
  for (std::size_t i = 0; i < a_prime.dim(); ++i)
    for (std::size_t j = i; j < a_prime.dim(); ++j)
      if (dot(a_prime.vec(i), a.form * a_prime.vec(j)) != 0) throw std::invalid_argument("a' is not isotropic");
  for (std::size_t i = 0; i < l_prime.dim(); ++i)
    for (std::size_t j = 0; j < a_prime.dim(); ++j)
      if (!a_prime.contains(a.module.act(l_prime.vec(i)) * a_prime.vec(j)))
        throw std::invalid_argument("a' is not l'-invariant");
  for (std::size_t i = 0; i < l_prime.dim(); ++i)
    for (std::size_t j = i + 1; j < l_prime.dim(); ++j)
      if (!a_prime.contains(z.alpha.eval({l_prime.vec(i), l_prime.vec(j)})))
        throw std::invalid_argument("alpha(l',l') is not inside a'");
  for (std::size_t i = 0; i < l_prime.dim(); ++i)
    for (std::size_t j = i + 1; j < l_prime.dim(); ++j)
      for (std::size_t k = j + 1; k < l_prime.dim(); ++k)
        if (z.gamma.eval({l_prime.vec(i), l_prime.vec(j), l_prime.vec(k)})[0] != 0)
          throw std::invalid_argument("gamma(l',l',l') != 0");
  QuadExtension ext = standard_model(a, z);
  std::size_t N = 2 * n + m;
  std::vector<Vec> gens;
  Matrix ann = kernel(l_prime.basis().transpose());
  for (std::size_t c = 0; c < ann.cols(); ++c) {
    Vec v(N);
    for (std::size_t k = 0; k < n; ++k) v[k] = ann(k, c);
    gens.push_back(v);
  }
  for (std::size_t c = 0; c < a_prime.dim(); ++c) {
    Vec v(N);
    for (std::size_t s = 0; s < m; ++s) v[n + s] = a_prime.vec(c)[s];
    gens.push_back(v);
  }
  for (std::size_t c = 0; c < l_prime.dim(); ++c) {
    Vec v(N);
    for (std::size_t k = 0; k < n; ++k) v[n + m + k] = l_prime.vec(c)[k];
    gens.push_back(v);
  }
  ManinWitness w{ext.g, Subspace::span(N, gens), std::nullopt};
  if (Check c = check_manin_pair(w.g, w.h1); !c) throw std::logic_error("constructed pair fails: " + c.violation);
  return w;
}

Cobracket cobracket_from_triple(const ManinWitness& w) {
  if (!w.h2) throw std::invalid_argument("cobracket needs a Manin triple");
  if (Check c = check_manin_triple(w.g, w.h1, *w.h2); !c) throw std::invalid_argument("not a Manin triple: " + c.violation);
  std::size_t k = w.h1.dim();
  const Matrix& e = w.h1.basis();
  Matrix pairing = e.transpose() * w.g.form * w.h2->basis();
  auto pinv = inverse(pairing);
  if (!pinv) throw std::logic_error("h2 does not pair with h1");
  Matrix f = w.h2->basis() * *pinv;  // <e_i, f_j> = delta_ij
  Cobracket out;
  out.dual = LieAlgebra(k);
  out.delta = Matrix(k * (k - 1) / 2, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      Vec br = w.g.alg.bracket(f.col(a), f.col(b));
      Vec c(k);
      for (std::size_t i = 0; i < k; ++i) c[i] = w.g.pair(e.col(i), br);
      out.dual.set_bracket(a, b, c);
      for (std::size_t i = 0; i < k; ++i) out.delta(subset_index(k, {a, b}), i) = c[i];
    }
  LieAlgebra h1 = subalgebra(w.g.alg, w.h1);
  auto delta_of = [&](const Vec& x) {
    Vec r(out.delta.rows());
    for (std::size_t i = 0; i < k; ++i)
      if (x[i] != 0) axpy(r, x[i], out.delta.col(i));
    return r;
  };
  // ad_x on Lambda^2 h1
  auto ad2 = [&](std::size_t x, const Vec& v) {
    Vec r(v.size());
    const auto& subs = subsets(k, 2);
    for (std::size_t s = 0; s < subs.size(); ++s) {
      if (v[s] == 0) continue;
      std::size_t a = subs[s][0], b = subs[s][1];
      Vec xa = h1.bracket(x, a), xb = h1.bracket(x, b);
      for (std::size_t t = 0; t < k; ++t) {
        add_wedge(r, k, t, b, v[s] * xa[t]);
        add_wedge(r, k, a, t, v[s] * xb[t]);
      }
    }
    return r;
  };
  out.cocycle = Check::pass();
  for (std::size_t i = 0; i < k && out.cocycle.ok; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Vec lhs = delta_of(h1.bracket(i, j));
      Vec rhs = sub(ad2(i, out.delta.col(j)), ad2(j, out.delta.col(i)));
      if (lhs != rhs) {
        out.cocycle = Check::fail("cocycle identity fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        break;
      }
    }
  auto jr = check_jacobi(out.dual);
  out.co_jacobi = jr.ok ? Check::pass()
                        : Check::fail("co-Jacobi fails at (" + std::to_string(jr.triple[0]) + "," +
                                      std::to_string(jr.triple[1]) + "," + std::to_string(jr.triple[2]) + ")");
  return out;
}

bool ExtrinsicReport::ok() const {
  for (const auto& [n, c] : items)
    if (!c.ok) return false;
  return true;
}

std::string ExtrinsicReport::first_failure() const {
  for (const auto& [n, c] : items)
    if (!c.ok) return n + ": " + c.violation;
  return {};
}

ExtrinsicReport check_extrinsic(const ExtrinsicTriple& t) {
  const LieAlgebra& l = t.g.alg;
  std::size_t n = l.dim();
  Matrix id = Matrix::identity(n);
  if (!is_derivation(l, t.D)) throw std::invalid_argument("D is not a derivation");
  if (!(t.theta * t.theta == id)) throw std::invalid_argument("theta is not an involution");
  ExtrinsicReport r;
  auto add = [&](const std::string& name, bool ok, const std::string& why) {
    r.items.emplace_back(name, ok ? Check::pass() : Check::fail(why));
  };
  Check metric = check_metric(t.g);
  r.items.emplace_back("metric", metric);
  add("D antisymmetric", (t.D.transpose() * t.g.form + t.g.form * t.D).is_zero(), "D^T G + G D != 0");
  bool theta_aut = (t.theta.transpose() * t.g.form * t.theta == t.g.form);
  for (std::size_t i = 0; i < n && theta_aut; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (t.theta * l.bracket(i, j) != l.bracket(t.theta.col(i), t.theta.col(j))) {
        theta_aut = false;
        break;
      }
  add("theta isometric automorphism", theta_aut, "theta does not preserve bracket or form");
  add("D theta = -theta D", (t.D * t.theta + t.theta * t.D).is_zero(), "D and theta do not anticommute");
  add("D^3 = -D", (t.D * t.D * t.D + t.D).is_zero(), "D^3 != -D");
  // inner with xi in g_-
  std::optional<Vec> xi;
  if (t.xi) {
    if (l.ad(*t.xi) == t.D && t.theta * *t.xi == scale(Q(-1), *t.xi)) xi = t.xi;
  } else {
    Decision d = inner_derivation_solve(l, t.D);
    if (d.is_yes()) {
      Vec x = d.vectors[0];
      Vec xm = scale(Q(1, 2), sub(x, t.theta * x));
      if (l.ad(xm) == t.D) xi = xm;
    }
  }
  add("D inner", xi.has_value(), t.xi ? "given xi does not satisfy ad(xi) = D in g_-" : "no xi in g_- with ad(xi) = D");
  r.xi = xi;
  Z2Split s = z2_split(l, t.theta);
  add("(g, theta) proper", s.proper, "[g_-, g_-] != g_+");
  bool plus_proper = false;
  std::string why = "[g_+^-, g_+^-] != g_+^+";
  try {
    LieAlgebra gp = subalgebra(l, s.plus);
    Matrix tau = id + t.D * t.D * Q(2);
    plus_proper = z2_split(gp, restrict_operator(tau, s.plus)).proper;
  } catch (const std::invalid_argument& e) {
    why = e.what();
  }
  add("(g_+, tau_D) proper", plus_proper, why);
  return r;
}

Check check_fullness(const ExtrinsicTriple& t) {
  ExtrinsicSplit s = extrinsic_split(t.D, t.theta);
  const auto& f = *s.fourfold;
  // index [theta sign][tau sign]
  const Subspace& plus_minus = f[0][1];
  const Subspace& minus_minus = f[1][1];
  const Subspace& minus_plus = f[1][0];
  Subspace b = bracket_span(t.g.alg, plus_minus, minus_minus);
  if (b == minus_plus) return Check::pass();
  return Check::fail("[g_+^-, g_-^-] has dim " + std::to_string(b.dim()) + ", g_-^+ has dim " +
                     std::to_string(minus_plus.dim()));
}

Decision check_O4(const OrthogonalModule& a, const QuadCocycle& z) {
  if (!a.equiv) throw std::invalid_argument("check_O4 needs an equivariant module");
  const auto& el = a.equiv->on_l;
  const auto& ea = a.equiv->on_a;
  if (el.derivations.size() != 1 || el.automorphisms.size() != 1 || ea.derivations.size() != 1 ||
      ea.automorphisms.size() != 1)
    throw std::invalid_argument("check_O4 needs one derivation and one automorphism on l and on a");
  const LieAlgebra& l = a.alg();
  std::size_t n = l.dim(), m = a.adim();
  const Matrix& dl = el.derivations[0].m;
  const Matrix& tl = el.automorphisms[0].m;
  const Matrix& da = ea.derivations[0].m;
  const Matrix& ta = ea.automorphisms[0].m;
  // unknowns: l (0..n-1), a (n..n+m-1), z (n+m..2n+m-1)
  std::size_t N = 2 * n + m;
  auto il = [](std::size_t i) { return i; };
  auto ia = [&](std::size_t s) { return n + s; };
  auto iz = [&](std::size_t k) { return n + m + k; };

  // stage 1: l in l_-, ad(l) = D_l, rho(l) = D_a
  LinearSystem s1(n);
  for (std::size_t r = 0; r < n; ++r) {
    LinearSystem::Row row;
    for (std::size_t i = 0; i < n; ++i) {
      Q c = tl(r, i) + (r == i ? Q(1) : Q(0));
      if (c != 0) row.emplace_back(i, c);
    }
    s1.add(row);
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t k = 0; k < n; ++k) {
      LinearSystem::Row row;
      for (std::size_t i = 0; i < n; ++i)
        if (l.c(i, x, k) != 0) row.emplace_back(i, l.c(i, x, k));
      s1.add(row, dl(k, x));
    }
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      LinearSystem::Row row;
      for (std::size_t i = 0; i < n; ++i)
        if (a.module.rho[i](r, c) != 0) row.emplace_back(i, a.module.rho[i](r, c));
      s1.add(row, da(r, c));
    }
  if (!s1.consistent() || !s1.solve().particular) return Decision::no("D_l = ad(l), D_a = rho(l) has no solution l in l_-");

  // stage 2: the full affine system in (l, a, z)
  LinearSystem s2(N);
  for (std::size_t r = 0; r < n; ++r) {
    LinearSystem::Row row;
    for (std::size_t i = 0; i < n; ++i) {
      Q c = tl(r, i) + (r == i ? Q(1) : Q(0));
      if (c != 0) row.emplace_back(il(i), c);
    }
    s2.add(row);
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t k = 0; k < n; ++k) {
      LinearSystem::Row row;
      for (std::size_t i = 0; i < n; ++i)
        if (l.c(i, x, k) != 0) row.emplace_back(il(i), l.c(i, x, k));
      s2.add(row, dl(k, x));
    }
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      LinearSystem::Row row;
      for (std::size_t i = 0; i < n; ++i)
        if (a.module.rho[i](r, c) != 0) row.emplace_back(il(i), a.module.rho[i](r, c));
      s2.add(row, da(r, c));
    }
  // a in a_-
  for (std::size_t r = 0; r < m; ++r) {
    LinearSystem::Row row;
    for (std::size_t s = 0; s < m; ++s) {
      Q c = ta(r, s) + (r == s ? Q(1) : Q(0));
      if (c != 0) row.emplace_back(ia(s), c);
    }
    s2.add(row);
  }
  // z in l_-^*: z vanishes on (1 + theta_l) l
  for (std::size_t x = 0; x < n; ++x) {
    LinearSystem::Row row;
    for (std::size_t k = 0; k < n; ++k) {
      Q c = tl(k, x) + (k == x ? Q(1) : Q(0));
      if (c != 0) row.emplace_back(iz(k), c);
    }
    s2.add(row);
  }
  // da = i(l) alpha: rho(x) a - alpha(l, x) = 0
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t r = 0; r < m; ++r) {
      LinearSystem::Row row;
      for (std::size_t s = 0; s < m; ++s)
        if (a.module.rho[x](r, s) != 0) row.emplace_back(ia(s), a.module.rho[x](r, s));
      for (std::size_t i = 0; i < n; ++i) {
        Q c = z.alpha.at({i, x})[r];
        if (c != 0) row.emplace_back(il(i), -c);
      }
      s2.add(row);
    }
  // dz = <a ^ alpha> + i(l) gamma: -z([x,y]) - <a, alpha(x,y)> - gamma(l,x,y) = 0
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      LinearSystem::Row row;
      for (std::size_t k = 0; k < n; ++k)
        if (l.c(x, y, k) != 0) row.emplace_back(iz(k), -l.c(x, y, k));
      Vec fa = a.form * z.alpha.at({x, y});
      for (std::size_t s = 0; s < m; ++s)
        if (fa[s] != 0) row.emplace_back(ia(s), -fa[s]);
      for (std::size_t i = 0; i < n; ++i) {
        Q c = z.gamma.scalar_at({i, x, y});
        if (c != 0) row.emplace_back(il(i), -c);
      }
      s2.add(row);
    }
  if (!s2.consistent()) return Decision::no("da = i(l)alpha or dz = <a^alpha> + i(l)gamma has no solution");
  AffineSolution sol = s2.solve();
  if (!sol.particular) return Decision::no("da = i(l)alpha or dz = <a^alpha> + i(l)gamma has no solution");
  const Vec& p = *sol.particular;
  Decision d = Decision::yes("D is inner");
  d.vectors = {Vec(p.begin(), p.begin() + static_cast<long>(n)),
               Vec(p.begin() + static_cast<long>(n), p.begin() + static_cast<long>(n + m)),
               Vec(p.begin() + static_cast<long>(n + m), p.end())};
  return d;
}

}  // namespace mla
