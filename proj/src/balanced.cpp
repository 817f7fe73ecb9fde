#include "mla/balanced.hpp"

#include <sstream>
#include <stdexcept>

namespace mla {

namespace {

Matrix id(std::size_t n) { return Matrix::identity(n); }

// Basis of {u : u A = A u for all A in ops}.
std::vector<Matrix> commutant(const std::vector<Matrix>& ops, std::size_t d) {
  LinearSystem ls(d * d);
  for (const auto& a : ops)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        // (uA - Au)(r,c) = sum_k u(r,k) A(k,c) - A(r,k) u(k,c)
        Vec row(d * d);
        for (std::size_t k = 0; k < d; ++k) {
          row[r * d + k] += a(k, c);
          row[k * d + c] -= a(r, k);
        }
        ls.add_dense(row);
      }
  std::vector<Matrix> out;
  for (auto& v : ls.solve().kernel.col_list()) {
    Matrix u(d, d);
    for (std::size_t i = 0; i < d * d; ++i) u(i / d, i % d) = v[i];
    out.push_back(u);
  }
  return out;
}

Vec coords_in(const Subspace& s, const Vec& v, const char* what) {
  auto c = s.coords(v);
  if (!c) throw std::logic_error(std::string("vector not in ") + what);
  return *c;
}

// ad_L restricted to an ideal, in its reduced basis.
Matrix ad_on(const LieAlgebra& l, std::size_t i, const Subspace& s, const char* what) {
  Matrix m(s.dim(), s.dim());
  for (std::size_t q = 0; q < s.dim(); ++q) {
    Vec c = coords_in(s, l.bracket(unit_vec(l.dim(), i), s.vec(q)), what);
    for (std::size_t r = 0; r < s.dim(); ++r) m(r, q) = c[r];
  }
  return m;
}

Vec alpha_at(const Cochain& alpha, std::size_t i, const Vec& x) {
  return alpha.eval({unit_vec(alpha.n(), i), x});
}

Q gamma_at(const Cochain& gamma, std::size_t i, const Vec& x, const Vec& y) {
  return gamma.eval({unit_vec(gamma.n(), i), x, y})[0];
}

Subspace kernel_of_rho(const LieModule& m) {
  std::size_t n = m.alg.dim(), d = m.dim();
  Matrix a(d * d, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) a(r * d + c, i) = m.rho[i](r, c);
  return Subspace::kernel_of(a);
}

// R_k, or the zero space past the end of the chain.
Subspace chain_term(const LieAlgebra& l, std::size_t k) {
  auto chain = radical_chain(l);
  return k < chain.size() ? chain[k] : Subspace(l.dim());
}

void require_cocycle(const QuadCocycle& z, const OrthogonalModule& a) {
  if (z.alpha.n() != a.ldim() || z.alpha.degree() != 2 || z.alpha.values_dim() != a.adim())
    throw std::invalid_argument("alpha has wrong shape");
  if (z.gamma.n() != a.ldim() || z.gamma.degree() != 3 || !z.gamma.is_scalar())
    throw std::invalid_argument("gamma has wrong shape");
}

// Image of Ker(Lambda^2 u -> l) under alpha0, for u spanned by the basis of s.
Subspace image_on_bracket_kernel(const LieAlgebra& l, const Subspace& s, const Cochain& alpha0) {
  std::size_t n = l.dim(), k = s.dim();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      pairs.push_back({i, j});
      cols.push_back(l.bracket(s.vec(i), s.vec(j)));
    }
  Matrix br = Matrix::from_cols(n, cols);
  if (pairs.empty()) return Subspace(alpha0.values_dim());
  std::vector<Vec> img;
  for (auto& c : kernel(br).col_list()) {
    Vec v(alpha0.values_dim());
    for (std::size_t t = 0; t < pairs.size(); ++t)
      if (c[t] != 0) axpy(v, c[t], alpha0.eval({s.vec(pairs[t].first), s.vec(pairs[t].second)}));
    img.push_back(v);
  }
  return Subspace::span(alpha0.values_dim(), img);
}

}  // namespace

AlphaSplit alpha_split(const Cochain& alpha, const LieModule& m) {
  if (!module_is_semisimple(m).is_yes()) throw std::invalid_argument("module not semisimple: balanced set is empty");
  std::size_t d = m.dim();
  Subspace inv = invariants(m), mov = moving_part(m);
  std::vector<Vec> cols = inv.vecs();
  for (auto& v : mov.vecs()) cols.push_back(v);
  auto tinv = inverse(Matrix::from_cols(d, cols));
  if (cols.size() != d || !tinv) throw std::logic_error("invariants and moving part are not complementary");
  Vec keep(d);
  for (std::size_t i = 0; i < inv.dim(); ++i) keep[i] = 1;
  Matrix p = Matrix::from_cols(d, cols) * Matrix::diag(keep) * *tinv;
  AlphaSplit s{alpha * Q(0), alpha * Q(0)};
  for (const auto& idx : subsets(alpha.n(), alpha.degree())) {
    Vec v = alpha.at(idx), v0 = p * v;
    s.alpha0.set(idx, v0);
    s.alpha1.set(idx, sub(v, v0));
  }
  return s;
}

Decision check_A0(const QuadCocycle& z, const OrthogonalModule& a) {
  require_cocycle(z, a);
  const LieAlgebra& l = a.alg();
  std::size_t n = l.dim(), ad = a.adim();
  Subspace v0 = intersect(center(l), kernel_of_rho(a.module));
  if (v0.is_zero()) return Decision::yes("z(l) cap ker rho = 0");
  std::size_t nv = v0.dim();
  // unknowns: c (L0 = sum c_t v_t), A0, Z0
  auto ia = [&](std::size_t s) { return nv + s; };
  auto iz = [&](std::size_t k) { return nv + ad + k; };
  LinearSystem ls(nv + ad + n);
  std::vector<std::vector<Vec>> al(n, std::vector<Vec>(nv));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < nv; ++t) al[i][t] = alpha_at(z.alpha, i, v0.vec(t));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < ad; ++r) {
      Vec row(ls.nvars());
      for (std::size_t t = 0; t < nv; ++t) row[t] = al[i][t][r];
      for (std::size_t s = 0; s < ad; ++s) row[ia(s)] -= a.module.rho[i](r, s);
      ls.add_dense(row);
    }
    for (std::size_t j = 0; j < n; ++j) {
      Vec row(ls.nvars());
      for (std::size_t t = 0; t < nv; ++t) row[t] = gamma_at(z.gamma, i, v0.vec(t), unit_vec(n, j));
      Vec g = a.form * z.alpha.at({i, j});
      for (std::size_t s = 0; s < ad; ++s) row[ia(s)] += g[s];
      Vec br = l.bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) row[iz(k)] -= br[k];
      ls.add_dense(row);
    }
  }
  for (auto& sol : ls.solve().kernel.col_list()) {
    Vec c(sol.begin(), sol.begin() + nv);
    if (is_zero(c)) continue;
    Decision d = Decision::no("nonzero L0 in z(l) cap ker rho solves (i),(ii)");
    d.vectors.push_back(v0.basis() * c);
    d.vectors.push_back(Vec(sol.begin() + nv, sol.begin() + nv + ad));
    d.vectors.push_back(Vec(sol.begin() + nv + ad, sol.end()));
    return d;
  }
  return Decision::yes("only L0 = 0 solves (i),(ii)");
}

Decision check_B0(const Cochain& alpha, const OrthogonalModule& a) {
  AlphaSplit s = alpha_split(alpha, a.module);
  const LieAlgebra& l = a.alg();
  Subspace img = image_on_bracket_kernel(l, Subspace::whole(l.dim()), s.alpha0);
  if (nondegenerate_on(a.form, img)) return Decision::yes("alpha_0(Ker [,]) nondegenerate");
  Decision d = Decision::no("alpha_0(Ker [,]) degenerate");
  d.vectors = img.vecs();
  return d;
}

std::optional<IdealWitness> solve_Ak_on(const QuadCocycle& z, const OrthogonalModule& a, std::size_t k,
                                        const Subspace& ideal) {
  require_cocycle(z, a);
  const LieAlgebra& l = a.alg();
  std::size_t n = l.dim(), ad = a.adim();
  Subspace rk = chain_term(l, k);
  if (!intersect(socle_ideal(l), rk).contains(ideal) || !is_ideal(l, ideal))
    throw std::invalid_argument("candidate is not an ideal inside S(l) cap R_k(l)");
  std::size_t dk = ideal.dim(), r = rk.dim();
  auto i1 = [&](std::size_t row, std::size_t q) { return q * ad + row; };
  auto i2 = [&](std::size_t t, std::size_t q) { return ad * dk + q * r + t; };
  LinearSystem ls(ad * dk + r * dk);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix adk = ad_on(l, i, ideal, "ideal");
    Matrix adr = ad_on(l, i, rk, "R_k");
    for (std::size_t q = 0; q < dk; ++q) {
      Vec aq = alpha_at(z.alpha, i, ideal.vec(q));
      for (std::size_t row = 0; row < ad; ++row) {
        Vec eq(ls.nvars());
        for (std::size_t s = 0; s < ad; ++s) eq[i1(s, q)] += a.module.rho[i](row, s);
        for (std::size_t qq = 0; qq < dk; ++qq) eq[i1(row, qq)] -= adk(qq, q);
        ls.add_dense(eq, aq[row]);
      }
      for (std::size_t t = 0; t < r; ++t) {
        Vec eq(ls.nvars());
        Vec g = a.form * alpha_at(z.alpha, i, rk.vec(t));
        for (std::size_t s = 0; s < ad; ++s) eq[i1(s, q)] -= g[s];
        for (std::size_t u = 0; u < r; ++u) eq[i2(u, q)] += adr(u, t);
        for (std::size_t qq = 0; qq < dk; ++qq) eq[i2(t, qq)] += adk(qq, q);
        ls.add_dense(eq, gamma_at(z.gamma, i, ideal.vec(q), rk.vec(t)));
      }
    }
  }
  auto sol = ls.solve();
  if (!sol.particular) return std::nullopt;
  IdealWitness w{k, ideal, Matrix(ad, dk), Matrix(r, dk)};
  for (std::size_t q = 0; q < dk; ++q) {
    for (std::size_t s = 0; s < ad; ++s) w.phi1(s, q) = (*sol.particular)[i1(s, q)];
    for (std::size_t t = 0; t < r; ++t) w.phi2(t, q) = (*sol.particular)[i2(t, q)];
  }
  return w;
}

Check verify_Ak_witness(const QuadCocycle& z, const OrthogonalModule& a, const IdealWitness& w) {
  const LieAlgebra& l = a.alg();
  std::size_t n = l.dim();
  Subspace rk = chain_term(l, w.k);
  if (!intersect(socle_ideal(l), rk).contains(w.ideal) || !is_ideal(l, w.ideal))
    return Check::fail("not an ideal inside S(l) cap R_k(l)");
  std::size_t dk = w.ideal.dim(), r = rk.dim();
  if (w.phi1.rows() != a.adim() || w.phi1.cols() != dk || w.phi2.rows() != r || w.phi2.cols() != dk)
    return Check::fail("Phi1 or Phi2 has wrong size");
  auto phi1 = [&](const Vec& kc) { return w.phi1 * kc; };
  for (std::size_t i = 0; i < n; ++i) {
    Matrix adk = ad_on(l, i, w.ideal, "ideal");
    Matrix adr = ad_on(l, i, rk, "R_k");
    for (std::size_t q = 0; q < dk; ++q) {
      Vec e = unit_vec(dk, q), lk = adk * e;
      Vec rhs = sub(a.module.rho[i] * phi1(e), phi1(lk));
      if (alpha_at(z.alpha, i, w.ideal.vec(q)) != rhs)
        return Check::fail("(i) fails at L=e" + std::to_string(i) + ", K=k" + std::to_string(q));
      Vec p2k = w.phi2 * e, p2lk = w.phi2 * lk;
      for (std::size_t t = 0; t < r; ++t) {
        Q lhs = gamma_at(z.gamma, i, w.ideal.vec(q), rk.vec(t));
        Q val = -dot(phi1(e), a.form * alpha_at(z.alpha, i, rk.vec(t))) + dot(p2k, adr.col(t)) + p2lk[t];
        if (lhs != val) return Check::fail("(ii) fails at L=e" + std::to_string(i) + ", K=k" + std::to_string(q));
      }
    }
  }
  return Check::pass();
}

Decision check_Ak(const QuadCocycle& z, const OrthogonalModule& a, std::size_t k) {
  require_cocycle(z, a);
  if (k == 0) throw std::invalid_argument("check_Ak needs k >= 1");
  const LieAlgebra& l = a.alg();
  std::size_t n = l.dim(), ad = a.adim();
  Subspace rk = chain_term(l, k);
  Subspace v = intersect(socle_ideal(l), rk);
  if (v.is_zero()) return Decision::yes("S(l) cap R_k(l) = 0");
  std::size_t dv = v.dim(), r = rk.dim();
  std::vector<Matrix> adv(n), adr(n);
  for (std::size_t i = 0; i < n; ++i) {
    adv[i] = ad_on(l, i, v, "S(l) cap R_k");
    adr[i] = ad_on(l, i, rk, "R_k");
  }
  // Every simple ideal in v is the image of some iota in End_l(v); solve for iota jointly.
  std::vector<Matrix> ends = commutant(adv, dv);
  std::size_t ne = ends.size();
  auto i1 = [&](std::size_t row, std::size_t q) { return ne + q * ad + row; };
  auto i2 = [&](std::size_t t, std::size_t q) { return ne + ad * dv + q * r + t; };
  LinearSystem ls(ne + ad * dv + r * dv);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t q = 0; q < dv; ++q) {
      std::vector<Vec> img(ne);
      for (std::size_t c = 0; c < ne; ++c) img[c] = v.basis() * ends[c].col(q);
      std::vector<Vec> al(ne);
      for (std::size_t c = 0; c < ne; ++c) al[c] = alpha_at(z.alpha, i, img[c]);
      for (std::size_t row = 0; row < ad; ++row) {
        Vec eq(ls.nvars());
        for (std::size_t c = 0; c < ne; ++c) eq[c] = al[c][row];
        for (std::size_t s = 0; s < ad; ++s) eq[i1(s, q)] -= a.module.rho[i](row, s);
        for (std::size_t qq = 0; qq < dv; ++qq) eq[i1(row, qq)] += adv[i](qq, q);
        ls.add_dense(eq);
      }
      for (std::size_t t = 0; t < r; ++t) {
        Vec eq(ls.nvars());
        for (std::size_t c = 0; c < ne; ++c) eq[c] = gamma_at(z.gamma, i, img[c], rk.vec(t));
        Vec g = a.form * alpha_at(z.alpha, i, rk.vec(t));
        for (std::size_t s = 0; s < ad; ++s) eq[i1(s, q)] += g[s];
        for (std::size_t u = 0; u < r; ++u) eq[i2(u, q)] -= adr[i](u, t);
        for (std::size_t qq = 0; qq < dv; ++qq) eq[i2(t, qq)] -= adv[i](qq, q);
        ls.add_dense(eq);
      }
    }
  for (auto& sol : ls.solve().kernel.col_list()) {
    Matrix iota(dv, dv);
    for (std::size_t c = 0; c < ne; ++c)
      if (sol[c] != 0) iota = iota + ends[c] * sol[c];
    if (iota.is_zero()) continue;
    Subspace ideal = image(v.basis() * iota, Subspace::whole(dv));
    auto w = solve_Ak_on(z, a, k, ideal);
    if (!w) throw std::logic_error("A_k: ideal from the joint solve has no solution");
    Decision d = Decision::no("nonzero ideal in S(l) cap R_" + std::to_string(k) + " solves (i),(ii)");
    d.matrices = {ideal.basis(), w->phi1, w->phi2};
    return d;
  }
  return Decision::yes("only the zero ideal solves (i),(ii)");
}

Subspace b_submodule(const Cochain& alpha, const OrthogonalModule& a, std::size_t k) {
  const LieAlgebra& l = a.alg();
  std::size_t n = l.dim(), ad = a.adim();
  if (!module_is_semisimple(a.module).is_yes()) throw std::invalid_argument("module not semisimple");
  Subspace rk = chain_term(l, k);
  if (rk.is_zero()) return Subspace::whole(ad);
  std::size_t r = rk.dim();
  // good submodules b are c^perp with alpha in Hom(l x R_k, c) + im F; the smallest c is the
  // common kernel of all u in End_l(a) with u alpha in im F.
  std::vector<Matrix> ends = commutant(a.module.rho, ad);
  std::size_t ne = ends.size();
  auto ip = [&](std::size_t row, std::size_t t) { return ne + t * ad + row; };
  LinearSystem ls(ne + ad * r);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix adr = ad_on(l, i, rk, "R_k");
    for (std::size_t t = 0; t < r; ++t) {
      Vec av = alpha_at(alpha, i, rk.vec(t));
      std::vector<Vec> ua(ne);
      for (std::size_t c = 0; c < ne; ++c) ua[c] = ends[c] * av;
      for (std::size_t row = 0; row < ad; ++row) {
        Vec eq(ls.nvars());
        for (std::size_t c = 0; c < ne; ++c) eq[c] = ua[c][row];
        for (std::size_t s = 0; s < ad; ++s) eq[ip(s, t)] -= a.module.rho[i](row, s);
        for (std::size_t u = 0; u < r; ++u) eq[ip(row, u)] += adr(u, t);
        ls.add_dense(eq);
      }
    }
  }
  Subspace c = Subspace::whole(ad);
  for (auto& sol : ls.solve().kernel.col_list()) {
    Matrix u(ad, ad);
    for (std::size_t e = 0; e < ne; ++e)
      if (sol[e] != 0) u = u + ends[e] * sol[e];
    c = intersect(c, Subspace::kernel_of(u));
  }
  if (c.is_zero()) return Subspace::whole(ad);
  return Subspace::kernel_of(c.basis().transpose() * a.form);
}

Decision check_Bk(const Cochain& alpha, const OrthogonalModule& a, std::size_t k) {
  if (k == 0) throw std::invalid_argument("check_Bk needs k >= 1");
  Subspace b = b_submodule(alpha, a, k);
  Decision d = nondegenerate_on(a.form, b) ? Decision::yes("b_" + std::to_string(k) + " nondegenerate")
                                           : Decision::no("b_" + std::to_string(k) + " degenerate");
  d.vectors = b.vecs();
  return d;
}

const Decision* BalanceReport::find(const std::string& name) const {
  for (const auto& c : conditions)
    if (c.name == name) return &c.decision;
  return nullptr;
}

std::string BalanceReport::summary() const {
  std::ostringstream os;
  os << "balanced: " << verdict_name(aggregate.verdict);
  if (!aggregate.reason.empty()) os << " (" << aggregate.reason << ")";
  os << "\n";
  for (const auto& c : conditions) {
    os << "  " << c.name << ": " << verdict_name(c.decision.verdict);
    if (!c.decision.reason.empty()) os << " (" << c.decision.reason << ")";
    os << "\n";
  }
  return os.str();
}

BalanceReport is_balanced(const QuadCocycle& z, const OrthogonalModule& a) {
  require_cocycle(z, a);
  BalanceReport rep;
  rep.semisimple = module_is_semisimple(a.module);
  if (!rep.semisimple.is_yes()) {
    rep.aggregate = Decision::no("module not semisimple: balanced set is empty");
    return rep;
  }
  auto chain = radical_chain(a.alg());
  rep.m = chain.size() >= 2 ? chain.size() - 2 : 0;
  Verdict agg = Verdict::Yes;
  auto push = [&](std::string name, Decision d) {
    agg = combine(agg, d.verdict);
    rep.conditions.push_back({std::move(name), std::move(d)});
  };
  Decision a0 = check_A0(z, a);
  if (a0.is_no()) rep.a0_witness = a0.vectors;
  push("A0", a0);
  push("B0", check_B0(z.alpha, a));
  for (std::size_t k = 1; k <= rep.m; ++k) {
    Decision ak = check_Ak(z, a, k);
    if (ak.is_no())
      rep.ideal_witnesses.push_back({k, Subspace::from_cols(ak.matrices[0]), ak.matrices[1], ak.matrices[2]});
    push("A" + std::to_string(k), ak);
    Decision bk = check_Bk(z.alpha, a, k);
    rep.b.push_back(Subspace::span(a.adim(), bk.vectors));
    push("B" + std::to_string(k), bk);
  }
  rep.aggregate = Decision{agg, agg == Verdict::Yes ? "all conditions hold" : "some condition fails", {}, {}};
  for (const auto& c : rep.conditions)
    if (c.decision.verdict == agg && agg != Verdict::Yes) {
      rep.aggregate.reason = c.name + " " + verdict_name(agg);
      break;
    }
  return rep;
}

bool check_T2(const Cochain& alpha, const OrthogonalModule& a, const Matrix& theta_l, const Matrix& theta_a) {
  AlphaSplit s = alpha_split(alpha, a.module);
  Z2Split sp = z2_split(a.alg(), theta_l);
  Subspace img = image_on_bracket_kernel(a.alg(), sp.minus, s.alpha0);
  if (theta_a * theta_a != id(a.adim())) throw std::invalid_argument("theta_a not involutive");
  Subspace inv_plus = intersect(invariants(a.module), Subspace::kernel_of(theta_a - id(a.adim())));
  return img == inv_plus;
}

std::pair<Matrix, Matrix> z2_involutions(const OrthogonalModule& a) {
  if (!a.equiv || a.equiv->on_l.automorphisms.size() != 1 || a.equiv->on_a.automorphisms.size() != 1)
    throw std::invalid_argument("module carries no Z2 structure");
  return {a.equiv->on_l.automorphism(0), a.equiv->on_a.automorphism(0)};
}

Decision admissible(const QuadCocycle& z, const OrthogonalModule& a, const Matrix& theta_l, const Matrix& theta_a) {
  BalanceReport rep = is_balanced(z, a);
  if (rep.aggregate.is_no()) return Decision::no("not balanced: " + rep.aggregate.reason);
  if (!z2_split(a.alg(), theta_l).proper) return Decision::no("T1 fails: [l_-,l_-] != l_+");
  if (!check_T2(z.alpha, a, theta_l, theta_a)) return Decision::no("T2 fails: a^l_+ != alpha_0(Ker [,] on l_-)");
  if (rep.aggregate.is_unknown()) return Decision::unknown("balancedness undecided: " + rep.aggregate.reason);
  return Decision::yes("balanced, T1 and T2 hold");
}

CompletedIdeal complete_isotropic_ideal(const MetricLieAlgebra& g, const Matrix& theta, const Subspace& ri_minus) {
  const LieAlgebra& l = g.alg;
  std::size_t n = g.dim();
  Z2Split sp = z2_split(l, theta);
  if (!sp.minus.contains(ri_minus)) throw std::invalid_argument("ri_- not contained in g_-");
  Subspace p = intersect(sp.minus, perp(g, ri_minus));
  Subspace br = bracket_span(l, sp.minus, p);
  LinearSystem ls(br.dim());
  for (std::size_t s = 0; s < p.dim(); ++s) {
    std::vector<Vec> cols;
    for (std::size_t t = 0; t < br.dim(); ++t) cols.push_back(l.bracket(br.vec(t), p.vec(s)));
    Matrix m = Matrix::from_cols(n, cols);
    for (std::size_t r = 0; r < n; ++r) ls.add_dense(m.row(r));
  }
  std::vector<Vec> plus;
  for (auto& c : ls.solve().kernel.col_list()) plus.push_back(br.basis() * c);
  CompletedIdeal out{Subspace::span(n, plus), Subspace(n), Check::pass()};
  out.ri = out.plus + ri_minus;
  Subspace rp = perp(g, out.ri);
  if (!is_ideal(l, out.ri))
    out.verified = Check::fail("ri is not an ideal");
  else if (!is_isotropic(g, out.ri))
    out.verified = Check::fail("ri is not isotropic");
  else if (!out.ri.contains(bracket_span(l, rp, rp)))
    out.verified = Check::fail("ri^perp / ri is not abelian");
  return out;
}

}  // namespace mla
