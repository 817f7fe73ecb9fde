#include "mla/quartic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mla {

CVec CMat::col(std::size_t j) const {
  CVec v(rows());
  for (std::size_t i = 0; i < rows(); ++i) v[i] = at(i, j);
  return v;
}

CVec CMat::apply(const CVec& v) const {
  CVec out(rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      if (!v[j].is_zero()) out[i] = out[i] + at(i, j) * v[j];
  return out;
}

CMat CMat::operator*(const CMat& o) const {
  CMat r(rows(), o.cols());
  r.re = re * o.re - im * o.im;
  r.im = re * o.im + im * o.re;
  return r;
}

CMat CMat::operator-(const CMat& o) const {
  CMat r(rows(), cols());
  r.re = re - o.re;
  r.im = im - o.im;
  return r;
}

Vec realify(const CVec& v) {
  Vec r(2 * v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    r[2 * i] = v[i].re;
    r[2 * i + 1] = v[i].im;
  }
  return r;
}

CVec complexify(const Vec& v) {
  if (v.size() % 2) throw std::invalid_argument("complexify: odd length");
  CVec r(v.size() / 2);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = Cx(v[2 * i], v[2 * i + 1]);
  return r;
}

Matrix realify(const CMat& m) {
  Matrix r(2 * m.rows(), 2 * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      r(2 * i, 2 * j) = m.re(i, j);
      r(2 * i, 2 * j + 1) = -m.im(i, j);
      r(2 * i + 1, 2 * j) = m.im(i, j);
      r(2 * i + 1, 2 * j + 1) = m.re(i, j);
    }
  return r;
}

Matrix realify_antilinear(const CMat& m) {
  Matrix r(2 * m.rows(), 2 * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      r(2 * i, 2 * j) = m.re(i, j);
      r(2 * i, 2 * j + 1) = m.im(i, j);
      r(2 * i + 1, 2 * j) = m.im(i, j);
      r(2 * i + 1, 2 * j + 1) = -m.re(i, j);
    }
  return r;
}

CVec complex_coords(const std::vector<CVec>& basis, const CVec& v) {
  std::vector<Vec> cols;
  for (const auto& b : basis) {
    cols.push_back(realify(b));
    CVec ib(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) ib[i] = Cx(-b[i].im, b[i].re);
    cols.push_back(realify(ib));
  }
  Matrix a = Matrix::from_cols(2 * v.size(), cols);
  auto sol = solve_affine(a, realify(v));
  if (!sol.particular) throw std::invalid_argument("complex_coords: vector not in span");
  if (sol.kernel.cols() != 0) throw std::invalid_argument("complex_coords: family is dependent");
  CVec c(basis.size());
  for (std::size_t s = 0; s < basis.size(); ++s) c[s] = Cx((*sol.particular)[2 * s], (*sol.particular)[2 * s + 1]);
  return c;
}

namespace {

void enum_monos(std::size_t d, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t t = start; t < d; ++t) {
    cur.push_back(t);
    enum_monos(d, k, t, cur, out);
    cur.pop_back();
  }
}

Q factorial(std::size_t n) {
  Q r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= Q(static_cast<long>(i));
  return r;
}

// Multiply a monomial index by an arbitrary vector of C^d.
void add_mono_times_vec(const SymPower& out, const std::vector<std::size_t>& m, const Cx& c, const CVec& v,
                        CVec& acc) {
  for (std::size_t u = 0; u < v.size(); ++u) {
    if (v[u].is_zero()) continue;
    auto idx = m;
    idx.push_back(u);
    std::size_t k = out.index(idx);
    acc[k] = acc[k] + c * v[u];
  }
}

}  // namespace

SymPower::SymPower(std::size_t d, std::size_t k) : d_(d), k_(k) {
  std::vector<std::size_t> cur;
  enum_monos(d, k, 0, cur, monos_);
}

std::size_t SymPower::index(std::vector<std::size_t> idx) const {
  if (idx.size() != k_) throw std::invalid_argument("SymPower::index: wrong degree");
  std::sort(idx.begin(), idx.end());
  auto it = std::lower_bound(monos_.begin(), monos_.end(), idx);
  if (it == monos_.end() || *it != idx) throw std::invalid_argument("SymPower::index: bad monomial");
  return static_cast<std::size_t>(it - monos_.begin());
}

Q SymPower::multiplicity_factorial(std::size_t i) const {
  const auto& m = monos_[i];
  Q r = 1;
  std::size_t j = 0;
  while (j < m.size()) {
    std::size_t e = j;
    while (e < m.size() && m[e] == m[j]) ++e;
    r *= factorial(e - j);
    j = e;
  }
  return r;
}

CVec sym_mul(const SymPower& a, const CVec& x, const SymPower& b, const CVec& y) {
  SymPower c(a.d(), a.k() + b.k());
  CVec out(c.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (y[j].is_zero()) continue;
      auto idx = a.mono(i);
      idx.insert(idx.end(), b.mono(j).begin(), b.mono(j).end());
      std::size_t k = c.index(idx);
      out[k] = out[k] + x[i] * y[j];
    }
  }
  return out;
}

CVec sym_antilinear(const SymPower& p, const CMat& m, const CVec& x) {
  std::size_t d = p.d();
  CVec out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (x[i].is_zero()) continue;
    // product of the columns m f_t over the monomial
    CVec acc{x[i].conj()};
    for (std::size_t r = 0; r < p.k(); ++r) {
      SymPower cur(d, r), nxt(d, r + 1);
      CVec na(nxt.size());
      for (std::size_t j = 0; j < cur.size(); ++j)
        if (!acc[j].is_zero()) add_mono_times_vec(nxt, cur.mono(j), acc[j], m.col(p.mono(i)[r]), na);
      acc = std::move(na);
    }
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = out[j] + acc[j];
  }
  return out;
}

CVec sym_derive(const SymPower& p, const CMat& a, const CVec& x) {
  CVec out(p.size());
  if (p.k() == 0) return out;
  SymPower low(p.d(), p.k() - 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (x[i].is_zero()) continue;
    const auto& m = p.mono(i);
    for (std::size_t r = 0; r < m.size(); ++r) {
      auto rest = m;
      rest.erase(rest.begin() + static_cast<long>(r));
      add_mono_times_vec(p, rest, x[i], a.col(m[r]), out);
    }
  }
  return out;
}

CVec sym_contract(const SymPower& p, const Matrix& omega, const CVec& v, const CVec& x) {
  if (p.k() == 0) throw std::invalid_argument("sym_contract: degree 0");
  SymPower low(p.d(), p.k() - 1);
  CVec out(low.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (x[i].is_zero()) continue;
    const auto& m = p.mono(i);
    for (std::size_t r = 0; r < m.size(); ++r) {
      Cx w;
      for (std::size_t s = 0; s < v.size(); ++s)
        if (omega(s, m[r]) != 0) w = w + v[s] * Cx(omega(s, m[r]));
      if (w.is_zero()) continue;
      auto rest = m;
      rest.erase(rest.begin() + static_cast<long>(r));
      std::size_t k = low.index(rest);
      out[k] = out[k] + w * x[i];
    }
  }
  return out;
}

Matrix standard_omega(std::size_t n) {
  Matrix w(2 * n, 2 * n);
  for (std::size_t a = 0; a < n; ++a) {
    w(a, n + a) = 1;
    w(n + a, a) = -1;
  }
  return w;
}

CMat sp_action(const Matrix& omega, const SymPower& s2, const CVec& l) {
  std::size_t d = omega.rows();
  CMat a(d, d);
  for (std::size_t i = 0; i < s2.size(); ++i) {
    if (l[i].is_zero()) continue;
    std::size_t x = s2.mono(i)[0], y = s2.mono(i)[1];
    for (std::size_t u = 0; u < d; ++u) {
      a.set(y, u, a.at(y, u) + l[i] * Cx(omega(x, u)));
      a.set(x, u, a.at(x, u) + l[i] * Cx(omega(y, u)));
    }
  }
  return a;
}

CVec sp_element(const Matrix& omega, const SymPower& s2, const CMat& a) {
  std::size_t d = omega.rows();
  std::vector<CVec> imgs;
  for (std::size_t i = 0; i < s2.size(); ++i) {
    CVec e(s2.size());
    e[i] = Cx(1);
    CMat m = sp_action(omega, s2, e);
    CVec flat(d * d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) flat[r * d + c] = m.at(r, c);
    imgs.push_back(flat);
  }
  CVec t(d * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) t[r * d + c] = a.at(r, c);
  return complex_coords(imgs, t);
}

namespace {

CVec unit_cvec(std::size_t n, std::size_t i) {
  CVec v(n);
  v[i] = Cx(1);
  return v;
}

std::vector<Vec> realified_family(const std::vector<CVec>& basis) {
  std::vector<Vec> out;
  for (const auto& b : basis) {
    out.push_back(realify(b));
    CVec ib(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) ib[i] = Cx(-b[i].im, b[i].re);
    out.push_back(realify(ib));
  }
  return out;
}

Cx omega_c(const Matrix& omega, const CVec& x, const CVec& y) {
  Cx r;
  for (std::size_t s = 0; s < x.size(); ++s)
    for (std::size_t t = 0; t < y.size(); ++t)
      if (omega(s, t) != 0) r = r + x[s] * y[t] * Cx(omega(s, t));
  return r;
}

}  // namespace

HSpan hs_span(std::size_t n, const CVec& s) {
  std::size_t d = 2 * n;
  SymPower s4(d, 4), s3(d, 3), s2(d, 2);
  if (s.size() != s4.size()) throw std::invalid_argument("hs_span: S has wrong length");
  Matrix omega = standard_omega(n);
  HSpan h;
  h.real_span = Subspace(2 * s2.size());
  for (std::size_t a = 0; a < d; ++a) {
    CVec sa = sym_contract(s4, omega, unit_cvec(d, a), s);
    for (std::size_t b = a; b < d; ++b) {
      CVec sab = sym_contract(s3, omega, unit_cvec(d, b), sa);
      auto fam = realified_family({sab});
      Subspace next = h.real_span + Subspace::span(2 * s2.size(), fam);
      if (next.dim() > h.real_span.dim()) {
        h.real_span = next;
        h.basis.push_back(sab);
        h.pairs.emplace_back(a, b);
      }
    }
  }
  return h;
}

Check check_cru(std::size_t n, const CVec& s) {
  std::size_t d = 2 * n;
  SymPower s4(d, 4), s2(d, 2);
  Matrix omega = standard_omega(n);
  HSpan h = hs_span(n, s);
  for (std::size_t i = 0; i < h.basis.size(); ++i) {
    CVec r = sym_derive(s4, sp_action(omega, s2, h.basis[i]), s);
    for (std::size_t k = 0; k < r.size(); ++k)
      if (!r[k].is_zero())
        return Check::fail("S_{f" + std::to_string(h.pairs[i].first) + ",f" + std::to_string(h.pairs[i].second) +
                           "} does not annihilate S");
  }
  return Check::pass();
}

bool hs_is_abelian(std::size_t n, const CVec& s) {
  std::size_t d = 2 * n;
  SymPower s2(d, 2);
  Matrix omega = standard_omega(n);
  HSpan h = hs_span(n, s);
  for (std::size_t i = 0; i < h.basis.size(); ++i)
    for (std::size_t j = i + 1; j < h.basis.size(); ++j) {
      CMat a = sp_action(omega, s2, h.basis[i]), b = sp_action(omega, s2, h.basis[j]);
      if (!(a * b - b * a).is_zero()) return false;
    }
  return true;
}

GJS build_gJS(std::size_t n, const CVec& s, const CMat& j) {
  std::size_t d = 2 * n;
  SymPower s4(d, 4), s3(d, 3), s2(d, 2);
  Matrix omega = standard_omega(n);
  if (j.rows() != d || j.cols() != d) throw std::invalid_argument("build_gJS: J has wrong size");
  // J^2 = -1 and J^* omega = conj(omega) for v -> j conj(v)
  {
    CMat jbar = j;
    jbar.im = jbar.im * Q(-1);
    CMat sq = j * jbar;
    CMat minus_one(d, d);
    for (std::size_t i = 0; i < d; ++i) minus_one.set(i, i, Cx(-1));
    if (!(sq - minus_one).is_zero()) throw std::invalid_argument("build_gJS: J^2 != -1");
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        if (!(omega_c(omega, j.col(a), j.col(b)) == Cx(omega(a, b))))
          throw std::invalid_argument("build_gJS: J does not preserve omega");
  }
  if (!(sym_antilinear(s4, j, s) == s)) throw std::invalid_argument("build_gJS: S is not tau-invariant");
  Check cru = check_cru(n, s);
  if (!cru) throw std::invalid_argument("build_gJS: cru fails: " + cru.violation);

  HSpan h = hs_span(n, s);
  std::size_t r = h.basis.size();
  std::size_t nc = r + 2 * d;  // complex dimension of g_S
  auto he = [&](std::size_t p, std::size_t t) { return r + p * d + t; };
  std::vector<CMat> act;
  for (const auto& b : h.basis) act.push_back(sp_action(omega, s2, b));

  // complex structure constants
  std::vector<std::vector<CVec>> c(nc, std::vector<CVec>(nc, CVec(nc)));
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = 0; y < r; ++y) {
      CVec l = sp_element(omega, s2, act[x] * act[y] - act[y] * act[x]);
      CVec k = complex_coords(h.basis, l);
      for (std::size_t z = 0; z < r; ++z) c[x][y][z] = k[z];
    }
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t p = 0; p < 2; ++p)
      for (std::size_t t = 0; t < d; ++t)
        for (std::size_t u = 0; u < d; ++u) {
          c[x][he(p, t)][he(p, u)] = act[x].at(u, t);
          c[he(p, t)][x][he(p, u)] = Cx(0) - act[x].at(u, t);
        }
  for (std::size_t a = 0; a < d; ++a) {
    CVec sa = sym_contract(s4, omega, unit_cvec(d, a), s);
    for (std::size_t b = 0; b < d; ++b) {
      CVec k = complex_coords(h.basis, sym_contract(s3, omega, unit_cvec(d, b), sa));
      for (std::size_t z = 0; z < r; ++z) {
        c[he(0, a)][he(1, b)][z] = k[z];
        c[he(1, a)][he(0, b)][z] = Cx(0) - k[z];
      }
    }
  }

  // realified algebra on (e_s, i e_s)
  LieAlgebra real(2 * nc);
  for (std::size_t x = 0; x < nc; ++x)
    for (std::size_t y = 0; y < nc; ++y)
      for (std::size_t z = 0; z < nc; ++z) {
        const Cx& v = c[x][y][z];
        if (v.is_zero()) continue;
        // [e_x,e_y] = v e_z, [i e_x, e_y] = i v e_z, [i e_x, i e_y] = -v e_z
        if (x < y) {
          real.add_bracket(2 * x, 2 * y, 2 * z, v.re);
          real.add_bracket(2 * x, 2 * y, 2 * z + 1, v.im);
          real.add_bracket(2 * x + 1, 2 * y + 1, 2 * z, -v.re);
          real.add_bracket(2 * x + 1, 2 * y + 1, 2 * z + 1, -v.im);
        }
        real.add_bracket(2 * x + 1, 2 * y, 2 * z, -v.im);
        real.add_bracket(2 * x + 1, 2 * y, 2 * z + 1, v.re);
      }
  auto jr = check_jacobi(real);
  if (!jr.ok) throw std::logic_error("build_gJS: Jacobi fails on g_S");

  // complex bilinear form B
  CMat bform(nc, nc);
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = 0; y < r; ++y) {
      auto [a, b] = h.pairs[x];
      bform.set(x, y, Cx(0) - omega_c(omega, unit_cvec(d, a), act[y].apply(unit_cvec(d, b))));
    }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      bform.set(he(0, a), he(1, b), Cx(omega(a, b)));
      bform.set(he(1, a), he(0, b), Cx(-omega(a, b)));
    }
  Matrix rform(2 * nc, 2 * nc);
  for (std::size_t x = 0; x < nc; ++x)
    for (std::size_t y = 0; y < nc; ++y) {
      Cx v = bform.at(x, y);
      rform(2 * x, 2 * y) = v.re;
      rform(2 * x, 2 * y + 1) = -v.im;
      rform(2 * x + 1, 2 * y) = -v.im;
      rform(2 * x + 1, 2 * y + 1) = -v.re;
    }

  // tau as an antilinear map with matrix tm
  CMat tm(nc, nc);
  for (std::size_t x = 0; x < r; ++x) {
    CVec k = complex_coords(h.basis, sym_antilinear(s2, j, h.basis[x]));
    for (std::size_t z = 0; z < r; ++z) tm.set(z, x, k[z]);
  }
  for (std::size_t t = 0; t < d; ++t)
    for (std::size_t u = 0; u < d; ++u) {
      Cx v = j.at(u, t);
      tm.set(he(1, u), he(0, t), v);               // J_H(1) = j
      tm.set(he(0, u), he(1, t), Cx(0) - v);       // J_H(j) = -1
    }
  Matrix tr = realify_antilinear(tm);
  Subspace fixed = Subspace::kernel_of(tr - Matrix::identity(2 * nc));
  if (fixed.dim() != nc) throw std::logic_error("build_gJS: tau is not a real structure");

  GJS out;
  out.complex_realified = real;
  out.g.alg = subalgebra(real, fixed);
  out.g.form = restrict_form(rform, fixed.basis());

  // Sp(1) by left multiplication on H
  CMat li(nc, nc), lj(nc, nc);
  for (std::size_t t = 0; t < d; ++t) {
    li.set(he(0, t), he(0, t), Cx(0, 1));
    li.set(he(1, t), he(1, t), Cx(0, -1));
    lj.set(he(1, t), he(0, t), Cx(1));
    lj.set(he(0, t), he(1, t), Cx(-1));
  }
  CMat lk = li * lj;
  auto restrict_op = [&](const CMat& m) {
    Matrix rm = realify(m);
    Matrix res(fixed.dim(), fixed.dim());
    for (std::size_t i = 0; i < fixed.dim(); ++i) {
      auto co = fixed.coords(rm * fixed.vec(i));
      if (!co) throw std::logic_error("build_gJS: Sp(1) does not preserve the real form");
      for (std::size_t k = 0; k < fixed.dim(); ++k) res(k, i) = (*co)[k];
    }
    return res;
  };
  out.phi.dim = fixed.dim();
  out.phi.derivations = {{"I", restrict_op(li)}, {"J", restrict_op(lj)}, {"K", restrict_op(lk)}};
  out.phi.preset = GradingKind::quaternionic;
  Subspace hreal(2 * nc);
  {
    std::vector<Vec> hv;
    for (std::size_t x = 0; x < 2 * r; ++x) hv.push_back(unit_vec(2 * nc, x));
    hreal = intersect(Subspace::span(2 * nc, hv), fixed);
  }
  out.hs_dim = hreal.dim();
  return out;
}

bool is_tame_witness(std::size_t n, const CVec& s, const std::vector<CVec>& e_plus) {
  std::size_t d = 2 * n;
  Matrix omega = standard_omega(n);
  if (e_plus.size() != n) return false;
  Subspace sp = Subspace::span(2 * d, realified_family(e_plus));
  if (sp.dim() != 2 * n) return false;
  for (const auto& x : e_plus)
    for (const auto& y : e_plus)
      if (!omega_c(omega, x, y).is_zero()) return false;
  SymPower s1(d, 1), s4(d, 4);
  std::vector<CVec> prods;
  std::vector<std::size_t> idx;
  // all degree-4 products of the E_+ basis
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t c2 = b; c2 < n; ++c2)
        for (std::size_t e = c2; e < n; ++e) {
          CVec p = e_plus[a];
          std::size_t k = 1;
          for (std::size_t f : {b, c2, e}) {
            SymPower cur(d, k);
            p = sym_mul(cur, p, s1, e_plus[f]);
            ++k;
          }
          prods.push_back(p);
        }
  Subspace span4 = Subspace::span(2 * s4.size(), realified_family(prods));
  return span4.contains(realify(s));
}

}  // namespace mla
