#include "mla/qcohom.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace mla {

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Sorts idx in place; returns the permutation sign, or 0 on a repeated index.
int sort_sign(std::vector<std::size_t>& idx) {
  int s = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      s = -s;
    }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return s;
}

Q det(std::vector<std::vector<Q>> a) {
  std::size_t n = a.size();
  Q r = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      r = -r;
    }
    r *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Q f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return r;
}

Matrix columns_of(const std::vector<Cochain>& cs, std::size_t rows) {
  Matrix m(rows, cs.size());
  for (std::size_t j = 0; j < cs.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cs[j].vec()[i];
  return m;
}

Cochain combine(const std::vector<Cochain>& basis, const Vec& x, const Cochain& zero) {
  Cochain out = zero;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (x[i] != 0) out = out + basis[i] * x[i];
  return out;
}

// c composed with a linear map on every argument: c(k L_1, ..., k L_p).
Cochain compose_args(const Cochain& c, const Matrix& k) {
  Cochain out(c.n(), c.degree(), c.values_dim(), c.is_scalar());
  for (const auto& s : subsets(c.n(), c.degree())) {
    std::vector<Vec> args;
    for (auto i : s) args.push_back(k.col(i));
    out.set(s, c.eval(args));
  }
  return out;
}

// sum_i c(L_1, ..., D L_i, ..., L_p)
Cochain derive_args(const Cochain& c, const Matrix& dm) {
  Cochain out(c.n(), c.degree(), c.values_dim(), c.is_scalar());
  std::size_t n = c.n(), m = c.values_dim();
  for (const auto& s : subsets(n, c.degree())) {
    Vec v(m);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (dm(k, s[i]) == 0) continue;
        std::vector<std::size_t> idx = s;
        idx[i] = k;
        axpy(v, dm(k, s[i]), c.at(idx));
      }
    out.set(s, v);
  }
  return out;
}

Cochain apply_values(const Matrix& u, const Cochain& c) {
  Cochain out(c.n(), c.degree(), u.rows(), c.is_scalar());
  for (const auto& s : subsets(c.n(), c.degree())) out.set(s, u * c.at(s));
  return out;
}

std::vector<Cochain> unit_basis(std::size_t n, std::size_t p, std::size_t m, bool scalar) {
  std::vector<Cochain> out;
  Cochain z(n, p, m, scalar);
  for (std::size_t i = 0; i < z.size(); ++i) out.push_back(Cochain::from_vec(n, p, m, scalar, unit_vec(z.size(), i)));
  return out;
}

// Kernel of the generator-wise invariance operators.
std::vector<Cochain> invariant_basis(const OrthogonalModule& a, std::size_t p, bool scalar) {
  std::size_t n = a.ldim(), m = scalar ? 1 : a.adim();
  auto basis = unit_basis(n, p, m, scalar);
  if (!a.equiv || a.equiv->on_l.empty()) return basis;
  const auto& pl = a.equiv->on_l;
  const auto& pa = a.equiv->on_a;
  std::vector<std::function<Cochain(const Cochain&)>> ops;
  for (std::size_t i = 0; i < pl.derivations.size(); ++i) {
    const Matrix& dl = pl.derivations[i].m;
    Matrix da = scalar ? Matrix(1, 1) : pa.derivations[i].m;
    ops.push_back([dl, da](const Cochain& c) { return apply_values(da, c) - derive_args(c, dl); });
  }
  for (std::size_t i = 0; i < pl.automorphisms.size(); ++i) {
    const Matrix& kl = pl.automorphisms[i].m;
    Matrix ka = scalar ? Matrix::identity(1) : pa.automorphisms[i].m;
    ops.push_back([kl, ka](const Cochain& c) { return compose_args(c, kl) - apply_values(ka, c); });
  }
  std::size_t nv = basis.size();
  LinearSystem ls(nv);
  for (const auto& op : ops) {
    std::size_t rows = 0;
    std::vector<Vec> cols;
    for (const auto& b : basis) {
      cols.push_back(op(b).vec());
      rows = cols.back().size();
    }
    for (std::size_t r = 0; r < rows; ++r) {
      LinearSystem::Row row;
      for (std::size_t v = 0; v < nv; ++v)
        if (cols[v][r] != 0) row.emplace_back(v, cols[v][r]);
      if (!row.empty()) ls.add(row);
    }
  }
  auto sol = ls.solve();
  std::vector<Cochain> out;
  for (std::size_t j = 0; j < sol.kernel.cols(); ++j)
    out.push_back(Cochain::from_vec(n, p, m, scalar, sol.kernel.col(j)));
  return out;
}

void require_cocycle(const QuadCocycle& z, const OrthogonalModule& a, const char* what) {
  if (Check c = is_cocycle(z, a); !c) throw std::invalid_argument(std::string(what) + " is not a quadratic cocycle: " + c.violation);
}

}  // namespace

const std::vector<std::vector<std::size_t>>& subsets(std::size_t n, std::size_t p) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<std::size_t>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, p);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<std::size_t>> out;
  if (p <= n) {
    std::vector<std::size_t> cur(p);
    for (std::size_t i = 0; i < p; ++i) cur[i] = i;
    while (true) {
      out.push_back(cur);
      std::size_t i = p;
      while (i > 0 && cur[i - 1] == n - p + i - 1) --i;
      if (i == 0) break;
      ++cur[i - 1];
      for (std::size_t j = i; j < p; ++j) cur[j] = cur[j - 1] + 1;
    }
  }
  return cache.emplace(key, std::move(out)).first->second;
}

std::size_t subset_index(std::size_t n, const std::vector<std::size_t>& s) {
  std::size_t p = s.size(), r = 0, prev = 0;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t v = (i ? prev + 1 : 0); v < s[i]; ++v) r += binom(n - 1 - v, p - 1 - i);
    prev = s[i];
  }
  return r;
}

Cochain::Cochain(std::size_t n, std::size_t p, std::size_t m, bool scalar)
    : n_(n), p_(p), m_(scalar ? 1 : m), scalar_(scalar), data_(binom(n, p) * (scalar ? 1 : m)) {}

Cochain Cochain::from_vec(std::size_t n, std::size_t p, std::size_t m, bool scalar, const Vec& v) {
  Cochain c(n, p, m, scalar);
  if (v.size() != c.data_.size()) throw std::invalid_argument("cochain coordinate vector has wrong size");
  c.data_ = v;
  return c;
}

Vec Cochain::at(const std::vector<std::size_t>& idx) const {
  std::vector<std::size_t> s = idx;
  int sg = sort_sign(s);
  Vec v(m_);
  if (sg == 0) return v;
  std::size_t base = subset_index(n_, s) * m_;
  for (std::size_t k = 0; k < m_; ++k) v[k] = sg > 0 ? data_[base + k] : Q(-data_[base + k]);
  return v;
}

void Cochain::set(const std::vector<std::size_t>& idx, const Vec& v) {
  std::vector<std::size_t> s = idx;
  int sg = sort_sign(s);
  if (sg == 0) throw std::invalid_argument("alternating cochain set on repeated index");
  if (v.size() != m_) throw std::invalid_argument("cochain value has wrong dimension");
  std::size_t base = subset_index(n_, s) * m_;
  for (std::size_t k = 0; k < m_; ++k) data_[base + k] = sg > 0 ? v[k] : Q(-v[k]);
}

Vec Cochain::eval(const std::vector<Vec>& args) const {
  if (args.size() != p_) throw std::invalid_argument("cochain evaluated on wrong number of arguments");
  Vec out(m_);
  const auto& ss = subsets(n_, p_);
  for (std::size_t si = 0; si < ss.size(); ++si) {
    bool nz = false;
    for (std::size_t k = 0; k < m_; ++k) nz = nz || data_[si * m_ + k] != 0;
    if (!nz) continue;
    std::vector<std::vector<Q>> minor(p_, std::vector<Q>(p_));
    for (std::size_t i = 0; i < p_; ++i)
      for (std::size_t j = 0; j < p_; ++j) minor[i][j] = args[j][ss[si][i]];
    Q dt = det(minor);
    if (dt == 0) continue;
    for (std::size_t k = 0; k < m_; ++k) out[k] += dt * data_[si * m_ + k];
  }
  return out;
}

void Cochain::same_shape(const Cochain& o) const {
  if (n_ != o.n_ || p_ != o.p_ || m_ != o.m_ || scalar_ != o.scalar_)
    throw std::invalid_argument("cochains of different shape");
}

Cochain Cochain::operator+(const Cochain& o) const {
  same_shape(o);
  Cochain r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Cochain Cochain::operator-(const Cochain& o) const {
  same_shape(o);
  Cochain r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Cochain Cochain::operator*(const Q& c) const {
  Cochain r = *this;
  for (auto& x : r.data_) x *= c;
  return r;
}

Check check_orthogonal_module(const OrthogonalModule& a) {
  if (Check c = check_module(a.module); !c) return c;
  std::size_t m = a.adim();
  if (a.form.rows() != m || a.form.cols() != m) return Check::fail("module form has wrong size");
  if (!a.form.is_symmetric()) return Check::fail("module form not symmetric");
  if (rank(a.form) != m) return Check::fail("module form degenerate");
  for (std::size_t i = 0; i < a.ldim(); ++i)
    if (!(a.module.rho[i].transpose() * a.form + a.form * a.module.rho[i]).is_zero())
      return Check::fail("rho(" + a.alg().names()[i] + ") not antisymmetric");
  if (a.equiv)
    if (Check c = check_equivariant_module(a.module, a.form, *a.equiv); !c) return c;
  return Check::pass();
}

Cochain d(const Cochain& c, const LieModule& mod) {
  const LieAlgebra& l = mod.alg;
  std::size_t n = c.n(), p = c.degree(), m = c.values_dim();
  if (n != l.dim()) throw std::invalid_argument("cochain and algebra dimensions differ");
  if (!c.is_scalar() && m != mod.dim()) throw std::invalid_argument("cochain values and module dimensions differ");
  Cochain out(n, p + 1, m, c.is_scalar());
  for (const auto& s : subsets(n, p + 1)) {
    Vec v(m);
    for (std::size_t i = 0; i <= p && !c.is_scalar(); ++i) {
      std::vector<std::size_t> rest;
      for (std::size_t t = 0; t <= p; ++t)
        if (t != i) rest.push_back(s[t]);
      Vec w = mod.rho[s[i]] * c.at(rest);
      axpy(v, i % 2 ? Q(-1) : Q(1), w);
    }
    for (std::size_t i = 0; i <= p; ++i)
      for (std::size_t j = i + 1; j <= p; ++j) {
        Vec br = l.bracket(s[i], s[j]);
        std::vector<std::size_t> idx{0};
        for (std::size_t t = 0; t <= p; ++t)
          if (t != i && t != j) idx.push_back(s[t]);
        Q sign = (i + j) % 2 ? Q(-1) : Q(1);
        for (std::size_t k = 0; k < n; ++k) {
          if (br[k] == 0) continue;
          idx[0] = k;
          axpy(v, sign * br[k], c.at(idx));
        }
      }
    out.set(s, v);
  }
  return out;
}

Cochain d(const Cochain& c, const LieAlgebra& l) {
  if (!c.is_scalar()) throw std::invalid_argument("module required for valued cochains");
  return d(c, trivial_module(l, 1));
}

Cochain wedge(const Cochain& a, const Cochain& b, const Matrix& form) {
  if (a.is_scalar() || b.is_scalar()) throw std::invalid_argument("wedge needs module-valued cochains");
  if (a.n() != b.n() || a.values_dim() != b.values_dim()) throw std::invalid_argument("wedge of mismatched cochains");
  if (form.rows() != a.values_dim()) throw std::invalid_argument("form missing or of wrong size");
  std::size_t n = a.n(), p = a.degree(), q = b.degree();
  Cochain out = Cochain::scalar(n, p + q);
  const auto& shuffles = subsets(p + q, p);
  for (const auto& s : subsets(n, p + q)) {
    Q v = 0;
    for (const auto& sh : shuffles) {
      std::vector<std::size_t> ia, ib;
      std::size_t inv = 0, t = 0;
      for (std::size_t pos = 0; pos < p + q; ++pos) {
        if (t < p && sh[t] == pos) {
          ia.push_back(s[pos]);
          inv += pos - t;
          ++t;
        } else {
          ib.push_back(s[pos]);
        }
      }
      Q x = dot(a.at(ia), form * b.at(ib));
      v += inv % 2 ? Q(-x) : x;
    }
    out.set(s, v);
  }
  return out;
}

Cochain pullback(const LieModule& m1, const LieModule& m2, const Matrix& s, const Matrix& u, const Cochain& c,
                 const Matrix* form1, const Matrix* form2) {
  const LieAlgebra &l1 = m1.alg, &l2 = m2.alg;
  if (s.rows() != l2.dim() || s.cols() != l1.dim()) throw std::invalid_argument("S has wrong size");
  if (u.rows() != m1.dim() || u.cols() != m2.dim()) throw std::invalid_argument("U has wrong size");
  for (std::size_t i = 0; i < l1.dim(); ++i)
    for (std::size_t j = i + 1; j < l1.dim(); ++j)
      if (s * l1.bracket(i, j) != l2.bracket(s.col(i), s.col(j)))
        throw std::invalid_argument("morphism of pairs: S is not a homomorphism");
  for (std::size_t i = 0; i < l1.dim(); ++i)
    if (u * m2.act(s.col(i)) != m1.rho[i] * u) throw std::invalid_argument("morphism of pairs: U does not intertwine");
  if (form1 && form2 && u.transpose() * *form1 * u != *form2)
    throw std::invalid_argument("morphism of pairs: U is not isometric");
  if (c.is_scalar()) return pullback_scalar(l1, l2, s, c);
  Cochain out(l1.dim(), c.degree(), u.rows());
  for (const auto& sub : subsets(l1.dim(), c.degree())) {
    std::vector<Vec> args;
    for (auto i : sub) args.push_back(s.col(i));
    out.set(sub, u * c.eval(args));
  }
  return out;
}

Cochain pullback_scalar(const LieAlgebra& l1, const LieAlgebra& l2, const Matrix& s, const Cochain& c) {
  if (s.rows() != l2.dim() || s.cols() != l1.dim()) throw std::invalid_argument("S has wrong size");
  Cochain out = Cochain::scalar(l1.dim(), c.degree());
  for (const auto& sub : subsets(l1.dim(), c.degree())) {
    std::vector<Vec> args;
    for (auto i : sub) args.push_back(s.col(i));
    out.set(sub, c.eval(args));
  }
  return out;
}

InvariantCochains invariant_cochains(const OrthogonalModule& a, std::size_t p) {
  return {invariant_basis(a, p, false), invariant_basis(a, p, true)};
}

bool is_invariant_cochain(const OrthogonalModule& a, const Cochain& c) {
  if (!a.equiv) return true;
  const auto& pl = a.equiv->on_l;
  const auto& pa = a.equiv->on_a;
  bool sc = c.is_scalar();
  for (std::size_t i = 0; i < pl.derivations.size(); ++i) {
    Matrix da = sc ? Matrix(1, 1) : pa.derivations[i].m;
    if (!(apply_values(da, c) - derive_args(c, pl.derivations[i].m)).is_zero()) return false;
  }
  for (std::size_t i = 0; i < pl.automorphisms.size(); ++i) {
    Matrix ka = sc ? Matrix::identity(1) : pa.automorphisms[i].m;
    if (compose_args(c, pl.automorphisms[i].m) != apply_values(ka, c)) return false;
  }
  return true;
}

QuadCocycle pullback_cocycle(const OrthogonalModule& a1, const OrthogonalModule& a2, const Matrix& s, const Matrix& u,
                             const QuadCocycle& z) {
  return {pullback(a1.module, a2.module, s, u, z.alpha, &a1.form, &a2.form), pullback_scalar(a1.alg(), a2.alg(), s, z.gamma)};
}

C1Q c1q_identity(const OrthogonalModule& a) { return {a.zero(1), a.scalar_zero(2)}; }

C1Q c1q_compose(const C1Q& x, const C1Q& y, const Matrix& form) {
  return {x.tau + y.tau, x.sigma + y.sigma + wedge(x.tau, y.tau, form) * Q(1, 2)};
}

C1Q c1q_inverse(const C1Q& x) { return {-x.tau, -x.sigma}; }

Check is_cocycle(const QuadCocycle& z, const OrthogonalModule& a) {
  if (z.alpha.degree() != 2 || z.alpha.is_scalar() || z.alpha.n() != a.ldim() || z.alpha.values_dim() != a.adim())
    return Check::fail("alpha has wrong shape");
  if (z.gamma.degree() != 3 || !z.gamma.is_scalar() || z.gamma.n() != a.ldim()) return Check::fail("gamma has wrong shape");
  if (!d(z.alpha, a.module).is_zero()) return Check::fail("d alpha != 0");
  if (d(z.gamma, a.alg()) != wedge(z.alpha, z.alpha, a.form) * Q(1, 2)) return Check::fail("d gamma != 1/2 <alpha^alpha>");
  return Check::pass();
}

QuadCocycle act(const QuadCocycle& z, const C1Q& c, const OrthogonalModule& a) {
  require_cocycle(z, a, "input");
  Cochain dt = d(c.tau, a.module);
  Cochain half = z.alpha + dt * Q(1, 2);
  return {z.alpha + dt, z.gamma + d(c.sigma, a.alg()) + wedge(half, c.tau, a.form)};
}

Decision equivalent(const QuadCocycle& z1, const QuadCocycle& z2, const OrthogonalModule& a) {
  require_cocycle(z1, a, "first class");
  require_cocycle(z2, a, "second class");
  auto t_basis = invariant_basis(a, 1, false);
  auto s_basis = invariant_basis(a, 2, true);
  // d tau = alpha2 - alpha1
  std::vector<Cochain> dts;
  for (const auto& b : t_basis) dts.push_back(d(b, a.module));
  Cochain dal = z2.alpha - z1.alpha;
  std::size_t rows2 = dal.size();
  auto s1 = solve_affine(columns_of(dts, rows2), dal.vec());
  if (!s1.particular) return Decision::no("alpha2 - alpha1 is not the differential of an admissible 1-cochain");
  Cochain tau0 = combine(t_basis, *s1.particular, a.zero(1));
  std::vector<Cochain> closed;
  for (std::size_t j = 0; j < s1.kernel.cols(); ++j) closed.push_back(combine(t_basis, s1.kernel.col(j), a.zero(1)));
  // With d tau fixed the gamma condition is linear in (closed part of tau, sigma).
  Cochain beta = z1.alpha + dal * Q(1, 2);
  Cochain rhs = z2.gamma - z1.gamma - wedge(beta, tau0, a.form);
  std::vector<Cochain> cols;
  for (const auto& zc : closed) cols.push_back(wedge(beta, zc, a.form));
  for (const auto& sb : s_basis) cols.push_back(d(sb, a.alg()));
  Cochain tau = tau0, sigma = a.scalar_zero(2);
  if (cols.empty()) {
    if (!rhs.is_zero()) return Decision::no("gamma residue does not vanish");
  } else {
    auto s2 = solve_affine(columns_of(cols, rhs.size()), rhs.vec());
    if (!s2.particular) return Decision::no("gamma residue is not reachable for any admissible (tau, sigma)");
    const Vec& x = *s2.particular;
    for (std::size_t j = 0; j < closed.size(); ++j)
      if (x[j] != 0) tau = tau + closed[j] * x[j];
    for (std::size_t j = 0; j < s_basis.size(); ++j)
      if (x[closed.size() + j] != 0) sigma = sigma + s_basis[j] * x[closed.size() + j];
  }
  C1Q w{tau, sigma};
  if (act(z1, w, a) != z2) throw std::logic_error("equivalence witness failed verification");
  Decision out = Decision::yes("classes equal");
  out.vectors = {tau.vec(), sigma.vec()};
  return out;
}

C1Q witness_of(const Decision& dd, const OrthogonalModule& a) {
  if (!dd.is_yes() || dd.vectors.size() < 2) throw std::invalid_argument("decision carries no witness");
  return {Cochain::from_vec(a.ldim(), 1, a.adim(), false, dd.vectors[0]),
          Cochain::from_vec(a.ldim(), 2, 1, true, dd.vectors[1])};
}

QuadCocycle push_summand(const PairSummand& s, const OrthogonalModule& a) {
  QuadCocycle out{a.zero(2), a.scalar_zero(3)};
  std::size_t n = a.ldim();
  for (const auto& sub : subsets(n, 2)) out.alpha.set(sub, s.j * s.phi.alpha.eval({s.q.col(sub[0]), s.q.col(sub[1])}));
  for (const auto& sub : subsets(n, 3))
    out.gamma.set(sub, s.phi.gamma.eval({s.q.col(sub[0]), s.q.col(sub[1]), s.q.col(sub[2])}));
  return out;
}

Decision verify_class_decomposition(const QuadCocycle& phi, const OrthogonalModule& a, const PairSummand& s1,
                                    const PairSummand& s2) {
  std::size_t n = a.ldim(), m = a.adim();
  auto fail = [](const std::string& why) { throw std::invalid_argument("decomposition not direct: " + why); };
  for (const PairSummand* s : {&s1, &s2}) {
    const auto& mi = s->module;
    if (s->q.cols() != n || s->q.rows() != mi.ldim()) fail("q has wrong size");
    if (s->j.rows() != m || s->j.cols() != mi.adim()) fail("j has wrong size");
    if (mi.ldim() + mi.adim() == 0) fail("zero summand");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = i + 1; k < n; ++k)
        if (s->q * a.alg().bracket(i, k) != mi.alg().bracket(s->q.col(i), s->q.col(k))) fail("q is not a homomorphism");
    for (std::size_t i = 0; i < n; ++i)
      if (s->j * mi.module.act(s->q.col(i)) != a.module.rho[i] * s->j) fail("j does not intertwine");
    if (s->j.transpose() * a.form * s->j != mi.form) fail("j is not isometric");
    require_cocycle(s->phi, mi, "summand class");
  }
  Matrix qs(n, n), js(m, m);
  std::size_t n1 = s1.module.ldim(), m1 = s1.module.adim();
  if (n1 + s2.module.ldim() != n || m1 + s2.module.adim() != m) fail("dimensions do not add up");
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n1; ++i) qs(i, j) = s1.q(i, j);
    for (std::size_t i = n1; i < n; ++i) qs(i, j) = s2.q(i - n1, j);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m1; ++j) js(i, j) = s1.j(i, j);
    for (std::size_t j = m1; j < m; ++j) js(i, j) = s2.j(i, j - m1);
  }
  if (!inverse(qs)) fail("q1 + q2 is not an isomorphism");
  if (!inverse(js)) fail("j1 + j2 is not an isomorphism");
  if (!(s1.j.transpose() * a.form * s2.j).is_zero()) fail("j1, j2 images not orthogonal");
  QuadCocycle p1 = push_summand(s1, a), p2 = push_summand(s2, a);
  QuadCocycle sum{p1.alpha + p2.alpha, p1.gamma + p2.gamma};
  return equivalent(phi, sum, a);
}

}  // namespace mla
