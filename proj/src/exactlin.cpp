#include "mla/exactlin.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mla {

Q parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (t.size() > 0 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational '" + s + "'");
  if (num[0] == '+') num = num.substr(1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Q q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Q& q) { return q.get_str(); }

Vec zero_vec(std::size_t n) { return Vec(n); }
Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}
bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Q& x) { return x == 0; });
}
Vec add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
Vec sub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
Vec scale(const Q& s, const Vec& a) {
  Vec r(a);
  for (auto& x : r) x *= s;
  return r;
}
void axpy(Vec& y, const Q& a, const Vec& x) {
  if (a == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i] != 0) y[i] += a * x[i];
}
Q dot(const Vec& a, const Vec& b) {
  Q s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

// ---------------------------------------------------------------- Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}
Matrix Matrix::from_cols(std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}
Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}
Matrix Matrix::diag(const Vec& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}
Vec Matrix::col(std::size_t j) const {
  Vec v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}
Vec Matrix::row(std::size_t i) const {
  return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
}
std::vector<Vec> Matrix::col_list() const {
  std::vector<Vec> out;
  for (std::size_t j = 0; j < c_; ++j) out.push_back(col(j));
  return out;
}
Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}
bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Q& x) { return x == 0; });
}
bool Matrix::is_symmetric() const {
  if (r_ != c_) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = i + 1; j < c_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}
Matrix Matrix::operator+(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix dimension mismatch");
  Matrix m(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
  return m;
}
Matrix Matrix::operator-(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix dimension mismatch");
  Matrix m(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
  return m;
}
Matrix Matrix::operator*(const Matrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix dimension mismatch");
  Matrix m(r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      const Q& x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.c_; ++j)
        if (o(k, j) != 0) m(i, j) += x * o(k, j);
    }
  return m;
}
Matrix Matrix::operator*(const Q& s) const {
  Matrix m(*this);
  for (auto& x : m.a_) x *= s;
  return m;
}
Vec Matrix::operator*(const Vec& v) const {
  if (v.size() != c_) throw std::invalid_argument("matrix-vector dimension mismatch");
  Vec out(r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix block_diag(const std::vector<Matrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) r += b.rows(), c += b.cols();
  Matrix m(r, c);
  std::size_t oi = 0, oj = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(oi + i, oj + j) = b(i, j);
    oi += b.rows();
    oj += b.cols();
  }
  return m;
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Q inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Q f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

std::size_t rank(const Matrix& m) {
  Matrix t(m);
  return rref(t).size();
}

Matrix kernel(const Matrix& m) {
  Matrix t(m);
  auto piv = rref(t);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -t(i, f);
    basis.push_back(v);
  }
  return Matrix::from_cols(m.cols(), basis);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (n > 0 && (piv.size() < n || piv[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

AffineSolution solve_affine(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_affine: dimension mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto piv = rref(aug);
  AffineSolution sol;
  sol.kernel = kernel(a);
  if (!piv.empty() && piv.back() == a.cols()) return sol;
  Vec x(a.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, a.cols());
  sol.particular = x;
  return sol;
}

// ---------------------------------------------------------- LinearSystem

void LinearSystem::add_dense(const Vec& lhs, const Q& rhs) {
  Row r;
  for (std::size_t j = 0; j < lhs.size(); ++j)
    if (lhs[j] != 0) r.emplace_back(j, lhs[j]);
  add(r, rhs);
}

void LinearSystem::add(const Row& lhs, const Q& rhs) {
  if (!consistent_) return;
  if (where_.empty()) where_.assign(n_, -1);
  std::map<std::size_t, Q> acc;
  for (const auto& [j, v] : lhs)
    if (v != 0) acc[j] += v;
  if (rhs != 0) acc[n_] += rhs;
  auto it = acc.begin();
  while (it != acc.end()) {
    std::size_t c = it->first;
    if (it->second == 0) {
      it = acc.erase(it);
      continue;
    }
    if (c < n_ && where_[c] >= 0) {
      Q f = it->second;
      const Row& pr = piv_[where_[c]].second;
      for (const auto& [j, v] : pr) acc[j] -= f * v;
      acc.erase(c);
      it = acc.upper_bound(c);
      continue;
    }
    break;
  }
  while (it != acc.end() && it->second == 0) it = acc.erase(it);
  if (it == acc.end()) return;
  if (it->first == n_) {
    consistent_ = false;
    return;
  }
  std::size_t c = it->first;
  Q inv = 1 / it->second;
  Row nr;
  for (auto jt = it; jt != acc.end(); ++jt)
    if (jt->second != 0) nr.emplace_back(jt->first, jt->second * inv);
  where_[c] = static_cast<long>(piv_.size());
  piv_.emplace_back(c, std::move(nr));
}

AffineSolution LinearSystem::solve() const {
  AffineSolution sol;
  std::vector<long> where = where_.empty() ? std::vector<long>(n_, -1) : where_;
  std::vector<std::size_t> order;
  for (const auto& p : piv_) order.push_back(p.first);
  std::sort(order.rbegin(), order.rend());
  auto backsolve = [&](Vec& x, bool with_rhs) {
    for (std::size_t c : order) {
      const Row& r = piv_[where[c]].second;
      Q v = 0;
      for (const auto& [j, a] : r) {
        if (j == c) continue;
        if (j == n_) {
          if (with_rhs) v += a;
        } else if (x[j] != 0) {
          v -= a * x[j];
        }
      }
      x[c] = v;
    }
  };
  std::vector<Vec> ker;
  for (std::size_t f = 0; f < n_; ++f) {
    if (where[f] >= 0) continue;
    Vec x(n_);
    x[f] = 1;
    backsolve(x, false);
    ker.push_back(x);
  }
  sol.kernel = Matrix::from_cols(n_, ker);
  if (consistent_) {
    Vec x(n_);
    backsolve(x, true);
    sol.particular = x;
  }
  return sol;
}

// -------------------------------------------------------------- Subspace

namespace {
std::size_t first_nonzero(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}
}  // namespace

Subspace Subspace::span(std::size_t n, const std::vector<Vec>& vs) {
  Matrix m = Matrix::from_rows(n, vs);
  auto piv = rref(m);
  Subspace s;
  s.n_ = n;
  s.b_ = Matrix(n, piv.size());
  for (std::size_t j = 0; j < piv.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) s.b_(i, j) = m(j, i);
  return s;
}
Subspace Subspace::from_cols(const Matrix& m) { return span(m.rows(), m.col_list()); }
Subspace Subspace::whole(std::size_t n) { return from_cols(Matrix::identity(n)); }
Subspace Subspace::kernel_of(const Matrix& m) { return from_cols(kernel(m)); }

std::optional<Vec> Subspace::coords(const Vec& v) const {
  Vec c(dim());
  Vec r(v);
  for (std::size_t j = 0; j < dim(); ++j) {
    Vec bj = b_.col(j);
    std::size_t p = first_nonzero(bj);
    c[j] = r[p];
    axpy(r, -c[j], bj);
  }
  if (!mla::is_zero(r)) return std::nullopt;
  return c;
}
bool Subspace::contains(const Vec& v) const { return coords(v).has_value(); }
bool Subspace::contains(const Subspace& o) const {
  for (std::size_t j = 0; j < o.dim(); ++j)
    if (!contains(o.vec(j))) return false;
  return true;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  auto vs = a.vecs();
  for (auto& v : b.vecs()) vs.push_back(v);
  return Subspace::span(a.ambient(), vs);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  std::size_t n = a.ambient();
  if (a.dim() == 0 || b.dim() == 0) return Subspace(n);
  Matrix m(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = a.basis()(i, j);
    for (std::size_t j = 0; j < b.dim(); ++j) m(i, a.dim() + j) = -b.basis()(i, j);
  }
  Matrix k = kernel(m);
  std::vector<Vec> vs;
  for (std::size_t c = 0; c < k.cols(); ++c) {
    Vec v(n);
    for (std::size_t j = 0; j < a.dim(); ++j) axpy(v, k(j, c), a.vec(j));
    vs.push_back(v);
  }
  return Subspace::span(n, vs);
}

Subspace image(const Matrix& m, const Subspace& u) {
  std::vector<Vec> vs;
  for (std::size_t j = 0; j < u.dim(); ++j) vs.push_back(m * u.vec(j));
  return Subspace::span(m.rows(), vs);
}

Subspace preimage(const Matrix& m, const Subspace& w) {
  // Rows of ann spanning the annihilator of w.
  Matrix ann = kernel(w.basis().transpose()).transpose();
  if (ann.rows() == 0) return Subspace::whole(m.cols());
  return Subspace::kernel_of(ann * m);
}

std::vector<Vec> complement_basis(const Subspace& v, const Subspace& w) {
  std::vector<Vec> out;
  Subspace cur = w;
  for (std::size_t j = 0; j < v.dim(); ++j) {
    Vec x = v.vec(j);
    if (!cur.contains(x)) {
      out.push_back(x);
      cur = cur + Subspace::span(v.ambient(), {x});
    }
  }
  return out;
}

// ----------------------------------------------------------------- forms

Signature signature(const Matrix& s) {
  if (!s.is_symmetric()) throw std::invalid_argument("signature: form not symmetric");
  Matrix m(s);
  std::size_t n = m.rows();
  Signature sig;
  auto swap_idx = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(m(a, j), m(b, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(m(i, a), m(i, b));
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, p) == 0) ++p;
    if (p == n) {
      // Zero diagonal: replace x_i by x_i + x_j where <x_i,x_j> != 0.
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
          if (m(i, j) != 0) {
            for (std::size_t c = 0; c < n; ++c) m(i, c) += m(j, c);
            for (std::size_t r = 0; r < n; ++r) m(r, i) += m(r, j);
            p = i;
            found = true;
          }
      if (!found) {
        sig.r += n - k;
        break;
      }
    }
    swap_idx(k, p);
    const Q piv = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Q f = m(i, k) / piv;
      for (std::size_t c = k; c < n; ++c) m(i, c) -= f * m(k, c);
      for (std::size_t r = k; r < n; ++r) m(r, i) -= f * m(r, k);
    }
    if (piv < 0)
      ++sig.p;
    else
      ++sig.q;
  }
  return sig;
}

Subspace radical_of_form(const Matrix& s) { return Subspace::kernel_of(s); }

Matrix restrict_form(const Matrix& s, const Matrix& b) { return b.transpose() * s * b; }

bool nondegenerate_on(const Matrix& s, const Subspace& u) {
  Matrix g = restrict_form(s, u.basis());
  return rank(g) == u.dim();
}

// ------------------------------------------------------------------ Poly

Poly::Poly(std::vector<Q> c) : c_(std::move(c)) { trim(); }
void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}
Poly Poly::monomial(const Q& c, std::size_t deg) {
  std::vector<Q> v(deg + 1);
  v[deg] = c;
  return Poly(v);
}
Poly Poly::x_minus(const Q& r) { return Poly({-r, Q(1)}); }
Poly Poly::monic() const {
  if (c_.empty()) return *this;
  Poly p(*this);
  Q l = lead();
  for (auto& x : p.c_) x /= l;
  return p;
}
Poly Poly::derivative() const {
  std::vector<Q> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return Poly(d);
}
Q Poly::eval(const Q& x) const {
  Q r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}
Matrix Poly::eval(const Matrix& a) const {
  std::size_t n = a.rows();
  Matrix r(n, n);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * a + Matrix::identity(n) * c_[i];
  return r;
}
Poly Poly::operator+(const Poly& o) const {
  std::vector<Q> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return Poly(r);
}
Poly Poly::operator-(const Poly& o) const {
  std::vector<Q> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return Poly(r);
}
Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Q> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(r);
}
std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c_[i]) + ")";
    if (i > 0) s += "t^" + std::to_string(i);
  }
  return s;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Q> r = a.coeffs();
  int db = b.degree();
  std::vector<Q> q(std::max(0, a.degree() - db + 1));
  for (int k = a.degree() - db; k >= 0; --k) {
    Q f = r[k + db] / b.lead();
    q[k] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) r[k + j] -= f * b.coeff(j);
  }
  return {Poly(q), Poly(r)};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

void ext_gcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t) {
  Poly r0 = a, r1 = b, s0({Q(1)}), s1, t0, t1({Q(1)});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = r1;
    r1 = r;
    Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  Q l = r0.lead();
  if (l == 0) {
    g = r0;
    s = s0;
    t = t0;
    return;
  }
  Poly inv({1 / l});
  g = r0 * inv;
  s = s0 * inv;
  t = t0 * inv;
}

namespace {
std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> d;
  if (n == 0 || n > mpz_class("1000000000000")) return d;
  for (mpz_class i = 1; i * i <= n; ++i)
    if (n % i == 0) {
      d.push_back(i);
      if (i * i != n) d.push_back(n / i);
    }
  return d;
}
}  // namespace

std::vector<Q> rational_roots(const Poly& p) {
  std::vector<Q> roots;
  if (p.degree() < 1) return roots;
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, mpz_class(c.get_den()));
  std::vector<mpz_class> ic;
  for (const auto& c : p.coeffs()) ic.push_back(mpz_class(c * l));
  std::size_t shift = 0;
  while (shift < ic.size() && ic[shift] == 0) ++shift;
  if (shift > 0) roots.push_back(0);
  if (ic.size() - shift < 2) return roots;
  auto num = divisors(ic[shift]);
  auto den = divisors(ic.back());
  std::vector<Q> cand;
  for (const auto& a : num)
    for (const auto& b : den) {
      Q r(a, b);
      r.canonicalize();
      cand.push_back(r);
      cand.push_back(-r);
    }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  for (const auto& r : cand)
    if (p.eval(r) == 0) roots.push_back(r);
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {
Poly lcm_poly(const Poly& a, const Poly& b) {
  Poly g = gcd(a, b);
  return divmod(a * b, g).first.monic();
}

// Monic minimal polynomial of v relative to a.
Poly local_minpoly(const Matrix& a, const Vec& v) {
  std::size_t n = a.rows();
  std::vector<Vec> kry{v};
  // Incremental echelon over the Krylov vectors, tracking combinations.
  std::vector<Vec> red;               // reduced vectors
  std::vector<std::vector<Q>> comb;   // red[i] = sum comb[i][j] kry[j]
  std::vector<std::size_t> pivs;
  for (std::size_t k = 0; k <= n; ++k) {
    Vec w = kry[k];
    std::vector<Q> c(k + 1);
    c[k] = 1;
    for (std::size_t i = 0; i < red.size(); ++i) {
      const Q f = w[pivs[i]];
      if (f == 0) continue;
      axpy(w, -f, red[i]);
      for (std::size_t j = 0; j < comb[i].size(); ++j) c[j] -= f * comb[i][j];
    }
    std::size_t p = first_nonzero(w);
    if (p == n) return Poly(c).monic();
    Q inv = 1 / w[p];
    for (auto& x : w) x *= inv;
    for (auto& x : c) x *= inv;
    for (std::size_t i = 0; i < red.size(); ++i) {
      const Q f = red[i][p];
      if (f == 0) continue;
      axpy(red[i], -f, w);
      comb[i].resize(k + 1);
      for (std::size_t j = 0; j <= k; ++j) comb[i][j] -= f * c[j];
    }
    red.push_back(w);
    comb.push_back(c);
    pivs.push_back(p);
    kry.push_back(a * kry[k]);
  }
  throw std::logic_error("local minimal polynomial did not terminate");
}
}  // namespace

Poly minimal_polynomial(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("minimal_polynomial: not square");
  Poly m({Q(1)});
  for (std::size_t i = 0; i < a.rows(); ++i) m = lcm_poly(m, local_minpoly(a, unit_vec(a.rows(), i)));
  return m;
}

Poly squarefree_part(const Poly& m) {
  if (m.degree() < 1) return m.monic();
  Poly g = gcd(m, m.derivative());
  return divmod(m, g).first.monic();
}

bool is_semisimple_operator(const Matrix& a) {
  Poly m = minimal_polynomial(a);
  return gcd(m, m.derivative()).degree() == 0;
}

std::vector<Matrix> spectral_idempotents(const Matrix& a) {
  std::size_t n = a.rows();
  Poly m = minimal_polynomial(a);
  // Yun squarefree decomposition, then rational-root splitting of each factor.
  std::vector<Poly> pieces;
  Poly d = m.derivative();
  Poly a0 = gcd(m, d);
  Poly b = divmod(m, a0).first, c = divmod(d, a0).first;
  Poly dd = c - b.derivative();
  for (int mult = 1; b.degree() > 0; ++mult) {
    Poly ai = gcd(b, dd);
    b = divmod(b, ai).first;
    c = divmod(dd, ai).first;
    dd = c - b.derivative();
    if (ai.degree() < 1) continue;
    Poly rest = ai;
    for (const auto& r : rational_roots(ai)) {
      Poly lin = Poly::x_minus(r);
      Poly pw({Q(1)});
      for (int k = 0; k < mult; ++k) pw = pw * lin;
      pieces.push_back(pw);
      rest = divmod(rest, lin).first;
    }
    if (rest.degree() > 0) {
      Poly pw({Q(1)});
      for (int k = 0; k < mult; ++k) pw = pw * rest;
      pieces.push_back(pw);
    }
  }
  if (pieces.size() <= 1) return {Matrix::identity(n)};
  std::vector<Matrix> out;
  for (const auto& g : pieces) {
    Poly cof = divmod(m, g).first;
    Poly gg, s, t;
    ext_gcd(cof, g, gg, s, t);
    Poly e = divmod(s * cof, m).second;
    out.push_back(e.eval(a));
  }
  return out;
}

}  // namespace mla
