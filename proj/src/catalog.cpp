#include "mla/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mla {

namespace {

std::string list_str(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + ")";
}

std::string cx_str(const CVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += i ? "," : "";
    out += to_string(v[i].re);
    if (v[i].im != 0) out += (v[i].im > 0 ? "+" : "") + to_string(v[i].im) + "i";
  }
  return out + ")";
}

Vec ev(std::size_t n, std::size_t i, const Q& c = 1) {
  Vec v(n);
  v[i] = c;
  return v;
}

LieAlgebra alg_sl2() {
  LieAlgebra l(3, {"H", "X", "Y"});
  l.set_bracket(0, 1, ev(3, 2, 2));
  l.set_bracket(0, 2, ev(3, 1, 2));
  l.set_bracket(1, 2, ev(3, 0, 2));
  return l;
}

LieAlgebra alg_su2() {
  LieAlgebra l(3, {"H", "X", "Y"});
  l.set_bracket(0, 1, ev(3, 2, 2));
  l.set_bracket(0, 2, ev(3, 1, -2));
  l.set_bracket(1, 2, ev(3, 0, 2));
  return l;
}

LieAlgebra alg_h1() {
  LieAlgebra l(3, {"X", "Y", "Z"});
  l.set_bracket(0, 1, ev(3, 2));
  return l;
}

LieAlgebra alg_abelian(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("X" + std::to_string(i + 1));
  return LieAlgebra(n, names);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0)
        for (std::size_t k = 0; k < b.rows(); ++k)
          for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return m;
}

Matrix mat2(Q a, Q b, Q c, Q d) {
  Matrix m(2, 2);
  m(0, 0) = a, m(0, 1) = b, m(1, 0) = c, m(1, 1) = d;
  return m;
}

Matrix rot2() { return mat2(0, -1, 1, 0); }
Matrix omega2() { return mat2(0, 1, -1, 0); }

// One summand of an orthogonal module with generator images for the equivariant structure.
struct Piece {
  std::vector<Matrix> rho;
  Matrix form;
  std::vector<Matrix> der, aut;
};

Piece scaled_adjoint(const LieAlgebra& l, const Matrix& form, std::vector<Matrix> der, std::vector<Matrix> aut) {
  Piece p;
  for (std::size_t i = 0; i < l.dim(); ++i) p.rho.push_back(l.ad(i));
  p.form = form;
  p.der = std::move(der);
  p.aut = std::move(aut);
  return p;
}

OrthogonalModule build_module(const LieAlgebra& l, const std::vector<Piece>& pieces,
                              const std::optional<EquivStructure>& on_l) {
  std::size_t m = 0;
  for (const auto& p : pieces) m += p.form.rows();
  OrthogonalModule a;
  a.module = trivial_module(l, m);
  std::vector<Matrix> forms;
  for (const auto& p : pieces) forms.push_back(p.form);
  a.form = block_diag(forms);
  for (std::size_t i = 0; i < l.dim(); ++i) {
    std::vector<Matrix> blocks;
    for (const auto& p : pieces) blocks.push_back(p.rho.empty() ? Matrix(p.form.rows(), p.form.rows()) : p.rho[i]);
    a.module.rho[i] = block_diag(blocks);
  }
  if (on_l) {
    EquivStructure on_a;
    on_a.dim = m;
    on_a.preset = on_l->preset;
    for (std::size_t k = 0; k < on_l->derivations.size(); ++k) {
      std::vector<Matrix> blocks;
      for (const auto& p : pieces) blocks.push_back(p.der.empty() ? Matrix(p.form.rows(), p.form.rows()) : p.der[k]);
      on_a.derivations.push_back({on_l->derivations[k].name, block_diag(blocks)});
    }
    for (std::size_t k = 0; k < on_l->automorphisms.size(); ++k) {
      std::vector<Matrix> blocks;
      for (const auto& p : pieces) blocks.push_back(p.aut.empty() ? Matrix::identity(p.form.rows()) : p.aut[k]);
      on_a.automorphisms.push_back({on_l->automorphisms[k].name, block_diag(blocks)});
    }
    a.equiv = EquivPair{*on_l, on_a};
  }
  if (Check c = check_orthogonal_module(a); !c) throw std::logic_error("catalog module invalid: " + c.violation);
  if (a.equiv)
    if (Check c = check_equivariant_module(a.module, a.form, *a.equiv); !c)
      throw std::logic_error("catalog module structure invalid: " + c.violation);
  return a;
}

EquivStructure structure(std::size_t n, std::vector<NamedMatrix> der, std::vector<NamedMatrix> aut,
                         std::optional<GradingKind> preset) {
  EquivStructure e;
  e.dim = n;
  e.derivations = std::move(der);
  e.automorphisms = std::move(aut);
  e.preset = preset;
  return e;
}

Cochain killing_3form(const LieAlgebra& l, const Q& c) {
  Matrix b = killing_form(l);
  Cochain g = Cochain::scalar(l.dim(), 3);
  for (const auto& s : subsets(l.dim(), 3)) g.set(s, c * dot(l.bracket(s[0], s[1]), b * ev(l.dim(), s[2])));
  return g;
}

Matrix theta_of_z2(const Instance& x) {
  if (!x.phi) throw std::invalid_argument(x.name + " has no equivariant structure");
  return induced_involution(*x.phi);
}

void require_nonzero(const Vec& v, const std::string& what) {
  for (const auto& x : v)
    if (x == 0) throw std::invalid_argument(what + " has a zero entry");
}

}  // namespace

Instance make_instance(std::string name, const OrthogonalModule& a, const QuadCocycle& z) {
  QuadExtension ext = standard_model(a, z);
  Instance x;
  x.name = std::move(name);
  x.g = ext.g;
  x.phi = ext.phi;
  x.module = a;
  x.cocycle = z;
  x.ext = ext;
  return x;
}

Check verify_instance(const Instance& x) {
  if (auto j = check_jacobi(x.g.alg); !j.ok)
    return Check::fail("Jacobi fails at (" + std::to_string(j.triple[0]) + "," + std::to_string(j.triple[1]) + "," +
                       std::to_string(j.triple[2]) + ")");
  if (Check c = check_metric(x.g); !c) return c;
  if (signature(x.g.form).r != 0) return Check::fail("form degenerate");
  if (!x.phi) return Check::pass();
  if (Check c = check_equivariant(x.g, *x.phi); !c) return c;
  if (x.phi->preset || (x.phi->derivations.empty() && x.phi->automorphisms.size() == 1)) {
    if (!z2_split(x.g.alg, induced_involution(*x.phi)).proper) return Check::fail("induced involution is not proper");
  }
  return Check::pass();
}

Matrix instance_theta(const Instance& x) { return theta_of_z2(x); }

Matrix pseudo_euclidean(std::size_t p, std::size_t q) {
  Vec d(p + q, Q(1));
  for (std::size_t i = 0; i < p; ++i) d[i] = -1;
  return Matrix::diag(d);
}

// ---------------------------------------------------------------- oscillator

Instance osc(const Vec& lambda) {
  if (lambda.empty()) throw std::invalid_argument("osc needs at least one lambda");
  require_nonzero(lambda, "lambda");
  std::size_t m = lambda.size();
  LieAlgebra l(1, {"T"});
  Piece p;
  Matrix r(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    r(2 * i + 1, 2 * i) = lambda[i];
    r(2 * i, 2 * i + 1) = -lambda[i];
  }
  p.rho = {r};
  p.form = Matrix::identity(2 * m);
  OrthogonalModule a = build_module(l, {p}, std::nullopt);
  QuadCocycle z{a.zero(2), a.scalar_zero(3)};
  Instance x = make_instance("osc" + list_str(lambda), a, z);
  std::vector<std::string> names{"Z"};
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back("X" + std::to_string(i + 1));
    names.push_back("Y" + std::to_string(i + 1));
  }
  names.push_back("T");
  x.g.alg.set_names(names);
  return x;
}

Vec osc_normalize(const Vec& lambda) {
  require_nonzero(lambda, "lambda");
  Vec v;
  for (const auto& x : lambda) v.push_back(abs(x));
  std::sort(v.begin(), v.end());
  Q s = v.front();
  for (auto& x : v) x /= s;
  return v;
}

// ---------------------------------------------------------------- Cahen-Wallach

Instance cahen_wallach(const Vec& lambda, const Vec& mu) {
  std::size_t p = lambda.size(), q = mu.size();
  if (p + q == 0) throw std::invalid_argument("p + q must be positive");
  std::size_t m = 2 * p + 2 * q;
  LieAlgebra l(1, {"L"});
  Matrix r(m, m);
  Vec form_d(m, Q(1)), th(m, Q(-1));
  for (std::size_t i = 0; i < p; ++i) {
    r(i + p, i) = lambda[i];
    r(i, i + p) = lambda[i];
    form_d[i] = -1;
    th[i] = 1;
  }
  for (std::size_t j = 0; j < q; ++j) {
    std::size_t o = 2 * p;
    r(o + j + q, o + j) = mu[j];
    r(o + j, o + j + q) = -mu[j];
    th[o + j] = 1;
  }
  EquivStructure on_l = structure(1, {}, {{"theta", Matrix::diag({Q(-1)})}}, GradingKind::z2);
  Piece pc{{r}, Matrix::diag(form_d), {}, {Matrix::diag(th)}};
  OrthogonalModule a = build_module(l, {pc}, on_l);
  Instance x = make_instance("cw lambda=" + list_str(lambda) + " mu=" + list_str(mu), a, {a.zero(2), a.scalar_zero(3)});
  return x;
}

std::pair<Vec, Vec> cw_normalize(const Vec& lambda, const Vec& mu) {
  require_nonzero(lambda, "lambda");
  require_nonzero(mu, "mu");
  if (lambda.empty() && mu.empty()) throw std::invalid_argument("p + q must be positive");
  auto norm = [](Vec v) {
    for (auto& x : v) x = abs(x);
    std::sort(v.begin(), v.end());
    return v;
  };
  Vec l = norm(lambda), m = norm(mu);
  Q s = l.empty() ? m.front() : l.front();
  for (auto& x : l) x /= s;
  for (auto& x : m) x /= s;
  return {l, m};
}

Matrix cw_metric_at(const Vec& lambda, const Vec& mu, const Vec& coords) {
  std::size_t p = lambda.size(), q = mu.size(), n = p + q + 2;
  if (coords.size() != n) throw std::invalid_argument("coordinates must be (z, a, a', l)");
  Matrix g(n, n);
  g(0, n - 1) = g(n - 1, 0) = 1;
  Q gll = 0;
  for (std::size_t i = 0; i < p; ++i) gll += lambda[i] * lambda[i] * coords[1 + i] * coords[1 + i];
  for (std::size_t j = 0; j < q; ++j) gll -= mu[j] * mu[j] * coords[1 + p + j] * coords[1 + p + j];
  for (std::size_t i = 1; i + 1 < n; ++i) g(i, i) = 1;
  g(n - 1, n - 1) = gll;
  return g;
}

void ExpNum::add_term(const Q& re, const Q& im, const Cx& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(re, im);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

ExpNum ExpNum::exp(const Q& re, const Q& im) {
  ExpNum e;
  e.add_term(re, im, Cx(1));
  return e;
}

ExpNum ExpNum::cosh(const Q& t) {
  ExpNum e;
  e.add_term(t, 0, Cx(Q(1, 2)));
  e.add_term(-t, 0, Cx(Q(1, 2)));
  return e;
}

ExpNum ExpNum::sinh(const Q& t) {
  ExpNum e;
  e.add_term(t, 0, Cx(Q(1, 2)));
  e.add_term(-t, 0, Cx(Q(-1, 2)));
  return e;
}

ExpNum ExpNum::cos(const Q& t) {
  ExpNum e;
  e.add_term(0, t, Cx(Q(1, 2)));
  e.add_term(0, -t, Cx(Q(1, 2)));
  return e;
}

ExpNum ExpNum::sin(const Q& t) {
  ExpNum e;
  e.add_term(0, t, Cx(0, Q(-1, 2)));
  e.add_term(0, -t, Cx(0, Q(1, 2)));
  return e;
}

ExpNum ExpNum::operator+(const ExpNum& o) const {
  ExpNum r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
  return r;
}

ExpNum ExpNum::operator-(const ExpNum& o) const { return *this + (-o); }

ExpNum ExpNum::operator*(const ExpNum& o) const {
  ExpNum r;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return r;
}

std::optional<Q> ExpNum::as_rational() const {
  if (terms_.empty()) return Q(0);
  if (terms_.size() != 1) return std::nullopt;
  const auto& [k, c] = *terms_.begin();
  if (k.first != 0 || k.second != 0 || c.im != 0) return std::nullopt;
  return c.re;
}

std::string ExpNum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream o;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) o << " + ";
    first = false;
    o << "(" << to_string(c.re);
    if (c.im != 0) o << (c.im > 0 ? "+" : "") << to_string(c.im) << "i";
    o << ")";
    if (k.first != 0 || k.second != 0) {
      o << "*exp(" << to_string(k.first);
      if (k.second != 0) o << (k.second > 0 ? "+" : "") << to_string(k.second) << "i";
      o << ")";
    }
  }
  return o.str();
}

CWGroup::CWGroup(const Vec& lambda, const Vec& mu) : lam_(lambda), mu_(mu), inst_(cahen_wallach(lambda, mu)) {
  std::size_t k = 2 * lam_.size() + 2 * mu_.size();
  pair_ = Matrix(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) pair_(i, j) = inst_.g.alg.c(1 + i, 1 + j, 0);
}

std::vector<ExpNum> CWGroup::exp_action(const Q& t, const std::vector<ExpNum>& a) const {
  std::size_t p = lam_.size(), q = mu_.size();
  if (a.size() != 2 * p + 2 * q) throw std::invalid_argument("element of a has wrong length");
  std::vector<ExpNum> r(a.size());
  for (std::size_t i = 0; i < p; ++i) {
    ExpNum ch = ExpNum::cosh(lam_[i] * t), sh = ExpNum::sinh(lam_[i] * t);
    r[i] = ch * a[i] - sh * a[i + p];
    r[i + p] = ch * a[i + p] - sh * a[i];
  }
  for (std::size_t j = 0; j < q; ++j) {
    std::size_t x = 2 * p + j, y = x + q;
    ExpNum c = ExpNum::cos(mu_[j] * t), s = ExpNum::sin(mu_[j] * t);
    r[x] = c * a[x] + s * a[y];
    r[y] = c * a[y] - s * a[x];
  }
  return r;
}

ExpNum CWGroup::bracket(const std::vector<ExpNum>& a, const std::vector<ExpNum>& b) const {
  ExpNum r;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (pair_(i, j) != 0) r = r + ExpNum(pair_(i, j)) * a[i] * b[j];
  return r;
}

CWElement CWGroup::multiply(const CWElement& x, const CWElement& y) const {
  std::vector<ExpNum> ea = exp_action(y.l, x.a);
  CWElement r;
  r.z = x.z + y.z + ExpNum(Q(1, 2)) * bracket(ea, y.a);
  r.a.resize(ea.size());
  for (std::size_t i = 0; i < ea.size(); ++i) r.a[i] = ea[i] + y.a[i];
  r.l = x.l + y.l;
  return r;
}

// ---------------------------------------------------------------- nilpotent list

namespace {

struct NilData {
  LieAlgebra l;
  std::vector<std::pair<std::size_t, std::size_t>> a_choices;  // (negative, positive)
  std::vector<std::pair<std::vector<std::size_t>, std::size_t>> alpha;  // sigma^{ij} (x) e_k
  std::vector<std::pair<std::vector<std::size_t>, Q>> gamma_base;
  std::vector<std::vector<std::pair<std::vector<std::size_t>, Q>>> gamma_choices;
};

std::string rpq(std::size_t p, std::size_t q) { return "R^{" + std::to_string(p) + "," + std::to_string(q) + "}"; }

NilData nil_data(const std::string& id) {
  NilData d;
  using G = std::vector<std::pair<std::vector<std::size_t>, Q>>;
  std::vector<std::pair<std::size_t, std::size_t>> one{{0, 1}, {1, 0}};
  std::vector<std::pair<std::size_t, std::size_t>> two{{0, 2}, {2, 0}, {1, 1}};
  if (id == "1") {
    d.l = LieAlgebra(4, {"X1", "X2", "X3", "X4"});
    d.l.set_bracket(0, 1, ev(4, 2));
    d.l.set_bracket(0, 2, ev(4, 3));
    d.a_choices = one;
    d.alpha = {{{0, 3}, 0}};
    d.gamma_choices = {G{}, G{{{1, 2, 3}, 1}}, G{{{0, 2, 3}, 1}}, G{{{0, 2, 3}, -1}}};
  } else if (id == "2" || id == "3") {
    d.l = LieAlgebra(4, {"X1", "X2", "X3", "X4"});
    if (id == "2") d.l.set_bracket(0, 1, ev(4, 2));
    d.a_choices = one;
    d.alpha = {{{0, 2}, 0}};
    d.gamma_choices = {G{{{1, 2, 3}, 1}}};
  } else if (id == "4a") {
    d.l = LieAlgebra(3, {"X1", "X2", "X3"});
    d.l.set_bracket(0, 1, ev(3, 2));
    d.a_choices = one;
    d.alpha = {{{0, 2}, 0}};
    d.gamma_choices = {G{}};
  } else if (id == "4b") {
    d.l = LieAlgebra(3, {"X1", "X2", "X3"});
    d.l.set_bracket(0, 1, ev(3, 2));
    d.a_choices = two;
    d.alpha = {{{0, 2}, 0}, {{1, 2}, 1}};
    d.gamma_choices = {G{}};
  } else if (id == "5a") {
    d.l = alg_abelian(3);
    d.a_choices = {{0, 0}};
    d.gamma_choices = {G{{{0, 1, 2}, 1}}};
  } else if (id == "5b") {
    d.l = alg_abelian(3);
    d.a_choices = two;
    d.alpha = {{{0, 1}, 0}, {{0, 2}, 1}};
    d.gamma_choices = {G{}};
  } else if (id == "5c") {
    d.l = alg_abelian(3);
    d.a_choices = {{0, 3}, {2, 1}, {1, 2}, {3, 0}};
    d.alpha = {{{0, 1}, 0}, {{0, 2}, 1}, {{1, 2}, 2}};
    d.gamma_choices = {G{}};
  } else if (id == "6") {
    d.l = alg_abelian(2);
    d.a_choices = one;
    d.alpha = {{{0, 1}, 0}};
    d.gamma_choices = {G{}};
  } else {
    throw std::invalid_argument("unknown nilpotent entry " + id);
  }
  return d;
}

std::string gamma_label(const std::vector<std::pair<std::vector<std::size_t>, Q>>& g) {
  if (g.empty()) return "0";
  std::string s;
  for (const auto& [idx, c] : g) {
    s += (c < 0 ? "-" : "") + std::string("sigma^");
    for (auto i : idx) s += std::to_string(i + 1);
  }
  return s;
}

}  // namespace

const std::vector<NilpotentEntry>& nilpotent_entries() {
  static const std::vector<NilpotentEntry> entries = [] {
    std::vector<NilpotentEntry> out;
    for (std::string id : {"1", "2", "3", "4a", "4b", "5a", "5b", "5c", "6"}) {
      NilData d = nil_data(id);
      NilpotentEntry e{id, {}};
      for (const auto& [p, q] : d.a_choices)
        for (const auto& g : d.gamma_choices) e.variants.push_back("a=" + rpq(p, q) + ",gamma=" + gamma_label(g));
      out.push_back(e);
    }
    return out;
  }();
  return entries;
}

Instance nilpotent_le9(const std::string& id, std::size_t variant) {
  NilData d = nil_data(id);
  std::size_t ng = d.gamma_choices.size();
  if (variant >= d.a_choices.size() * ng) throw std::invalid_argument("variant out of range for entry " + id);
  auto [p, q] = d.a_choices[variant / ng];
  const auto& gch = d.gamma_choices[variant % ng];
  std::size_t n = d.l.dim(), m = p + q;
  OrthogonalModule a;
  a.module = trivial_module(d.l, m);
  a.form = pseudo_euclidean(p, q);
  Cochain alpha(n, 2, m);
  for (const auto& [idx, k] : d.alpha) alpha.set(idx, ev(m, k));
  Cochain gamma = Cochain::scalar(n, 3);
  for (const auto& [idx, c] : gch) gamma.set(idx, c);
  const auto& entry = *std::find_if(nilpotent_entries().begin(), nilpotent_entries().end(),
                                    [&](const NilpotentEntry& e) { return e.id == id; });
  return make_instance("nilpotent " + id + " " + entry.variants[variant], a, {alpha, gamma});
}

// ---------------------------------------------------------------- pseudo-Hermitian and para-Hermitian

Instance pseudo_hermitian(const std::string& case_id, std::size_t p, std::size_t r, const Q& c) {
  auto cx = GradingKind::complex;
  if (case_id == "1a" || case_id == "1b") {
    LieAlgebra l = alg_abelian(2);
    EquivStructure on_l = structure(2, {{"J", rot2()}}, {}, cx);
    Piece pc{{}, Matrix::diag({Q(case_id == "1a" ? 1 : -1)}), {}, {}};
    OrthogonalModule a = build_module(l, {pc}, on_l);
    Cochain alpha = a.zero(2);
    alpha.set({0, 1}, Vec{Q(1)});
    return make_instance("kahler " + case_id, a, {alpha, a.scalar_zero(3)});
  }
  if (case_id == "2") {
    LieAlgebra l = alg_h1();
    Matrix j(3, 3);
    j(1, 0) = 1;
    j(0, 1) = -1;
    EquivStructure on_l = structure(3, {{"J", j}}, {}, cx);
    Piece pc{{}, Matrix::identity(2), {rot2()}, {}};
    OrthogonalModule a = build_module(l, {pc}, on_l);
    Cochain alpha = a.zero(2);
    alpha.set({0, 2}, ev(2, 0));
    alpha.set({1, 2}, ev(2, 1));
    return make_instance("kahler 2", a, {alpha, a.scalar_zero(3)});
  }
  if (case_id == "3" || case_id == "4") {
    if (r > p) throw std::invalid_argument("need 0 <= r <= p");
    bool su = case_id == "3";
    LieAlgebra l = su ? alg_su2() : alg_sl2();
    Matrix jl = su ? l.ad(0) * Q(1, 2) : l.ad(1) * Q(-1, 2);
    EquivStructure on_l = structure(3, {{"J", jl}}, {}, cx);
    Piece a1;
    if (su) {
      CMat h(2, 2), x(2, 2), y(2, 2), ja(2, 2);
      h.set(0, 0, Cx(0, 1));
      h.set(1, 1, Cx(0, -1));
      x.set(0, 1, Cx(1));
      x.set(1, 0, Cx(-1));
      y.set(0, 1, Cx(0, 1));
      y.set(1, 0, Cx(0, 1));
      ja.set(0, 0, Cx(0, 1));
      a1.rho = {realify(h), realify(x), realify(y)};
      a1.form = Matrix::identity(4);
      a1.der = {realify(ja)};
    } else {
      Matrix h = mat2(1, 0, 0, -1), x = mat2(0, 1, -1, 0), y = mat2(0, 1, 1, 0);
      Matrix id2 = Matrix::identity(2);
      a1.rho = {kron(h, id2), kron(x, id2), kron(y, id2)};
      a1.form = kron(omega2(), omega2()) * Q(-1);
      a1.der = {(kron(x, id2) * Q(-1) + kron(id2, rot2())) * Q(1, 2)};
    }
    Matrix b = killing_form(l);
    Piece a2 = scaled_adjoint(l, su ? b * Q(-1) : b, {jl}, {});
    std::vector<Piece> pieces;
    for (std::size_t i = 0; i < p - r; ++i) pieces.push_back(a1);
    for (std::size_t i = 0; i < r; ++i) pieces.push_back(a2);
    OrthogonalModule a = build_module(l, pieces, on_l);
    return make_instance("kahler " + case_id + " p=" + std::to_string(p) + " r=" + std::to_string(r) + " c=" + to_string(c), a,
                         {a.zero(2), killing_3form(l, c)});
  }
  throw std::invalid_argument("unknown pseudo-Hermitian case " + case_id);
}

Instance para_hermitian(int case_id, const Q& c) {
  auto pc = GradingKind::para_complex;
  if (case_id == 1 || case_id == 2) {
    LieAlgebra l = alg_abelian(2);
    Matrix dl = Matrix::diag({Q(1), Q(-1)});
    EquivStructure on_l = structure(2, {{"D", dl}}, {{"w", Matrix::identity(2) - dl * dl * Q(2)}}, pc);
    Piece p{{}, Matrix::diag({Q(case_id == 1 ? 1 : -1)}), {}, {}};
    OrthogonalModule a = build_module(l, {p}, on_l);
    Cochain alpha = a.zero(2);
    alpha.set({0, 1}, Vec{Q(1)});
    return make_instance("para-kahler " + std::to_string(case_id), a, {alpha, a.scalar_zero(3)});
  }
  if (case_id == 3) {
    LieAlgebra l = alg_sl2();
    Matrix dl = l.ad(0) * Q(1, 2);
    EquivStructure on_l = structure(3, {{"D", dl}}, {{"w", Matrix::identity(3) - dl * dl * Q(2)}}, pc);
    OrthogonalModule a = build_module(l, {}, on_l);
    return make_instance("para-kahler 3 c=" + to_string(c), a, {a.zero(2), killing_3form(l, c)});
  }
  throw std::invalid_argument("unknown para-Hermitian case " + std::to_string(case_id));
}

Instance gm_family(std::size_t m) {
  std::size_t n = 3 * m + 2;
  auto E = [](std::size_t i) { return i - 1; };
  auto F = [&](std::size_t j) { return m + 1 + j - 1; };
  auto Z = [&](std::size_t k) { return 2 * (m + 1) + k - 1; };
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= m + 1; ++i) names.push_back("E" + std::to_string(i));
  for (std::size_t i = 1; i <= m + 1; ++i) names.push_back("F" + std::to_string(i));
  for (std::size_t k = 1; k <= m; ++k) names.push_back("Z" + std::to_string(k));
  LieAlgebra l(n, names);
  for (std::size_t i = 1; i <= m + 1; ++i)
    for (std::size_t j = 1; j <= m + 1; ++j)
      if (i + j - 1 <= m) l.add_bracket(E(i), F(j), Z(i + j - 1), 1);
  for (std::size_t k = 1; k <= m; ++k)
    for (std::size_t i = 1; i + k <= m + 1; ++i) {
      l.add_bracket(Z(k), E(i), F(i + k), 1);
      l.add_bracket(Z(k), F(i), E(k + i), -1);
    }
  Matrix form(n, n), j(n, n);
  for (std::size_t i = 1; i <= m + 1; ++i) {
    std::size_t o = m + 2 - i;
    if (o >= 1 && o <= m + 1) {
      form(E(i), E(o)) = 1;
      form(F(i), F(o)) = 1;
    }
    j(F(i), E(i)) = 1;
    j(E(i), F(i)) = -1;
  }
  for (std::size_t k = 1; k <= m; ++k) form(Z(k), Z(m + 1 - k)) = 1;
  Instance x;
  x.name = "g(" + std::to_string(m) + ")";
  x.g = {l, form};
  x.phi = structure(n, {{"J", j}}, {}, GradingKind::complex);
  return x;
}

// ---------------------------------------------------------------- h(1), index 2

H1Index2 index2_h1_modules(const std::vector<std::pair<Q, Q>>& lambda, const std::vector<std::pair<Q, Q>>& mu,
                           int variant) {
  if (variant != 1 && variant != 2) throw std::invalid_argument("variant must be 1 or 2");
  for (const auto& [x, y] : lambda)
    if (x == 0 && y == 0) throw std::invalid_argument("lambda covector is zero");
  for (const auto& [x, y] : mu)
    if (x == 0 && y == 0) throw std::invalid_argument("mu covector is zero");
  std::size_t p = lambda.size(), q = mu.size(), t = static_cast<std::size_t>(variant);
  std::size_t m = 2 * p + 2 * q + t;
  LieAlgebra l = alg_h1();
  std::vector<Matrix> rho(3, Matrix(m, m));
  Vec form_d(m, Q(1)), th(m, Q(-1));
  for (std::size_t i = 0; i < p; ++i) {
    Q v[2] = {lambda[i].first, lambda[i].second};
    for (int s = 0; s < 2; ++s) {
      rho[s](i + p, i) = v[s];
      rho[s](i, i + p) = v[s];
    }
    form_d[i] = -1;
    th[i] = 1;
  }
  for (std::size_t j = 0; j < q; ++j) {
    std::size_t o = 2 * p;
    Q v[2] = {mu[j].first, mu[j].second};
    for (int s = 0; s < 2; ++s) {
      rho[s](o + j + q, o + j) = v[s];
      rho[s](o + j, o + j + q) = -v[s];
    }
    th[o + j] = 1;
  }
  Matrix theta_l = Matrix::diag({Q(-1), Q(-1), Q(1)});
  EquivStructure on_l = structure(3, {}, {{"theta", theta_l}}, GradingKind::z2);
  Piece pc{rho, Matrix::diag(form_d), {}, {Matrix::diag(th)}};
  H1Index2 out{build_module(l, {pc}, on_l), theta_l, Matrix::diag(th), {}};
  for (std::size_t s = 0; s < t; ++s) out.trivial_minus.push_back(2 * p + 2 * q + s);
  return out;
}

bool in_Z_l0(const H1Index2& m, const Cochain& alpha) {
  std::size_t ad = m.module.adim();
  if (alpha.n() != 3 || alpha.degree() != 2 || alpha.values_dim() != ad) return false;
  if (!is_zero(alpha.at({0, 1}))) return false;
  std::vector<Vec> triv;
  for (auto i : m.trivial_minus) triv.push_back(ev(ad, i));
  Subspace target = Subspace::span(ad, triv);
  return !target.is_zero() && Subspace::span(ad, {alpha.at({2, 0}), alpha.at({2, 1})}) == target;
}

QuadCocycle index2_h1_cocycle(const H1Index2& m, const Vec& u, const Vec& w) {
  std::size_t t = m.trivial_minus.size(), ad = m.module.adim();
  if (u.size() != t || w.size() != t) throw std::invalid_argument("u, w must have one entry per trivial basis vector");
  Vec uu(ad), ww(ad);
  for (std::size_t s = 0; s < t; ++s) {
    uu[m.trivial_minus[s]] = u[s];
    ww[m.trivial_minus[s]] = w[s];
  }
  Cochain alpha = m.module.zero(2);
  alpha.set({2, 0}, uu);
  alpha.set({2, 1}, ww);
  if (!in_Z_l0(m, alpha)) throw std::invalid_argument("alpha(Z, l) does not span the trivial part of a_-");
  return {alpha, m.module.scalar_zero(3)};
}

// ---------------------------------------------------------------- hyper-Kaehler and hypersymplectic

CVec s_lambda(const Q& lambda) {
  SymPower s4(2, 4);
  CVec s(s4.size());
  s[s4.index({0, 0, 0, 0})] = Cx(1);
  s[s4.index({0, 0, 1, 1})] = Cx(lambda);
  s[s4.index({1, 1, 1, 1})] = Cx(1);
  return s;
}

CMat quaternionic_structure(std::size_t n) {
  CMat j(2 * n, 2 * n);
  for (std::size_t a = 0; a < n; ++a) {
    j.set(n + a, a, Cx(1));
    j.set(a, n + a, Cx(-1));
  }
  return j;
}

namespace {

CMat times_i(std::size_t d) {
  CMat m(d, d);
  for (std::size_t k = 0; k < d; ++k) m.set(k, k, Cx(0, 1));
  return m;
}

CMat conj_transpose(const CMat& m) {
  CMat r(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.set(j, i, m.at(i, j).conj());
  return r;
}

// Real matrix of x -> sym_antilinear(p, j, x) on the realified S^k.
Matrix antilinear_real(const SymPower& p, const CMat& j) {
  std::size_t n = 2 * p.size();
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < n; ++c) cols.push_back(realify(sym_antilinear(p, j, complexify(unit_vec(n, c)))));
  return Matrix::from_cols(n, cols);
}

CVec cunit(std::size_t n, std::size_t i) {
  CVec v(n);
  v[i] = Cx(1);
  return v;
}

// b_S(x, y) = <S, x y> for x, y in S^2 and S in S^4 of the dual.
Cx quartic_pairing(const SymPower& s2, const SymPower& s4, const CVec& s, const CVec& x, const CVec& y) {
  Cx r;
  for (std::size_t i = 0; i < s2.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < s2.size(); ++j) {
      if (y[j].is_zero()) continue;
      std::vector<std::size_t> g = s2.mono(i);
      g.insert(g.end(), s2.mono(j).begin(), s2.mono(j).end());
      std::size_t k = s4.index(g);
      r = r + s[k] * Cx(s4.multiplicity_factorial(k) / 24) * x[i] * y[j];
    }
  }
  return r;
}

// Quotient of a real space with Gram matrix b by its radical.
struct RadicalQuotient {
  Matrix form;  // on the complement
  Matrix proj;  // coordinates -> complement coordinates
};

RadicalQuotient mod_radical(const Matrix& b) {
  std::size_t r = b.rows();
  Subspace rad = Subspace::kernel_of(b);
  std::vector<Vec> comp = complement_basis(Subspace::whole(r), rad);
  std::vector<Vec> all = comp;
  for (const auto& v : rad.vecs()) all.push_back(v);
  Matrix basis = Matrix::from_cols(r, all);
  Matrix inv = *inverse(basis);
  RadicalQuotient q;
  q.proj = Matrix(comp.size(), r);
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (std::size_t j = 0; j < r; ++j) q.proj(i, j) = inv(i, j);
  q.form = restrict_form(b, Matrix::from_cols(r, comp));
  return q;
}

Cochain fit_gamma(const OrthogonalModule& a, const Cochain& alpha, const Cochain& gamma0) {
  Cochain rhs = wedge(alpha, alpha, a.form) * Q(1, 2);
  Cochain lhs = d(gamma0, a.alg());
  const Vec &lv = lhs.vec(), &rv = rhs.vec();
  std::optional<Q> c;
  for (std::size_t i = 0; i < lv.size(); ++i)
    if (lv[i] != 0) {
      c = rv[i] / lv[i];
      break;
    }
  if (!c) {
    if (!rhs.is_zero()) throw std::logic_error("d gamma0 = 0 but <alpha ^ alpha> != 0");
    return gamma0 * Q(0);
  }
  if (lhs * *c != rhs) throw std::logic_error("no multiple of gamma0 solves d gamma = 1/2 <alpha ^ alpha>");
  return gamma0 * *c;
}

// I, J, K acting on the first factor of R^2 (x) R^m.
std::vector<Matrix> split_quaternions(std::size_t m) {
  Matrix id = Matrix::identity(m);
  return {kron(rot2(), id), kron(Matrix::diag({Q(1), Q(-1)}), id), kron(mat2(0, 1, 1, 0), id)};
}

std::vector<Matrix> complex_quaternions(std::size_t d, const CMat& j) {
  Matrix i = realify(times_i(d));
  Matrix jj = realify_antilinear(j);
  return {i, jj, i * jj};
}

EquivStructure quaternion_structure(std::size_t dim, const std::vector<Matrix>& ijk, bool para) {
  return structure(dim, {{"I", ijk[0]}, {"J", ijk[1]}, {"K", ijk[2]}}, {},
                   para ? GradingKind::para_quaternionic : GradingKind::quaternionic);
}

Matrix pad(const Matrix& m, std::size_t extra) { return block_diag({m, Matrix(extra, extra)}); }

// Permanent of a 3x3 matrix.
Q perm3(const Matrix& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) + m(1, 2) * m(2, 1)) + m(0, 1) * (m(1, 0) * m(2, 2) + m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) + m(1, 1) * m(2, 0));
}

}  // namespace

Instance hk_oel(std::size_t n, const CVec& s, bool hypersymplectic) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  std::size_t d = 2 * n;
  SymPower s1(d, 1), s2(d, 2), s4(d, 4);
  if (s.size() != s4.size()) throw std::invalid_argument("S has the wrong number of coefficients");
  if (!hypersymplectic) {
    CMat j = quaternionic_structure(n);
    if (sym_antilinear(s4, conj_transpose(j), s) != s) throw std::invalid_argument("S is not tau-invariant");
    Matrix t2 = antilinear_real(s2, j);
    Subspace fixed = Subspace::kernel_of(t2 - Matrix::identity(t2.rows()));
    std::size_t r = fixed.dim();
    Matrix b(r, r);
    for (std::size_t x = 0; x < r; ++x)
      for (std::size_t y = 0; y < r; ++y) {
        Cx v = quartic_pairing(s2, s4, s, complexify(fixed.vec(x)), complexify(fixed.vec(y)));
        if (v.im != 0) throw std::logic_error("b_S is not real on the tau-fixed part");
        b(x, y) = v.re;
      }
    RadicalQuotient q = mod_radical(b);
    std::size_t nl = 2 * d;
    LieAlgebra l = alg_abelian(nl);
    EquivStructure on_l = quaternion_structure(nl, complex_quaternions(d, j), false);
    Piece pc{{}, q.form, {}, {}};
    OrthogonalModule a = build_module(l, {pc}, on_l);
    Cochain alpha = a.zero(2);
    for (std::size_t x = 0; x < nl; ++x)
      for (std::size_t y = x + 1; y < nl; ++y) {
        CVec v = complexify(unit_vec(nl, x)), u = complexify(unit_vec(nl, y));
        CVec cv(d), cu(d);
        for (std::size_t t = 0; t < d; ++t) cv[t] = v[t].conj(), cu[t] = u[t].conj();
        CVec jv = j.apply(cv), ju = j.apply(cu);
        CVec val = sym_mul(s1, v, s1, ju);
        CVec other = sym_mul(s1, u, s1, jv);
        for (std::size_t t = 0; t < val.size(); ++t) val[t] = val[t] - other[t];
        auto c = fixed.coords(realify(val));
        if (!c) throw std::logic_error("vJw - wJv is not tau-fixed");
        alpha.set({x, y}, q.proj * *c);
      }
    return make_instance("hk-oel n=" + std::to_string(n) + " S=" + cx_str(s), a, {alpha, a.scalar_zero(3)});
  }
  for (const auto& c : s)
    if (c.im != 0) throw std::invalid_argument("hypersymplectic S must have real coefficients");
  std::size_t r = s2.size();
  Matrix b(r, r);
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = 0; y < r; ++y) b(x, y) = quartic_pairing(s2, s4, s, cunit(r, x), cunit(r, y)).re;
  RadicalQuotient q = mod_radical(b);
  std::size_t nl = 2 * d;
  LieAlgebra l = alg_abelian(nl);
  EquivStructure on_l = quaternion_structure(nl, split_quaternions(d), true);
  Piece pc{{}, q.form, {}, {}};
  OrthogonalModule a = build_module(l, {pc}, on_l);
  Cochain alpha = a.zero(2);
  Matrix w2 = omega2();
  for (std::size_t x = 0; x < nl; ++x)
    for (std::size_t y = x + 1; y < nl; ++y) {
      Q om = w2(x / d, y / d);
      if (om == 0) continue;
      Vec val(r);
      val[s2.index({x % d, y % d})] = om;
      alpha.set({x, y}, q.proj * val);
    }
  return make_instance("hs-oel n=" + std::to_string(n) + " S=" + cx_str(s), a, {alpha, a.scalar_zero(3)});
}

Instance hk_essig(std::size_t n, std::size_t p, bool hypersymplectic) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (p > n) throw std::invalid_argument("need 0 <= p <= n");
  std::size_t d = 2 * n;
  SymPower s1(d, 1), s2(d, 2), s3(d, 3);
  if (!hypersymplectic) {
    CMat j = quaternionic_structure(n);
    Matrix t2 = antilinear_real(s2, j);
    Subspace fixed = Subspace::kernel_of(t2 - Matrix::identity(t2.rows()));
    std::size_t r = fixed.dim(), nm = 2 * d, nl = nm + r, na = 2 * s3.size();
    auto lvec = [&](std::size_t x) { return complexify(unit_vec(nm, x)); };
    auto jmap = [&](const CVec& v) {
      CVec c(v.size());
      for (std::size_t t = 0; t < v.size(); ++t) c[t] = v[t].conj();
      return j.apply(c);
    };
    LieAlgebra l(nl);
    for (std::size_t x = 0; x < nm; ++x)
      for (std::size_t y = x + 1; y < nm; ++y) {
        CVec v = lvec(x), u = lvec(y);
        CVec val = sym_mul(s1, v, s1, jmap(u)), other = sym_mul(s1, u, s1, jmap(v));
        for (std::size_t t = 0; t < val.size(); ++t) val[t] = val[t] - other[t];
        auto c = fixed.coords(realify(val));
        if (!c) throw std::logic_error("vJw - wJv is not tau-fixed");
        Vec br(nl);
        for (std::size_t t = 0; t < r; ++t) br[nm + t] = (*c)[t];
        l.set_bracket(x, y, br);
      }
    auto ql = complex_quaternions(d, j);
    EquivStructure on_l = quaternion_structure(nl, {pad(ql[0], r), pad(ql[1], r), pad(ql[2], r)}, false);
    // a = S^3 realified with Re of the induced Hermitian form
    Vec wts(na);
    for (std::size_t i = 0; i < s3.size(); ++i) {
      Q wt = s3.multiplicity_factorial(i);
      for (auto t : s3.mono(i))
        if (t % n < p) wt = -wt;
      wts[2 * i] = wts[2 * i + 1] = wt;
    }
    Matrix ia = realify(times_i(s3.size())), ja = antilinear_real(s3, j);
    Piece pc{{}, Matrix::diag(wts), {ia, ja, ia * ja}, {}};
    OrthogonalModule a = build_module(l, {pc}, on_l);
    Cochain alpha = a.zero(2);
    for (std::size_t x = 0; x < nm; ++x)
      for (std::size_t y = 0; y < r; ++y) alpha.set({x, nm + y}, realify(sym_mul(s1, lvec(x), s2, complexify(fixed.vec(y)))));
    // gamma0 = Re tr([A1,A2] A3) on l_+ with A the action under omega_p
    Vec eps(d, Q(1));
    for (std::size_t t = 0; t < d; ++t)
      if (t % n < p) eps[t] = -1;
    Matrix wp = Matrix::diag(eps) * standard_omega(n);
    std::vector<CMat> acts;
    for (std::size_t y = 0; y < r; ++y) acts.push_back(sp_action(wp, s2, complexify(fixed.vec(y))));
    Cochain gamma0 = Cochain::scalar(nl, 3);
    for (std::size_t x = 0; x < r; ++x)
      for (std::size_t y = x + 1; y < r; ++y)
        for (std::size_t z = y + 1; z < r; ++z) {
          CMat m = (acts[x] * acts[y] - acts[y] * acts[x]) * acts[z];
          Q tr = 0;
          for (std::size_t t = 0; t < d; ++t) tr += m.re(t, t);
          gamma0.set({nm + x, nm + y, nm + z}, tr);
        }
    return make_instance("hk-essig n=" + std::to_string(n) + " p=" + std::to_string(p), a, {alpha, fit_gamma(a, alpha, gamma0)});
  }
  // hypersymplectic: l_- = R^2 (x) R^{2n}, l_+ = S^2 R^{2n}, a = R^2 (x) S^3 R^{2n}
  std::size_t r = s2.size(), n3 = s3.size(), nm = 2 * d, nl = nm + r, na = 2 * n3;
  Matrix w = standard_omega(n), w2 = omega2();
  LieAlgebra l(nl);
  for (std::size_t x = 0; x < nm; ++x)
    for (std::size_t y = x + 1; y < nm; ++y) {
      Q om = w2(x / d, y / d);
      if (om == 0) continue;
      l.add_bracket(x, y, nm + s2.index({x % d, y % d}), om);
    }
  auto qs = split_quaternions(d);
  EquivStructure on_l = quaternion_structure(nl, {pad(qs[0], r), pad(qs[1], r), pad(qs[2], r)}, true);
  Matrix w3(n3, n3);
  for (std::size_t i = 0; i < n3; ++i)
    for (std::size_t k = 0; k < n3; ++k) {
      Matrix m(3, 3);
      for (std::size_t s = 0; s < 3; ++s)
        for (std::size_t t = 0; t < 3; ++t) m(s, t) = w(s3.mono(i)[s], s3.mono(k)[t]);
      w3(i, k) = perm3(m);
    }
  auto qa = split_quaternions(n3);
  Piece pc{{}, kron(w2, w3), qa, {}};
  OrthogonalModule a = build_module(l, {pc}, on_l);
  Cochain alpha = a.zero(2);
  for (std::size_t x = 0; x < nm; ++x)
    for (std::size_t y = 0; y < r; ++y) {
      CVec prod = sym_mul(s1, cunit(d, x % d), s2, cunit(r, y));
      Vec val(na);
      for (std::size_t i = 0; i < n3; ++i) val[(x / d) * n3 + i] = prod[i].re;
      alpha.set({x, nm + y}, val);
    }
  std::vector<CMat> acts;
  for (std::size_t y = 0; y < r; ++y) acts.push_back(sp_action(w, s2, cunit(r, y)));
  Cochain gamma0 = Cochain::scalar(nl, 3);
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = x + 1; y < r; ++y)
      for (std::size_t z = y + 1; z < r; ++z) {
        CMat m = (acts[x] * acts[y] - acts[y] * acts[x]) * acts[z];
        Q tr = 0;
        for (std::size_t t = 0; t < d; ++t) tr += m.re(t, t);
        gamma0.set({nm + x, nm + y, nm + z}, tr);
      }
  return make_instance("hs-essig n=" + std::to_string(n) + " p=" + std::to_string(p), a, {alpha, fit_gamma(a, alpha, gamma0)});
}

Nilindices hk_nilindices(const Instance& x) {
  Nilindices out;
  out.g = series(x.g.alg).nilindex;
  Matrix theta = instance_theta(x);
  Z2Split s = z2_split(x.g.alg, theta);
  out.g_plus = series(subalgebra(x.g.alg, s.plus)).nilindex;
  CanonicalIdeal ci = canonical_isotropic_ideal(x.g);
  out.l = series(quotient(x.g.alg, perp(x.g, ci.ri))).nilindex;
  return out;
}

// ---------------------------------------------------------------- extrinsic Cahen-Wallach

PCWInstance extrinsic_pcw(const std::string& which, std::size_t n, const Q& c) {
  if (which != "sl2" && which != "su2") throw std::invalid_argument("extrinsic family is sl2 or su2");
  if (n == 0) throw std::invalid_argument("n must be positive");
  bool su = which == "su2";
  LieAlgebra l = su ? alg_su2() : alg_sl2();
  Matrix dl = l.ad(1) * Q(1, 2);
  Matrix th = Matrix::diag({Q(1), Q(-1), Q(-1)});
  EquivStructure on_l = structure(3, {{"D", dl}}, {{"theta", th}}, GradingKind::extrinsic_RZ2);
  Matrix b = killing_form(l);
  Piece pc = scaled_adjoint(l, su ? b * Q(-1) : b, {dl}, {th * Q(-1)});
  OrthogonalModule a = build_module(l, std::vector<Piece>(n, pc), on_l);
  PCWInstance out;
  out.inst = make_instance("pcw " + which + " n=" + std::to_string(n) + " c=" + to_string(c), a, {a.zero(2), killing_3form(l, c)});
  out.l_witness = ev(3, 1, Q(1, 2));
  out.triple.g = out.inst.g;
  out.triple.D = out.inst.phi->derivation(0);
  out.triple.theta = out.inst.phi->automorphism(0);
  Decision o4 = check_O4(a, *out.inst.cocycle);
  if (!o4.is_yes()) throw std::logic_error("extrinsic family fails (O4): " + o4.reason);
  std::size_t ld = 3, ad = a.adim();
  Vec xi(2 * ld + ad);
  for (std::size_t k = 0; k < ld; ++k) {
    xi[k] = o4.vectors[2][k];
    xi[ld + ad + k] = o4.vectors[0][k];
  }
  for (std::size_t s = 0; s < ad; ++s) xi[ld + s] = o4.vectors[1][s];
  out.triple.xi = xi;
  return out;
}

std::vector<std::string> family_names() {
  return {"osc", "cw", "nilpotent", "kahler", "para-kahler", "gm", "h1-index2", "hk-oel", "hk-essig", "hs-oel",
          "hs-essig", "pcw"};
}

}  // namespace mla

namespace mla {

namespace {

Q param_q(const std::vector<std::string>& ps, std::size_t i) {
  if (i >= ps.size()) throw std::invalid_argument("missing parameter " + std::to_string(i + 1));
  return parse_rational(ps[i]);
}

std::size_t param_n(const std::vector<std::string>& ps, std::size_t i) {
  Q q = param_q(ps, i);
  if (q.get_den() != 1 || q < 0) throw std::invalid_argument("parameter " + std::to_string(i + 1) + " must be a count");
  return q.get_num().get_ui();
}

void expect_count(const std::vector<std::string>& ps, std::size_t lo, std::size_t hi) {
  if (ps.size() < lo || ps.size() > hi)
    throw std::invalid_argument("expected " + std::to_string(lo) + (lo == hi ? "" : "-" + std::to_string(hi)) +
                                " parameters, got " + std::to_string(ps.size()));
}

}  // namespace

Instance construct_family(const std::string& family, const std::vector<std::string>& ps) {
  if (family == "osc") {
    if (ps.empty()) throw std::invalid_argument("osc needs at least one lambda");
    Vec l;
    for (std::size_t i = 0; i < ps.size(); ++i) l.push_back(param_q(ps, i));
    return osc(l);
  }
  if (family == "cw") {
    std::size_t p = param_n(ps, 0), q = param_n(ps, 1);
    expect_count(ps, 2 + p + q, 2 + p + q);
    Vec l, m;
    for (std::size_t i = 0; i < p; ++i) l.push_back(param_q(ps, 2 + i));
    for (std::size_t i = 0; i < q; ++i) m.push_back(param_q(ps, 2 + p + i));
    return cahen_wallach(l, m);
  }
  if (family == "nilpotent") {
    expect_count(ps, 1, 2);
    return nilpotent_le9(ps[0], ps.size() > 1 ? param_n(ps, 1) : 0);
  }
  if (family == "kahler") {
    expect_count(ps, 1, 4);
    return pseudo_hermitian(ps[0], ps.size() > 1 ? param_n(ps, 1) : 0, ps.size() > 2 ? param_n(ps, 2) : 0,
                            ps.size() > 3 ? param_q(ps, 3) : Q(0));
  }
  if (family == "para-kahler") {
    expect_count(ps, 1, 2);
    return para_hermitian(static_cast<int>(param_n(ps, 0)), ps.size() > 1 ? param_q(ps, 1) : Q(0));
  }
  if (family == "gm") {
    expect_count(ps, 1, 1);
    return gm_family(param_n(ps, 0));
  }
  if (family == "h1-index2") {
    std::size_t v = param_n(ps, 0), p = param_n(ps, 1), q = param_n(ps, 2);
    std::size_t at = 3;
    std::vector<std::pair<Q, Q>> lam, mu;
    for (std::size_t i = 0; i < p; ++i, at += 2) lam.push_back({param_q(ps, at), param_q(ps, at + 1)});
    for (std::size_t i = 0; i < q; ++i, at += 2) mu.push_back({param_q(ps, at), param_q(ps, at + 1)});
    H1Index2 m = index2_h1_modules(lam, mu, static_cast<int>(v));
    std::size_t t = m.trivial_minus.size();
    Vec u(t), w(t);
    if (ps.size() == at) {
      if (t > 0) u[0] = 1;
    } else {
      expect_count(ps, at + 2 * t, at + 2 * t);
      for (std::size_t i = 0; i < t; ++i) u[i] = param_q(ps, at + i), w[i] = param_q(ps, at + t + i);
    }
    return make_instance("h1 index 2 variant " + std::to_string(v), m.module, index2_h1_cocycle(m, u, w));
  }
  if (family == "hk-oel" || family == "hs-oel") {
    expect_count(ps, 1, 1);
    return hk_oel(1, s_lambda(param_q(ps, 0)), family == "hs-oel");
  }
  if (family == "hk-essig" || family == "hs-essig") {
    expect_count(ps, 2, 2);
    return hk_essig(param_n(ps, 0), param_n(ps, 1), family == "hs-essig");
  }
  if (family == "pcw") {
    expect_count(ps, 3, 3);
    return extrinsic_pcw(ps[0], param_n(ps, 1), param_q(ps, 2)).inst;
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

std::vector<Instance> catalog_instances() {
  std::vector<Instance> out;
  for (const Vec& l : {Vec{Q(1)}, Vec{Q(1), Q(2)}, Vec{Q(1), Q(2), Q(3)}}) out.push_back(osc(l));
  out.push_back(cahen_wallach({Q(1)}, {}));
  out.push_back(cahen_wallach({}, {Q(1)}));
  out.push_back(cahen_wallach({Q(1), Q(2)}, {Q(3)}));
  for (const auto& e : nilpotent_entries())
    for (std::size_t v = 0; v < e.variants.size(); ++v) out.push_back(nilpotent_le9(e.id, v));
  for (const char* c : {"1a", "1b", "2"}) out.push_back(pseudo_hermitian(c));
  out.push_back(pseudo_hermitian("3", 1, 1, Q(1)));
  out.push_back(pseudo_hermitian("4", 1, 0, Q(1, 2)));
  for (int c : {1, 2}) out.push_back(para_hermitian(c));
  out.push_back(para_hermitian(3, Q(1)));
  for (std::size_t m = 0; m <= 4; ++m) out.push_back(gm_family(m));
  {
    H1Index2 m = index2_h1_modules({}, {}, 1);
    out.push_back(make_instance("h1 index 2 variant 1", m.module, index2_h1_cocycle(m, {Q(1)}, {Q(0)})));
    H1Index2 m3 = index2_h1_modules({{Q(1), Q(0)}}, {{Q(0), Q(2)}}, 1);
    out.push_back(make_instance("h1 index 2 variant 1 p=q=1", m3.module, index2_h1_cocycle(m3, {Q(1)}, {Q(1)})));
    H1Index2 m2 = index2_h1_modules({}, {}, 2);
    out.push_back(
        make_instance("h1 index 2 variant 2", m2.module, index2_h1_cocycle(m2, {Q(1), Q(0)}, {Q(0), Q(1)})));
  }
  for (int l : {-2, -1, 0, 1, 2}) out.push_back(hk_oel(1, s_lambda(l)));
  out.push_back(hk_essig(1, 0));
  out.push_back(hk_oel(1, s_lambda(1), true));
  out.push_back(hk_essig(1, 0, true));
  for (const char* w : {"sl2", "su2"})
    for (std::size_t n : {1u, 2u})
      for (int c : {0, 1}) out.push_back(extrinsic_pcw(w, n, c).inst);
  return out;
}

}  // namespace mla
