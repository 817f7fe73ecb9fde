#include "mla/liealg.hpp"

#include <stdexcept>

namespace mla {

LieAlgebra::LieAlgebra(std::size_t n, std::vector<std::string> names)
    : n_(n), names_(std::move(names)), c_(n * n * n) {
  if (names_.empty())
    for (std::size_t i = 0; i < n; ++i) names_.push_back("e" + std::to_string(i + 1));
  if (names_.size() != n) throw std::invalid_argument("basis name count differs from dimension");
}

void LieAlgebra::set_names(std::vector<std::string> names) {
  if (names.size() != n_) throw std::invalid_argument("basis name count differs from dimension");
  names_ = std::move(names);
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vec& v) {
  if (i == j) throw std::invalid_argument("set_bracket on equal indices");
  for (std::size_t k = 0; k < n_; ++k) {
    c_[(i * n_ + j) * n_ + k] = v[k];
    c_[(j * n_ + i) * n_ + k] = -v[k];
  }
}

void LieAlgebra::add_bracket(std::size_t i, std::size_t j, std::size_t k, const Q& x) {
  if (i == j) throw std::invalid_argument("add_bracket on equal indices");
  c_[(i * n_ + j) * n_ + k] += x;
  c_[(j * n_ + i) * n_ + k] -= x;
}

Vec LieAlgebra::bracket(std::size_t i, std::size_t j) const {
  return Vec(c_.begin() + (i * n_ + j) * n_, c_.begin() + (i * n_ + j + 1) * n_);
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j] == 0 || i == j) continue;
      Q f = x[i] * y[j];
      const Q* row = &c_[(i * n_ + j) * n_];
      for (std::size_t k = 0; k < n_; ++k)
        if (row[k] != 0) out[k] += f * row[k];
    }
  }
  return out;
}

Matrix LieAlgebra::ad(std::size_t i) const {
  Matrix m(n_, n_);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t k = 0; k < n_; ++k) m(k, j) = c(i, j, k);
  return m;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    if (x[i] != 0) m = m + ad(i) * x[i];
  return m;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

LieAlgebra LieAlgebra::abelian(std::size_t n) { return LieAlgebra(n); }

JacobiResult check_jacobi(const LieAlgebra& l) {
  std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (l.c(i, j, k) != -l.c(j, i, k)) return {false, {i, j, i}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec ei = unit_vec(n, i), ej = unit_vec(n, j), ek = unit_vec(n, k);
        Vec s = l.bracket(ei, l.bracket(ej, ek));
        s = add(s, l.bracket(ej, l.bracket(ek, ei)));
        s = add(s, l.bracket(ek, l.bracket(ei, ej)));
        if (!is_zero(s)) return {false, {i, j, k}};
      }
  return {};
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<std::string> names = a.names();
  for (const auto& s : b.names()) names.push_back(s);
  std::size_t na = a.dim(), n = na + b.dim();
  LieAlgebra s(n, names);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i + 1; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k)
        if (a.c(i, j, k) != 0) s.add_bracket(i, j, k, a.c(i, j, k));
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i + 1; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        if (b.c(i, j, k) != 0) s.add_bracket(na + i, na + j, na + k, b.c(i, j, k));
  return s;
}

LieAlgebra change_basis(const LieAlgebra& l, const Matrix& t) {
  auto ti = inverse(t);
  if (!ti) throw std::invalid_argument("change_basis: singular matrix");
  std::size_t n = l.dim();
  LieAlgebra r(n, l.names());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) r.set_bracket(a, b, *ti * l.bracket(t.col(a), t.col(b)));
  return r;
}

LieAlgebra subalgebra(const LieAlgebra& l, const Subspace& s) {
  std::size_t d = s.dim();
  LieAlgebra r(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      auto c = s.coords(l.bracket(s.vec(a), s.vec(b)));
      if (!c) throw std::invalid_argument("subalgebra: subspace not closed under bracket");
      r.set_bracket(a, b, *c);
    }
  return r;
}

namespace {
// Full basis [complement | w] and its inverse.
struct SplitBasis {
  std::vector<Vec> comp;
  Matrix inv;
};
SplitBasis split_basis(std::size_t n, const Subspace& w) {
  SplitBasis sb;
  sb.comp = complement_basis(Subspace::whole(n), w);
  std::vector<Vec> all = sb.comp;
  for (auto& v : w.vecs()) all.push_back(v);
  sb.inv = *inverse(Matrix::from_cols(n, all));
  return sb;
}
Vec head(const Vec& v, std::size_t k) { return Vec(v.begin(), v.begin() + k); }
}  // namespace

LieAlgebra quotient(const LieAlgebra& l, const Subspace& ideal, Matrix* rep) {
  if (!is_ideal(l, ideal)) throw std::invalid_argument("quotient: not an ideal");
  auto sb = split_basis(l.dim(), ideal);
  std::size_t d = sb.comp.size();
  LieAlgebra r(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      r.set_bracket(a, b, head(sb.inv * l.bracket(sb.comp[a], sb.comp[b]), d));
  if (rep) *rep = Matrix::from_cols(l.dim(), sb.comp);
  return r;
}

Subspace bracket_span(const LieAlgebra& l, const Subspace& u, const Subspace& v) {
  std::vector<Vec> vs;
  for (std::size_t a = 0; a < u.dim(); ++a)
    for (std::size_t b = 0; b < v.dim(); ++b) {
      Vec w = l.bracket(u.vec(a), v.vec(b));
      if (!is_zero(w)) vs.push_back(w);
    }
  return Subspace::span(l.dim(), vs);
}

bool is_subalgebra(const LieAlgebra& l, const Subspace& u) { return u.contains(bracket_span(l, u, u)); }
bool is_ideal(const LieAlgebra& l, const Subspace& u) {
  return u.contains(bracket_span(l, Subspace::whole(l.dim()), u));
}

Subspace center(const LieAlgebra& l) {
  std::size_t n = l.dim();
  LinearSystem ls(n);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix a = l.ad(j);
    for (std::size_t k = 0; k < n; ++k) ls.add_dense(a.row(k));
  }
  return Subspace::from_cols(ls.solve().kernel);
}

bool is_derivation(const LieAlgebra& l, const Matrix& d) {
  std::size_t n = l.dim();
  if (d.rows() != n || d.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec lhs = d * l.bracket(i, j);
      Vec rhs = add(l.bracket(d.col(i), unit_vec(n, j)), l.bracket(unit_vec(n, i), d.col(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

Series series(const LieAlgebra& l) {
  Series s;
  std::size_t n = l.dim();
  Subspace g = Subspace::whole(n);
  s.derived.push_back(g);
  while (true) {
    Subspace nx = bracket_span(l, s.derived.back(), s.derived.back());
    if (nx == s.derived.back()) break;
    s.derived.push_back(nx);
  }
  s.lower.push_back(g);
  while (true) {
    Subspace nx = bracket_span(l, g, s.lower.back());
    if (nx == s.lower.back()) break;
    s.lower.push_back(nx);
  }
  s.center = center(l);
  s.solvable = s.derived.back().is_zero();
  s.nilpotent = s.lower.back().is_zero();
  if (s.nilpotent) s.nilindex = s.lower.size() - 1;
  return s;
}

Matrix killing_form(const LieAlgebra& l) {
  std::size_t n = l.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(l.ad(i));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Q t = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (ads[i](a, b) != 0 && ads[j](b, a) != 0) t += ads[i](a, b) * ads[j](b, a);
      k(i, j) = k(j, i) = t;
    }
  return k;
}

Subspace radical(const LieAlgebra& l) {
  std::size_t n = l.dim();
  Subspace d = bracket_span(l, Subspace::whole(n), Subspace::whole(n));
  if (d.is_zero()) return Subspace::whole(n);
  Matrix k = killing_form(l);
  Subspace r = Subspace::kernel_of(d.basis().transpose() * k);
  if (!is_ideal(l, r)) throw std::logic_error("radical is not an ideal");
  return r;
}

Subspace nilpotent_radical(const LieAlgebra& l) {
  return bracket_span(l, radical(l), Subspace::whole(l.dim()));
}

// ---------------------------------------------------------------- modules

Matrix LieModule::act(const Vec& x) const {
  std::size_t d = dim();
  Matrix m(d, d);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) m = m + rho[i] * x[i];
  return m;
}

LieModule adjoint_module(const LieAlgebra& l) {
  LieModule m{l, {}};
  for (std::size_t i = 0; i < l.dim(); ++i) m.rho.push_back(l.ad(i));
  return m;
}

LieModule trivial_module(const LieAlgebra& l, std::size_t dim) {
  return LieModule{l, std::vector<Matrix>(l.dim(), Matrix(dim, dim)), dim};
}

Check check_module(const LieModule& m) {
  const auto& l = m.alg;
  if (m.rho.size() != l.dim()) return Check::fail("rho count differs from algebra dimension");
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j)
      if (m.act(l.bracket(i, j)) != commutator(m.rho[i], m.rho[j]))
        return Check::fail("rho([" + l.names()[i] + "," + l.names()[j] + "]) != [rho,rho]");
  return Check::pass();
}

Subspace module_closure(const LieModule& m, const Subspace& u) {
  Subspace cur = u;
  while (true) {
    std::vector<Vec> vs = cur.vecs();
    for (const auto& r : m.rho)
      for (std::size_t j = 0; j < cur.dim(); ++j) vs.push_back(r * cur.vec(j));
    Subspace nx = Subspace::span(u.ambient(), vs);
    if (nx == cur) return cur;
    cur = nx;
  }
}

Subspace largest_submodule_in(const LieModule& m, const Subspace& u) {
  Subspace cur = u;
  while (true) {
    Subspace nx = cur;
    for (const auto& r : m.rho) nx = intersect(nx, preimage(r, cur));
    if (nx == cur) return cur;
    cur = nx;
  }
}

bool is_submodule(const LieModule& m, const Subspace& u) {
  for (const auto& r : m.rho)
    if (!u.contains(image(r, u))) return false;
  return true;
}

LieModule restrict_module(const LieModule& m, const Subspace& w) {
  LieModule r{m.alg, {}};
  for (const auto& rho : m.rho) {
    Matrix a(w.dim(), w.dim());
    for (std::size_t j = 0; j < w.dim(); ++j) {
      auto c = w.coords(rho * w.vec(j));
      if (!c) throw std::invalid_argument("restrict_module: not a submodule");
      for (std::size_t i = 0; i < w.dim(); ++i) a(i, j) = (*c)[i];
    }
    r.rho.push_back(a);
  }
  return r;
}

LieModule quotient_module(const LieModule& m, const Subspace& w, Matrix* rep) {
  if (!is_submodule(m, w)) throw std::invalid_argument("quotient_module: not a submodule");
  auto sb = split_basis(m.dim(), w);
  std::size_t d = sb.comp.size();
  LieModule r{m.alg, {}};
  for (const auto& rho : m.rho) {
    Matrix a(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      Vec c = sb.inv * (rho * sb.comp[j]);
      for (std::size_t i = 0; i < d; ++i) a(i, j) = c[i];
    }
    r.rho.push_back(a);
  }
  if (rep) *rep = Matrix::from_cols(m.dim(), sb.comp);
  return r;
}

Subspace invariants(const LieModule& m) {
  std::size_t d = m.dim();
  LinearSystem ls(d);
  for (const auto& r : m.rho)
    for (std::size_t k = 0; k < d; ++k) ls.add_dense(r.row(k));
  return Subspace::from_cols(ls.solve().kernel);
}

Subspace moving_part(const LieModule& m) {
  std::vector<Vec> vs;
  for (const auto& r : m.rho)
    for (auto& v : r.col_list())
      if (!is_zero(v)) vs.push_back(v);
  return Subspace::span(m.dim(), vs);
}

Decision module_is_semisimple(const LieModule& m) {
  const auto& l = m.alg;
  Subspace rad = radical(l);
  Subspace nr = bracket_span(l, rad, Subspace::whole(l.dim()));
  for (std::size_t j = 0; j < nr.dim(); ++j) {
    Matrix a = m.act(nr.vec(j));
    if (!a.is_zero()) {
      Decision d = Decision::no("nilpotent radical acts nontrivially");
      d.vectors.push_back(nr.vec(j));
      d.matrices.push_back(a);
      return d;
    }
  }
  for (std::size_t j = 0; j < rad.dim(); ++j) {
    Matrix a = m.act(rad.vec(j));
    if (!is_semisimple_operator(a)) {
      Decision d = Decision::no("radical element acts by a non-semisimple operator");
      d.vectors.push_back(rad.vec(j));
      d.matrices.push_back(a);
      return d;
    }
  }
  return Decision::yes();
}

namespace {
// Defect subspace whose vanishing characterizes semisimplicity.
Subspace semisimplicity_defect(const LieModule& m, const Subspace& rad, const Subspace& nr) {
  std::vector<Vec> vs;
  for (std::size_t j = 0; j < nr.dim(); ++j)
    for (auto& v : m.act(nr.vec(j)).col_list())
      if (!is_zero(v)) vs.push_back(v);
  for (std::size_t j = 0; j < rad.dim(); ++j) {
    Matrix a = m.act(rad.vec(j));
    Matrix s = squarefree_part(minimal_polynomial(a)).eval(a);
    for (auto& v : s.col_list())
      if (!is_zero(v)) vs.push_back(v);
  }
  return Subspace::span(m.dim(), vs);
}
}  // namespace

Subspace semisimplification_kernel(const LieModule& m) {
  const auto& l = m.alg;
  Subspace rad = radical(l);
  Subspace nr = bracket_span(l, rad, Subspace::whole(l.dim()));
  Subspace w(m.dim());
  while (true) {
    Matrix rep;
    LieModule q = quotient_module(m, w, &rep);
    Subspace def = semisimplicity_defect(q, rad, nr);
    if (def.is_zero()) return w;
    std::vector<Vec> vs = w.vecs();
    for (auto& v : def.vecs()) vs.push_back(rep * v);
    Subspace nw = module_closure(m, Subspace::span(m.dim(), vs));
    if (nw.dim() <= w.dim()) throw std::logic_error("semisimplification fixpoint stalled");
    w = nw;
  }
}

std::vector<Subspace> radical_chain(const LieAlgebra& l) {
  std::size_t n = l.dim();
  LieModule ad = adjoint_module(l);
  std::vector<Subspace> chain{Subspace::whole(n)};
  while (!chain.back().is_zero()) {
    const Subspace& prev = chain.back();
    LieModule sub = restrict_module(ad, prev);
    Subspace k = semisimplification_kernel(sub);
    std::vector<Vec> vs;
    for (auto& v : k.vecs()) vs.push_back(prev.basis() * v);
    Subspace nx = Subspace::span(n, vs);
    if (nx.dim() >= prev.dim()) throw std::logic_error("radical chain does not descend");
    chain.push_back(nx);
  }
  return chain;
}

Subspace socle(const LieModule& m) {
  const auto& l = m.alg;
  Subspace rad = radical(l);
  Subspace nr = bracket_span(l, rad, Subspace::whole(l.dim()));
  Subspace s = Subspace::whole(m.dim());
  for (std::size_t j = 0; j < nr.dim(); ++j) s = intersect(s, Subspace::kernel_of(m.act(nr.vec(j))));
  for (std::size_t j = 0; j < rad.dim(); ++j) {
    Matrix a = m.act(rad.vec(j));
    s = intersect(s, Subspace::kernel_of(squarefree_part(minimal_polynomial(a)).eval(a)));
  }
  return largest_submodule_in(m, s);
}

Subspace socle_ideal(const LieAlgebra& l) { return socle(adjoint_module(l)); }

Decision inner_derivation_solve(const LieAlgebra& l, const Matrix& d) {
  if (!is_derivation(l, d)) throw std::invalid_argument("inner_derivation_solve: not a derivation");
  std::size_t n = l.dim();
  Matrix a(n * n, n);
  Vec b(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix ai = l.ad(i);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a(r * n + c, i) = ai(r, c);
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) b[r * n + c] = d(r, c);
  auto sol = solve_affine(a, b);
  if (!sol.particular) return Decision::no("derivation is not inner");
  Decision dec = Decision::yes();
  dec.vectors.push_back(*sol.particular);
  for (auto& v : sol.kernel.col_list()) dec.vectors.push_back(v);
  return dec;
}

}  // namespace mla
