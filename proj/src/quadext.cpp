#include "mla/quadext.hpp"

#include <random>
#include <stdexcept>

namespace mla {

namespace {

Matrix sub_block(const Matrix& m, std::size_t r0, std::size_t c0, std::size_t r, std::size_t c) {
  Matrix out(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) out(i, j) = m(r0 + i, c0 + j);
  return out;
}

void put_block(Matrix& m, std::size_t r0, std::size_t c0, const Matrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
}

// Coordinates of v in the columns of b (which must be independent and span v).
Vec solve_coords(const Matrix& b, const Vec& v, const char* what) {
  auto s = solve_affine(b, v);
  if (!s.particular) throw std::logic_error(std::string("vector outside ") + what);
  return *s.particular;
}

bool columns_in(const Subspace& s, const Matrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!s.contains(m.col(j))) return false;
  return true;
}

// Matrix of a linear map given by a per-column image function.
template <class F>
Matrix map_matrix(std::size_t rows, std::size_t cols, F f) {
  std::vector<Vec> cs;
  for (std::size_t j = 0; j < cols; ++j) cs.push_back(f(j));
  return Matrix::from_cols(rows, cs);
}

struct Generators {
  std::vector<Matrix> der_g, der_l, aut_g, aut_l;
};

Generators generators(const QuadExtension& w, const OrthogonalModule& a) {
  Generators g;
  if (!w.phi || !a.equiv) return g;
  const auto& pl = a.equiv->on_l;
  if (w.phi->derivations.size() != pl.derivations.size() || w.phi->automorphisms.size() != pl.automorphisms.size())
    throw std::invalid_argument("equivariant structures on g and l do not match");
  for (std::size_t i = 0; i < pl.derivations.size(); ++i) {
    g.der_g.push_back(w.phi->derivation(i));
    g.der_l.push_back(pl.derivation(i));
  }
  for (std::size_t i = 0; i < pl.automorphisms.size(); ++i) {
    g.aut_g.push_back(w.phi->automorphism(i));
    g.aut_l.push_back(pl.automorphism(i));
  }
  return g;
}

// Linear system on S (N x n): p S = rhs_p and X S = S Y for all generator pairs.
AffineSolution section_system(const QuadExtension& w, const OrthogonalModule& a, const Matrix& rhs_p) {
  std::size_t N = w.g.dim(), n = w.p_map.rows();
  auto var = [&](std::size_t r, std::size_t c) { return r * n + c; };
  LinearSystem ls(N * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c) {
      Vec row(N * n);
      for (std::size_t r = 0; r < N; ++r) row[var(r, c)] = w.p_map(i, r);
      ls.add_dense(row, rhs_p(i, c));
    }
  Generators gen = generators(w, a);
  auto intertwine = [&](const Matrix& x, const Matrix& y) {
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        Vec row(N * n);
        for (std::size_t k = 0; k < N; ++k) row[var(k, c)] += x(r, k);
        for (std::size_t k = 0; k < n; ++k) row[var(r, k)] -= y(k, c);
        ls.add_dense(row);
      }
  };
  for (std::size_t i = 0; i < gen.der_g.size(); ++i) intertwine(gen.der_g[i], gen.der_l[i]);
  for (std::size_t i = 0; i < gen.aut_g.size(); ++i) intertwine(gen.aut_g[i], gen.aut_l[i]);
  return ls.solve();
}

Matrix unflatten(const Vec& v, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = v[i * c + j];
  return m;
}

}  // namespace

bool AxiomReport::ok() const {
  for (const auto& [name, c] : axioms)
    if (!c) return false;
  return true;
}

std::string AxiomReport::first_failure() const {
  for (const auto& [name, c] : axioms)
    if (!c) return name + ": " + c.violation;
  return {};
}

std::vector<std::string> standard_model_names(const LieAlgebra& l, std::size_t adim) {
  std::vector<std::string> names;
  for (const auto& s : l.names()) names.push_back(s + "*");
  for (std::size_t j = 0; j < adim; ++j) names.push_back("A" + std::to_string(j + 1));
  for (const auto& s : l.names()) names.push_back(s);
  return names;
}

LieAlgebra standard_model_algebra(const OrthogonalModule& a, const QuadCocycle& z) {
  const LieAlgebra& l = a.alg();
  std::size_t n = l.dim(), m = a.adim(), N = 2 * n + m;
  auto iz = [&](std::size_t k) { return k; };
  auto ia = [&](std::size_t j) { return n + j; };
  auto il = [&](std::size_t i) { return n + m + i; };
  LieAlgebra d(N, standard_model_names(l, m));
  // [L_i, L_j] = gamma(L_i, L_j, .) + alpha(L_i, L_j) + [L_i, L_j]_l
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v(N);
      for (std::size_t k = 0; k < n; ++k) v[iz(k)] = z.gamma.scalar_at({i, j, k});
      Vec al = z.alpha.at({i, j});
      for (std::size_t s = 0; s < m; ++s) v[ia(s)] = al[s];
      Vec br = l.bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) v[il(k)] = br[k];
      d.set_bracket(il(i), il(j), v);
    }
  // [L_i, A_s] = -<A_s, alpha(L_i, .)> + rho(L_i) A_s
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < m; ++s) {
      Vec v(N);
      for (std::size_t k = 0; k < n; ++k) v[iz(k)] = -dot(a.form.col(s), z.alpha.at({i, k}));
      for (std::size_t r = 0; r < m; ++r) v[ia(r)] = a.module.rho[i](r, s);
      d.set_bracket(il(i), ia(s), v);
    }
  // [A_s, A_t] = <rho(.) A_s, A_t>
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = s + 1; t < m; ++t) {
      Vec v(N);
      for (std::size_t k = 0; k < n; ++k) v[iz(k)] = dot(a.module.rho[k].col(s), a.form.col(t));
      d.set_bracket(ia(s), ia(t), v);
    }
  // [L_i, Z^j] = ad*(L_i) Z^j = -sum_k c_{ik}^j Z^k
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec v(N);
      for (std::size_t k = 0; k < n; ++k) v[iz(k)] = -l.c(i, k, j);
      d.set_bracket(il(i), iz(j), v);
    }
  return d;
}

EquivStructure standard_model_phi(const OrthogonalModule& a, const EquivStructure& on_l, const EquivStructure& on_a) {
  std::size_t n = a.ldim(), m = a.adim();
  EquivStructure phi;
  phi.dim = 2 * n + m;
  phi.relations = on_l.relations;
  phi.preset = on_l.preset;
  for (std::size_t i = 0; i < on_l.derivations.size(); ++i) {
    const Matrix& dl = on_l.derivations[i].m;
    phi.derivations.push_back({on_l.derivations[i].name, block_diag({dl.transpose() * Q(-1), on_a.derivations.at(i).m, dl})});
  }
  for (std::size_t i = 0; i < on_l.automorphisms.size(); ++i) {
    const Matrix& kl = on_l.automorphisms[i].m;
    auto inv = inverse(kl.transpose());
    if (!inv) throw std::invalid_argument("automorphism not invertible");
    phi.automorphisms.push_back({on_l.automorphisms[i].name, block_diag({*inv, on_a.automorphisms.at(i).m, kl})});
  }
  return phi;
}

QuadExtension standard_model(const OrthogonalModule& a, const QuadCocycle& z) {
  if (Check c = check_orthogonal_module(a); !c) throw std::invalid_argument("module invalid: " + c.violation);
  if (Check c = is_cocycle(z, a); !c) throw std::invalid_argument("not a quadratic cocycle: " + c.violation);
  if (!is_invariant_cochain(a, z.alpha) || !is_invariant_cochain(a, z.gamma))
    throw std::invalid_argument("cocycle is not invariant under the equivariant structure");
  std::size_t n = a.ldim(), m = a.adim(), N = 2 * n + m;
  QuadExtension w;
  w.g.alg = standard_model_algebra(a, z);
  w.g.form = Matrix(N, N);
  put_block(w.g.form, n, n, a.form);
  for (std::size_t k = 0; k < n; ++k) w.g.form(k, n + m + k) = w.g.form(n + m + k, k) = 1;
  if (a.equiv) w.phi = standard_model_phi(a, a.equiv->on_l, a.equiv->on_a);
  std::vector<Vec> dual;
  for (std::size_t k = 0; k < n; ++k) dual.push_back(unit_vec(N, k));
  w.ri = Subspace::span(N, dual);
  w.i_map = Matrix(N, m);
  put_block(w.i_map, n, 0, Matrix::identity(m));
  w.p_map = Matrix(n, N);
  put_block(w.p_map, 0, n + m, Matrix::identity(n));
  if (auto j = check_jacobi(w.g.alg); !j.ok) throw std::logic_error("standard model violates Jacobi");
  if (Check c = check_metric(w.g); !c) throw std::logic_error("standard model form not invariant: " + c.violation);
  if (w.phi)
    if (Check c = check_equivariant(w.g, *w.phi); !c) throw std::logic_error("standard model structure invalid: " + c.violation);
  return w;
}

MetricLieAlgebra double_extension(const MetricLieAlgebra& g, const LieAlgebra& h, const std::vector<Matrix>& pi,
                                  const Matrix& form_h) {
  std::size_t m = h.dim(), n = g.dim(), N = 2 * m + n;
  if (pi.size() != m) throw std::invalid_argument("pi needs one derivation per basis vector of h");
  if (form_h.rows() != m || form_h.cols() != m || !form_h.is_symmetric())
    throw std::invalid_argument("form on h has wrong size or is not symmetric");
  for (std::size_t a = 0; a < m; ++a) {
    if (pi[a].rows() != n || pi[a].cols() != n || !is_derivation(g.alg, pi[a]))
      throw std::invalid_argument("pi(" + h.names()[a] + ") is not a derivation of g");
    if (!(pi[a].transpose() * g.form + g.form * pi[a]).is_zero())
      throw std::invalid_argument("pi(" + h.names()[a] + ") is not antisymmetric");
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Matrix rhs(n, n);
      for (std::size_t k = 0; k < m; ++k)
        if (h.c(a, b, k) != 0) rhs = rhs + pi[k] * h.c(a, b, k);
      if (commutator(pi[a], pi[b]) != rhs) throw std::invalid_argument("pi is not a homomorphism");
    }
  for (std::size_t a = 0; a < m; ++a) {
    Matrix ad = h.ad(a);
    if (!(ad.transpose() * form_h + form_h * ad).is_zero()) throw std::invalid_argument("form on h not invariant");
  }
  auto iz = [&](std::size_t k) { return k; };
  auto ig = [&](std::size_t j) { return m + j; };
  auto ih = [&](std::size_t a) { return m + n + a; };
  std::vector<std::string> names;
  for (const auto& s : h.names()) names.push_back(s + "*");
  for (const auto& s : g.alg.names()) names.push_back(s);
  for (const auto& s : h.names()) names.push_back(s);
  LieAlgebra d(N, names);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v(N);
      Vec br = g.alg.bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) v[ig(k)] = br[k];
      for (std::size_t a = 0; a < m; ++a) v[iz(a)] = dot(pi[a].col(i), g.form.col(j));
      d.set_bracket(ig(i), ig(j), v);
    }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec v(N);
      for (std::size_t k = 0; k < n; ++k) v[ig(k)] = pi[a](k, j);
      d.set_bracket(ih(a), ig(j), v);
    }
    for (std::size_t b = a + 1; b < m; ++b) {
      Vec v(N);
      for (std::size_t k = 0; k < m; ++k) v[ih(k)] = h.c(a, b, k);
      d.set_bracket(ih(a), ih(b), v);
    }
    for (std::size_t b = 0; b < m; ++b) {
      Vec v(N);
      for (std::size_t k = 0; k < m; ++k) v[iz(k)] = -h.c(a, k, b);
      d.set_bracket(ih(a), iz(b), v);
    }
  }
  MetricLieAlgebra out{d, Matrix(N, N)};
  put_block(out.form, m, m, g.form);
  put_block(out.form, m + n, m + n, form_h);
  for (std::size_t a = 0; a < m; ++a) out.form(iz(a), ih(a)) = out.form(ih(a), iz(a)) = 1;
  if (auto j = check_jacobi(d); !j.ok) throw std::logic_error("double extension violates Jacobi");
  if (Check c = check_metric(out); !c) throw std::logic_error("double extension form not invariant: " + c.violation);
  return out;
}

MetricLieAlgebra cotangent(const LieAlgebra& h, const Matrix& form_h) {
  MetricLieAlgebra zero{LieAlgebra(0), Matrix(0, 0)};
  return double_extension(zero, h, std::vector<Matrix>(h.dim(), Matrix(0, 0)), form_h);
}

AxiomReport verify_quadratic_extension(const QuadExtension& w, const OrthogonalModule& a) {
  AxiomReport rep;
  auto add = [&](std::string name, Check c) { rep.axioms.push_back({std::move(name), std::move(c)}); };
  const LieAlgebra& g = w.g.alg;
  std::size_t N = w.g.dim(), n = a.ldim(), m = a.adim();
  add("metric Lie algebra", check_metric(w.g));
  if (w.phi) add("equivariant structure", check_equivariant(w.g, *w.phi));
  if (w.ri.ambient() != N || w.i_map.rows() != N || w.i_map.cols() != m || w.p_map.rows() != n || w.p_map.cols() != N) {
    add("sizes", Check::fail("ri, i or p has wrong size"));
    return rep;
  }
  bool ideal = is_ideal(g, w.ri), iso = is_isotropic(w.g, w.ri);
  add("ri isotropic ideal", ideal && iso ? Check::pass() : Check::fail(ideal ? "ri not isotropic" : "ri not an ideal"));
  if (w.phi) add("ri invariant", is_invariant(*w.phi, w.ri) ? Check::pass() : Check::fail("ri not Phi-invariant"));
  Subspace rp = perp(w.g, w.ri);
  Subspace kp = Subspace::kernel_of(w.p_map);
  add("p surjective with kernel ri^perp",
      rank(w.p_map) == n && kp == rp ? Check::pass() : Check::fail("p not onto l or kernel differs from ri^perp"));
  Check hom = Check::pass();
  for (std::size_t x = 0; x < N && hom; ++x)
    for (std::size_t y = x + 1; y < N && hom; ++y)
      if (w.p_map * g.bracket(x, y) != a.alg().bracket(w.p_map.col(x), w.p_map.col(y)))
        hom = Check::fail("p[" + g.names()[x] + "," + g.names()[y] + "] != [p,p]");
  add("p homomorphism", hom);
  Check isom = Check::pass();
  if (!columns_in(rp, w.i_map))
    isom = Check::fail("i(a) not inside ri^perp");
  else if (Subspace::from_cols(w.i_map) + w.ri != rp || rank(w.i_map) + w.ri.dim() != rp.dim())
    isom = Check::fail("i(a) + ri != ri^perp or i not injective modulo ri");
  else if (w.i_map.transpose() * w.g.form * w.i_map != a.form)
    isom = Check::fail("i is not an isometry");
  add("i isometry onto ri^perp/ri", isom);
  Check ihom = Check::pass(), cons = Check::pass();
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = s + 1; t < m && ihom; ++t)
      if (!w.ri.contains(g.bracket(w.i_map.col(s), w.i_map.col(t)))) ihom = Check::fail("[i(a), i(a)] not inside ri");
    for (std::size_t x = 0; x < N && cons; ++x) {
      Vec lhs = g.bracket(unit_vec(N, x), w.i_map.col(s));
      Vec rhs = w.i_map * (a.module.act(w.p_map.col(x)) * unit_vec(m, s));
      if (!w.ri.contains(sub(lhs, rhs))) cons = Check::fail("[" + g.names()[x] + ", i(A)] != i(rho(p x) A) mod ri");
    }
  }
  add("i homomorphism", ihom);
  add("consistent with rho", cons);
  if (w.phi && a.equiv) {
    Check eq = Check::pass();
    const auto& pl = a.equiv->on_l;
    const auto& pa = a.equiv->on_a;
    auto test = [&](const Matrix& xg, const Matrix& xl, const Matrix& xa, const std::string& name) {
      if (!eq) return;
      if (w.p_map * xg != xl * w.p_map) eq = Check::fail("p not equivariant under " + name);
      else if (!columns_in(w.ri, xg * w.i_map - w.i_map * xa)) eq = Check::fail("i not equivariant under " + name);
    };
    if (w.phi->derivations.size() != pl.derivations.size() || w.phi->automorphisms.size() != pl.automorphisms.size())
      eq = Check::fail("generator counts differ");
    for (std::size_t i = 0; i < pl.derivations.size() && eq; ++i)
      test(w.phi->derivation(i), pl.derivation(i), pa.derivation(i), pl.derivations[i].name);
    for (std::size_t i = 0; i < pl.automorphisms.size() && eq; ++i)
      test(w.phi->automorphism(i), pl.automorphism(i), pa.automorphism(i), pl.automorphisms[i].name);
    add("i, p equivariant", eq);
  }
  return rep;
}

Matrix make_isotropic(const QuadExtension& w, const Matrix& s0) {
  const Matrix& gf = w.g.form;
  Matrix r = w.ri.basis();
  Matrix mt = (r.transpose() * gf * s0).transpose();
  auto inv = inverse(mt);
  if (!inv) throw std::invalid_argument("ri does not pair nondegenerately with the section");
  Matrix b = s0.transpose() * gf * s0;
  return s0 - r * (*inv) * b * Q(1, 2);
}

Matrix isotropic_section(const QuadExtension& w, const OrthogonalModule& a) {
  std::size_t N = w.g.dim(), n = a.ldim();
  auto sol = section_system(w, a, Matrix::identity(n));
  if (!sol.particular) throw std::invalid_argument("no equivariant section of p (structure not semisimple)");
  return make_isotropic(w, unflatten(*sol.particular, N, n));
}

QuadCocycle extract_cocycle(const QuadExtension& w, const OrthogonalModule& a, const Matrix& s, bool check_independence) {
  const LieAlgebra& g = w.g.alg;
  const LieAlgebra& l = a.alg();
  std::size_t n = l.dim(), m = a.adim(), N = w.g.dim(), r = w.ri.dim();
  if (s.rows() != N || s.cols() != n) throw std::invalid_argument("section has wrong size");
  if (w.p_map * s != Matrix::identity(n)) throw std::invalid_argument("s is not a section of p");
  if (!(s.transpose() * w.g.form * s).is_zero()) throw std::invalid_argument("section image not isotropic");
  std::vector<Vec> cols = w.ri.vecs();
  for (auto& v : w.i_map.col_list()) cols.push_back(v);
  Matrix split = Matrix::from_cols(N, cols);
  QuadCocycle z{Cochain(n, 2, m), Cochain::scalar(n, 3)};
  std::vector<std::vector<Vec>> br(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) br[i][j] = g.bracket(s.col(i), s.col(j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v = sub(br[i][j], s * l.bracket(i, j));
      Vec c = solve_coords(split, v, "ri^perp");
      z.alpha.set({i, j}, Vec(c.begin() + r, c.end()));
      for (std::size_t k = j + 1; k < n; ++k) z.gamma.set({i, j, k}, dot(br[i][j], w.g.form * s.col(k)));
    }
  if (Check c = is_cocycle(z, a); !c) throw std::logic_error("extracted pair is not a cocycle: " + c.violation);
  if (check_independence) {
    auto sol = section_system(w, a, Matrix(n, n));
    Matrix delta(N, n);
    std::mt19937 rng(20240611u);
    for (auto& k : sol.kernel.col_list()) delta = delta + unflatten(k, N, n) * Q(int(rng() % 5) - 2);
    Matrix s2 = make_isotropic(w, s + delta);
    QuadCocycle z2 = extract_cocycle(w, a, s2, false);
    Decision e = equivalent(z, z2, a);
    if (!e.is_yes()) throw std::logic_error("extracted class depends on the section");
  }
  return z;
}

CanonicalExtension canonical_extension(const MetricLieAlgebra& g, const std::optional<EquivStructure>& phi) {
  const LieAlgebra& alg = g.alg;
  std::size_t N = g.dim();
  CanonicalIdeal ci = canonical_isotropic_ideal(g);
  if (!ci.quotient_abelian) throw std::invalid_argument("ri^perp/ri not abelian: g has simple ideals");
  if (phi && !is_invariant(*phi, ci.ri)) throw std::logic_error("ri(g) not invariant under the structure");
  Subspace rp = perp(g, ci.ri);
  Matrix rep;
  LieAlgebra l = quotient(alg, rp, &rep);
  std::size_t n = l.dim();
  std::vector<Vec> all = rep.col_list();
  for (auto& v : rp.vecs()) all.push_back(v);
  Matrix tinv = *inverse(Matrix::from_cols(N, all));
  Matrix p = sub_block(tinv, 0, 0, n, N);
  std::vector<Vec> ab = complement_basis(rp, ci.ri);
  std::size_t m = ab.size();
  Matrix imap = Matrix::from_cols(N, ab);
  std::vector<Vec> sp = ci.ri.vecs();
  for (auto& v : ab) sp.push_back(v);
  Matrix split = Matrix::from_cols(N, sp);
  std::size_t r = ci.ri.dim();
  auto acoords = [&](const Vec& v) {
    Vec c = solve_coords(split, v, "ri^perp");
    return Vec(c.begin() + r, c.end());
  };
  LieModule mod{l, {}, m};
  for (std::size_t k = 0; k < n; ++k)
    mod.rho.push_back(map_matrix(m, m, [&](std::size_t j) { return acoords(alg.bracket(rep.col(k), imap.col(j))); }));
  CanonicalExtension out;
  out.module = OrthogonalModule{mod, imap.transpose() * g.form * imap, std::nullopt};
  if (phi) {
    EquivPair ep{EquivStructure{n, {}, {}, phi->relations, phi->preset}, EquivStructure{m, {}, {}, phi->relations, phi->preset}};
    auto induce = [&](const Matrix& x, Matrix& xl, Matrix& xa) {
      xl = p * x * rep;
      xa = map_matrix(m, m, [&](std::size_t j) { return acoords(x * imap.col(j)); });
    };
    for (const auto& d : phi->derivations) {
      Matrix xl, xa;
      induce(d.m, xl, xa);
      ep.on_l.derivations.push_back({d.name, xl});
      ep.on_a.derivations.push_back({d.name, xa});
    }
    for (const auto& k : phi->automorphisms) {
      Matrix xl, xa;
      induce(k.m, xl, xa);
      ep.on_l.automorphisms.push_back({k.name, xl});
      ep.on_a.automorphisms.push_back({k.name, xa});
    }
    out.module.equiv = ep;
  }
  out.ext = QuadExtension{g, phi, ci.ri, imap, p};
  return out;
}

}  // namespace mla
