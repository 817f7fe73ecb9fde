#include "mla/metric.hpp"

#include <sstream>
#include <stdexcept>

namespace mla {

Check check_metric(const MetricLieAlgebra& g) {
  std::size_t n = g.dim();
  if (g.form.rows() != n || g.form.cols() != n) return Check::fail("form has wrong size");
  if (!g.form.is_symmetric()) return Check::fail("form not symmetric");
  if (rank(g.form) != n) return Check::fail("form degenerate");
  const auto& nm = g.alg.names();
  for (std::size_t x = 0; x < n; ++x) {
    Matrix a = g.alg.ad(x);
    // <[x,y],z> + <y,[x,z]> = 0  <=>  ad_x^T G + G ad_x = 0
    Matrix s = a.transpose() * g.form + g.form * a;
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (s(y, z) != 0) return Check::fail("invariance fails at (" + nm[x] + "," + nm[y] + "," + nm[z] + ")");
  }
  return Check::pass();
}

MetricLieAlgebra metric_direct_sum(const MetricLieAlgebra& a, const MetricLieAlgebra& b) {
  return {direct_sum(a.alg, b.alg), block_diag({a.form, b.form})};
}

MetricLieAlgebra metric_change_basis(const MetricLieAlgebra& g, const Matrix& t) {
  return {change_basis(g.alg, t), t.transpose() * g.form * t};
}

Subspace perp(const MetricLieAlgebra& g, const Subspace& u) {
  if (u.is_zero()) return Subspace::whole(g.dim());
  return Subspace::kernel_of(u.basis().transpose() * g.form);
}

bool is_isotropic(const MetricLieAlgebra& g, const Subspace& u) {
  return restrict_form(g.form, u.basis()).is_zero();
}

CanonicalIdeal canonical_isotropic_ideal(const MetricLieAlgebra& g) {
  CanonicalIdeal c;
  c.chain = radical_chain(g.alg);
  c.ri = Subspace(g.dim());
  for (std::size_t k = 1; k < c.chain.size(); ++k) c.ri = c.ri + intersect(c.chain[k], perp(g, c.chain[k]));
  Subspace rp = perp(g, c.ri);
  c.quotient_abelian = c.ri.contains(bracket_span(g.alg, rp, rp));
  return c;
}

std::vector<Matrix> symmetric_centroid(const MetricLieAlgebra& g) {
  std::size_t n = g.dim();
  auto var = [n](std::size_t i, std::size_t j) { return i * n + j; };
  LinearSystem ls(n * n);
  for (std::size_t y = 0; y < n; ++y) {
    Matrix a = g.alg.ad(y);
    if (a.is_zero()) continue;
    // (P a - a P)_{ij} = 0
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        LinearSystem::Row r;
        for (std::size_t k = 0; k < n; ++k) {
          if (a(k, j) != 0) r.emplace_back(var(i, k), a(k, j));
          if (a(i, k) != 0) r.emplace_back(var(k, j), -a(i, k));
        }
        if (!r.empty()) ls.add(r);
      }
  }
  // (G P)_{ij} = (G P)_{ji}
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      LinearSystem::Row r;
      for (std::size_t k = 0; k < n; ++k) {
        if (g.form(i, k) != 0) r.emplace_back(var(k, j), g.form(i, k));
        if (g.form(j, k) != 0) r.emplace_back(var(k, i), -g.form(j, k));
      }
      if (!r.empty()) ls.add(r);
    }
  auto sol = ls.solve();
  std::vector<Matrix> out;
  for (std::size_t c = 0; c < sol.kernel.cols(); ++c) {
    Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) = sol.kernel(var(i, j), c);
    out.push_back(p);
  }
  return out;
}

namespace {
std::optional<Matrix> nontrivial_idempotent(const Matrix& a) {
  auto ps = spectral_idempotents(a);
  if (ps.size() < 2) return std::nullopt;
  return ps.front();
}

// True when the associative algebra generated by the matrices is nilpotent.
bool generates_nilpotent_algebra(const std::vector<Matrix>& ns, std::size_t n) {
  auto flat = [n](const Matrix& m) {
    Vec v(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = m(i, j);
    return v;
  };
  auto unflat = [n](const Vec& v) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
    return m;
  };
  std::vector<Vec> cur;
  for (const auto& m : ns) cur.push_back(flat(m));
  Subspace layer = Subspace::span(n * n, cur);
  for (std::size_t step = 0; step <= n; ++step) {
    if (layer.is_zero()) return true;
    std::vector<Vec> next;
    for (const auto& m : ns)
      for (auto& v : layer.vecs()) next.push_back(flat(m * unflat(v)));
    layer = Subspace::span(n * n, next);
  }
  return layer.is_zero();
}
}  // namespace

Decision decompose(const MetricLieAlgebra& g) {
  std::size_t n = g.dim();
  auto cent = symmetric_centroid(g);
  if (cent.size() <= 1) return Decision::no("symmetric centroid is span{id}");
  std::vector<Matrix> probes = cent;
  for (std::size_t i = 0; i < cent.size(); ++i)
    for (std::size_t j = i + 1; j < cent.size(); ++j) probes.push_back(cent[i] + cent[j]);
  for (const auto& b : probes) {
    if (auto p = nontrivial_idempotent(b)) {
      Decision d = Decision::yes("self-adjoint centroid idempotent splits g into orthogonal ideals");
      d.matrices.push_back(*p);
      return d;
    }
  }
  // Every centroid element scalar plus nilpotent: no nontrivial idempotent exists.
  std::vector<Matrix> shifted;
  bool single_eigen = true;
  for (const auto& b : cent) {
    Poly s = squarefree_part(minimal_polynomial(b));
    if (s.degree() != 1) {
      single_eigen = false;
      break;
    }
    Q lam = -s.coeff(0);
    Matrix nb = b - Matrix::identity(n) * lam;
    if (!nb.is_zero()) shifted.push_back(nb);
  }
  if (single_eigen && generates_nilpotent_algebra(shifted, n))
    return Decision::no("symmetric centroid is scalars plus a nilpotent subspace");
  return Decision::unknown("no rational idempotent found in the symmetric centroid");
}

Signature triple_signature(const MetricLieAlgebra& g, const Matrix& theta) {
  std::size_t n = g.dim();
  if (theta * theta != Matrix::identity(n)) throw std::invalid_argument("theta not involutive");
  if (theta.transpose() * g.form * theta != g.form) throw std::invalid_argument("theta not isometric");
  Subspace minus = Subspace::kernel_of(theta + Matrix::identity(n));
  Signature s = signature(restrict_form(g.form, minus.basis()));
  if (s.r != 0) throw std::logic_error("form degenerate on g_-");
  return s;
}

std::string Fingerprint::str() const {
  std::ostringstream o;
  auto list = [&](const std::vector<std::size_t>& v) {
    o << "[";
    for (std::size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i];
    o << "]";
  };
  o << "dim=" << dim << " sig=(" << sig.p << "," << sig.q << ") derived=";
  list(derived);
  o << " lower=";
  list(lower);
  o << " center=" << center << " nilindex=";
  if (nilindex)
    o << *nilindex;
  else
    o << "-";
  o << " centroid=" << centroid << " chain=";
  list(chain);
  o << " ri=" << ri;
  return o.str();
}

Fingerprint fingerprint(const MetricLieAlgebra& g) {
  Fingerprint f;
  f.dim = g.dim();
  f.sig = signature(g.form);
  Series s = series(g.alg);
  for (auto& x : s.derived) f.derived.push_back(x.dim());
  for (auto& x : s.lower) f.lower.push_back(x.dim());
  f.center = s.center.dim();
  f.nilindex = s.nilindex;
  f.centroid = symmetric_centroid(g).size();
  CanonicalIdeal c = canonical_isotropic_ideal(g);
  for (auto& x : c.chain) f.chain.push_back(x.dim());
  f.ri = c.ri.dim();
  return f;
}

}  // namespace mla
