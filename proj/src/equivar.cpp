#include "mla/equivar.hpp"

#include <sstream>
#include <stdexcept>

namespace mla {

namespace {

const char* kGradingNames[] = {"z2", "complex", "para_complex", "quaternionic", "para_quaternionic", "extrinsic_RZ2"};

Matrix id(std::size_t n) { return Matrix::identity(n); }

Matrix cube(const Matrix& d) { return d * d * d; }

bool is_automorphism(const LieAlgebra& l, const Matrix& k) {
  std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (k * l.bracket(i, j) != l.bracket(k.col(i), k.col(j))) return false;
  return true;
}

Check generators_on(const LieAlgebra& l, const EquivStructure& phi, const Matrix* form) {
  std::size_t n = l.dim();
  if (phi.dim != n) return Check::fail("structure dimension " + std::to_string(phi.dim) + " != " + std::to_string(n));
  for (const auto& d : phi.derivations) {
    if (d.m.rows() != n || d.m.cols() != n) return Check::fail("derivation " + d.name + " has wrong size");
    if (!is_derivation(l, d.m)) return Check::fail("derivation " + d.name + " is not a derivation");
    if (form && !(d.m.transpose() * *form + *form * d.m).is_zero())
      return Check::fail("derivation " + d.name + " is not antisymmetric");
  }
  for (const auto& k : phi.automorphisms) {
    if (k.m.rows() != n || k.m.cols() != n) return Check::fail("automorphism " + k.name + " has wrong size");
    if (!inverse(k.m)) return Check::fail("automorphism " + k.name + " is not invertible");
    if (!is_automorphism(l, k.m)) return Check::fail("automorphism " + k.name + " does not preserve brackets");
    if (form && k.m.transpose() * *form * k.m != *form)
      return Check::fail("automorphism " + k.name + " is not isometric");
  }
  if (Check c = check_relations(phi); !c) return c;
  if (phi.preset)
    if (Check c = validate_preset(phi, *phi.preset); !c) return c;
  return Check::pass();
}

Check expect(bool ok, const std::string& rel) { return ok ? Check::pass() : Check::fail("relation " + rel + " fails"); }

}  // namespace

const char* grading_name(GradingKind k) { return kGradingNames[static_cast<int>(k)]; }

std::optional<GradingKind> parse_grading(const std::string& s) {
  for (int i = 0; i < 6; ++i)
    if (s == kGradingNames[i]) return static_cast<GradingKind>(i);
  return std::nullopt;
}

std::string Relation::label() const {
  std::ostringstream o;
  auto sum = [&] {
    if (rhs.empty()) o << "0";
    for (std::size_t i = 0; i < rhs.size(); ++i) o << (i ? "+" : "") << to_string(rhs[i].second) << "*" << rhs[i].first;
  };
  switch (kind) {
    case Kind::Bracket:
      o << "[" << a << "," << b << "]=";
      sum();
      break;
    case Kind::Conjugate:
      o << a << "." << b << "=";
      sum();
      break;
    case Kind::Polynomial: o << "p(" << a << ")=0 with p=" << poly.str(); break;
  }
  return o.str();
}

EquivStructure EquivStructure::trivial(std::size_t n) {
  EquivStructure e;
  e.dim = n;
  return e;
}

const Matrix* EquivStructure::find(const std::string& name, bool* is_deriv) const {
  for (const auto& d : derivations)
    if (d.name == name) {
      if (is_deriv) *is_deriv = true;
      return &d.m;
    }
  for (const auto& k : automorphisms)
    if (k.name == name) {
      if (is_deriv) *is_deriv = false;
      return &k.m;
    }
  return nullptr;
}

Check check_relations(const EquivStructure& phi) {
  for (const auto& r : phi.relations) {
    bool da = false, db = false;
    const Matrix* a = phi.find(r.a, &da);
    if (!a) return Check::fail("relation " + r.label() + " names unknown generator " + r.a);
    Matrix lhs;
    if (r.kind == Relation::Kind::Polynomial) {
      if (!r.poly.eval(*a).is_zero()) return Check::fail("relation " + r.label() + " fails");
      continue;
    }
    const Matrix* b = phi.find(r.b, &db);
    if (!b) return Check::fail("relation " + r.label() + " names unknown generator " + r.b);
    if (r.kind == Relation::Kind::Bracket) {
      if (!da || !db) return Check::fail("relation " + r.label() + " brackets a non-derivation");
      lhs = commutator(*a, *b);
    } else {
      if (da) return Check::fail("relation " + r.label() + " conjugates by a derivation");
      lhs = *a * *b * *inverse(*a);
    }
    Matrix rhs(phi.dim, phi.dim);
    for (const auto& [name, c] : r.rhs) {
      const Matrix* m = phi.find(name);
      if (!m) return Check::fail("relation " + r.label() + " names unknown generator " + name);
      rhs = rhs + *m * c;
    }
    if (lhs != rhs) return Check::fail("relation " + r.label() + " fails");
  }
  return Check::pass();
}

Check check_equivariant(const MetricLieAlgebra& g, const EquivStructure& phi) {
  return generators_on(g.alg, phi, &g.form);
}

Check check_equivariant_alg(const LieAlgebra& l, const EquivStructure& phi) { return generators_on(l, phi, nullptr); }

Check check_equivariant_module(const LieModule& a, const Matrix& form_a, const EquivPair& phi) {
  const auto& pl = phi.on_l;
  const auto& pa = phi.on_a;
  if (Check c = check_equivariant_alg(a.alg, pl); !c) return Check::fail("on l: " + c.violation);
  std::size_t m = a.dim();
  if (pa.dim != m) return Check::fail("module structure has wrong dimension");
  if (pa.derivations.size() != pl.derivations.size() || pa.automorphisms.size() != pl.automorphisms.size())
    return Check::fail("generator lists on l and a differ");
  for (const auto& d : pa.derivations)
    if (!(d.m.transpose() * form_a + form_a * d.m).is_zero())
      return Check::fail("derivation " + d.name + " on a is not antisymmetric");
  for (const auto& k : pa.automorphisms) {
    if (!inverse(k.m)) return Check::fail("automorphism " + k.name + " on a is not invertible");
    if (k.m.transpose() * form_a * k.m != form_a) return Check::fail("automorphism " + k.name + " on a is not isometric");
  }
  if (Check c = check_relations(pa); !c) return Check::fail("on a: " + c.violation);
  if (pa.preset)
    if (Check c = validate_preset(pa, *pa.preset); !c) return Check::fail("on a: " + c.violation);
  const auto& names = a.alg.names();
  for (std::size_t i = 0; i < pl.derivations.size(); ++i) {
    const Matrix& dl = pl.derivations[i].m;
    const Matrix& da = pa.derivations[i].m;
    for (std::size_t j = 0; j < a.alg.dim(); ++j)
      if (commutator(da, a.rho[j]) != a.act(dl.col(j)))
        return Check::fail("derivation " + pl.derivations[i].name + " incompatible with rho(" + names[j] + ")");
  }
  for (std::size_t i = 0; i < pl.automorphisms.size(); ++i) {
    const Matrix& kl = pl.automorphisms[i].m;
    const Matrix& ka = pa.automorphisms[i].m;
    Matrix kinv = *inverse(ka);
    for (std::size_t j = 0; j < a.alg.dim(); ++j)
      if (ka * a.rho[j] * kinv != a.act(kl.col(j)))
        return Check::fail("automorphism " + pl.automorphisms[i].name + " incompatible with rho(" + names[j] + ")");
  }
  return Check::pass();
}

bool is_invariant(const EquivStructure& phi, const Subspace& u) {
  for (const auto& d : phi.derivations)
    if (!u.contains(image(d.m, u))) return false;
  for (const auto& k : phi.automorphisms)
    if (!u.contains(image(k.m, u))) return false;
  return true;
}

Z2Split z2_split(const LieAlgebra& l, const Matrix& theta) {
  std::size_t n = l.dim();
  if (theta * theta != id(n)) throw std::invalid_argument("theta not involutive");
  Z2Split s;
  s.plus = Subspace::kernel_of(theta - id(n));
  s.minus = Subspace::kernel_of(theta + id(n));
  s.proper = bracket_span(l, s.minus, s.minus) == s.plus;
  return s;
}

Check check_symmetric_pair(const LieAlgebra& l, const Matrix& theta) {
  Z2Split s = z2_split(l, theta);
  if (!s.proper) return Check::fail("not proper: [l_-,l_-] != l_+");
  if (!s.minus.contains(center(l))) return Check::fail("center not contained in l_-");
  return Check::pass();
}

Check validate_preset(const EquivStructure& phi, GradingKind kind) {
  std::size_t n = phi.dim;
  const auto& ds = phi.derivations;
  const auto& ks = phi.automorphisms;
  auto count = [&](std::size_t nd, std::size_t kmin, std::size_t kmax) -> Check {
    if (ds.size() != nd) return Check::fail(std::string(grading_name(kind)) + " needs " + std::to_string(nd) + " derivation(s)");
    if (ks.size() < kmin || ks.size() > kmax)
      return Check::fail(std::string(grading_name(kind)) + " has wrong number of automorphisms");
    return Check::pass();
  };
  auto name = [&](std::size_t i) { return ds[i].name; };
  switch (kind) {
    case GradingKind::z2: {
      if (Check c = count(0, 1, 1); !c) return c;
      return expect(ks[0].m * ks[0].m == id(n), ks[0].name + "^2=1");
    }
    case GradingKind::complex:
    case GradingKind::para_complex: {
      bool cx = kind == GradingKind::complex;
      if (Check c = count(1, cx ? 0 : 1, 1); !c) return c;
      const Matrix& d = ds[0].m;
      if (Check c = expect(cube(d) == (cx ? d * Q(-1) : d), name(0) + (cx ? "^3=-" : "^3=") + name(0)); !c) return c;
      if (!ks.empty()) {
        Matrix w = id(n) + d * d * Q(cx ? 2 : -2);
        if (Check c = expect(ks[0].m == w, ks[0].name + "=" + (cx ? "1+2" : "1-2") + name(0) + "^2"); !c) return c;
      }
      return Check::pass();
    }
    case GradingKind::quaternionic:
    case GradingKind::para_quaternionic: {
      bool q = kind == GradingKind::quaternionic;
      if (Check c = count(3, 0, 1); !c) return c;
      const Matrix &i = ds[0].m, &j = ds[1].m, &k = ds[2].m;
      Q s = q ? 1 : -1;
      if (Check c = expect(commutator(i, j) == k * Q(2), "[" + name(0) + "," + name(1) + "]=2" + name(2)); !c) return c;
      if (Check c = expect(commutator(j, k) == i * Q(2 * s), "[" + name(1) + "," + name(2) + "]=" + (q ? "2" : "-2") + name(0)); !c)
        return c;
      if (Check c = expect(commutator(k, i) == j * Q(2), "[" + name(2) + "," + name(0) + "]=2" + name(1)); !c) return c;
      if (Check c = expect(cube(i) == i * Q(-1), name(0) + "^3=-" + name(0)); !c) return c;
      for (std::size_t t = 1; t < 3; ++t)
        if (Check c = expect(cube(ds[t].m) == ds[t].m * Q(-s), name(t) + (q ? "^3=-" : "^3=") + name(t)); !c) return c;
      if (!ks.empty())
        if (Check c = expect(ks[0].m == id(n) + i * i * Q(2), ks[0].name + "=1+2" + name(0) + "^2"); !c) return c;
      return Check::pass();
    }
    case GradingKind::extrinsic_RZ2: {
      if (Check c = count(1, 1, 1); !c) return c;
      const Matrix& d = ds[0].m;
      const Matrix& t = ks[0].m;
      if (Check c = expect(cube(d) == d * Q(-1), name(0) + "^3=-" + name(0)); !c) return c;
      if (Check c = expect(t * t == id(n), ks[0].name + "^2=1"); !c) return c;
      return expect(d * t == t * d * Q(-1), name(0) + ks[0].name + "=-" + ks[0].name + name(0));
    }
  }
  return Check::fail("unknown grading kind");
}

Matrix induced_involution(const EquivStructure& phi) {
  std::size_t n = phi.dim;
  if (!phi.preset) {
    if (phi.derivations.empty() && phi.automorphisms.size() == 1 && phi.automorphisms[0].m * phi.automorphisms[0].m == id(n))
      return phi.automorphisms[0].m;
    throw std::invalid_argument("no induced involution without a preset");
  }
  if (Check c = validate_preset(phi, *phi.preset); !c) throw std::invalid_argument(c.violation);
  switch (*phi.preset) {
    case GradingKind::z2:
    case GradingKind::extrinsic_RZ2:
    case GradingKind::para_complex: return phi.automorphisms[0].m;
    default: return id(n) + phi.derivations[0].m * phi.derivations[0].m * Q(2);
  }
}

std::vector<IsotypicComponent> isotypic_split(const EquivStructure& phi) {
  std::size_t n = phi.dim;
  if (phi.preset)
    if (Check c = validate_preset(phi, *phi.preset); !c) throw std::invalid_argument(c.violation);
  Subspace triv = Subspace::whole(n), moving(n);
  for (const auto& d : phi.derivations) {
    triv = intersect(triv, Subspace::kernel_of(d.m));
    moving = moving + Subspace::from_cols(d.m);
  }
  std::vector<IsotypicComponent> out;
  GradingKind kind = phi.preset.value_or(GradingKind::z2);
  if (!phi.preset) {
    for (const auto& k : phi.automorphisms) {
      triv = intersect(triv, Subspace::kernel_of(k.m - id(n)));
      moving = moving + Subspace::from_cols(k.m - id(n));
    }
    if (triv.dim() + moving.dim() != n || !intersect(triv, moving).is_zero())
      throw std::invalid_argument("action not semisimple: trivial and moving parts do not split V");
    return {{"1", triv}, {"moving", moving}};
  }
  switch (kind) {
    case GradingKind::z2: {
      const Matrix& t = phi.automorphisms[0].m;
      return {{"1", Subspace::kernel_of(t - id(n))}, {"sign", Subspace::kernel_of(t + id(n))}};
    }
    case GradingKind::para_complex: {
      const Matrix& d = phi.derivations[0].m;
      return {{"1", triv}, {"sigma", Subspace::kernel_of(d - id(n))}, {"sigma*", Subspace::kernel_of(d + id(n))}};
    }
    case GradingKind::extrinsic_RZ2: {
      const Matrix& t = phi.automorphisms[0].m;
      return {{"1", intersect(triv, Subspace::kernel_of(t - id(n)))},
              {"sign", intersect(triv, Subspace::kernel_of(t + id(n)))},
              {"sigma", moving}};
    }
    default: return {{"1", triv}, {"sigma", moving}};
  }
}

ExtrinsicSplit extrinsic_split(const Matrix& d, const std::optional<Matrix>& theta) {
  std::size_t n = d.rows();
  if (cube(d) != d * Q(-1)) throw std::invalid_argument("D^3 != -D");
  ExtrinsicSplit s;
  Matrix d2 = d * d;
  s.plus = Subspace::kernel_of(d);
  s.minus = Subspace::kernel_of(d2 + id(n));
  s.tau = id(n) + d2 * Q(2);
  if (theta) {
    std::array<std::array<Subspace, 2>, 2> f{{{Subspace(n), Subspace(n)}, {Subspace(n), Subspace(n)}}};
    for (int ts = 0; ts < 2; ++ts) {
      Subspace e = Subspace::kernel_of(*theta + id(n) * Q(ts ? 1 : -1));
      f[ts][0] = intersect(e, s.plus);
      f[ts][1] = intersect(e, s.minus);
    }
    s.fourfold = f;
  }
  return s;
}

}  // namespace mla
