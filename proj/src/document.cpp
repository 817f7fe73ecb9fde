#include "mla/document.hpp"

#include <algorithm>
#include <set>

namespace mla {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& field(const Json& j, const std::string& path, const std::string& key) {
  if (!j.is_object()) throw DocumentError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw DocumentError(at(path, key), "missing field");
  return *it;
}

const Json* optional_field(const Json& j, const std::string& key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw DocumentError(path, "expected an array");
  return j;
}

std::string str(const Json& j, const std::string& path) {
  if (!j.is_string()) throw DocumentError(path, "expected a string");
  return j.get<std::string>();
}

std::size_t index(const Json& j, const std::string& path, std::size_t bound) {
  if (!j.is_number_integer()) throw DocumentError(path, "expected an index");
  long long v = j.get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= bound)
    throw DocumentError(path, "index " + std::to_string(v) + " out of range [0," + std::to_string(bound) + ")");
  return static_cast<std::size_t>(v);
}

std::size_t count(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw DocumentError(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Q rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Q(j.get<long>());
  if (!j.is_string()) throw DocumentError(path, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw DocumentError(path, "malformed rational '" + j.get<std::string>() + "'");
  }
}

Vec parse_vec(const Json& j, const std::string& path, std::optional<std::size_t> len = std::nullopt) {
  array(j, path);
  if (len && j.size() != *len)
    throw DocumentError(path, "expected length " + std::to_string(*len) + ", got " + std::to_string(j.size()));
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational(j[i], at(path, i)));
  return v;
}

Matrix parse_matrix(const Json& j, const std::string& path, std::optional<std::size_t> rows = std::nullopt,
                    std::optional<std::size_t> cols = std::nullopt) {
  array(j, path);
  if (rows && j.size() != *rows)
    throw DocumentError(path, "expected " + std::to_string(*rows) + " rows, got " + std::to_string(j.size()));
  std::size_t c = cols ? *cols : (j.empty() ? 0 : array(j[0], at(path, 0)).size());
  Matrix m(j.size(), c);
  for (std::size_t r = 0; r < j.size(); ++r) {
    Vec row = parse_vec(j[r], at(path, r), c);
    for (std::size_t k = 0; k < c; ++k) m(r, k) = row[k];
  }
  return m;
}

Matrix parse_square(const Json& j, const std::string& path, std::size_t n) { return parse_matrix(j, path, n, n); }

std::vector<std::string> parse_names(const Json& j, const std::string& path, std::size_t n) {
  array(j, path);
  if (j.size() != n) throw DocumentError(path, "expected " + std::to_string(n) + " names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(str(j[i], at(path, i)));
  return out;
}

// --- algebra blocks

Json algebra_json(const LieAlgebra& l) {
  Json j;
  std::size_t n = l.dim();
  j["dim"] = n;
  j["basis"] = l.names();
  Json br = Json::array();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Json terms = Json::array();
      for (std::size_t k = 0; k < n; ++k)
        if (l.c(a, b, k) != 0) terms.push_back(Json::array({k, rational_json(l.c(a, b, k))}));
      if (!terms.empty()) br.push_back(Json::array({a, b, terms}));
    }
  j["brackets"] = br;
  return j;
}

LieAlgebra parse_algebra(const Json& j, const std::string& path) {
  std::size_t n = count(field(j, path, "dim"), at(path, "dim"));
  LieAlgebra l(n);
  if (const Json* b = optional_field(j, "basis")) l.set_names(parse_names(*b, at(path, "basis"), n));
  const Json& br = array(field(j, path, "brackets"), at(path, "brackets"));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t t = 0; t < br.size(); ++t) {
    std::string p = at(at(path, "brackets"), t);
    const Json& e = array(br[t], p);
    if (e.size() != 3) throw DocumentError(p, "expected [i, j, [[k, c], ...]]");
    std::size_t a = index(e[0], at(p, 0), n), b = index(e[1], at(p, 1), n);
    if (a >= b) throw DocumentError(p, "bracket entries need i < j");
    if (!seen.insert({a, b}).second) throw DocumentError(p, "duplicate bracket entry");
    Vec v(n);
    const Json& terms = array(e[2], at(p, 2));
    for (std::size_t s = 0; s < terms.size(); ++s) {
      std::string ps = at(at(p, 2), s);
      const Json& term = array(terms[s], ps);
      if (term.size() != 2) throw DocumentError(ps, "expected [k, c]");
      v[index(term[0], at(ps, 0), n)] += rational(term[1], at(ps, 1));
    }
    l.set_bracket(a, b, v);
  }
  return l;
}

// --- equivariant structures

Json named_list(const std::vector<NamedMatrix>& list) {
  Json out = Json::array();
  for (const auto& nm : list) {
    Json e;
    e["name"] = nm.name;
    e["matrix"] = matrix_json(nm.m);
    out.push_back(e);
  }
  return out;
}

const char* relation_kind(Relation::Kind k) {
  switch (k) {
    case Relation::Kind::Bracket: return "bracket";
    case Relation::Kind::Conjugate: return "conjugate";
    default: return "polynomial";
  }
}

Json equiv_json(const EquivStructure& phi) {
  Json j;
  j["dim"] = phi.dim;
  if (phi.preset) j["preset"] = grading_name(*phi.preset);
  j["derivations"] = named_list(phi.derivations);
  j["automorphisms"] = named_list(phi.automorphisms);
  Json rel = Json::array();
  for (const Relation& r : phi.relations) {
    Json e;
    e["kind"] = relation_kind(r.kind);
    e["a"] = r.a;
    if (r.kind == Relation::Kind::Polynomial) {
      e["poly"] = vec_json(r.poly.coeffs());
    } else {
      e["b"] = r.b;
      Json rhs = Json::array();
      for (const auto& [name, c] : r.rhs) rhs.push_back(Json::array({name, rational_json(c)}));
      e["rhs"] = rhs;
    }
    rel.push_back(e);
  }
  j["relations"] = rel;
  return j;
}

std::vector<NamedMatrix> parse_named(const Json& j, const std::string& path, std::size_t n) {
  std::vector<NamedMatrix> out;
  array(j, path);
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string p = at(path, i);
    out.push_back({str(field(j[i], p, "name"), at(p, "name")), parse_square(field(j[i], p, "matrix"), at(p, "matrix"), n)});
  }
  return out;
}

EquivStructure parse_equiv(const Json& j, const std::string& path, std::size_t n) {
  EquivStructure phi;
  phi.dim = count(field(j, path, "dim"), at(path, "dim"));
  if (phi.dim != n) throw DocumentError(at(path, "dim"), "expected " + std::to_string(n));
  if (const Json* p = optional_field(j, "preset")) {
    auto k = parse_grading(str(*p, at(path, "preset")));
    if (!k) throw DocumentError(at(path, "preset"), "unknown grading '" + p->get<std::string>() + "'");
    phi.preset = k;
  }
  if (const Json* d = optional_field(j, "derivations")) phi.derivations = parse_named(*d, at(path, "derivations"), n);
  if (const Json* a = optional_field(j, "automorphisms")) phi.automorphisms = parse_named(*a, at(path, "automorphisms"), n);
  if (const Json* rel = optional_field(j, "relations")) {
    std::string rp = at(path, "relations");
    array(*rel, rp);
    for (std::size_t i = 0; i < rel->size(); ++i) {
      std::string p = at(rp, i);
      const Json& e = (*rel)[i];
      Relation r;
      std::string kind = str(field(e, p, "kind"), at(p, "kind"));
      r.a = str(field(e, p, "a"), at(p, "a"));
      if (kind == "polynomial") {
        r.kind = Relation::Kind::Polynomial;
        r.poly = Poly(parse_vec(field(e, p, "poly"), at(p, "poly")));
      } else if (kind == "bracket" || kind == "conjugate") {
        r.kind = kind == "bracket" ? Relation::Kind::Bracket : Relation::Kind::Conjugate;
        r.b = str(field(e, p, "b"), at(p, "b"));
        const Json& rhs = array(field(e, p, "rhs"), at(p, "rhs"));
        for (std::size_t t = 0; t < rhs.size(); ++t) {
          std::string pt = at(at(p, "rhs"), t);
          if (!rhs[t].is_array() || rhs[t].size() != 2) throw DocumentError(pt, "expected [name, c]");
          r.rhs.push_back({str(rhs[t][0], at(pt, 0)), rational(rhs[t][1], at(pt, 1))});
        }
      } else {
        throw DocumentError(at(p, "kind"), "unknown relation kind '" + kind + "'");
      }
      phi.relations.push_back(std::move(r));
    }
  }
  return phi;
}

// --- modules and cochains

Json module_json(const OrthogonalModule& a) {
  Json j;
  j["l"] = algebra_json(a.alg());
  j["dim"] = a.adim();
  Json rho = Json::array();
  for (const Matrix& m : a.module.rho) rho.push_back(matrix_json(m));
  j["rho"] = rho;
  j["form"] = matrix_json(a.form);
  if (a.equiv) {
    Json e;
    e["on_l"] = equiv_json(a.equiv->on_l);
    e["on_a"] = equiv_json(a.equiv->on_a);
    j["equiv"] = e;
  }
  return j;
}

void require_symmetric(const Matrix& m, const std::string& path) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = i + 1; k < m.cols(); ++k)
      if (m(i, k) != m(k, i))
        throw DocumentError(path, "form is not symmetric at (" + std::to_string(i) + "," + std::to_string(k) + ")");
}

OrthogonalModule parse_module(const Json& j, const std::string& path) {
  LieAlgebra l = parse_algebra(field(j, path, "l"), at(path, "l"));
  std::size_t m = count(field(j, path, "dim"), at(path, "dim"));
  const Json& rho = array(field(j, path, "rho"), at(path, "rho"));
  if (rho.size() != l.dim()) throw DocumentError(at(path, "rho"), "expected one matrix per basis vector of l");
  LieModule mod{l, {}, m};
  for (std::size_t i = 0; i < rho.size(); ++i) mod.rho.push_back(parse_square(rho[i], at(at(path, "rho"), i), m));
  Matrix form = parse_square(field(j, path, "form"), at(path, "form"), m);
  require_symmetric(form, at(path, "form"));
  OrthogonalModule a{std::move(mod), std::move(form), std::nullopt};
  if (const Json* e = optional_field(j, "equiv")) {
    std::string p = at(path, "equiv");
    a.equiv = EquivPair{parse_equiv(field(*e, p, "on_l"), at(p, "on_l"), l.dim()),
                        parse_equiv(field(*e, p, "on_a"), at(p, "on_a"), m)};
  }
  return a;
}

Json cochain_json(const Cochain& c) {
  Json j;
  j["n"] = c.n();
  j["degree"] = c.degree();
  j["values"] = c.values_dim();
  j["scalar"] = c.is_scalar();
  Json entries = Json::array();
  for (const auto& idx : subsets(c.n(), c.degree())) {
    Vec v = c.at(idx);
    if (is_zero(v)) continue;
    entries.push_back(Json::array({idx, vec_json(v)}));
  }
  j["entries"] = entries;
  return j;
}

Cochain parse_cochain(const Json& j, const std::string& path) {
  std::size_t n = count(field(j, path, "n"), at(path, "n"));
  std::size_t p = count(field(j, path, "degree"), at(path, "degree"));
  std::size_t m = count(field(j, path, "values"), at(path, "values"));
  const Json& sc = field(j, path, "scalar");
  if (!sc.is_boolean()) throw DocumentError(at(path, "scalar"), "expected a boolean");
  bool scalar = sc.get<bool>();
  if (scalar && m != 1) throw DocumentError(at(path, "values"), "scalar cochains take values in dimension 1");
  Cochain c(n, p, m, scalar);
  const Json& entries = array(field(j, path, "entries"), at(path, "entries"));
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t t = 0; t < entries.size(); ++t) {
    std::string pe = at(at(path, "entries"), t);
    const Json& e = array(entries[t], pe);
    if (e.size() != 2) throw DocumentError(pe, "expected [[i, ...], values]");
    const Json& ij = array(e[0], at(pe, 0));
    if (ij.size() != p) throw DocumentError(at(pe, 0), "expected " + std::to_string(p) + " indices");
    std::vector<std::size_t> idx;
    for (std::size_t s = 0; s < ij.size(); ++s) idx.push_back(index(ij[s], at(at(pe, 0), s), n));
    for (std::size_t s = 1; s < idx.size(); ++s)
      if (idx[s - 1] >= idx[s]) throw DocumentError(at(pe, 0), "indices must be strictly increasing");
    if (!seen.insert(idx).second) throw DocumentError(pe, "duplicate cochain entry");
    c.set(idx, parse_vec(e[1], at(pe, 1), m));
  }
  return c;
}

Subspace parse_subspace(const Json& j, const std::string& path) {
  std::size_t n = count(field(j, path, "ambient"), at(path, "ambient"));
  const Json& b = array(field(j, path, "basis"), at(path, "basis"));
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < b.size(); ++i) vs.push_back(parse_vec(b[i], at(at(path, "basis"), i), n));
  return Subspace::span(n, vs);
}

}  // namespace

Json rational_json(const Q& q) { return to_string(q); }

Json vec_json(const Vec& v) {
  Json out = Json::array();
  for (const Q& x : v) out.push_back(rational_json(x));
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

Json subspace_json(const Subspace& s) {
  Json j;
  j["ambient"] = s.ambient();
  j["dim"] = s.dim();
  Json b = Json::array();
  for (const Vec& v : s.vecs()) b.push_back(vec_json(v));
  j["basis"] = b;
  return j;
}

Json decision_json(const Decision& d) {
  Json j;
  j["verdict"] = verdict_name(d.verdict);
  j["reason"] = d.reason;
  if (!d.vectors.empty()) {
    Json v = Json::array();
    for (const Vec& x : d.vectors) v.push_back(vec_json(x));
    j["vectors"] = v;
  }
  if (!d.matrices.empty()) {
    Json m = Json::array();
    for (const Matrix& x : d.matrices) m.push_back(matrix_json(x));
    j["matrices"] = m;
  }
  return j;
}

Json check_json(const Check& c) {
  Json j;
  j["ok"] = c.ok;
  if (!c.ok) j["violation"] = c.violation;
  return j;
}

Json signature_json(const Signature& s) {
  Json j;
  j["negative"] = s.p;
  j["positive"] = s.q;
  j["null"] = s.r;
  return j;
}

Json fingerprint_json(const Fingerprint& f) {
  Json j;
  j["dim"] = f.dim;
  j["signature"] = signature_json(f.sig);
  j["derived"] = f.derived;
  j["lower"] = f.lower;
  j["chain"] = f.chain;
  j["center"] = f.center;
  if (f.nilindex)
    j["nilindex"] = *f.nilindex;
  else
    j["nilindex"] = nullptr;
  j["centroid"] = f.centroid;
  j["ri"] = f.ri;
  return j;
}

Json to_json(const AlgebraDocument& d) {
  Json j;
  j["name"] = d.name;
  Json a = algebra_json(d.alg);
  for (auto& [k, v] : a.items()) j[k] = v;
  if (d.form) j["form"] = matrix_json(*d.form);
  if (d.equiv) j["equiv"] = equiv_json(*d.equiv);
  if (d.module) j["module"] = module_json(*d.module);
  if (!d.cochains.empty()) {
    Json c;
    for (const auto& [k, v] : d.cochains) c[k] = cochain_json(v);
    j["cochains"] = c;
  }
  if (!d.subspaces.empty()) {
    Json s;
    for (const auto& [k, v] : d.subspaces) s[k] = subspace_json(v);
    j["subspaces"] = s;
  }
  if (!d.matrices.empty()) {
    Json m;
    for (const auto& [k, v] : d.matrices) m[k] = matrix_json(v);
    j["matrices"] = m;
  }
  if (!d.vectors.empty()) {
    Json m;
    for (const auto& [k, v] : d.vectors) m[k] = vec_json(v);
    j["vectors"] = m;
  }
  return j;
}

AlgebraDocument from_json(const Json& j) {
  const std::string root = "$";
  if (!j.is_object()) throw DocumentError(root, "expected an object");
  AlgebraDocument d;
  if (const Json* n = optional_field(j, "name")) d.name = str(*n, at(root, "name"));
  d.alg = parse_algebra(j, root);
  std::size_t n = d.alg.dim();
  if (const Json* f = optional_field(j, "form")) {
    d.form = parse_square(*f, at(root, "form"), n);
    require_symmetric(*d.form, at(root, "form"));
  }
  if (const Json* e = optional_field(j, "equiv")) d.equiv = parse_equiv(*e, at(root, "equiv"), n);
  if (const Json* m = optional_field(j, "module")) d.module = parse_module(*m, at(root, "module"));
  auto each = [&](const char* key, auto&& fn) {
    const Json* b = optional_field(j, key);
    if (!b) return;
    std::string p = at(root, key);
    if (!b->is_object()) throw DocumentError(p, "expected an object");
    for (auto it = b->begin(); it != b->end(); ++it) fn(it.key(), it.value(), at(p, it.key()));
  };
  each("cochains", [&](const std::string& k, const Json& v, const std::string& p) { d.cochains[k] = parse_cochain(v, p); });
  each("subspaces",
       [&](const std::string& k, const Json& v, const std::string& p) { d.subspaces[k] = parse_subspace(v, p); });
  each("matrices", [&](const std::string& k, const Json& v, const std::string& p) { d.matrices[k] = parse_matrix(v, p); });
  each("vectors", [&](const std::string& k, const Json& v, const std::string& p) { d.vectors[k] = parse_vec(v, p); });
  return d;
}

namespace {

bool has_object(const Json& j) {
  if (j.is_object()) return true;
  if (j.is_array())
    for (const Json& e : j)
      if (has_object(e)) return true;
  return false;
}

// Arrays without objects stay on one line when short.
void pretty(const Json& j, std::size_t indent, std::string& out) {
  std::string pad(indent, ' '), inner(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += inner + Json(it.key()).dump() + ": ";
      pretty(it.value(), indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "}";
  } else if (j.is_array() && !j.empty()) {
    std::string flat = j.dump();
    if (!has_object(j) && flat.size() + indent <= 100) {
      out += flat;
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += inner;
      pretty(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump_pretty(const Json& j) {
  std::string out;
  pretty(j, 0, out);
  return out + "\n";
}

std::string emit(const AlgebraDocument& d) { return dump_pretty(to_json(d)); }

AlgebraDocument parse(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError("$", std::string("JSON syntax error: ") + e.what());
  }
  return from_json(j);
}

AlgebraDocument to_document(const Instance& x) {
  AlgebraDocument d;
  d.name = x.name;
  d.alg = x.g.alg;
  d.form = x.g.form;
  d.equiv = x.phi;
  d.module = x.module;
  if (x.cocycle) {
    d.cochains["alpha"] = x.cocycle->alpha;
    d.cochains["gamma"] = x.cocycle->gamma;
  }
  if (x.ext) d.subspaces["ri"] = x.ext->ri;
  return d;
}

std::optional<QuadCocycle> document_cocycle(const AlgebraDocument& d) {
  auto a = d.cochains.find("alpha"), g = d.cochains.find("gamma");
  if (a == d.cochains.end() && g == d.cochains.end()) return std::nullopt;
  if (!d.module) throw DocumentError("$.cochains", "a cocycle needs a module block");
  std::size_t n = d.module->ldim(), m = d.module->adim();
  QuadCocycle z{d.module->zero(2), d.module->scalar_zero(3)};
  if (a != d.cochains.end()) {
    const Cochain& c = a->second;
    if (c.n() != n || c.degree() != 2 || c.values_dim() != m || c.is_scalar())
      throw DocumentError("$.cochains.alpha", "expected an a-valued 2-cochain on l");
    z.alpha = c;
  }
  if (g != d.cochains.end()) {
    const Cochain& c = g->second;
    if (c.n() != n || c.degree() != 3 || !c.is_scalar())
      throw DocumentError("$.cochains.gamma", "expected a scalar 3-cochain on l");
    z.gamma = c;
  }
  return z;
}

Instance to_instance(const AlgebraDocument& d) {
  if (!d.form) throw DocumentError("$.form", "missing field");
  Instance x;
  x.name = d.name;
  x.g = {d.alg, *d.form};
  x.phi = d.equiv;
  x.module = d.module;
  x.cocycle = document_cocycle(d);
  if (auto it = d.subspaces.find("ri"); it != d.subspaces.end() && x.module && x.cocycle) {
    QuadExtension ext = standard_model(*x.module, *x.cocycle);
    if (ext.g.alg == x.g.alg && ext.g.form == x.g.form && ext.ri == it->second) {
      ext.g.alg.set_names(x.g.alg.names());
      ext.phi = x.phi;
      x.ext = ext;
    }
  }
  return x;
}

}  // namespace mla
