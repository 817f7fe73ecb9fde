// Command-line front-end: exit 0 on Yes, 1 on No, 2 on Unknown, 3 on input error.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mla/document.hpp"

using namespace mla;

namespace {

constexpr int kYes = 0, kNo = 1, kUnknown = 2, kInputError = 3;

int exit_of(Verdict v) { return v == Verdict::Yes ? kYes : v == Verdict::No ? kNo : kUnknown; }
int exit_of(bool ok) { return ok ? kYes : kNo; }

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open '" + path + "'");
    ss << f.rdbuf();
  }
  return ss.str();
}

AlgebraDocument load(const std::string& path) { return parse(read_input(path)); }

MetricLieAlgebra metric_of(const AlgebraDocument& d) {
  if (!d.form) throw DocumentError("$.form", "missing field");
  return {d.alg, *d.form};
}

const OrthogonalModule& module_of(const AlgebraDocument& d) {
  if (!d.module) throw DocumentError("$.module", "missing field");
  return *d.module;
}

QuadCocycle cocycle_of(const AlgebraDocument& d) {
  auto z = document_cocycle(d);
  if (!z) throw DocumentError("$.cochains", "missing alpha and gamma");
  return *z;
}

const Subspace* subspace(const AlgebraDocument& d, const std::string& key) {
  auto it = d.subspaces.find(key);
  return it == d.subspaces.end() ? nullptr : &it->second;
}

Vec parse_list(const std::string& s) {
  Vec v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) v.push_back(parse_rational(item));
  return v;
}

// "a.b[2]: value" lines in document order.
void text_lines(const Json& j, const std::string& path, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) text_lines(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) text_lines(j[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

std::string render(const Json& j, const std::string& format) {
  if (format == "text") {
    std::ostringstream os;
    text_lines(j, "", os);
    return os.str();
  }
  return dump_pretty(j);
}

// --- commands

Json verify_json(const AlgebraDocument& d, bool& ok) {
  Json j;
  auto add = [&](const std::string& name, const Check& c) {
    j[name] = check_json(c);
    ok = ok && c.ok;
  };
  JacobiResult jr = check_jacobi(d.alg);
  add("jacobi", jr.ok ? Check::pass()
                      : Check::fail("Jacobi fails at (" + std::to_string(jr.triple[0]) + "," +
                                    std::to_string(jr.triple[1]) + "," + std::to_string(jr.triple[2]) + ")"));
  if (d.form) add("metric", check_metric(metric_of(d)));
  if (d.equiv) {
    if (d.form)
      add("equivariant", check_equivariant(metric_of(d), *d.equiv));
    else
      add("equivariant", check_equivariant_alg(d.alg, *d.equiv));
  }
  if (d.module) {
    add("orthogonal module", check_orthogonal_module(*d.module));
    if (d.module->equiv)
      add("equivariant module", check_equivariant_module(d.module->module, d.module->form, *d.module->equiv));
    if (auto z = document_cocycle(d)) add("cocycle", is_cocycle(*z, *d.module));
  }
  if (d.form && d.module && document_cocycle(d)) add("instance", verify_instance(to_instance(d)));
  return j;
}

Json series_json(const LieAlgebra& l) {
  Series s = series(l);
  Json j;
  std::vector<std::size_t> der, low;
  for (const auto& x : s.derived) der.push_back(x.dim());
  for (const auto& x : s.lower) low.push_back(x.dim());
  j["derived"] = der;
  j["lower"] = low;
  j["center"] = s.center.dim();
  j["solvable"] = s.solvable;
  j["nilpotent"] = s.nilpotent;
  if (s.nilindex)
    j["nilindex"] = *s.nilindex;
  else
    j["nilindex"] = nullptr;
  return j;
}

Json canonical_json(const MetricLieAlgebra& g) {
  CanonicalIdeal ci = canonical_isotropic_ideal(g);
  Json j;
  j["ri"] = subspace_json(ci.ri);
  std::vector<std::size_t> chain;
  for (const auto& s : ci.chain) chain.push_back(s.dim());
  j["chain"] = chain;
  j["quotient_abelian"] = ci.quotient_abelian;
  LieAlgebra base = quotient(g.alg, perp(g, ci.ri));
  Json b;
  b["dim"] = base.dim();
  b["abelian"] = base.is_abelian();
  b["center"] = center(base).dim();
  j["base"] = b;
  return j;
}

Json balanced_json(const QuadCocycle& z, const OrthogonalModule& a, Verdict& v) {
  BalanceReport r = is_balanced(z, a);
  Json j;
  j["semisimple"] = decision_json(r.semisimple);
  j["m"] = r.m;
  Json conds = Json::array();
  for (const auto& c : r.conditions) {
    Json e;
    e["name"] = c.name;
    e["decision"] = decision_json(c.decision);
    conds.push_back(e);
  }
  j["conditions"] = conds;
  j["aggregate"] = decision_json(r.aggregate);
  v = r.aggregate.verdict;
  return j;
}

Json document_report(const AlgebraDocument& d, Verdict& v) {
  Json j;
  j["command"] = "report";
  j["name"] = d.name;
  bool ok = true;
  j["checks"] = verify_json(d, ok);
  v = ok ? Verdict::Yes : Verdict::No;
  if (d.form) {
    MetricLieAlgebra g = metric_of(d);
    j["fingerprint"] = fingerprint_json(fingerprint(g));
    j["decompose"] = decision_json(decompose(g));
    j["canonical_ideal"] = canonical_json(g);
  } else {
    j["series"] = series_json(d.alg);
  }
  if (d.module && document_cocycle(d) && check_orthogonal_module(*d.module).ok &&
      is_cocycle(*document_cocycle(d), *d.module).ok) {
    Verdict b;
    j["balanced"] = balanced_json(*document_cocycle(d), *d.module, b);
  }
  j["verdict"] = verdict_name(v);
  return j;
}

Json suite_report(Verdict& v) {
  Json j;
  j["command"] = "report";
  Json list = Json::array();
  std::size_t verified = 0, n = 0;
  for (const Instance& x : catalog_instances()) {
    Json e;
    e["name"] = x.name;
    e["dim"] = x.g.dim();
    Check c = verify_instance(x);
    e["verify"] = check_json(c);
    e["fingerprint"] = fingerprint_json(fingerprint(x.g));
    e["decompose"] = verdict_name(decompose(x.g).verdict);
    if (x.module && x.cocycle)
      e["balanced"] = verdict_name(is_balanced(*x.cocycle, *x.module).aggregate.verdict);
    verified += c.ok;
    ++n;
    list.push_back(e);
  }
  j["instances"] = list;
  j["summary"] = {{"instances", n}, {"verified", verified}};
  v = verified == n ? Verdict::Yes : Verdict::No;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric Lie algebras: construction, verification and invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string file, file2, family;
  std::vector<std::string> params;
  std::string lambda, mu, point;

  auto one_file = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("file", file, "Document path or - for standard input")->required();
    return s;
  };
  CLI::App* verify = one_file("verify", "Jacobi, invariance, equivariance and cocycle checks");
  CLI::App* invariants = one_file("invariants", "Signature, series, centre and fingerprint");
  CLI::App* construct = app.add_subcommand("construct", "Build a catalog family member");
  construct->add_option("family", family, "Family tag")->required();
  construct->add_option("params", params, "Family parameters");
  CLI::App* extend = one_file("extend", "Standard model of a module and cocycle");
  CLI::App* extract = one_file("extract", "Canonical quadratic extension data of a metric Lie algebra");
  CLI::App* canon = one_file("canonical-ideal", "Canonical isotropic ideal and its base");
  CLI::App* balanced = one_file("balanced", "Balancedness conditions of a cocycle");
  CLI::App* admissible = one_file("admissible", "Admissibility for a Z2-graded module");
  CLI::App* decomp = one_file("decompose", "Orthogonal decomposability");
  CLI::App* equiv = app.add_subcommand("equivalent", "Equivalence of two cocycles on one module");
  equiv->add_option("file", file, "First document")->required();
  equiv->add_option("other", file2, "Second document")->required();
  CLI::App* manin = one_file("manin", "Manin pair or triple check, or pair construction from l', a'");
  CLI::App* extrinsic = one_file("extrinsic", "Extrinsic triple axioms, fullness and (O4)");
  CLI::App* cw = app.add_subcommand("cw-metric", "Cahen-Wallach metric at a point");
  cw->add_option("--lambda", lambda, "Comma-separated lambda");
  cw->add_option("--mu", mu, "Comma-separated mu");
  cw->add_option("--point", point, "Comma-separated coordinates (z, a, a', l)")->required();
  CLI::App* report = app.add_subcommand("report", "Deterministic report on a document, or on the catalog");
  report->add_option("file", file, "Document path; omit for the catalog suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : kInputError;
  }

  auto out = [&](const Json& j) { std::cout << render(j, format); };
  try {
    if (*verify) {
      AlgebraDocument d = load(file);
      bool ok = true;
      Json j;
      j["command"] = "verify";
      j["name"] = d.name;
      j["checks"] = verify_json(d, ok);
      j["verdict"] = ok ? "yes" : "no";
      out(j);
      return exit_of(ok);
    }
    if (*invariants) {
      AlgebraDocument d = load(file);
      Json j;
      j["command"] = "invariants";
      j["name"] = d.name;
      j["series"] = series_json(d.alg);
      if (d.form) {
        j["signature"] = signature_json(signature(*d.form));
        j["fingerprint"] = fingerprint_json(fingerprint(metric_of(d)));
      }
      j["radical"] = radical(d.alg).dim();
      j["nilpotent_radical"] = nilpotent_radical(d.alg).dim();
      out(j);
      return kYes;
    }
    if (*construct) {
      AlgebraDocument d = to_document(construct_family(family, params));
      if (format == "text")
        out(to_json(d));
      else
        std::cout << emit(d);
      return kYes;
    }
    if (*extend) {
      AlgebraDocument d = load(file);
      Instance x = make_instance(d.name.empty() ? "extension" : d.name, module_of(d), cocycle_of(d));
      std::cout << emit(to_document(x));
      return kYes;
    }
    if (*extract) {
      AlgebraDocument d = load(file);
      CanonicalExtension ce = canonical_extension(metric_of(d), d.equiv);
      Matrix s = isotropic_section(ce.ext, ce.module);
      QuadCocycle z = extract_cocycle(ce.ext, ce.module, s);
      std::cout << emit(to_document(make_instance("extracted " + d.name, ce.module, z)));
      return kYes;
    }
    if (*canon) {
      AlgebraDocument d = load(file);
      Json j;
      j["command"] = "canonical-ideal";
      j["name"] = d.name;
      Json c = canonical_json(metric_of(d));
      for (auto& [k, v] : c.items()) j[k] = v;
      out(j);
      return kYes;
    }
    if (*balanced) {
      AlgebraDocument d = load(file);
      Verdict v;
      Json j;
      j["command"] = "balanced";
      j["name"] = d.name;
      Json b = balanced_json(cocycle_of(d), module_of(d), v);
      for (auto& [k, x] : b.items()) j[k] = x;
      out(j);
      return exit_of(v);
    }
    if (*admissible) {
      AlgebraDocument d = load(file);
      const OrthogonalModule& a = module_of(d);
      auto [tl, ta] = z2_involutions(a);
      Decision r = mla::admissible(cocycle_of(d), a, tl, ta);
      Json j;
      j["command"] = "admissible";
      j["name"] = d.name;
      j["decision"] = decision_json(r);
      out(j);
      return exit_of(r.verdict);
    }
    if (*decomp) {
      AlgebraDocument d = load(file);
      Decision r = decompose(metric_of(d));
      Json j;
      j["command"] = "decompose";
      j["name"] = d.name;
      j["decision"] = decision_json(r);
      out(j);
      return exit_of(r.verdict);
    }
    if (*equiv) {
      AlgebraDocument d1 = load(file), d2 = load(file2);
      const OrthogonalModule &a = module_of(d1), &b = module_of(d2);
      if (!(a.alg() == b.alg()) || a.module.rho != b.module.rho || !(a.form == b.form))
        throw InputError("the two documents carry different modules");
      Decision r = equivalent(cocycle_of(d1), cocycle_of(d2), a);
      Json j;
      j["command"] = "equivalent";
      j["decision"] = decision_json(r);
      out(j);
      return exit_of(r.verdict);
    }
    if (*manin) {
      AlgebraDocument d = load(file);
      Json j;
      j["command"] = "manin";
      j["name"] = d.name;
      const Subspace* h1 = subspace(d, "h1");
      const Subspace* h2 = subspace(d, "h2");
      bool ok;
      if (h1) {
        MetricLieAlgebra g = metric_of(d);
        Check pair = check_manin_pair(g, *h1);
        j["pair"] = check_json(pair);
        ok = pair.ok;
        if (h2) {
          Check triple = check_manin_triple(g, *h1, *h2);
          j["triple"] = check_json(triple);
          ok = triple.ok;
          if (triple.ok) {
            Cobracket c = cobracket_from_triple({g, *h1, *h2});
            Json cb;
            cb["delta"] = matrix_json(c.delta);
            AlgebraDocument dual;
            dual.alg = c.dual;
            Json dj = to_json(dual);
            cb["dual_brackets"] = dj["brackets"];
            cb["cocycle"] = check_json(c.cocycle);
            cb["co_jacobi"] = check_json(c.co_jacobi);
            j["cobracket"] = cb;
            ok = c.cocycle.ok && c.co_jacobi.ok;
          }
        }
      } else {
        const Subspace* lp = subspace(d, "l_prime");
        const Subspace* ap = subspace(d, "a_prime");
        if (!lp || !ap) throw DocumentError("$.subspaces", "need h1 (and h2), or l_prime and a_prime");
        ManinWitness w = manin_pair_build(module_of(d), cocycle_of(d), *lp, *ap);
        AlgebraDocument wd;
        wd.name = "manin pair " + d.name;
        wd.alg = w.g.alg;
        wd.form = w.g.form;
        wd.subspaces["h1"] = w.h1;
        j["pair"] = check_json(check_manin_pair(w.g, w.h1));
        j["witness"] = to_json(wd);
        ok = true;
      }
      j["verdict"] = ok ? "yes" : "no";
      out(j);
      return exit_of(ok);
    }
    if (*extrinsic) {
      AlgebraDocument d = load(file);
      auto D = d.matrices.find("D"), th = d.matrices.find("theta");
      if (D == d.matrices.end() || th == d.matrices.end())
        throw DocumentError("$.matrices", "need D and theta");
      ExtrinsicTriple t{metric_of(d), D->second, th->second, std::nullopt};
      if (auto xi = d.vectors.find("xi"); xi != d.vectors.end()) t.xi = xi->second;
      ExtrinsicReport r = check_extrinsic(t);
      Json j;
      j["command"] = "extrinsic";
      j["name"] = d.name;
      Json items;
      for (const auto& [name, c] : r.items) items[name] = check_json(c);
      j["axioms"] = items;
      if (r.xi) j["xi"] = vec_json(*r.xi);
      j["full"] = check_json(check_fullness(t));
      bool ok = r.ok();
      if (d.module && d.module->equiv && document_cocycle(d)) {
        Decision o4 = check_O4(*d.module, *document_cocycle(d));
        j["O4"] = decision_json(o4);
        ok = ok && o4.is_yes();
      }
      j["verdict"] = ok ? "yes" : "no";
      out(j);
      return exit_of(ok);
    }
    if (*cw) {
      Vec l = parse_list(lambda), m = parse_list(mu), p = parse_list(point);
      Json j;
      j["command"] = "cw-metric";
      j["lambda"] = vec_json(l);
      j["mu"] = vec_json(m);
      j["point"] = vec_json(p);
      j["metric"] = matrix_json(cw_metric_at(l, m, p));
      out(j);
      return kYes;
    }
    if (*report) {
      Verdict v;
      Json j = file.empty() ? suite_report(v) : document_report(load(file), v);
      out(j);
      return exit_of(v);
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
