// JSON documents for algebras, modules, cochains and witnesses; rationals are strings "p/q".
#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "mla/catalog.hpp"

namespace mla {

using Json = nlohmann::ordered_json;

// Malformed input; what() starts with the JSON path of the offending field.
class DocumentError : public std::invalid_argument {
 public:
  DocumentError(const std::string& path, const std::string& msg)
      : std::invalid_argument(path + ": " + msg), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct AlgebraDocument {
  std::string name;
  LieAlgebra alg;
  std::optional<Matrix> form;
  std::optional<EquivStructure> equiv;
  std::optional<OrthogonalModule> module;
  std::map<std::string, Cochain> cochains;    // alpha, gamma, tau, sigma
  std::map<std::string, Subspace> subspaces;  // ri, h1, h2, a_prime, l_prime
  std::map<std::string, Matrix> matrices;     // D, theta
  std::map<std::string, Vec> vectors;         // xi
};

Json to_json(const AlgebraDocument& d);
AlgebraDocument from_json(const Json& j);
// Two-space indentation; arrays without objects on one line when short.
std::string dump_pretty(const Json& j);
// Canonical text: dump_pretty layout, brackets sorted by (i,j,k), zero entries dropped.
std::string emit(const AlgebraDocument& d);
// Throws DocumentError on syntax errors, malformed rationals, bad indices or a non-symmetric form.
AlgebraDocument parse(const std::string& text);

AlgebraDocument to_document(const Instance& x);
// g from alg and form; module, cocycle (alpha, gamma) and ri when present. Throws DocumentError without a form.
Instance to_instance(const AlgebraDocument& d);
std::optional<QuadCocycle> document_cocycle(const AlgebraDocument& d);

// Report fragments.
Json rational_json(const Q& q);
Json vec_json(const Vec& v);
Json matrix_json(const Matrix& m);
Json subspace_json(const Subspace& s);
Json decision_json(const Decision& d);
Json check_json(const Check& c);
Json fingerprint_json(const Fingerprint& f);
Json signature_json(const Signature& s);

}  // namespace mla
