// Equivariant structures: generator lists of derivations and automorphisms, gradings, Z2 splits.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mla/metric.hpp"

namespace mla {

enum class GradingKind { z2, complex, para_complex, quaternionic, para_quaternionic, extrinsic_RZ2 };
const char* grading_name(GradingKind k);
std::optional<GradingKind> parse_grading(const std::string& s);

struct NamedMatrix {
  std::string name;
  Matrix m;
};

// Identity among generators.
//   Bracket:    [a, b] = sum rhs            (derivations)
//   Conjugate:  a b a^-1 = sum rhs          (a an automorphism, b and rhs of one kind)
//   Polynomial: poly(a) = 0
struct Relation {
  enum class Kind { Bracket, Conjugate, Polynomial };
  Kind kind = Kind::Bracket;
  std::string a, b;
  std::vector<std::pair<std::string, Q>> rhs;
  Poly poly;
  std::string label() const;
};

struct EquivStructure {
  std::size_t dim = 0;
  std::vector<NamedMatrix> derivations;
  std::vector<NamedMatrix> automorphisms;
  std::vector<Relation> relations;
  std::optional<GradingKind> preset;

  static EquivStructure trivial(std::size_t n);
  bool empty() const { return derivations.empty() && automorphisms.empty(); }
  const Matrix* find(const std::string& name, bool* is_derivation = nullptr) const;
  Matrix derivation(std::size_t i) const { return derivations.at(i).m; }
  Matrix automorphism(std::size_t i) const { return automorphisms.at(i).m; }
};

Check check_relations(const EquivStructure& phi);
// Derivations antisymmetric derivations, automorphisms isometric automorphisms, relations and preset hold.
Check check_equivariant(const MetricLieAlgebra& g, const EquivStructure& phi);
// Same without a form: derivations and automorphisms of l.
Check check_equivariant_alg(const LieAlgebra& l, const EquivStructure& phi);

// (h,K)-module structure on an orthogonal l-module compatible with phi_l.
struct EquivPair {
  EquivStructure on_l;
  EquivStructure on_a;
};
Check check_equivariant_module(const LieModule& a, const Matrix& form_a, const EquivPair& phi);

// Phi-invariance of a subspace under all generators.
bool is_invariant(const EquivStructure& phi, const Subspace& u);

struct Z2Split {
  Subspace plus, minus;
  bool proper = false;  // [g_-, g_-] = g_+
};
Z2Split z2_split(const LieAlgebra& l, const Matrix& theta);
// Proper and z(l) inside l_-.
Check check_symmetric_pair(const LieAlgebra& l, const Matrix& theta);

// The involution sigma(w) of a preset grading: +1 on the trivial part, -1 on the moving part.
Matrix induced_involution(const EquivStructure& phi);
Check validate_preset(const EquivStructure& phi, GradingKind kind);

struct IsotypicComponent {
  std::string label;
  Subspace space;
};
// Throws std::invalid_argument when the preset identities fail.
std::vector<IsotypicComponent> isotypic_split(const EquivStructure& phi);

struct ExtrinsicSplit {
  Subspace plus, minus;  // ker D, {X : D^2 X = -X}
  Matrix tau;
  // Four-fold refinement by theta when given: index [theta sign][tau sign], 0 = +, 1 = -.
  std::optional<std::array<std::array<Subspace, 2>, 2>> fourfold;
};
ExtrinsicSplit extrinsic_split(const Matrix& d, const std::optional<Matrix>& theta = std::nullopt);

}  // namespace mla
