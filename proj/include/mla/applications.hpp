// Manin pairs and triples, cobrackets, extrinsic symmetric triples.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mla/balanced.hpp"
#include "mla/quadext.hpp"

namespace mla {

struct ManinWitness {
  MetricLieAlgebra g;
  Subspace h1;
  std::optional<Subspace> h2;
};

// Isotropic subalgebra of half dimension.
Check check_manin_pair(const MetricLieAlgebra& g, const Subspace& h);
// Two complementary Manin pairs.
Check check_manin_triple(const MetricLieAlgebra& g, const Subspace& h1, const Subspace& h2);

// Ann(l') + a' + l' inside d_{alpha,gamma}(l,a); throws std::invalid_argument naming the failed precondition.
ManinWitness manin_pair_build(const OrthogonalModule& a, const QuadCocycle& z, const Subspace& l_prime,
                              const Subspace& a_prime);

struct Cobracket {
  // delta(e_i) = sum_{a<b} delta(ab, i) e_a ^ e_b in the reduced basis e of h1
  Matrix delta;
  LieAlgebra dual;  // h2 in the basis dual to e under the form
  Check cocycle;    // delta([x,y]) = ad_x delta(y) - ad_y delta(x)
  Check co_jacobi;  // Jacobi for the dual bracket
};
// Throws std::invalid_argument when the triple is not a Manin triple.
Cobracket cobracket_from_triple(const ManinWitness& w);

struct ExtrinsicTriple {
  MetricLieAlgebra g;
  Matrix D, theta;
  std::optional<Vec> xi;
};

struct ExtrinsicReport {
  std::vector<std::pair<std::string, Check>> items;
  std::optional<Vec> xi;  // in g_-, with ad(xi) = D
  bool ok() const;
  std::string first_failure() const;
};
// Throws std::invalid_argument when D is not a derivation or theta is not an involution.
ExtrinsicReport check_extrinsic(const ExtrinsicTriple& t);
// [g_+^-, g_-^-] = g_-^+
Check check_fullness(const ExtrinsicTriple& t);

// (O4) for a module whose equivariant pair carries one derivation and one automorphism on each side.
// Yes carries vectors {l, a, z}; z in coordinates of l*.
Decision check_O4(const OrthogonalModule& a, const QuadCocycle& z);

}  // namespace mla
