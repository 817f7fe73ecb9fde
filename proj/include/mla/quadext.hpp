// Standard models, double extensions, quadratic extensions and cocycle extraction.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mla/metric.hpp"
#include "mla/qcohom.hpp"

namespace mla {

// Quadratic extension (g, ri, i, p) of l by a.
// i_map: a -> g with image in ri^perp, read modulo ri; p_map: g -> l vanishing on ri^perp.
struct QuadExtension {
  MetricLieAlgebra g;
  std::optional<EquivStructure> phi;
  Subspace ri;
  Matrix i_map, p_map;
};

struct AxiomReport {
  std::vector<std::pair<std::string, Check>> axioms;
  bool ok() const;
  std::string first_failure() const;
};

// Bracket of d_{alpha,gamma}(l,a) on the basis (l* duals, a, l), without any check.
LieAlgebra standard_model_algebra(const OrthogonalModule& a, const QuadCocycle& z);
// Extension of Phi_l, Phi_a to the standard model (duals by -D^T and (k^T)^-1).
EquivStructure standard_model_phi(const OrthogonalModule& a, const EquivStructure& on_l, const EquivStructure& on_a);
// Throws std::invalid_argument for a non-cocycle or a non-invariant cocycle.
QuadExtension standard_model(const OrthogonalModule& a, const QuadCocycle& z);

// d_pi(g, h) on h* + g + h; pi holds one antisymmetric derivation of g per basis vector of h.
MetricLieAlgebra double_extension(const MetricLieAlgebra& g, const LieAlgebra& h, const std::vector<Matrix>& pi,
                                  const Matrix& form_h);
// h x| h* on the basis (h* duals, h).
MetricLieAlgebra cotangent(const LieAlgebra& h, const Matrix& form_h);

AxiomReport verify_quadratic_extension(const QuadExtension& w, const OrthogonalModule& a);

// Equivariant section of p with isotropic image (columns are s(L_k)).
Matrix isotropic_section(const QuadExtension& w, const OrthogonalModule& a);
// Isotropic correction s0 - 1/2 T of an arbitrary section.
Matrix make_isotropic(const QuadExtension& w, const Matrix& s0);
// The map Psi; verifies the cocycle and, if requested, independence of the class from s.
QuadCocycle extract_cocycle(const QuadExtension& w, const OrthogonalModule& a, const Matrix& s,
                            bool check_independence = true);

struct CanonicalExtension {
  QuadExtension ext;
  OrthogonalModule module;  // l = g / ri^perp acting on a = ri^perp / ri
};
// ri = ri(g); throws std::invalid_argument when ri^perp / ri is not abelian.
CanonicalExtension canonical_extension(const MetricLieAlgebra& g, const std::optional<EquivStructure>& phi = std::nullopt);

// Names for the standard-model basis.
std::vector<std::string> standard_model_names(const LieAlgebra& l, std::size_t adim);

}  // namespace mla
