// Metric Lie algebras: invariance, orthogonal complements, canonical isotropic ideal, decomposability.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mla/decision.hpp"
#include "mla/liealg.hpp"

namespace mla {

struct MetricLieAlgebra {
  LieAlgebra alg;
  Matrix form;
  std::size_t dim() const { return alg.dim(); }
  Q pair(const Vec& x, const Vec& y) const { return dot(x, form * y); }
};

Check check_metric(const MetricLieAlgebra& g);
MetricLieAlgebra metric_direct_sum(const MetricLieAlgebra& a, const MetricLieAlgebra& b);
// Columns of t are the new basis vectors.
MetricLieAlgebra metric_change_basis(const MetricLieAlgebra& g, const Matrix& t);

Subspace perp(const MetricLieAlgebra& g, const Subspace& u);
bool is_isotropic(const MetricLieAlgebra& g, const Subspace& u);

struct CanonicalIdeal {
  Subspace ri;
  std::vector<Subspace> chain;  // R_0 = g, R_1, ..., 0
  bool quotient_abelian = false;  // ri^perp / ri abelian
};
CanonicalIdeal canonical_isotropic_ideal(const MetricLieAlgebra& g);

std::vector<Matrix> symmetric_centroid(const MetricLieAlgebra& g);
// Yes: matrices[0] is a nontrivial self-adjoint centroid idempotent.
Decision decompose(const MetricLieAlgebra& g);

// Signature of the form restricted to the (-1)-eigenspace of an isometric involution.
Signature triple_signature(const MetricLieAlgebra& g, const Matrix& theta);

struct Fingerprint {
  std::size_t dim = 0;
  Signature sig;
  std::vector<std::size_t> derived, lower, chain;
  std::size_t center = 0;
  std::optional<std::size_t> nilindex;
  std::size_t centroid = 0;
  std::size_t ri = 0;
  bool operator==(const Fingerprint&) const = default;
  std::string str() const;
};
Fingerprint fingerprint(const MetricLieAlgebra& g);

}  // namespace mla
