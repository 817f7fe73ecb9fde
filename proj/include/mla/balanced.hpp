// Balancedness (A_k)/(B_k), admissibility (T_2) and isotropic-ideal completion.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mla/metric.hpp"
#include "mla/qcohom.hpp"

namespace mla {

struct AlphaSplit {
  Cochain alpha0;  // values in a^l
  Cochain alpha1;  // values in rho(l) a
};
// Throws std::invalid_argument when the module is not semisimple.
AlphaSplit alpha_split(const Cochain& alpha, const LieModule& m);

// No carries the witness vectors {L0, A0, Z0}.
Decision check_A0(const QuadCocycle& z, const OrthogonalModule& a);
// No carries a basis of the degenerate image in vectors.
Decision check_B0(const Cochain& alpha, const OrthogonalModule& a);

// Solution (Phi1, Phi2) of the (A_k) system on a given ideal k inside S(l) cap R_k(l).
// Phi1 is adim x dim k, Phi2 is dim R_k x dim k in the dual basis of the reduced basis of R_k;
// both act on coordinates in the reduced basis of the ideal.
struct IdealWitness {
  std::size_t k = 0;
  Subspace ideal;
  Matrix phi1, phi2;
};
std::optional<IdealWitness> solve_Ak_on(const QuadCocycle& z, const OrthogonalModule& a, std::size_t k,
                                        const Subspace& ideal);
Check verify_Ak_witness(const QuadCocycle& z, const OrthogonalModule& a, const IdealWitness& w);
// Yes when no nonzero ideal admits a solution; No stores ideal basis, Phi1, Phi2 in matrices[0..2].
Decision check_Ak(const QuadCocycle& z, const OrthogonalModule& a, std::size_t k);

// Maximal submodule b_k for which the (B_k) system is solvable.
Subspace b_submodule(const Cochain& alpha, const OrthogonalModule& a, std::size_t k);
// Yes/No on nondegeneracy of b_k; the basis of b_k is stored in vectors.
Decision check_Bk(const Cochain& alpha, const OrthogonalModule& a, std::size_t k);

struct BalanceCondition {
  std::string name;  // "A0", "B0", "A1", ...
  Decision decision;
};
struct BalanceReport {
  Decision semisimple;
  std::size_t m = 0;  // R_{m+1}(l) = 0
  std::vector<BalanceCondition> conditions;
  Decision aggregate;
  std::optional<std::vector<Vec>> a0_witness;  // L0, A0, Z0
  std::vector<IdealWitness> ideal_witnesses;
  std::vector<Subspace> b;  // b_k for k = 1..m
  const Decision* find(const std::string& name) const;
  std::string summary() const;
};
// aggregate is No when the module is not semisimple (the balanced set is empty).
BalanceReport is_balanced(const QuadCocycle& z, const OrthogonalModule& a);

// a^l_+ = alpha_0(Ker [,] on Lambda^2 l_-).
bool check_T2(const Cochain& alpha, const OrthogonalModule& a, const Matrix& theta_l, const Matrix& theta_a);
// Balanced, (T_1) properness of (l, theta_l), and (T_2).
Decision admissible(const QuadCocycle& z, const OrthogonalModule& a, const Matrix& theta_l, const Matrix& theta_a);
// Involutions from the single automorphism of a Z_2-equivariant module; throws if absent.
std::pair<Matrix, Matrix> z2_involutions(const OrthogonalModule& a);

struct CompletedIdeal {
  Subspace plus;
  Subspace ri;
  Check verified;  // isotropic ideal with ri^perp / ri abelian
};
// ri_+ = {X in [g_-, (ri_-)^perp] : [X, (ri_-)^perp] = 0}, perp taken in g_-.
CompletedIdeal complete_isotropic_ideal(const MetricLieAlgebra& g, const Matrix& theta, const Subspace& ri_minus);

}  // namespace mla
