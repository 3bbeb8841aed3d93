// Auxiliary-state optimization for the strengthened product bound:
// parametrization of a general auxiliary state over an orthonormal basis
// seeded with {Psi, Psi_A/DeltaA, Psi_B/DeltaB}, the closed-form optimum,
// and its n-observable generalization.

#pragma once

#include <vector>

#include "uncert/hilbert.hpp"

namespace uncert {

// A candidate auxiliary state written as sum_j c_j theta_j over an
// orthonormal basis; only the moduli |c_j| matter for the overlap-product
// objective.
struct AuxParametrization {
  std::vector<QuantumState> basis; // theta_1 = Psi, theta_2 = Psi_A^, theta_3 = Psi_B^
  CVec coefficients;               // c_j, at least one nonzero
};

// (sum_j c_j theta_j) / sqrt(sum_j |c_j|^2).
QuantumState aux_from_coefficients(const AuxParametrization& param);

// |<Psi_A|Psi_N>| |<Psi_B|Psi_N>| for the parametrized state.  Equals
// (r_2 r_3 / sum r_j^2) DeltaA DeltaB when the basis is seeded from the two
// deviation vectors; the caller's basis is checked against them.
double overlap_product_objective(const AuxParametrization& param,
                                 const DeviationVector& dev_a,
                                 const DeviationVector& dev_b);

// The maximizer (Psi_A^ + Psi_B^)/sqrt(2) of the overlap product for
// orthogonal nonzero deviations; saturates the strengthened product bound.
QuantumState optimal_aux_pair(const DeviationVector& dev_a,
                              const DeviationVector& dev_b);

// (1/sqrt(n)) sum_i Psi_{X_i}^ for n >= 2 pairwise-orthogonal nonzero
// deviations; saturates the n-observable product bound.
QuantumState optimal_aux_multi(const std::vector<DeviationVector>& devs);

} // namespace uncert
