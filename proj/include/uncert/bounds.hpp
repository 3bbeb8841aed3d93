// Evaluators for the variance-based uncertainty inequalities: the classical
// product form, the sum-of-variance forms with auxiliary states, the
// single/double-auxiliary product and sum forms, the strengthened product
// for orthogonal deviations, and the shifted-operator bypass for
// eigenstate (Case 2) input.
//
// Every evaluator returns a BoundReport with lhs >= rhs for all admissible
// inputs; that inequality is the master property the test suite hammers on.
// All functions are pure and thread-safe.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uncert/hilbert.hpp"

namespace uncert {

inline constexpr double kValidityTol = 1e-10;   // rhs <= lhs + tol
inline constexpr double kSaturationTol = 1e-8;  // |lhs - rhs| <= tol
inline constexpr double kCase3Tol = 1e-8;       // orthogonal-deviation precondition
inline constexpr double kEigenstateTol = 1e-10; // bypass precondition on Delta B

enum class Relation {
  Eq2,     // product, Cauchy-Schwarz overlap form
  Eq3,     // product, commutator/anticommutator decomposition route
  Eq4a,    // sum of variances, one auxiliary state, sign choice
  Eq4b,    // sum of variances via Psi_{A+B}
  Eq5a,    // weighted sum, two auxiliary states, free lambda
  Eq5b,    // weighted sum, Psi_{A+B} slot plus one auxiliary state
  Eq13,    // product, one auxiliary state
  Eq14,    // sum of deviations, one auxiliary state
  Eq15,    // product, two auxiliary states
  Eq16,    // sum of deviations, two auxiliary states
  Eq17,    // strengthened product (orthogonal deviations only)
  Multi,   // n-observable product generalization of Eq17
  ChenFei, // Delta A + Delta B >= max{Delta(A+B), Delta(A-B)}
};

std::string relation_name(Relation r);
std::optional<Relation> relation_from_name(const std::string& name);

struct BoundReport {
  Relation relation;
  double lhs = 0.0;
  double rhs = 0.0;
  std::vector<std::string> aux_ids;
  std::optional<double> lambda;
  std::optional<int> sign_choice;  // +1/-1 winner for Eq4a/Eq5a
  bool non_canonical = false;      // Eq4b/Eq5b with a substituted aux state
  // Decomposition of rhs^2 for the product form: |<[A,B]>/2|^2 and
  // (<[A,B]_+>/2 - <A><B>)^2.  Set by the Eq2/Eq3 evaluators.
  std::optional<double> commutator_term;
  std::optional<double> anticommutator_term;
  bool valid = false;
  bool saturated = false;
};

// (Delta A)(Delta B) >= |<Psi_A|Psi_B>|, reported with the commutator /
// anticommutator split of the squared right-hand side.
BoundReport robertson_product(const Observable& a, const Observable& b,
                              const QuantumState& psi);

// Same inequality with the right-hand side computed through the matrix
// algebra route sqrt(|<[A,B]>/2|^2 + (<[A,B]_+>/2 - <A><B>)^2); serves as the
// second, independent route to the Eq2 value.
BoundReport robertson_decomposition(const Observable& a, const Observable& b,
                                    const QuantumState& psi);

// Delta A^2 + Delta B^2 >= s*i<[A,B]> + |<Psi_A|aux> + s*i<Psi_B|aux>|^2 for
// s = +-1; reports the better choice.  Any unit-norm aux state is admissible:
// a component along Psi only weakens the bound, it never invalidates it.
BoundReport sum_bound_4a(const Observable& a, const Observable& b,
                         const QuantumState& psi, const QuantumState& aux,
                         const std::string& aux_id = "aux");

// Delta A^2 + Delta B^2 >= |<Psi_A|u> + <Psi_B|u>|^2 / 2 with the canonical
// u = (Psi_A + Psi_B)/||.||; an override state marks the report non-canonical.
BoundReport sum_bound_4b(const Observable& a, const Observable& b,
                         const QuantumState& psi,
                         const std::optional<QuantumState>& aux_override =
                             std::nullopt,
                         const std::string& aux_id = "aux");

// (1+lambda) Delta A^2 + (1+1/lambda) Delta B^2 against two auxiliary states,
// maximized over the coherent sign choice.
BoundReport weighted_sum_5a(const Observable& a, const Observable& b,
                            const QuantumState& psi, const QuantumState& aux1,
                            const QuantumState& aux2, double lambda,
                            const std::string& aux1_id = "aux1",
                            const std::string& aux2_id = "aux2");

// Weighted variant of the Psi_{A+B} form; aux_first defaults to the
// canonical (Psi_A + Psi_B)/||.|| slot.
BoundReport weighted_sum_5b(const Observable& a, const Observable& b,
                            const QuantumState& psi,
                            const std::optional<QuantumState>& aux_first,
                            const QuantumState& aux_second, double lambda,
                            const std::string& aux_first_id = "aux1",
                            const std::string& aux_second_id = "aux2");

// Delta A Delta B >= |<Psi_A|N>| |<Psi_B|N>|.  Orthogonality of N to Psi is
// not required; any Psi component of N is projected out automatically.
BoundReport product_one_aux(const Observable& a, const Observable& b,
                            const QuantumState& psi, const QuantumState& aux_n,
                            const std::string& aux_id = "N");

// Delta A + Delta B >= |<Psi_A|N>| + |<Psi_B|N>|.
BoundReport sum_one_aux(const Observable& a, const Observable& b,
                        const QuantumState& psi, const QuantumState& aux_n,
                        const std::string& aux_id = "N");

// Delta A Delta B >= |<Psi_A|N1>| |<Psi_B|N2>|.
BoundReport product_two_aux(const Observable& a, const Observable& b,
                            const QuantumState& psi, const QuantumState& aux1,
                            const QuantumState& aux2,
                            const std::string& aux1_id = "N1",
                            const std::string& aux2_id = "N2");

// Delta A + Delta B >= |<Psi_A|N1>| + |<Psi_B|N2>|.
BoundReport sum_two_aux(const Observable& a, const Observable& b,
                        const QuantumState& psi, const QuantumState& aux1,
                        const QuantumState& aux2,
                        const std::string& aux1_id = "N1",
                        const std::string& aux2_id = "N2");

// Delta A Delta B >= 2 |<Psi_A|N>| |<Psi_B|N>|.  Requires orthogonal, nonzero
// deviation vectors (Case 3); the factor 2 is unsound otherwise and the
// evaluator refuses with PreconditionViolated.
BoundReport strengthened_product(const Observable& a, const Observable& b,
                                 const QuantumState& psi,
                                 const QuantumState& aux_n,
                                 const std::string& aux_id = "N");

// prod Delta X_i >= n^(n/2) prod |<Psi_{X_i}|N>| for n observables with
// pairwise-orthogonal nonzero deviation vectors.
BoundReport multi_observable_product(const std::vector<Observable>& obs,
                                     const QuantumState& psi,
                                     const QuantumState& aux_n,
                                     const std::string& aux_id = "N");

// Delta A + Delta B >= max{Delta(A+B), Delta(A-B)}; no auxiliary state.
BoundReport chen_fei_sum(const Observable& a, const Observable& b,
                         const QuantumState& psi);

// Outcome of trading B for Bbar = B - A when Psi is a B-eigenstate.
struct ShiftedBypassResult {
  Observable shifted;   // Bbar = B - A
  double eigenvalue;    // beta with B Psi = beta Psi
  double delta_a;       // Delta A
  double delta_shifted; // Delta Bbar
  bool delta_equal;            // Delta Bbar == Delta A within 1e-10
  bool commutator_preserved;   // [A, Bbar] == [A, B] within 1e-10
};

// Requires Delta B <= 1e-10.  Since Psi_{B-A} = -Psi_A, the shifted operator
// keeps the commutator while exposing a nonzero spread.
ShiftedBypassResult shifted_operator_bypass(const Observable& a,
                                            const Observable& b,
                                            const QuantumState& psi);

} // namespace uncert
