// Angular-momentum operators for arbitrary half-integer j, the qutrit/qubit
// states used in the photonic uncertainty experiments, phi-sweeps over those
// states, the toggle-operator check, and the three-level comparison scenario
// with its reference values.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uncert/bounds.hpp"
#include "uncert/hilbert.hpp"

namespace uncert {

// Jx, Jy, Jz and friends in the |j, mu> basis ordered mu = j, j-1, ..., -j,
// built from the ladder-operator matrix elements (hbar = 1).
struct SpinSystem {
  double j = 0.0;
  std::size_t dim = 0;
  Observable jx, jy, jz, jsq;
  Matrix jplus, jminus; // ladder operators; not Hermitian, kept as raw matrices
};

// Requires 2j to be a positive integer.
SpinSystem spin_matrices(double j);

// Pauli matrices (= 2 J for j = 1/2).
Observable sigma_x();
Observable sigma_y();
Observable sigma_z();

// (sin phi, 0, cos phi)^T in the j = 1 basis, i.e.
// sin(phi) |1,1> + cos(phi) |1,-1>.
QuantumState qutrit_state(double phi);

// (sin phi, cos phi)^T in the j = 1/2 basis.
QuantumState qubit_state(double phi);

enum class SweepSystem { Qutrit, Qubit };

// One evaluated grid point of a sweep over the experiment family.  The
// observable pair is (Jx, Jy) for qutrits and (sigma_x, sigma_y) for qubits.
struct SweepRow {
  double phi = 0.0;
  double mean_a = 0.0, mean_b = 0.0;
  double var_a = 0.0, var_b = 0.0;
  double eq2_lhs = 0.0, eq2_rhs = 0.0;
  double eq4a_rhs = 0.0, eq4b_rhs = 0.0; // canonical aux = (Psi_A+Psi_B)/||.||
  CaseTag tag = CaseTag::Case1Generic;
  // Delta of the shifted operator from the bypass, present at Case-2 points.
  std::optional<double> bypass_delta;
};

std::vector<SweepRow> sweep(SweepSystem system, const std::vector<double>& phi_grid);

std::vector<double> linspace(double start, double end, int points);

enum class ToggleOperator { Jx, Jy };

// True when the chosen operator toggles the qutrit state and |1,0> into each
// other (up to a phase) with the squares acting as the identity on the pair;
// this happens at phi = pi/4 for Jx and phi = 3pi/4 for Jy.
bool toggle_check(double phi, ToggleOperator which = ToggleOperator::Jx);

// One row of the comparison scenario: the evaluated report plus the
// closed-form reference value it must reproduce.
struct Table1Entry {
  std::string row;   // e.g. "4a (ii)"
  std::string exact; // e.g. "32/81"
  double expected = 0.0;
  BoundReport report;
};

// Evaluates every row of the comparison table on Psi = (1,1,1)/sqrt(3),
// A = Jx, B = Jy with the two fixed auxiliary states N1, N2.
std::vector<Table1Entry> table1_scenario();

// The headline bounds distilled from the table: best product, best sum of
// variances, best sum of deviations, plus the value combined from the first
// two, sqrt(32/81 + 2/6) = sqrt(59)/9, reported alongside for comparison.
struct HeadlineBounds {
  Table1Entry product;       // Delta Jx Delta Jy >= 1/6
  Table1Entry sum_variances; // Delta Jx^2 + Delta Jy^2 >= 32/81
  Table1Entry sum_deviations; // Delta Jx + Delta Jy >= (sqrt3 + 2 sqrt2)/6
  double combined_value = 0.0;   // sqrt(32/81 + 2 * 1/6)
  double combined_expected = 0.0; // sqrt(59)/9
};

HeadlineBounds headline_bounds();

} // namespace uncert
