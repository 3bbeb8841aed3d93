// One-dimensional function-space subsystem: Hermite eigenfunctions of
// H = p^2 + x^2 (hbar = 1, m = 1/2, K = 2), the truncated trial state used
// to bound Delta(x^2) Delta(p), the half-line symmetry route, and the
// scaled-Gaussian stationarity diagnostic for H = -d^2/dx^2 + lambda x^4.
//
// Everything is evaluated on composite Gauss-Legendre grids that split
// exactly at 0 and +-pi, so the piecewise trial state and the half-line
// integrals never straddle a panel.

#pragma once

#include <memory>
#include <vector>

#include "uncert/hilbert.hpp"

namespace uncert {

inline constexpr double kQuadratureNormTol = 1e-8;
inline constexpr double kGridNormDeficitTol = 1e-6;
inline constexpr double kEvennessTol = 1e-8;

struct EvennessViolated : std::domain_error {
  using std::domain_error::domain_error;
};

struct GridTooNarrow : std::domain_error {
  using std::domain_error::domain_error;
};

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int order, std::vector<double>& nodes,
                    std::vector<double>& weights);

// Mirror-symmetric composite quadrature grid on [-half_width, half_width].
// Node i and node size()-1-i are exact negatives of each other.
class Grid {
 public:
  // Full-line work grid on [-10, 10]; density multiplies the panel count.
  static std::shared_ptr<Grid> make_default(int density = 1);
  // Custom half-width (still split at pi when half_width > pi).
  static std::shared_ptr<Grid> make(double half_width, int density = 1);

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return nodes_.size(); }
  double lo() const { return -half_width_; }
  double hi() const { return half_width_; }

 private:
  Grid() = default;
  double half_width_ = 0.0;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

using GridPtr = std::shared_ptr<Grid>;

// Wavefunction sampled on a quadrature grid.  States built by the factories
// below also carry analytic second-derivative samples where known, which the
// kinetic-energy diagnostics rely on.
struct FunctionState {
  GridPtr grid;
  CVec samples;
  double support_lo = 0.0, support_hi = 0.0;
  CVec second_derivative; // empty unless has_second_derivative
  bool has_second_derivative = false;
};

// sum_i w_i conj(a_i) b_i.
cplx overlap(const FunctionState& a, const FunctionState& b);
double norm_sq(const FunctionState& a);

// Normalized n-th eigenfunction of H = p^2 + x^2 (n <= 10).  Throws
// GridTooNarrow when the grid misses more than 1e-6 of the norm.
FunctionState hermite_state(int n, const GridPtr& grid);

enum class DeviationKind { XSquared, Momentum };

// Deviation function of x^2 or p on the ground state: (x^2 - <x^2>) phi_0
// (= phi_2/sqrt(2)) or (p - <p>) phi_0 (= i phi_1/sqrt(2)), with the momentum
// applied analytically.
FunctionState deviation_function(DeviationKind kind, const GridPtr& grid);

// (sin x + eta cos(3x/2)) / sqrt((1+eta^2) pi) on [-pi, pi], zero outside.
FunctionState trial_state(double eta, const GridPtr& grid);

// 2 |<Psi_A|Psi_N(eta)>| |<Psi_B|Psi_N(eta)>| for the x^2/p deviation pair.
double bound17_eta(double eta, const GridPtr& grid);

// Two-auxiliary product bound with N1 = cos(3x/2)/sqrt(pi) and
// N2 = sin(x)/sqrt(pi); equals bound17_eta(1).
double split_aux_bound(const GridPtr& grid);

// 2 |int_0^inf conj(devA) devB dx| for deviations with even squared modulus;
// the factor 2 undoes the halving of each variance on the half line.
double half_line_product_bound(const FunctionState& dev_a,
                               const FunctionState& dev_b);

// (k/pi)^(1/4) exp(-k x^2 / 2) with analytic second derivative.
FunctionState scaled_gaussian_state(double k, const GridPtr& grid);

// Potential samples for the diagnostics below.
FunctionState quartic_potential(double lambda, const GridPtr& grid);
FunctionState harmonic_potential(const GridPtr& grid);

// Scaled-Gaussian trial state against H = -d^2/dx^2 + lambda x^4.
struct ScaledGaussianReport {
  double lambda = 0.0;
  double k = 0.0;
  double mean_t = 0.0, mean_v = 0.0;
  double delta_t = 0.0, delta_v = 0.0;
  bool virial_satisfied = false; // <T> = 2 <V> within 1e-8
};

ScaledGaussianReport scaled_gaussian_report(double lambda, double k);

// (3 lambda)^(1/3), the scale that minimizes k/2 + 3 lambda/(4 k^2).
double virial_optimal_k(double lambda);

// |Delta T - Delta V| with T = -d^2/dx^2; zero (to quadrature accuracy) for
// exact eigenstates of T + V.  psi must carry second-derivative samples.
double stationarity_diagnostic(const FunctionState& psi,
                               const FunctionState& potential);

// Matrix representation of T = p^2, V = x^2 and H = T + V in the lowest
// `levels` Hermite eigenfunctions; H is exactly diagonal there.
struct TruncatedOscillator {
  Observable kinetic, potential, hamiltonian;
};

TruncatedOscillator truncated_oscillator(std::size_t levels);

} // namespace uncert
