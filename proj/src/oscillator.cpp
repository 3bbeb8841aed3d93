#include "uncert/oscillator.hpp"

#include <cmath>
#include <numbers>

namespace uncert {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI(0.0, 1.0);
constexpr int kPanelOrder = 16;
constexpr double kMaxPanelWidth = 0.4;

} // namespace

void gauss_legendre(int order, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.assign(order, 0.0);
  weights.assign(order, 0.0);
  const int half = (order + 1) / 2;
  for (int k = 0; k < half; ++k) {
    // Newton iteration from the Chebyshev estimate of the k-th root.
    double x = std::cos(kPi * (k + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int n = 2; n <= order; ++n) {
        const double p2 = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[order - 1 - k] = x;
    nodes[k] = -x;
    weights[k] = w;
    weights[order - 1 - k] = w;
  }
}

std::shared_ptr<Grid> Grid::make_default(int density) {
  return make(10.0, density);
}

std::shared_ptr<Grid> Grid::make(double half_width, int density) {
  if (!(half_width > 0.0)) throw std::invalid_argument("grid half-width must be positive");
  if (density < 1) throw std::invalid_argument("grid density must be >= 1");

  std::vector<double> ref_nodes, ref_weights;
  gauss_legendre(kPanelOrder, ref_nodes, ref_weights);

  // Positive-half section boundaries; pi is kept as an exact panel edge so
  // that functions truncated there stay panel-aligned.
  std::vector<double> edges{0.0};
  if (half_width > kPi + 1e-12) edges.push_back(kPi);
  edges.push_back(half_width);

  std::vector<double> pos_nodes, pos_weights;
  for (std::size_t s = 0; s + 1 < edges.size(); ++s) {
    const double lo = edges[s], hi = edges[s + 1];
    const int panels = std::max(
        1, static_cast<int>(std::ceil((hi - lo) * density / kMaxPanelWidth)));
    const double w = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
      const double a = lo + p * w, b = lo + (p + 1) * w;
      for (int i = 0; i < kPanelOrder; ++i) {
        pos_nodes.push_back(0.5 * (b - a) * ref_nodes[i] + 0.5 * (a + b));
        pos_weights.push_back(0.5 * (b - a) * ref_weights[i]);
      }
    }
  }

  // Mirror the positive half so the node set is exactly symmetric.
  auto grid = std::shared_ptr<Grid>(new Grid());
  grid->half_width_ = half_width;
  const std::size_t m = pos_nodes.size();
  grid->nodes_.resize(2 * m);
  grid->weights_.resize(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    grid->nodes_[m + i] = pos_nodes[i];
    grid->weights_[m + i] = pos_weights[i];
    grid->nodes_[m - 1 - i] = -pos_nodes[i];
    grid->weights_[m - 1 - i] = pos_weights[i];
  }
  return grid;
}

namespace {

void check_same_grid(const FunctionState& a, const FunctionState& b) {
  if (!a.grid || !b.grid || a.grid->size() != b.grid->size())
    throw DimensionMismatch("function states live on different grids");
}

} // namespace

cplx overlap(const FunctionState& a, const FunctionState& b) {
  check_same_grid(a, b);
  const auto& w = a.grid->weights();
  cplx s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i)
    s += w[i] * std::conj(a.samples[i]) * b.samples[i];
  return s;
}

double norm_sq(const FunctionState& a) {
  const auto& w = a.grid->weights();
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i)
    s += w[i] * std::norm(a.samples[i]);
  return s;
}

namespace {

// phi_0 .. phi_n at one point via the stable normalized recurrence.
std::vector<double> hermite_column(int n, double x) {
  std::vector<double> h(n + 1);
  h[0] = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  if (n >= 1) h[1] = std::sqrt(2.0) * x * h[0];
  for (int k = 1; k < n; ++k)
    h[k + 1] = std::sqrt(2.0 / (k + 1.0)) * x * h[k] -
               std::sqrt(static_cast<double>(k) / (k + 1.0)) * h[k - 1];
  return h;
}

} // namespace

FunctionState hermite_state(int n, const GridPtr& grid) {
  if (n < 0 || n > 10)
    throw std::invalid_argument("hermite_state supports n in [0, 10]");
  if (!grid) throw std::invalid_argument("null grid");

  FunctionState f;
  f.grid = grid;
  f.support_lo = grid->lo();
  f.support_hi = grid->hi();
  f.samples.resize(grid->size());
  f.second_derivative.resize(grid->size());
  f.has_second_derivative = true;
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const double x = grid->nodes()[i];
    const double v = hermite_column(n, x)[n];
    f.samples[i] = v;
    // H phi_n = (2n+1) phi_n with H = -d^2/dx^2 + x^2.
    f.second_derivative[i] = (x * x - (2.0 * n + 1.0)) * v;
  }

  const double deficit = std::abs(norm_sq(f) - 1.0);
  if (deficit > kGridNormDeficitTol)
    throw GridTooNarrow("grid too narrow for hermite level " + std::to_string(n) +
                        " (norm deficit " + std::to_string(deficit) + ")");
  return f;
}

FunctionState deviation_function(DeviationKind kind, const GridPtr& grid) {
  const FunctionState ground = hermite_state(0, grid);
  FunctionState applied = ground;
  applied.has_second_derivative = false;
  applied.second_derivative.clear();

  for (std::size_t i = 0; i < grid->size(); ++i) {
    const double x = grid->nodes()[i];
    if (kind == DeviationKind::XSquared)
      applied.samples[i] = x * x * ground.samples[i];
    else // p phi_0 = -i phi_0' = i x phi_0
      applied.samples[i] = kI * x * ground.samples[i];
  }

  const double mean = overlap(ground, applied).real();
  for (std::size_t i = 0; i < grid->size(); ++i)
    applied.samples[i] -= mean * ground.samples[i];
  return applied;
}

FunctionState trial_state(double eta, const GridPtr& grid) {
  if (!grid) throw std::invalid_argument("null grid");
  if (grid->hi() < kPi - 1e-12)
    throw std::invalid_argument("trial state needs a grid covering [-pi, pi]");

  FunctionState f;
  f.grid = grid;
  f.support_lo = -kPi;
  f.support_hi = kPi;
  f.samples.resize(grid->size(), 0.0);
  const double c = 1.0 / std::sqrt((1.0 + eta * eta) * kPi);
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const double x = grid->nodes()[i];
    if (std::abs(x) <= kPi)
      f.samples[i] = c * (std::sin(x) + eta * std::cos(1.5 * x));
  }
  return f;
}

double bound17_eta(double eta, const GridPtr& grid) {
  const FunctionState dev_a = deviation_function(DeviationKind::XSquared, grid);
  const FunctionState dev_b = deviation_function(DeviationKind::Momentum, grid);
  const FunctionState aux = trial_state(eta, grid);
  return 2.0 * std::abs(overlap(dev_a, aux)) * std::abs(overlap(dev_b, aux));
}

double split_aux_bound(const GridPtr& grid) {
  if (!grid) throw std::invalid_argument("null grid");
  if (grid->hi() < kPi - 1e-12)
    throw std::invalid_argument("split-aux states need a grid covering [-pi, pi]");

  FunctionState n1, n2;
  n1.grid = n2.grid = grid;
  n1.support_lo = n2.support_lo = -kPi;
  n1.support_hi = n2.support_hi = kPi;
  n1.samples.resize(grid->size(), 0.0);
  n2.samples.resize(grid->size(), 0.0);
  const double c = 1.0 / std::sqrt(kPi);
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const double x = grid->nodes()[i];
    if (std::abs(x) <= kPi) {
      n1.samples[i] = c * std::cos(1.5 * x);
      n2.samples[i] = c * std::sin(x);
    }
  }

  const FunctionState dev_a = deviation_function(DeviationKind::XSquared, grid);
  const FunctionState dev_b = deviation_function(DeviationKind::Momentum, grid);
  return std::abs(overlap(dev_a, n1)) * std::abs(overlap(dev_b, n2));
}

double half_line_product_bound(const FunctionState& dev_a,
                               const FunctionState& dev_b) {
  check_same_grid(dev_a, dev_b);
  const auto& nodes = dev_a.grid->nodes();
  const auto& w = dev_a.grid->weights();
  const std::size_t n = nodes.size();

  for (const FunctionState* f : {&dev_a, &dev_b})
    for (std::size_t i = 0; i < n / 2; ++i) {
      const double diff =
          std::abs(std::norm(f->samples[i]) - std::norm(f->samples[n - 1 - i]));
      if (diff > kEvennessTol)
        throw EvennessViolated(
            "squared modulus is not an even function (asymmetry " +
            std::to_string(diff) + ")");
    }

  cplx cross = 0.0;
  for (std::size_t i = n / 2; i < n; ++i)
    cross += w[i] * std::conj(dev_a.samples[i]) * dev_b.samples[i];
  return 2.0 * std::abs(cross);
}

FunctionState scaled_gaussian_state(double k, const GridPtr& grid) {
  if (!(k > 0.0)) throw std::invalid_argument("scale parameter k must be positive");
  FunctionState f;
  f.grid = grid;
  f.support_lo = grid->lo();
  f.support_hi = grid->hi();
  f.samples.resize(grid->size());
  f.second_derivative.resize(grid->size());
  f.has_second_derivative = true;
  const double c = std::pow(k / kPi, 0.25);
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const double x = grid->nodes()[i];
    const double v = c * std::exp(-0.5 * k * x * x);
    f.samples[i] = v;
    f.second_derivative[i] = (k * k * x * x - k) * v;
  }
  return f;
}

FunctionState quartic_potential(double lambda, const GridPtr& grid) {
  if (!(lambda > 0.0)) throw std::invalid_argument("quartic coupling must be positive");
  FunctionState f;
  f.grid = grid;
  f.support_lo = grid->lo();
  f.support_hi = grid->hi();
  f.samples.resize(grid->size());
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const double x = grid->nodes()[i];
    f.samples[i] = lambda * x * x * x * x;
  }
  return f;
}

FunctionState harmonic_potential(const GridPtr& grid) {
  FunctionState f;
  f.grid = grid;
  f.support_lo = grid->lo();
  f.support_hi = grid->hi();
  f.samples.resize(grid->size());
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const double x = grid->nodes()[i];
    f.samples[i] = x * x;
  }
  return f;
}

double stationarity_diagnostic(const FunctionState& psi,
                               const FunctionState& potential) {
  check_same_grid(psi, potential);
  if (!psi.has_second_derivative)
    throw std::invalid_argument(
        "stationarity diagnostic needs second-derivative samples on psi");
  if (std::abs(norm_sq(psi) - 1.0) > kGridNormDeficitTol)
    throw std::invalid_argument("stationarity diagnostic requires a normalized state");

  const auto& w = psi.grid->weights();
  double mean_t = 0.0, t2 = 0.0, mean_v = 0.0, v2 = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const cplx t_psi = -psi.second_derivative[i];
    mean_t += w[i] * (std::conj(psi.samples[i]) * t_psi).real();
    t2 += w[i] * std::norm(t_psi);
    const double v = potential.samples[i].real();
    const double density = std::norm(psi.samples[i]);
    mean_v += w[i] * v * density;
    v2 += w[i] * v * v * density;
  }
  const double delta_t = std::sqrt(std::max(0.0, t2 - mean_t * mean_t));
  const double delta_v = std::sqrt(std::max(0.0, v2 - mean_v * mean_v));
  return std::abs(delta_t - delta_v);
}

ScaledGaussianReport scaled_gaussian_report(double lambda, double k) {
  if (!(lambda > 0.0) || !(k > 0.0))
    throw std::invalid_argument("lambda and k must be positive");

  const GridPtr grid = Grid::make_default();
  const FunctionState psi = scaled_gaussian_state(k, grid);
  const auto& w = grid->weights();
  const auto& x = grid->nodes();

  double mean_t = 0.0, t2 = 0.0, mean_v = 0.0, v2 = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double density = std::norm(psi.samples[i]);
    const double t_psi = -psi.second_derivative[i].real();
    mean_t += w[i] * psi.samples[i].real() * t_psi;
    t2 += w[i] * t_psi * t_psi;
    const double v = lambda * x[i] * x[i] * x[i] * x[i];
    mean_v += w[i] * v * density;
    v2 += w[i] * v * v * density;
  }

  ScaledGaussianReport rep;
  rep.lambda = lambda;
  rep.k = k;
  rep.mean_t = mean_t;
  rep.mean_v = mean_v;
  rep.delta_t = std::sqrt(std::max(0.0, t2 - mean_t * mean_t));
  rep.delta_v = std::sqrt(std::max(0.0, v2 - mean_v * mean_v));
  rep.virial_satisfied = std::abs(mean_t - 2.0 * mean_v) <= 1e-8;
  return rep;
}

double virial_optimal_k(double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  return std::cbrt(3.0 * lambda);
}

TruncatedOscillator truncated_oscillator(std::size_t levels) {
  if (levels < 3)
    throw std::invalid_argument("truncated oscillator needs at least 3 levels");

  // <m|x^2|n> in the phi_n basis: (2n+1)/2 on the diagonal,
  // sqrt((n+1)(n+2))/2 two steps off it; T = H - x^2.
  Matrix x2(levels), t(levels), h(levels);
  for (std::size_t n = 0; n < levels; ++n) {
    const double d = (2.0 * n + 1.0) / 2.0;
    x2(n, n) = d;
    t(n, n) = d;
    h(n, n) = 2.0 * n + 1.0;
    if (n + 2 < levels) {
      const double off = 0.5 * std::sqrt((n + 1.0) * (n + 2.0));
      x2(n, n + 2) = off;
      x2(n + 2, n) = off;
      t(n, n + 2) = -off;
      t(n + 2, n) = -off;
    }
  }
  return TruncatedOscillator{Observable(t), Observable(x2), Observable(h)};
}

} // namespace uncert
