// Shared generators for the property tests: random states, random Hermitian
// observables, and constructed instances with orthogonal deviation vectors.

#pragma once

#include <random>
#include <vector>

#include "uncert/hilbert.hpp"

namespace uncert::testing {

inline QuantumState random_state(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CVec v(dim);
  for (auto& x : v) x = cplx(g(rng), g(rng));
  return normalized_state(v);
}

inline Observable random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix r(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) r(i, j) = cplx(u(rng), u(rng));
  const Matrix h = 0.5 * (r + r.adjoint());
  return Observable(h);
}

// Orthonormal frame {psi, u_1, ..., u_n} obtained from random vectors.
inline std::vector<QuantumState> random_frame(std::size_t dim, std::size_t count,
                                              std::mt19937_64& rng) {
  std::vector<CVec> frame;
  std::normal_distribution<double> g(0.0, 1.0);
  while (frame.size() < count) {
    CVec v(dim);
    for (auto& x : v) x = cplx(g(rng), g(rng));
    for (int pass = 0; pass < 2; ++pass)
      for (const CVec& b : frame) v = sub(v, scale(inner(b, v), b));
    const double n = norm(v);
    if (n < 1e-3) continue;
    frame.push_back(scale(1.0 / n, v));
  }
  std::vector<QuantumState> states;
  states.reserve(count);
  for (auto& v : frame) states.emplace_back(std::move(v));
  return states;
}

// Hermitian operator whose deviation vector on psi is exactly coeff * u,
// for u orthogonal to psi: coeff |u><psi| + conj(coeff) |psi><u| plus a real
// multiple of |psi><psi| that only shifts the mean.
inline Observable observable_with_deviation(const QuantumState& psi,
                                            const QuantumState& u, cplx coeff,
                                            double mean_shift) {
  const std::size_t dim = psi.dim();
  Matrix m(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      m(r, c) = coeff * u[r] * std::conj(psi[c]) +
                std::conj(coeff) * psi[r] * std::conj(u[c]) +
                mean_shift * psi[r] * std::conj(psi[c]);
  return Observable(m);
}

// Instance with <Psi_A|Psi_B> = 0 by construction: deviations along two
// members of a random orthonormal frame.
struct Case3Instance {
  QuantumState psi;
  std::vector<Observable> obs; // one per orthogonal deviation direction
  std::vector<cplx> coeffs;    // deviation vector of obs[i] is coeffs[i] * u_i
};

inline Case3Instance random_case3(std::size_t dim, std::size_t n_obs,
                                  std::mt19937_64& rng) {
  const auto frame = random_frame(dim, n_obs + 1, rng);
  std::uniform_real_distribution<double> u(0.2, 1.5);
  std::uniform_real_distribution<double> angle(0.0, 6.28318530717958648);
  Case3Instance inst{frame[0], {}, {}};
  for (std::size_t i = 0; i < n_obs; ++i) {
    const cplx coeff = std::polar(u(rng), angle(rng));
    inst.coeffs.push_back(coeff);
    inst.obs.push_back(
        observable_with_deviation(frame[0], frame[i + 1], coeff, u(rng)));
  }
  return inst;
}

} // namespace uncert::testing
