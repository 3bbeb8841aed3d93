#include "uncert/auxopt.hpp"

#include <cmath>

#include "uncert/bounds.hpp"

namespace uncert {

QuantumState aux_from_coefficients(const AuxParametrization& param) {
  if (param.basis.empty())
    throw std::invalid_argument("aux parametrization needs a basis");
  if (param.coefficients.size() != param.basis.size())
    throw DimensionMismatch("coefficient count does not match basis size");

  const std::size_t dim = param.basis.front().dim();
  CVec v(dim, 0.0);
  for (std::size_t j = 0; j < param.basis.size(); ++j) {
    if (param.basis[j].dim() != dim)
      throw DimensionMismatch("basis states have inconsistent dimensions");
    const CVec& theta = param.basis[j].amplitudes();
    for (std::size_t i = 0; i < dim; ++i) v[i] += param.coefficients[j] * theta[i];
  }
  if (norm(v) <= kZeroDeviationTol)
    throw std::invalid_argument("all-zero coefficient vector");
  return normalized_state(v);
}

namespace {

// The basis must start with {Psi, Psi_A^, Psi_B^} built from the same
// deviation pair; compared phase-free since any overall phase is immaterial.
void check_seeded_basis(const AuxParametrization& param,
                        const DeviationVector& dev_a,
                        const DeviationVector& dev_b) {
  if (param.basis.size() < 3)
    throw std::invalid_argument("basis must contain at least {Psi, Psi_A^, Psi_B^}");
  const QuantumState na = normalized_deviation(dev_a);
  const QuantumState nb = normalized_deviation(dev_b);
  const auto matches = [](const QuantumState& s, const QuantumState& t) {
    return std::abs(std::abs(inner(s.amplitudes(), t.amplitudes())) - 1.0) <= 1e-8;
  };
  if (!matches(param.basis[0], dev_a.base) || !matches(param.basis[1], na) ||
      !matches(param.basis[2], nb))
    throw std::invalid_argument("basis is not seeded from the given deviation vectors");
}

} // namespace

double overlap_product_objective(const AuxParametrization& param,
                                 const DeviationVector& dev_a,
                                 const DeviationVector& dev_b) {
  check_seeded_basis(param, dev_a, dev_b);
  const QuantumState aux = aux_from_coefficients(param);
  return std::abs(inner(dev_a.vector, aux.amplitudes())) *
         std::abs(inner(dev_b.vector, aux.amplitudes()));
}

QuantumState optimal_aux_pair(const DeviationVector& dev_a,
                              const DeviationVector& dev_b) {
  const QuantumState na = normalized_deviation(dev_a); // throws on zero deviation
  const QuantumState nb = normalized_deviation(dev_b);
  if (std::abs(inner(dev_a.vector, dev_b.vector)) > kCase3Tol)
    throw PreconditionViolated("optimal aux state requires orthogonal deviations");
  // normalized_state absorbs the tiny norm drift a 1e-8 deviation
  // orthogonality budget allows.
  return normalized_state(add(na.amplitudes(), nb.amplitudes()));
}

QuantumState optimal_aux_multi(const std::vector<DeviationVector>& devs) {
  if (devs.size() < 2)
    throw std::invalid_argument("optimal multi-observable aux needs >= 2 deviations");
  std::vector<QuantumState> normalized;
  normalized.reserve(devs.size());
  for (const auto& d : devs) normalized.push_back(normalized_deviation(d));
  for (std::size_t i = 0; i < devs.size(); ++i)
    for (std::size_t j = i + 1; j < devs.size(); ++j)
      if (std::abs(inner(devs[i].vector, devs[j].vector)) > kCase3Tol)
        throw PreconditionViolated(
            "optimal multi-observable aux requires pairwise-orthogonal deviations");

  const std::size_t dim = devs.front().base.dim();
  CVec v(dim, 0.0);
  for (const auto& s : normalized)
    for (std::size_t i = 0; i < dim; ++i) v[i] += s[i];
  return normalized_state(v);
}

} // namespace uncert
