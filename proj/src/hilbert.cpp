#include "uncert/hilbert.hpp"

#include <algorithm>
#include <cmath>

namespace uncert {

cplx inner(const CVec& a, const CVec& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("inner product of vectors with different dimensions");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm_sq(const CVec& a) {
  double s = 0.0;
  for (const cplx& x : a) s += std::norm(x);
  return s;
}

double norm(const CVec& a) { return std::sqrt(norm_sq(a)); }

CVec add(const CVec& a, const CVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector addition dimension mismatch");
  CVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

CVec sub(const CVec& a, const CVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector subtraction dimension mismatch");
  CVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

CVec scale(const cplx& c, const CVec& a) {
  CVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Matrix::Matrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), a_(std::move(entries)) {
  if (a_.size() != dim_ * dim_)
    throw DimensionMismatch("matrix entry count does not match dimension");
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix m(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

CVec Matrix::apply(const CVec& v) const {
  if (v.size() != dim_) throw DimensionMismatch("matrix-vector dimension mismatch");
  CVec r(dim_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) s += (*this)(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const cplx& x : a_) m = std::max(m, std::abs(x));
  return m;
}

bool Matrix::is_hermitian(double tol) const {
  return (*this - adjoint()).max_abs() <= tol;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("matrix addition dimension mismatch");
  Matrix m(a.dim_);
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("matrix subtraction dimension mismatch");
  Matrix m(a.dim_);
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("matrix product dimension mismatch");
  Matrix m(a.dim_);
  for (std::size_t r = 0; r < a.dim_; ++r)
    for (std::size_t k = 0; k < a.dim_; ++k) {
      const cplx ark = a(r, k);
      if (ark == cplx(0.0)) continue;
      for (std::size_t c = 0; c < a.dim_; ++c) m(r, c) += ark * b(k, c);
    }
  return m;
}

Matrix operator*(const cplx& c, const Matrix& a) {
  Matrix m(a.dim_);
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = c * a.a_[i];
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

QuantumState::QuantumState(CVec amplitudes) : amp_(std::move(amplitudes)) {
  if (amp_.size() < 2)
    throw std::invalid_argument("quantum state needs dimension >= 2");
  const double n = norm(amp_);
  if (std::abs(n - 1.0) > kStateNormTol)
    throw std::invalid_argument("quantum state is not normalized (norm = " +
                                std::to_string(n) + ")");
}

QuantumState normalized_state(const CVec& v) {
  const double n = norm(v);
  if (n <= kZeroDeviationTol)
    throw ZeroDeviation("cannot normalize a (near-)zero vector");
  return QuantumState(scale(1.0 / n, v));
}

Observable::Observable(Matrix m) : m_(std::move(m)) {
  if (!m_.is_hermitian())
    throw std::invalid_argument("observable matrix is not Hermitian");
}

Observable observable_sum(const Observable& a, const Observable& b) {
  return Observable(a.matrix() + b.matrix());
}

Observable observable_diff(const Observable& a, const Observable& b) {
  return Observable(a.matrix() - b.matrix());
}

std::string case_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case1Dependent: return "CASE1_DEPENDENT";
    case CaseTag::Case1Generic: return "CASE1_GENERIC";
    case CaseTag::Case2ZeroA: return "CASE2_ZERO_A";
    case CaseTag::Case2ZeroB: return "CASE2_ZERO_B";
    case CaseTag::Case3Orthogonal: return "CASE3_ORTHOGONAL";
  }
  return "UNKNOWN";
}

double expectation(const Observable& obs, const QuantumState& psi) {
  if (obs.dim() != psi.dim())
    throw DimensionMismatch("observable/state dimension mismatch");
  const cplx v = inner(psi.amplitudes(), obs.apply(psi));
  if (std::abs(v.imag()) > 1e-10)
    throw std::invalid_argument("expectation value has non-negligible imaginary part");
  return v.real();
}

DeviationVector deviation_vector(const Observable& obs, const QuantumState& psi) {
  const double mean = expectation(obs, psi);
  CVec v = obs.apply(psi);
  const CVec& amp = psi.amplitudes();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= mean * amp[i];
  return DeviationVector{psi, mean, std::move(v)};
}

QuantumState normalized_deviation(const DeviationVector& dev) {
  const double n = dev.delta();
  if (n <= kZeroDeviationTol)
    throw ZeroDeviation("deviation vector vanishes (Case 2); no normalized state exists");
  return QuantumState(scale(1.0 / n, dev.vector));
}

namespace {

bool same_base(const QuantumState& a, const QuantumState& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (std::abs(a[i] - b[i]) > 1e-12) return false;
  return true;
}

} // namespace

UncertaintyCase classify_case(const DeviationVector& dev_a,
                              const DeviationVector& dev_b) {
  if (!same_base(dev_a.base, dev_b.base))
    throw std::invalid_argument("deviation vectors have different base states");

  const double na = dev_a.delta();
  const double nb = dev_b.delta();
  if (na <= kZeroDeviationTol) return {CaseTag::Case2ZeroA, std::nullopt};
  if (nb <= kZeroDeviationTol) return {CaseTag::Case2ZeroB, std::nullopt};

  const cplx overlap = inner(dev_a.vector, dev_b.vector);
  if (std::abs(overlap) <= kOrthogonalityTol)
    return {CaseTag::Case3Orthogonal, std::nullopt};

  // Least-squares ratio for Psi_B ~ mu Psi_A, then a relative residual test.
  const cplx mu = overlap / (na * na);
  const double residual = norm(sub(dev_b.vector, scale(mu, dev_a.vector)));
  if (residual <= kDependenceResidualTol * nb)
    return {CaseTag::Case1Dependent, mu};
  return {CaseTag::Case1Generic, std::nullopt};
}

std::vector<QuantumState> gram_schmidt_extend(
    const std::vector<QuantumState>& seeds, std::size_t dim) {
  if (seeds.size() > dim)
    throw std::invalid_argument("more seed states than basis dimension");
  for (const auto& s : seeds)
    if (s.dim() != dim)
      throw DimensionMismatch("seed state dimension does not match basis dimension");
  for (std::size_t i = 0; i < seeds.size(); ++i)
    for (std::size_t j = 0; j < seeds.size(); ++j) {
      const cplx g = inner(seeds[i].amplitudes(), seeds[j].amplitudes());
      const double target = (i == j) ? 1.0 : 0.0;
      if (std::abs(g - target) > kSeedOrthoTol)
        throw std::invalid_argument("seed states are not orthonormal");
    }

  std::vector<CVec> basis;
  basis.reserve(dim);
  for (const auto& s : seeds) basis.push_back(s.amplitudes());

  // Sweep the canonical basis, keeping directions with a significant
  // residual; any stalled span leaves some canonical vector with residual
  // >= 1/sqrt(dim), so the threshold never blocks completion.  Two
  // projection passes keep the final Gram matrix at machine precision.
  for (std::size_t k = 0; k < dim && basis.size() < dim; ++k) {
    CVec v(dim, 0.0);
    v[k] = 1.0;
    for (int pass = 0; pass < 2; ++pass)
      for (const CVec& b : basis) v = sub(v, scale(inner(b, v), b));
    const double r = norm(v);
    if (r > 1e-3) basis.push_back(scale(1.0 / r, v));
  }
  if (basis.size() < dim)
    throw std::runtime_error("failed to complete orthonormal basis");

  std::vector<QuantumState> result;
  result.reserve(dim);
  for (auto& b : basis) result.emplace_back(std::move(b));
  return result;
}

} // namespace uncert
