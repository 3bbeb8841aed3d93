// Finite-dimensional complex Hilbert-space core: states, observables,
// deviation vectors, orthonormal-basis extension, and the classifier for
// the three deviation-geometry cases.
//
// All types are immutable after construction and all operations are pure
// functions, so everything here is safe to use concurrently without locks.

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace uncert {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

// Tolerances used throughout the library.  All states are unit-norm and all
// observables have O(1) entries in hbar = 1 units, so absolute tolerances
// are adequate.
inline constexpr double kStateNormTol = 1e-10;   // |norm - 1| for states
inline constexpr double kHermiticityTol = 1e-12; // max |M - M^dagger| entry
inline constexpr double kZeroDeviationTol = 1e-12; // ||Psi_A|| treated as zero
inline constexpr double kOrthogonalityTol = 1e-10; // |<Psi_A|Psi_B>| treated as zero
inline constexpr double kDependenceResidualTol = 1e-8; // linear-dependence residual
inline constexpr double kSeedOrthoTol = 1e-8;    // Gram-Schmidt seed check

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ZeroDeviation : std::domain_error {
  using std::domain_error::domain_error;
};

struct PreconditionViolated : std::domain_error {
  using std::domain_error::domain_error;
};

// ---------------------------------------------------------------------------
// Small dense complex vector/matrix helpers.  Dimensions here are tiny
// (2..~20), so plain row-major storage is all we need.

cplx inner(const CVec& a, const CVec& b); // conj(a) . b
double norm_sq(const CVec& a);
double norm(const CVec& a);
CVec add(const CVec& a, const CVec& b);
CVec sub(const CVec& a, const CVec& b);
CVec scale(const cplx& c, const CVec& a);

class Matrix {
 public:
  explicit Matrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}
  Matrix(std::size_t dim, std::vector<cplx> entries);

  static Matrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  cplx& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return a_[r * dim_ + c];
  }

  Matrix adjoint() const;
  CVec apply(const CVec& v) const;
  double max_abs() const;
  bool is_hermitian(double tol = kHermiticityTol) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const cplx& c, const Matrix& a);

 private:
  std::size_t dim_;
  std::vector<cplx> a_;
};

Matrix commutator(const Matrix& a, const Matrix& b);     // ab - ba
Matrix anticommutator(const Matrix& a, const Matrix& b); // ab + ba

// ---------------------------------------------------------------------------
// Domain types.

// Normalized state vector in a finite-dimensional Hilbert space.
// Construction enforces dim >= 2 and unit Euclidean norm.
class QuantumState {
 public:
  explicit QuantumState(CVec amplitudes);

  std::size_t dim() const { return amp_.size(); }
  const CVec& amplitudes() const { return amp_; }
  cplx operator[](std::size_t i) const { return amp_[i]; }

 private:
  CVec amp_;
};

// Normalizes an arbitrary nonzero vector into a QuantumState.
QuantumState normalized_state(const CVec& v);

// Hermitian operator on the same space (hbar = 1 units throughout).
class Observable {
 public:
  explicit Observable(Matrix m);
  Observable(std::size_t dim, std::vector<cplx> entries)
      : Observable(Matrix(dim, std::move(entries))) {}

  std::size_t dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_; }
  CVec apply(const CVec& v) const { return m_.apply(v); }
  CVec apply(const QuantumState& psi) const { return m_.apply(psi.amplitudes()); }

 private:
  Matrix m_;
};

Observable observable_sum(const Observable& a, const Observable& b);
Observable observable_diff(const Observable& a, const Observable& b);

// The unnormalized vector (A - <A> I) Psi.  Its squared norm is the variance
// of A on Psi, and it is orthogonal to Psi by construction.
struct DeviationVector {
  QuantumState base;
  double mean = 0.0;
  CVec vector;

  double variance() const { return norm_sq(vector); }
  double delta() const { return norm(vector); }
};

enum class CaseTag {
  Case1Dependent, // Psi_B = mu Psi_A with small residual
  Case1Generic,   // nonzero, non-orthogonal, not linearly dependent
  Case2ZeroA,     // Psi_A = 0
  Case2ZeroB,     // Psi_B = 0
  Case3Orthogonal // <Psi_A|Psi_B> = 0, both nonzero
};

std::string case_name(CaseTag tag);

struct UncertaintyCase {
  CaseTag tag;
  std::optional<cplx> dependence_ratio; // mu, Case1Dependent only
};

// ---------------------------------------------------------------------------
// Operations.

// <Psi|A|Psi>.  Throws if the imaginary part exceeds 1e-10, which signals a
// non-Hermitian matrix slipping through.
double expectation(const Observable& obs, const QuantumState& psi);

DeviationVector deviation_vector(const Observable& obs, const QuantumState& psi);

// Psi_A / ||Psi_A||.  Throws ZeroDeviation for Case-2 input.
QuantumState normalized_deviation(const DeviationVector& dev);

// Classifies the geometry of a deviation-vector pair sharing the same base
// state.  mu is the least-squares ratio <Psi_A|Psi_B>/||Psi_A||^2, and linear
// dependence is declared when ||Psi_B - mu Psi_A|| <= 1e-8 ||Psi_B||.
UncertaintyCase classify_case(const DeviationVector& dev_a,
                              const DeviationVector& dev_b);

// Completes mutually orthonormal seed states to a full orthonormal basis of
// the given dimension; the seeds are returned unchanged as the first entries.
std::vector<QuantumState> gram_schmidt_extend(
    const std::vector<QuantumState>& seeds, std::size_t dim);

} // namespace uncert
