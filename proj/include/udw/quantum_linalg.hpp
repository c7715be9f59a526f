#pragma once

#include <array>
#include <complex>
#include <vector>

namespace udw {

using complex_d = std::complex<double>;

// Dense complex matrix of dimension 1..8, value semantics, row major.
// Small enough that fixed storage beats any sparse or heap scheme.
class Matrix {
 public:
  explicit Matrix(int dim);

  int dim() const { return dim_; }
  complex_d& at(int i, int j) { return e_[static_cast<size_t>(i) * 8 + j]; }
  const complex_d& at(int i, int j) const {
    return e_[static_cast<size_t>(i) * 8 + j];
  }

  complex_d trace() const;
  double max_abs() const;
  // Max deviation |a_ij - conj(a_ji)| relative to max(1, max|a_ij|).
  bool is_hermitian(double tol) const;

 private:
  int dim_;
  std::array<complex_d, 64> e_{};
};

// Sum of |a_ij| over i != j; the basis-dependent l1 coherence numerator.
double offdiagonal_abs_sum(const Matrix& m);

// Validated quantum state: dimension 4 or 8, Hermitian to 1e-14, unit trace
// to 1e-14, diagonal >= -1e-14. Construction throws std::invalid_argument
// when any check fails.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Matrix& m);
  const Matrix& matrix() const { return m_; }
  int dim() const { return m_.dim(); }

 private:
  Matrix m_;
};

// Qubit labels. Two-detector states use the basis |00>,|01>,|10>,|11> with
// detector A on the left; three-detector states use the excitation-sorted
// basis |000>,|001>,|010>,|100>,|011>,|101>,|110>,|111>, A leftmost.
enum class Subsystem { a, b, c };
enum class DetectorPair { ab, ac, bc };

// Eigenvalues of a Hermitian matrix, ascending. Input must be Hermitian to
// 1e-12 (std::invalid_argument otherwise). Cyclic complex Jacobi, iterated
// until the off-diagonal Frobenius norm falls below 1e-14 of scale.
std::vector<double> hermitian_eigenvalues(const Matrix& m);

struct EigenSystem {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column k pairs with values[k]
};
EigenSystem hermitian_eigensystem(const Matrix& m);

// Trace out the detector not named in `keep` from an 8x8 state. Result is
// in the lexicographic two-qubit basis of the kept pair, first label on
// the left.
Matrix partial_trace(const Matrix& rho, DetectorPair keep);

// Transpose the indices of one subsystem. Subsystem::c is valid only for
// dimension 8.
Matrix partial_transpose(const Matrix& rho, Subsystem sub);

// Sum of |negative eigenvalues| of the partial transpose over `sub`.
double negativity_numeric(const Matrix& rho, Subsystem sub);

// Perturbatively truncated spectra carry tiny negative tails; values in
// (-eigenvalue_clamp, 0) are treated as exact zeros, anything below is a
// nonphysicality error.
inline constexpr double eigenvalue_clamp = 1e-8;

// Shannon entropy of an eigenvalue list in bits, with the clamp rule above.
// The list must sum to 1 within 1e-10 (std::invalid_argument otherwise).
double von_neumann_entropy(const std::vector<double>& eigs);

namespace detail {
// Same entropy and clamp rule without the normalization check; coherence
// entropies feed it spectra whose sum is 1 only to higher order in the
// coupling.
double entropy_bits_clamped(const std::vector<double>& eigs);
}  // namespace detail

}  // namespace udw
