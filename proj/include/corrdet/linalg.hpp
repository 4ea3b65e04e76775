#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace corrdet {

/// Dense n x n real symmetric matrix, row-major. Every write goes to both
/// (i, j) and (j, i), so symmetry is exact.
class SymMatrix {
 public:
  /// n x n zero matrix.
  explicit SymMatrix(std::size_t n);

  static SymMatrix identity(std::size_t n);

  /// Builds from full rows. The input must be square; it is made exactly
  /// symmetric by averaging (A + A^T) / 2. No tolerance check happens here
  /// (see matrix_io for the checked path).
  static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static SymMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v) noexcept {
    a_[i * n_ + j] = v;
    a_[j * n_ + i] = v;
  }

  std::span<const double> data() const noexcept { return a_; }
  std::span<const double> row(std::size_t i) const noexcept { return {a_.data() + i * n_, n_}; }

  double trace() const noexcept;
  /// Sum of squares of all n^2 entries.
  double frobenius_sq() const noexcept;
  /// Returns A + c I.
  SymMatrix shifted(double c) const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<double> a_;
};

enum class SortOrder { Ascending, Descending };

/// Eigenvalues with an explicit ordering tag. Classical majorization reads
/// them descending, variance majorization ascending.
struct Spectrum {
  std::vector<double> values;
  SortOrder order = SortOrder::Ascending;

  std::size_t size() const noexcept { return values.size(); }
  double sum() const noexcept;
  double sum_sq() const noexcept;
  double product() const noexcept;
  Spectrum sorted(SortOrder to) const;
};

/// Unsorted eigenvalues and the matching orthonormal eigenvectors
/// (column k of `vectors` belongs to `values[k]`, row-major n x n).
struct EigenDecomposition {
  std::vector<double> values;
  std::vector<double> vectors;
  int sweeps = 0;
};

inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiRelTol = 1e-12;

/// Cyclic Jacobi. Converged once the off-diagonal Frobenius norm drops
/// below 1e-12 * ||A||_F; throws NonConvergence after 100 sweeps.
EigenDecomposition jacobi_eigen(const SymMatrix& a);

Spectrum eigenvalues_symmetric(const SymMatrix& a, SortOrder order = SortOrder::Ascending);

/// LU with partial pivoting on a copy; the sign follows the row swaps.
/// Singular input returns 0 (up to rounding).
double determinant(const SymMatrix& a);

/// Population variance (divides by the length).
double variance(std::span<const double> x);

std::vector<double> prefix(std::span<const double> x, std::size_t k);

}  // namespace corrdet
