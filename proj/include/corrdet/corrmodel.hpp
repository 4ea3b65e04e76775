#pragma once

#include <cstddef>
#include <limits>

#include "corrdet/linalg.hpp"

namespace corrdet {

inline constexpr double kInfExponent = std::numeric_limits<double>::infinity();
inline constexpr double kDefaultPsdTolerance = 1e-10;

/// A validated correlation matrix: n >= 2, unit diagonal, off-diagonals in
/// [-1, 1], minimum eigenvalue >= -psd_tolerance * n. Only
/// validate_correlation() can build one.
class CorrelationMatrix {
 public:
  const SymMatrix& matrix() const noexcept { return base_; }
  std::size_t size() const noexcept { return base_.size(); }
  double operator()(std::size_t i, std::size_t j) const noexcept { return base_(i, j); }

  friend bool operator==(const CorrelationMatrix&, const CorrelationMatrix&) = default;

 private:
  explicit CorrelationMatrix(SymMatrix m) : base_(std::move(m)) {}
  friend CorrelationMatrix validate_correlation(SymMatrix a, double psd_tolerance);

  SymMatrix base_;
};

/// Throws Error with the first violated invariant: DimensionTooSmall,
/// NotUnitDiagonal, OffDiagonalOutOfRange, then NotPositiveSemidefinite
/// (whose value() is the minimum eigenvalue).
CorrelationMatrix validate_correlation(SymMatrix a, double psd_tolerance = kDefaultPsdTolerance);

/// Off-diagonal summary over the n(n-1) ordered pairs.
struct OffDiagStats {
  double r1 = 0.0;     // signed mean
  double r2 = 0.0;     // quadratic mean of |r_ij|
  double r_inf = 0.0;  // max |r_ij|
  std::size_t n = 0;
};

OffDiagStats off_diag_stats(const CorrelationMatrix& r);

/// Power mean of |r_ij| over the off-diagonal entries, for p in (1, inf].
/// Evaluated as m * mean((|r_ij| / m)^p)^(1/p) with m = r_inf so that large
/// p neither overflows nor underflows. Returns 0 for a diagonal matrix.
double r_p(const CorrelationMatrix& r, double p);

/// Unit diagonal, constant off-diagonal t. Any finite t is accepted; the
/// result is a correlation matrix only for t in [-1/(n-1), 1].
SymMatrix equicorrelation(std::size_t n, double t);

/// Closed form: 1 - t with multiplicity n - 1 and 1 + (n - 1) t, ascending.
Spectrum equicorrelation_spectrum(std::size_t n, double t);

/// f(t) = (1 - t)^(n-1) (1 + (n - 1) t), the determinant of
/// equicorrelation(n, t).
double f_bound(std::size_t n, double t);

}  // namespace corrdet
