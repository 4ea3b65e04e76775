#include "corrdet/corrmodel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "corrdet/error.hpp"

namespace corrdet {

CorrelationMatrix validate_correlation(SymMatrix a, double psd_tolerance) {
  const std::size_t n = a.size();
  if (n < 2) throw Error(ErrorKind::DimensionTooSmall, "a correlation matrix needs n >= 2");
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) != 1.0) {
      throw Error(ErrorKind::NotUnitDiagonal, fmt::format("entry ({}, {}) is {:.17g}, expected 1", i, i, a(i, i)),
                  a(i, i));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = a(i, j);
      if (!(v >= -1.0 && v <= 1.0)) {
        throw Error(ErrorKind::OffDiagonalOutOfRange,
                    fmt::format("entry ({}, {}) is {:.17g}, outside [-1, 1]", i, j, v), v);
      }
    }
  }
  const double min_eig = eigenvalues_symmetric(a, SortOrder::Ascending).values.front();
  if (min_eig < -psd_tolerance * static_cast<double>(n)) {
    throw Error(ErrorKind::NotPositiveSemidefinite, fmt::format("minimum eigenvalue {:.17g}", min_eig), min_eig);
  }
  return CorrelationMatrix(std::move(a));
}

OffDiagStats off_diag_stats(const CorrelationMatrix& r) {
  const std::size_t n = r.size();
  double sum = 0.0;
  double sum_sq = 0.0;
  double max_abs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double v = r(i, j);
      sum += v;
      sum_sq += v * v;
      max_abs = std::max(max_abs, std::abs(v));
    }
  }
  const double pairs = static_cast<double>(n * (n - 1));
  return {sum / pairs, std::sqrt(sum_sq / pairs), max_abs, n};
}

double r_p(const CorrelationMatrix& r, double p) {
  if (!(p > 1.0)) throw Error(ErrorKind::InvalidExponent, fmt::format("exponent {} must exceed 1", p), p);
  const OffDiagStats stats = off_diag_stats(r);
  const double m = stats.r_inf;
  if (m == 0.0) return 0.0;
  if (std::isinf(p)) return m;

  const std::size_t n = r.size();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) acc += std::pow(std::abs(r(i, j)) / m, p);
    }
  }
  return m * std::pow(acc / static_cast<double>(n * (n - 1)), 1.0 / p);
}

SymMatrix equicorrelation(std::size_t n, double t) {
  if (n < 2) throw Error(ErrorKind::DimensionTooSmall, "equicorrelation needs n >= 2");
  SymMatrix m = SymMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, t);
  return m;
}

Spectrum equicorrelation_spectrum(std::size_t n, double t) {
  if (n < 2) throw Error(ErrorKind::DimensionTooSmall, "equicorrelation needs n >= 2");
  const double repeated = 1.0 - t;
  const double single = 1.0 + static_cast<double>(n - 1) * t;
  Spectrum s{std::vector<double>(n, repeated), SortOrder::Ascending};
  if (single >= repeated) {
    s.values.back() = single;
  } else {
    s.values.front() = single;
  }
  return s;
}

double f_bound(std::size_t n, double t) {
  const double m = static_cast<double>(n - 1);
  return std::pow(1.0 - t, m) * (1.0 + m * t);
}

}  // namespace corrdet
