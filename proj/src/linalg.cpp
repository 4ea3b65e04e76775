#include "corrdet/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <utility>

#include "corrdet/error.hpp"

namespace corrdet {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::EmptyVector: return "EmptyVector";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::NotUnitDiagonal: return "NotUnitDiagonal";
    case ErrorKind::OffDiagonalOutOfRange: return "OffDiagonalOutOfRange";
    case ErrorKind::NotPositiveSemidefinite: return "NotPositiveSemidefinite";
    case ErrorKind::InvalidExponent: return "InvalidExponent";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::LengthTooSmall: return "LengthTooSmall";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::DegenerateRow: return "DegenerateRow";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

SymMatrix::SymMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {
  if (n == 0) throw Error(ErrorKind::DimensionTooSmall, "matrix dimension must be at least 1");
}

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1.0;
  return m;
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(ErrorKind::LengthMismatch, "matrix rows must form a square array");
  }
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.a_[i * n + i] = rows[i][i];
    for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, 0.5 * (rows[i][j] + rows[j][i]));
  }
  return m;
}

SymMatrix SymMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

double SymMatrix::trace() const noexcept {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += a_[i * n_ + i];
  return t;
}

double SymMatrix::frobenius_sq() const noexcept {
  return std::transform_reduce(a_.begin(), a_.end(), 0.0, std::plus<>{}, [](double x) { return x * x; });
}

SymMatrix SymMatrix::shifted(double c) const {
  SymMatrix m = *this;
  for (std::size_t i = 0; i < n_; ++i) m.a_[i * n_ + i] += c;
  return m;
}

double Spectrum::sum() const noexcept { return std::accumulate(values.begin(), values.end(), 0.0); }

double Spectrum::sum_sq() const noexcept {
  return std::transform_reduce(values.begin(), values.end(), 0.0, std::plus<>{}, [](double x) { return x * x; });
}

double Spectrum::product() const noexcept {
  return std::accumulate(values.begin(), values.end(), 1.0, std::multiplies<>{});
}

Spectrum Spectrum::sorted(SortOrder to) const {
  Spectrum s{values, to};
  if (to == SortOrder::Ascending) {
    std::stable_sort(s.values.begin(), s.values.end());
  } else {
    std::stable_sort(s.values.begin(), s.values.end(), std::greater<>{});
  }
  return s;
}

EigenDecomposition jacobi_eigen(const SymMatrix& m) {
  const std::size_t n = m.size();
  std::vector<double> a(m.data().begin(), m.data().end());
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const double tol = kJacobiRelTol * std::sqrt(m.frobenius_sq());
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
    return std::sqrt(s);
  };

  int sweep = 0;
  for (;; ++sweep) {
    if (off_norm() <= tol) break;
    if (sweep == kJacobiMaxSweeps) {
      throw Error(ErrorKind::NonConvergence, "Jacobi eigensolver did not converge in 100 sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[r * n + p];
          const double arq = a[r * n + q];
          a[r * n + p] = a[p * n + r] = c * arp - s * arq;
          a[r * n + q] = a[q * n + r] = s * arp + c * arq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double vrp = v[r * n + p];
          const double vrq = v[r * n + q];
          v[r * n + p] = c * vrp - s * vrq;
          v[r * n + q] = s * vrp + c * vrq;
        }
      }
    }
  }

  EigenDecomposition out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a[i * n + i];
  out.vectors = std::move(v);
  out.sweeps = sweep;
  return out;
}

Spectrum eigenvalues_symmetric(const SymMatrix& a, SortOrder order) {
  return Spectrum{jacobi_eigen(a).values, order}.sorted(order);
}

double determinant(const SymMatrix& m) {
  const std::size_t n = m.size();
  std::vector<double> lu(m.data().begin(), m.data().end());
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(lu[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double cand = std::abs(lu[i * n + k]);
      if (cand > best) {
        best = cand;
        piv = i;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      std::swap_ranges(lu.begin() + k * n, lu.begin() + (k + 1) * n, lu.begin() + piv * n);
      det = -det;
    }
    const double pivot = lu[k * n + k];
    det *= pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = lu[i * n + k] / pivot;
      if (f == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu[i * n + j] -= f * lu[k * n + j];
    }
  }
  return det;
}

double variance(std::span<const double> x) {
  if (x.empty()) throw Error(ErrorKind::EmptyVector, "variance of an empty vector");
  const double k = static_cast<double>(x.size());
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / k;
  double ss = 0.0;
  for (double xi : x) ss += (xi - mean) * (xi - mean);
  return ss / k;
}

std::vector<double> prefix(std::span<const double> x, std::size_t k) {
  if (k < 1 || k > x.size()) {
    throw Error(ErrorKind::OutOfRange, "prefix length must lie in [1, size]");
  }
  return {x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k)};
}

}  // namespace corrdet
