#pragma once

#include <span>
#include <vector>

#include "corrdet/corrmodel.hpp"
#include "corrdet/linalg.hpp"

namespace corrdet {

inline constexpr double kDefaultTolerance = 1e-9;

enum class MajorizationKind { Classical, Variance };

struct MajorizationVerdict {
  bool holds = false;
  MajorizationKind kind = MajorizationKind::Classical;
  // Per-k margins of the inequalities; positive means satisfied.
  std::vector<double> slacks;
  // Classical: {sum x - sum y}. Variance: {sum x - sum y, Var x - Var y}.
  std::vector<double> equality_residuals;
  double tolerance = kDefaultTolerance;

  /// Smallest slack, or +inf when there are no inequality conditions.
  double min_slack() const noexcept;
};

/// x majorizes y. Both are sorted descending internally; slacks are the
/// partial-sum differences for k = 1..n-1.
MajorizationVerdict majorizes(std::span<const double> x, std::span<const double> y, double tol = kDefaultTolerance);

/// x variance-majorizes y. Both are sorted ascending internally; slacks are
/// Var(x[k]) - Var(y[k]) for k = 2..n-1 (none when n == 2).
MajorizationVerdict variance_majorizes(std::span<const double> x, std::span<const double> y,
                                       double tol = kDefaultTolerance);

inline MajorizationVerdict majorizes(const Spectrum& x, const Spectrum& y, double tol = kDefaultTolerance) {
  return majorizes(x.values, y.values, tol);
}
inline MajorizationVerdict variance_majorizes(const Spectrum& x, const Spectrum& y, double tol = kDefaultTolerance) {
  return variance_majorizes(x.values, y.values, tol);
}

/// The equicorrelation sandwich in variance-majorization form:
/// left  = lambda(E_n(-r2)) vm lambda(R),
/// right = lambda(R) vm lambda(E_n(r2)).
struct SandwichVerdict {
  MajorizationVerdict left;
  MajorizationVerdict right;

  bool holds() const noexcept { return left.holds && right.holds; }
  double min_slack() const noexcept;
};

SandwichVerdict verify_vm_sandwich(const CorrelationMatrix& r, double tol = kDefaultTolerance);

/// Same check with the eigenvalues of R supplied by the caller.
SandwichVerdict verify_vm_sandwich(const Spectrum& spectrum_r, const OffDiagStats& stats,
                                double tol = kDefaultTolerance);

}  // namespace corrdet
