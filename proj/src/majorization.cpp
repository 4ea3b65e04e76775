#include "corrdet/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "corrdet/error.hpp"

namespace corrdet {
namespace {

bool verdict_holds(const MajorizationVerdict& v) {
  const bool slacks_ok = std::all_of(v.slacks.begin(), v.slacks.end(), [&](double s) { return s >= -v.tolerance; });
  const bool eq_ok = std::all_of(v.equality_residuals.begin(), v.equality_residuals.end(),
                                 [&](double r) { return std::abs(r) <= v.tolerance; });
  return slacks_ok && eq_ok;
}

void check_lengths(std::span<const double> x, std::span<const double> y, std::size_t min_len) {
  if (x.size() != y.size()) throw Error(ErrorKind::LengthMismatch, "vectors must have equal length");
  if (x.size() < min_len) {
    throw Error(min_len == 1 ? ErrorKind::EmptyVector : ErrorKind::LengthTooSmall, "vectors are too short");
  }
}

}  // namespace

double MajorizationVerdict::min_slack() const noexcept {
  if (slacks.empty()) return std::numeric_limits<double>::infinity();
  return *std::min_element(slacks.begin(), slacks.end());
}

MajorizationVerdict majorizes(std::span<const double> x, std::span<const double> y, double tol) {
  check_lengths(x, y, 1);
  std::vector<double> xs(x.begin(), x.end());
  std::vector<double> ys(y.begin(), y.end());
  std::sort(xs.begin(), xs.end(), std::greater<>{});
  std::sort(ys.begin(), ys.end(), std::greater<>{});

  MajorizationVerdict v;
  v.kind = MajorizationKind::Classical;
  v.tolerance = tol;
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    sx += xs[k];
    sy += ys[k];
    v.slacks.push_back(sx - sy);
  }
  v.equality_residuals.push_back(std::accumulate(xs.begin(), xs.end(), 0.0) -
                                 std::accumulate(ys.begin(), ys.end(), 0.0));
  v.holds = verdict_holds(v);
  return v;
}

MajorizationVerdict variance_majorizes(std::span<const double> x, std::span<const double> y, double tol) {
  check_lengths(x, y, 2);
  std::vector<double> xs(x.begin(), x.end());
  std::vector<double> ys(y.begin(), y.end());
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());

  MajorizationVerdict v;
  v.kind = MajorizationKind::Variance;
  v.tolerance = tol;
  const std::size_t n = xs.size();
  for (std::size_t k = 2; k < n; ++k) {
    v.slacks.push_back(variance(prefix(xs, k)) - variance(prefix(ys, k)));
  }
  v.equality_residuals.push_back(std::accumulate(xs.begin(), xs.end(), 0.0) -
                                 std::accumulate(ys.begin(), ys.end(), 0.0));
  v.equality_residuals.push_back(variance(xs) - variance(ys));
  v.holds = verdict_holds(v);
  return v;
}

double SandwichVerdict::min_slack() const noexcept { return std::min(left.min_slack(), right.min_slack()); }

SandwichVerdict verify_vm_sandwich(const Spectrum& spectrum_r, const OffDiagStats& stats, double tol) {
  const Spectrum bar = equicorrelation_spectrum(stats.n, -stats.r2);
  const Spectrum hat = equicorrelation_spectrum(stats.n, stats.r2);
  return {variance_majorizes(bar, spectrum_r, tol), variance_majorizes(spectrum_r, hat, tol)};
}

SandwichVerdict verify_vm_sandwich(const CorrelationMatrix& r, double tol) {
  return verify_vm_sandwich(eigenvalues_symmetric(r.matrix(), SortOrder::Ascending), off_diag_stats(r), tol);
}

}  // namespace corrdet
