#pragma once

#include <cstddef>

#include "corrdet/corrmodel.hpp"
#include "corrdet/majorization.hpp"

namespace corrdet {

// Bound comparisons give the bound side +1e-9 so exact equality (e.g. an
// equicorrelation input) counts as holding.
inline constexpr double kBoundSlack = 1e-9;
// Below this, two bound values are reported as equal.
inline constexpr double kEqualBoundsBand = 1e-12;

/// Determinants of R and its equicorrelation comparison matrices.
/// Comparison determinants come from f_bound, never from factorization.
struct BoundsReport {
  std::size_t n = 0;
  double det_R = 0.0;
  OffDiagStats stats;
  double det_Rtilde = 0.0;  // f(n, r1), Olkin
  double det_Rhat = 0.0;    // f(n, r2)
  double det_Rbar = 0.0;    // f(n, -r2)
  bool sandwich_holds = false;  // det_Rbar <= det_R <= det_Rhat
  bool olkin_holds = false;     // det_R <= det_Rtilde
  bool improves_olkin = false;  // det_Rhat <= det_Rtilde
  bool r1_nonnegative = false;
};

BoundsReport bounds_report(const CorrelationMatrix& r);

struct PBoundResult {
  double p = 0.0;
  double r_p = 0.0;
  double det_Rp = 0.0;  // f(n, r_p)
  bool bound_holds = false;
  double margin = 0.0;  // det_Rp - det_R
};

/// Evaluates det R <= f(n, r_p). For p in (1, 2] the inequality is a
/// consequence of the sandwich bound, so a failure there throws
/// InternalInconsistency. p == kInfExponent uses r_inf.
PBoundResult p_bound(const CorrelationMatrix& r, double p, double tol = kBoundSlack);

/// Same, reusing a determinant already computed for R.
PBoundResult p_bound(const CorrelationMatrix& r, double det_r, double p, double tol);

enum class BoundOrdering { ImprovesOlkin, WeakerThanOlkin, Equal };

struct BoundComparison {
  BoundOrdering ordering = BoundOrdering::Equal;
  double margin = 0.0;  // |det_Rhat - det_Rtilde|
  double det_Rhat = 0.0;
  double det_Rtilde = 0.0;
};

BoundComparison bound_comparison(const CorrelationMatrix& r);

}  // namespace corrdet
