#include "corrdet/bounds.hpp"

#include <cmath>

#include <fmt/format.h>

#include "corrdet/error.hpp"

namespace corrdet {

BoundsReport bounds_report(const CorrelationMatrix& r) {
  BoundsReport rep;
  rep.n = r.size();
  rep.det_R = determinant(r.matrix());
  rep.stats = off_diag_stats(r);
  rep.det_Rtilde = f_bound(rep.n, rep.stats.r1);
  rep.det_Rhat = f_bound(rep.n, rep.stats.r2);
  rep.det_Rbar = f_bound(rep.n, -rep.stats.r2);
  rep.sandwich_holds = rep.det_Rbar <= rep.det_R + kBoundSlack && rep.det_R <= rep.det_Rhat + kBoundSlack;
  rep.olkin_holds = rep.det_R <= rep.det_Rtilde + kBoundSlack;
  // Non-strict, with the same equality band as bound_comparison.
  rep.improves_olkin = rep.det_Rhat <= rep.det_Rtilde + kEqualBoundsBand;
  rep.r1_nonnegative = rep.stats.r1 >= 0.0;
  return rep;
}

PBoundResult p_bound(const CorrelationMatrix& r, double det_r, double p, double tol) {
  PBoundResult res;
  res.p = p;
  res.r_p = r_p(r, p);
  res.det_Rp = f_bound(r.size(), res.r_p);
  res.margin = res.det_Rp - det_r;
  res.bound_holds = det_r <= res.det_Rp + tol;
  if (p <= 2.0 && !res.bound_holds) {
    throw Error(ErrorKind::InternalInconsistency,
                fmt::format("det R = {:.17g} exceeds f(n, r_p) = {:.17g} at p = {}", det_r, res.det_Rp, p),
                res.margin);
  }
  return res;
}

PBoundResult p_bound(const CorrelationMatrix& r, double p, double tol) {
  return p_bound(r, determinant(r.matrix()), p, tol);
}

BoundComparison bound_comparison(const CorrelationMatrix& r) {
  const OffDiagStats s = off_diag_stats(r);
  BoundComparison c;
  c.det_Rhat = f_bound(r.size(), s.r2);
  c.det_Rtilde = f_bound(r.size(), s.r1);
  c.margin = std::abs(c.det_Rhat - c.det_Rtilde);
  if (c.margin <= kEqualBoundsBand) {
    c.ordering = BoundOrdering::Equal;
  } else if (c.det_Rhat < c.det_Rtilde) {
    c.ordering = BoundOrdering::ImprovesOlkin;
  } else {
    c.ordering = BoundOrdering::WeakerThanOlkin;
  }
  return c;
}

}  // namespace corrdet
