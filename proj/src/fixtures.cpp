#include "corrdet/fixtures.hpp"

#include <cmath>
#include <limits>

#include "corrdet/bounds.hpp"
#include "corrdet/corrmodel.hpp"

namespace corrdet {

namespace {
constexpr double kPrintedTol = 1e-3;
}

std::vector<WorkedExample> worked_examples() {
  std::vector<WorkedExample> out;
  out.push_back({"example-1-olkin-improved",
                 SymMatrix::from_rows({{1, 0, -0.5}, {0, 1, 0.5}, {-0.5, 0.5, 1}}),
                 {{"det_R", 0.5, kPrintedTol},
                  {"r1", 0.0, kPrintedTol},
                  {"det_Rtilde", 1.0, kPrintedTol},
                  {"r2", 0.4082, kPrintedTol},
                  {"det_Rhat", 0.6361, kPrintedTol},
                  {"improves_olkin", 1.0, 0.0}}});
  out.push_back({"example-2-olkin-not-improved",
                 SymMatrix::from_rows({{1, -0.3, -0.3}, {-0.3, 1, -0.5}, {-0.3, -0.5, 1}}),
                 {{"det_R", 0.48, kPrintedTol},
                  {"r1", -0.3667, kPrintedTol},
                  {"det_Rtilde", 0.4981, kPrintedTol},
                  {"r2", 0.3786, kPrintedTol},
                  {"det_Rhat", 0.6785, kPrintedTol},
                  {"improves_olkin", 0.0, 0.0}}});
  out.push_back({"example-3-r-inf-counterexample",
                 SymMatrix::from_rows({{1, 0, 0.8}, {0, 1, -0.5}, {0.8, -0.5, 1}}),
                 {{"r_inf", 0.8, kPrintedTol},
                  {"det_R", 0.11, kPrintedTol},
                  {"f_r_inf", 0.104, kPrintedTol},
                  {"violates_p_inf", 1.0, 0.0}}});
  return out;
}

std::map<std::string, double> fixture_quantities(const SymMatrix& m) {
  const CorrelationMatrix r = validate_correlation(m);
  const BoundsReport rep = bounds_report(r);
  const double f_inf = f_bound(r.size(), rep.stats.r_inf);
  return {
      {"n", static_cast<double>(rep.n)},
      {"r1", rep.stats.r1},
      {"r2", rep.stats.r2},
      {"r_inf", rep.stats.r_inf},
      {"det_R", rep.det_R},
      {"det_Rtilde", rep.det_Rtilde},
      {"det_Rhat", rep.det_Rhat},
      {"det_Rbar", rep.det_Rbar},
      {"f_r_inf", f_inf},
      {"improves_olkin", rep.improves_olkin ? 1.0 : 0.0},
      {"violates_p_inf", rep.det_R > f_inf ? 1.0 : 0.0},
  };
}

FixtureOutcome evaluate_fixture(const WorkedExample& f) {
  FixtureOutcome out;
  out.name = f.name;
  out.quantities = fixture_quantities(f.matrix);
  for (const auto& e : f.expected) {
    const auto it = out.quantities.find(e.field);
    const double actual = it == out.quantities.end() ? std::numeric_limits<double>::quiet_NaN() : it->second;
    const bool pass = std::abs(actual - e.value) <= e.tolerance;
    out.checks.push_back({e.field, e.value, actual, pass});
    out.pass = out.pass && pass;
  }
  return out;
}

}  // namespace corrdet
