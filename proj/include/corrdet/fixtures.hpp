#pragma once

#include <map>
#include <string>
#include <vector>

#include "corrdet/linalg.hpp"

namespace corrdet {

struct ExpectedValue {
  std::string field;
  double value;
  double tolerance;
};

/// A hand-authored correlation matrix with published reference values.
struct WorkedExample {
  std::string name;
  SymMatrix matrix;
  std::vector<ExpectedValue> expected;
};

/// The three worked 3x3 examples (Olkin improvement, Olkin not improved,
/// and the r_inf counterexample). Reference values carry four printed
/// digits, so they are compared at 1e-3.
std::vector<WorkedExample> worked_examples();

/// Quantities a fixture may reference: n, r1, r2, r_inf, det_R,
/// det_Rtilde, det_Rhat, det_Rbar, f_r_inf, improves_olkin,
/// violates_p_inf (booleans as 0/1).
std::map<std::string, double> fixture_quantities(const SymMatrix& m);

struct FieldCheck {
  std::string field;
  double expected;
  double actual;
  bool pass;
};

struct FixtureOutcome {
  std::string name;
  std::map<std::string, double> quantities;
  std::vector<FieldCheck> checks;
  bool pass = true;
};

FixtureOutcome evaluate_fixture(const WorkedExample& f);

}  // namespace corrdet
