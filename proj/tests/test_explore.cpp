#include <gtest/gtest.h>

#include <cmath>

#include "corrdet/bounds.hpp"
#include "corrdet/error.hpp"
#include "corrdet/explore.hpp"
#include "corrdet/rng.hpp"

using namespace corrdet;

namespace {

CorrelationMatrix ex1() { return validate_correlation(SymMatrix::from_rows({{1, 0, -0.5}, {0, 1, 0.5}, {-0.5, 0.5, 1}})); }
CorrelationMatrix ex2() {
  return validate_correlation(SymMatrix::from_rows({{1, -0.3, -0.3}, {-0.3, 1, -0.5}, {-0.3, -0.5, 1}}));
}
CorrelationMatrix ex3() { return validate_correlation(SymMatrix::from_rows({{1, 0, 0.8}, {0, 1, -0.5}, {0.8, -0.5, 1}})); }

double max_abs_diff(const SymMatrix& a, const SymMatrix& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

void expect_result_consistent(const SearchResult& r, auto&& objective) {
  EXPECT_NO_THROW(validate_correlation(r.best_matrix.matrix()));
  if (std::isfinite(r.objective)) EXPECT_NEAR(objective(r.best_matrix), r.objective, 1e-12);
  EXPECT_EQ(r.found, r.objective > kFoundThreshold);
}

}  // namespace

TEST(Rng, DeterministicAndInRange) {
  Rng a(123), b(123);
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform01();
    EXPECT_EQ(u, b.uniform01());
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}

TEST(Rng, NormalMoments) {
  Rng rng(2024);
  double s = 0.0, ss = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    s += z;
    ss += z * z;
  }
  EXPECT_NEAR(s / n, 0.0, 0.01);
  EXPECT_NEAR(ss / n, 1.0, 0.02);
}

TEST(RandomCorrelation, TwoByTwoAlwaysValid) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const CorrelationMatrix r = random_correlation(2, seed);
    EXPECT_EQ(r(0, 0), 1.0);
    EXPECT_EQ(r(1, 1), 1.0);
    EXPECT_LE(std::abs(r(0, 1)), 1.0);
  }
}

TEST(RandomCorrelation, ValidPsdAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const CorrelationMatrix a = random_correlation(5, seed);
    const CorrelationMatrix b = random_correlation(5, seed);
    EXPECT_EQ(a, b);
    EXPECT_GE(eigenvalues_symmetric(a.matrix()).values.front(), -1e-10 * 5);
  }
  EXPECT_NE(random_correlation(5, 1), random_correlation(5, 2));
}

TEST(RandomCorrelation, RejectsSmallDimension) {
  try {
    random_correlation(1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionTooSmall);
  }
}

TEST(PerturbCorrelation, VanishingScaleIsContinuous) {
  const CorrelationMatrix r = ex1();
  for (double scale : {1e-3, 1e-5, 1e-8}) {
    const CorrelationMatrix p = perturb_correlation(r, scale, 9);
    EXPECT_LE(max_abs_diff(p.matrix(), r.matrix()), 2.0 * scale);
  }
}

TEST(PerturbCorrelation, IdentityStaysNearIdentity) {
  const CorrelationMatrix id = validate_correlation(SymMatrix::identity(4));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const CorrelationMatrix p = perturb_correlation(id, 0.01, seed);
    EXPECT_LE(max_abs_diff(p.matrix(), id.matrix()), 0.0101);
  }
}

TEST(PerturbCorrelation, DeterministicAndRepairsPsd) {
  // E_3(-0.5) sits on the PSD boundary; large noise pushes it outside before
  // reprojection.
  const CorrelationMatrix edge = validate_correlation(equicorrelation(3, -0.5));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const CorrelationMatrix a = perturb_correlation(edge, 0.3, seed);
    EXPECT_EQ(a, perturb_correlation(edge, 0.3, seed));
    EXPECT_GE(eigenvalues_symmetric(a.matrix()).values.front(), -3e-10);
  }
}

TEST(PerturbCorrelation, Example1CanReachNegativeR1Improvement) {
  // Brute-force seed sweep: count perturbations with r1 < 0 and
  // det R^ < det R~.
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const CorrelationMatrix p = perturb_correlation(ex1(), 0.02, seed);
    const BoundsReport rep = bounds_report(p);
    if (rep.stats.r1 < 0.0 && rep.det_Rhat < rep.det_Rtilde) ++hits;
  }
  EXPECT_GT(hits, 0);

  // Pinned from that sweep.
  const BoundsReport pinned = bounds_report(perturb_correlation(ex1(), 0.02, 0));
  EXPECT_LT(pinned.stats.r1, 0.0);
  EXPECT_LT(pinned.det_Rhat, pinned.det_Rtilde);
}

TEST(Objectives, Definitions) {
  EXPECT_NEAR(p_violation_objective(ex3(), kInfExponent), 0.006, 1e-14);
  EXPECT_FALSE(negative_r1_objective(ex1()).has_value());
  const auto o2 = negative_r1_objective(ex2());
  ASSERT_TRUE(o2.has_value());
  EXPECT_LT(*o2, 0.0);  // det R^ > det R~ in this example
}

TEST(SearchConfig, Validation) {
  auto kind = [](SearchConfig cfg) {
    try {
      validate_config(cfg);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::IoError;  // sentinel for "no error"
  };
  SearchConfig ok;
  EXPECT_EQ(kind(ok), ErrorKind::IoError);
  SearchConfig c = ok;
  c.budget = 0;
  EXPECT_EQ(kind(c), ErrorKind::InvalidConfig);
  c = ok;
  c.restarts = 0;
  EXPECT_EQ(kind(c), ErrorKind::InvalidConfig);
  c = ok;
  c.perturb_scale = 1.0;
  EXPECT_EQ(kind(c), ErrorKind::InvalidConfig);
  c = ok;
  c.p = 1.0;
  EXPECT_EQ(kind(c), ErrorKind::InvalidExponent);
  c = ok;
  c.start = ex1();
  c.n = 4;
  EXPECT_EQ(kind(c), ErrorKind::InvalidConfig);
}

TEST(SearchP, SeededAtFinalExampleFindsItWithAnyBudget) {
  for (std::size_t budget : {1u, 10u, 200u}) {
    SearchConfig cfg;
    cfg.n = 3;
    cfg.p = kInfExponent;
    cfg.budget = budget;
    cfg.start = ex3();
    const SearchResult r = search_p_counterexample(cfg);
    EXPECT_TRUE(r.found);
    EXPECT_GE(r.objective, 0.006 - 1e-6);
    EXPECT_EQ(r.iterations_used, budget);
    expect_result_consistent(r, [](const CorrelationMatrix& m) { return p_violation_objective(m, kInfExponent); });
  }
}

TEST(SearchP, RandomStartsFindInfinityViolation) {
  SearchConfig cfg;
  cfg.n = 3;
  cfg.p = kInfExponent;
  cfg.budget = 5000;
  cfg.restarts = 20;
  cfg.seed = 7;
  const SearchResult r = search_p_counterexample(cfg);
  EXPECT_TRUE(r.found);
  EXPECT_EQ(r.seed, 7u);
  EXPECT_EQ(r.iterations_used, 5000u * 20u);
  expect_result_consistent(r, [](const CorrelationMatrix& m) { return p_violation_objective(m, kInfExponent); });
}

TEST(SearchP, GuaranteedRegimeIsNegativeControl) {
  SearchConfig cfg;
  cfg.n = 3;
  cfg.p = 2.0;
  cfg.budget = 2000;
  cfg.restarts = 4;
  const SearchResult r = search_p_counterexample(cfg);
  EXPECT_FALSE(r.found);
  EXPECT_LE(r.objective, 1e-9);
}

TEST(SearchP, SerialAndParallelAgreeBitForBit) {
  SearchConfig cfg;
  cfg.n = 4;
  cfg.p = 3.0;
  cfg.budget = 300;
  cfg.restarts = 6;
  cfg.seed = 99;
  const SearchResult s = search_p_counterexample(cfg, Execution::Serial);
  const SearchResult p = search_p_counterexample(cfg, Execution::Parallel);
  EXPECT_EQ(s.best_matrix, p.best_matrix);
  EXPECT_EQ(s.objective, p.objective);
  EXPECT_EQ(s.iterations_used, p.iterations_used);
  EXPECT_EQ(s.found, p.found);
}

TEST(SearchNegativeR1, PerturbedFromExample1Finds) {
  SearchConfig cfg;
  cfg.n = 3;
  cfg.budget = 200;
  cfg.restarts = 3;
  cfg.perturb_scale = 0.02;
  cfg.start = ex1();
  const SearchResult r = search_improvement_with_negative_r1(cfg);
  EXPECT_TRUE(r.found);
  const BoundsReport rep = bounds_report(r.best_matrix);
  EXPECT_LT(rep.stats.r1, 0.0);
  EXPECT_LT(rep.det_Rhat, rep.det_Rtilde);
  expect_result_consistent(r, [](const CorrelationMatrix& m) { return *negative_r1_objective(m); });
}

TEST(SearchNegativeR1, Example2WithTinyBudgetStaysNegative) {
  SearchConfig cfg;
  cfg.n = 3;
  cfg.budget = 3;
  cfg.perturb_scale = 0.01;
  cfg.start = ex2();
  const SearchResult r = search_improvement_with_negative_r1(cfg);
  EXPECT_FALSE(r.found);
  EXPECT_LT(r.objective, 0.0);
}

TEST(SearchNegativeR1, IdentityWithUnitBudgetIsInfeasible) {
  SearchConfig cfg;
  cfg.n = 3;
  cfg.budget = 1;
  cfg.restarts = 1;
  cfg.start = validate_correlation(SymMatrix::identity(3));
  const SearchResult r = search_improvement_with_negative_r1(cfg);
  EXPECT_FALSE(r.found);
  EXPECT_TRUE(std::isinf(r.objective));
  EXPECT_EQ(r.iterations_used, 1u);
}

TEST(SearchNegativeR1, RandomStartsFind) {
  SearchConfig cfg;
  cfg.n = 3;
  cfg.budget = 2000;
  cfg.seed = 1;
  const SearchResult r = search_improvement_with_negative_r1(cfg);
  EXPECT_TRUE(r.found);
  expect_result_consistent(r, [](const CorrelationMatrix& m) { return *negative_r1_objective(m); });
}

TEST(SearchDeterminism, RepeatedCallsIdentical) {
  SearchConfig cfg;
  cfg.n = 5;
  cfg.budget = 150;
  cfg.restarts = 3;
  cfg.seed = 5;
  const SearchResult a = search_improvement_with_negative_r1(cfg);
  const SearchResult b = search_improvement_with_negative_r1(cfg);
  EXPECT_EQ(a.best_matrix, b.best_matrix);
  EXPECT_EQ(a.objective, b.objective);
}
