#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "corrdet/error.hpp"
#include "corrdet/explore.hpp"
#include "corrdet/majorization.hpp"
#include "oracles.hpp"

using namespace corrdet;

namespace {

const SymMatrix kEx1 = SymMatrix::from_rows({{1, 0, -0.5}, {0, 1, 0.5}, {-0.5, 0.5, 1}});
const SymMatrix kEx2 = SymMatrix::from_rows({{1, -0.3, -0.3}, {-0.3, 1, -0.5}, {-0.3, -0.5, 1}});

std::vector<double> oracle_spectrum(const SymMatrix& m) {
  const auto r = oracle::char_poly_eigenvalues3(m);
  return {r.begin(), r.end()};
}

}  // namespace

TEST(Majorizes, Reflexive) {
  const std::vector<double> x{3.0, -1.0, 0.5, 2.0};
  const MajorizationVerdict v = majorizes(x, x);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.kind, MajorizationKind::Classical);
  ASSERT_EQ(v.slacks.size(), 3u);
  for (double s : v.slacks) EXPECT_EQ(s, 0.0);
}

TEST(Majorizes, TextbookExtreme) {
  const std::vector<double> x{2, 0};
  const std::vector<double> y{1, 1};
  const MajorizationVerdict v = majorizes(x, y);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.slacks, (std::vector<double>{1.0}));
  EXPECT_FALSE(majorizes(y, x).holds);
}

TEST(Majorizes, UnequalTotalsFail) {
  const std::vector<double> x{2, 1};
  const std::vector<double> y{1, 1};
  const MajorizationVerdict v = majorizes(x, y);
  EXPECT_FALSE(v.holds);
  EXPECT_DOUBLE_EQ(v.equality_residuals[0], 1.0);
}

TEST(Majorizes, SpectrumOfExample1OverOlkinMatrix) {
  // lambda(R) from the characteristic polynomial, lambda(R~) = (1, 1, 1).
  const std::vector<double> lr = oracle_spectrum(kEx1);
  const std::vector<double> tilde{1, 1, 1};
  const MajorizationVerdict v = majorizes(lr, tilde);
  EXPECT_TRUE(v.holds);
  ASSERT_EQ(v.slacks.size(), 2u);
  EXPECT_NEAR(v.slacks[0], std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(v.slacks[1], std::sqrt(0.5), 1e-12);
}

TEST(Majorizes, Errors) {
  const std::vector<double> a{1, 2};
  const std::vector<double> b{1};
  EXPECT_THROW(majorizes(a, b), Error);
  try {
    majorizes(a, b);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LengthMismatch);
  }
}

TEST(VarianceMajorizes, Reflexive) {
  const std::vector<double> x{0.2, 1.0, 1.8, 1.0};
  const MajorizationVerdict v = variance_majorizes(x, x);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.kind, MajorizationKind::Variance);
  EXPECT_EQ(v.equality_residuals.size(), 2u);
}

TEST(VarianceMajorizes, Example1LowerSide) {
  const double r2 = std::sqrt(1.0 / 6.0);
  const std::vector<double> bar{1 - 2 * r2, 1 + r2, 1 + r2};
  const std::vector<double> lr = oracle_spectrum(kEx1);
  // Both: mean 1, total variance (4 - 3) / 3 = 1/3.
  EXPECT_NEAR(oracle::raw_moment_variance(lr, 3), 1.0 / 3.0, 1e-12);
  const MajorizationVerdict v = variance_majorizes(bar, lr);
  EXPECT_TRUE(v.holds);
  ASSERT_EQ(v.slacks.size(), 1u);
  EXPECT_NEAR(v.slacks[0], 0.25, 1e-12);  // 0.375 - 0.125
}

TEST(VarianceMajorizes, Example1UpperSide) {
  const double r2 = std::sqrt(1.0 / 6.0);
  const std::vector<double> hat{1 - r2, 1 - r2, 1 + 2 * r2};
  const MajorizationVerdict v = variance_majorizes(oracle_spectrum(kEx1), hat);
  EXPECT_TRUE(v.holds);
  ASSERT_EQ(v.slacks.size(), 1u);
  EXPECT_NEAR(v.slacks[0], 0.125, 1e-12);
}

TEST(VarianceMajorizes, TwoElementReducesToEqualities) {
  const std::vector<double> x{0.4, 1.6};
  const std::vector<double> y{1.6, 0.4};
  const MajorizationVerdict v = variance_majorizes(x, y);
  EXPECT_TRUE(v.holds);
  EXPECT_TRUE(v.slacks.empty());
  const std::vector<double> z{0.5, 1.5};
  EXPECT_FALSE(variance_majorizes(x, z).holds);
}

TEST(VarianceMajorizes, Errors) {
  const std::vector<double> one{1.0};
  EXPECT_THROW(variance_majorizes(one, one), Error);
  try {
    variance_majorizes(one, one);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LengthTooSmall);
  }
  const std::vector<double> a{1, 2, 3};
  const std::vector<double> b{1, 2};
  try {
    variance_majorizes(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LengthMismatch);
  }
}

TEST(VarianceMajorizes, SlacksMatchRawMomentOracle) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 7;
    std::vector<double> x(n), y(n);
    for (auto& v : x) v = rng.uniform(-2, 2);
    for (auto& v : y) v = rng.uniform(-2, 2);
    const MajorizationVerdict v = variance_majorizes(x, y);
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    for (std::size_t k = 2; k < n; ++k) {
      EXPECT_NEAR(v.slacks[k - 2], oracle::raw_moment_variance(x, k) - oracle::raw_moment_variance(y, k), 1e-12);
    }
  }
}

TEST(MajorizationProperties, PermutationInvarianceAndAntisymmetry) {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 6;
    // y is a doubly-stochastic average of x, so x majorizes y.
    std::vector<double> x(n);
    for (auto& v : x) v = rng.uniform(-1, 3);
    std::vector<double> y(n);
    const double mix = rng.uniform01();
    for (std::size_t i = 0; i < n; ++i) y[i] = mix * x[i] + (1 - mix) * x[(i + 1) % n];

    const MajorizationVerdict base = majorizes(x, y);
    EXPECT_TRUE(base.holds);

    std::vector<double> xp = x;
    std::vector<double> yp = y;
    std::reverse(xp.begin(), xp.end());
    std::rotate(yp.begin(), yp.begin() + 1, yp.end());
    const MajorizationVerdict perm = majorizes(xp, yp);
    EXPECT_EQ(perm.holds, base.holds);
    EXPECT_EQ(perm.slacks, base.slacks);
    EXPECT_EQ(variance_majorizes(xp, yp).holds, variance_majorizes(x, y).holds);

    if (majorizes(y, x).holds) {
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(x[i], y[i], 1e-9);
    }
  }
}

TEST(VmSandwich, Identity) {
  const SandwichVerdict v = verify_vm_sandwich(validate_correlation(SymMatrix::identity(4)));
  EXPECT_TRUE(v.left.holds);
  EXPECT_TRUE(v.right.holds);
  for (double s : v.left.slacks) EXPECT_NEAR(s, 0.0, 1e-15);
  for (double s : v.right.slacks) EXPECT_NEAR(s, 0.0, 1e-15);
}

TEST(VmSandwich, WorkedExamples) {
  for (const SymMatrix& m : {kEx1, kEx2}) {
    const SandwichVerdict v = verify_vm_sandwich(validate_correlation(m));
    EXPECT_TRUE(v.left.holds);
    EXPECT_TRUE(v.right.holds);
  }
  const SandwichVerdict v1 = verify_vm_sandwich(validate_correlation(kEx1));
  EXPECT_NEAR(v1.left.slacks[0], 0.25, 1e-12);
  EXPECT_NEAR(v1.right.slacks[0], 0.125, 1e-12);
}

TEST(VmSandwich, HoldsOnRandomSample) {
  for (std::size_t n = 2; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
      const CorrelationMatrix r = random_correlation(n, seed * 101 + n);
      const SandwichVerdict v = verify_vm_sandwich(r, 1e-9);
      EXPECT_TRUE(v.holds()) << "n " << n << " seed " << seed;
      const auto spec = eigenvalues_symmetric(r.matrix(), SortOrder::Descending);
      EXPECT_TRUE(majorizes(spec, equicorrelation_spectrum(n, off_diag_stats(r).r1)).holds);
    }
  }
}
