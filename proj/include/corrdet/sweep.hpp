#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

#include "corrdet/corrmodel.hpp"
#include "corrdet/explore.hpp"
#include "corrdet/majorization.hpp"

namespace corrdet {

struct SweepConfig {
  std::size_t n_min = 2;
  std::size_t n_max = 8;
  std::size_t count = 1000;  // matrices per dimension
  std::uint64_t seed = 42;
  double tol = kDefaultTolerance;
  std::vector<double> guaranteed_p{1.25, 1.5, 1.75, 2.0};
};

/// Failure count and the smallest observed margin for one property.
/// Margins are signed so that negative means "on the wrong side".
struct CheckTally {
  std::size_t failures = 0;
  double worst_margin = std::numeric_limits<double>::infinity();

  void record(double margin, bool ok) noexcept {
    if (!ok) ++failures;
    if (margin < worst_margin) worst_margin = margin;
  }
  void merge(const CheckTally& o) noexcept {
    failures += o.failures;
    if (o.worst_margin < worst_margin) worst_margin = o.worst_margin;
  }
};

enum class SweepCheck {
  Olkin,             // det R <= f(n, r1)
  SandwichLower,     // f(n, -r2) <= det R
  SandwichUpper,     // det R <= f(n, r2)
  Improvement,       // r1 >= 0  =>  f(n, r2) <= f(n, r1)
  ClassicalOlkin,    // lambda(R) majorizes lambda(E_n(r1))
  VmSandwichLeft,      // lambda(E_n(-r2)) vm lambda(R)
  VmSandwichRight,     // lambda(R) vm lambda(E_n(r2))
  TraceIdentity,     // sum lambda = n
  FrobeniusIdentity, // sum lambda^2 = n + n(n-1) r2^2
  GuaranteedP,       // det R <= f(n, r_p), p in (1, 2]
};
inline constexpr std::size_t kSweepCheckCount = 10;

std::string_view to_string(SweepCheck c);

struct SweepSummary {
  std::size_t matrices = 0;
  std::array<CheckTally, kSweepCheckCount> checks{};

  CheckTally& operator[](SweepCheck c) noexcept { return checks[static_cast<std::size_t>(c)]; }
  const CheckTally& operator[](SweepCheck c) const noexcept { return checks[static_cast<std::size_t>(c)]; }
  std::size_t total_failures() const noexcept;
  void merge(const SweepSummary& o) noexcept;
};

/// Seed of the index-th sample of dimension n.
std::uint64_t sweep_seed(std::uint64_t base, std::size_t n, std::size_t index) noexcept;

/// Runs every check on one matrix and folds the result into `out`.
void check_matrix(const CorrelationMatrix& r, const SweepConfig& cfg, SweepSummary& out);

/// All (n, index) pairs in [n_min, n_max] x [0, count).
SweepSummary run_sweep(const SweepConfig& cfg, Execution exec = Execution::Parallel);

}  // namespace corrdet
