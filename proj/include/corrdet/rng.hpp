#pragma once

#include <cstdint>
#include <random>

namespace corrdet {

/// SplitMix64 finalizer applied to seed + golden-ratio * (stream + 1).
/// Used to derive independent seeds for restarts, sweep items and steps.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Seeded generator with fully specified output: MT19937-64 (whose output
/// sequence is fixed by the C++ standard) plus uniform and normal
/// conversions defined here rather than by the standard library's
/// implementation-specific distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// 53-bit uniform in [0, 1).
  double uniform01() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }
  /// Standard normal via Box-Muller; pairs are cached.
  double normal() noexcept;

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace corrdet
