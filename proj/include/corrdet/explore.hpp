#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "corrdet/corrmodel.hpp"

namespace corrdet {

/// Serial is the reference path; Parallel fans independent work out over
/// OpenMP threads and must produce bit-identical results.
enum class Execution { Serial, Parallel };

// A search counts as successful when its objective exceeds this.
inline constexpr double kFoundThreshold = 1e-9;

struct SearchConfig {
  std::size_t n = 3;
  double p = kInfExponent;
  // Objective evaluations per restart, the starting point included.
  std::size_t budget = 1000;
  std::uint64_t seed = 42;
  double perturb_scale = 0.05;
  std::size_t restarts = 1;
  // Restart 0 begins exactly here; later restarts begin at a perturbation
  // of it. Without a start every restart draws random_correlation().
  std::optional<CorrelationMatrix> start;
};

/// Throws InvalidConfig unless budget >= 1, restarts >= 1,
/// perturb_scale in (0, 1), n >= 2 and start (if any) has dimension n.
void validate_config(const SearchConfig& cfg);

struct SearchResult {
  CorrelationMatrix best_matrix;
  // -inf when no feasible point was visited (negative-r1 task only).
  double objective;
  std::size_t iterations_used;
  std::uint64_t seed;
  bool found;
};

/// Gram sampler: n standard-normal rows of length n, each scaled to unit
/// norm, R = V V^T with the diagonal forced to 1. Deterministic in
/// (n, seed). A row with norm < 1e-12 is redrawn up to 16 times before
/// DegenerateRow is thrown.
CorrelationMatrix random_correlation(std::size_t n, std::uint64_t seed);

/// Adds uniform(-scale, scale) noise to each off-diagonal pair, clips to
/// [-1, 1], floors the eigenvalues at 1e-10, reassembles and rescales to a
/// unit diagonal.
CorrelationMatrix perturb_correlation(const CorrelationMatrix& r, double scale, std::uint64_t seed);

/// det R - f(n, r_p); positive means det R <= f(n, r_p) fails.
double p_violation_objective(const CorrelationMatrix& r, double p);

/// f(n, r1) - f(n, r2) when r1 < 0, nullopt otherwise.
std::optional<double> negative_r1_objective(const CorrelationMatrix& r);

/// Multi-restart hill climbing on p_violation_objective. The step scale
/// halves after 20 consecutive rejections (floor 1e-4).
SearchResult search_p_counterexample(const SearchConfig& cfg, Execution exec = Execution::Parallel);

/// Same climber on negative_r1_objective; proposals with r1 >= 0 are
/// rejected.
SearchResult search_improvement_with_negative_r1(const SearchConfig& cfg, Execution exec = Execution::Parallel);

}  // namespace corrdet
