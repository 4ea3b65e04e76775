#include "corrdet/explore.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <vector>

#include <fmt/format.h>

#include "corrdet/error.hpp"
#include "corrdet/linalg.hpp"
#include "corrdet/rng.hpp"

namespace corrdet {
namespace {

constexpr int kMaxRowRedraws = 16;
constexpr double kRowNormFloor = 1e-12;
constexpr double kEigenFloor = 1e-10;
constexpr int kStallLimit = 20;
constexpr double kMinScale = 1e-4;

double clip_unit(double v) { return std::clamp(v, -1.0, 1.0); }

// Forces exact unit diagonal and [-1, 1] off-diagonals, then validates.
CorrelationMatrix finish(const std::vector<double>& a, std::size_t n) {
  SymMatrix m = SymMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, clip_unit(0.5 * (a[i * n + j] + a[j * n + i])));
  return validate_correlation(std::move(m));
}

using Objective = std::function<std::optional<double>(const CorrelationMatrix&)>;

struct RestartOutcome {
  std::optional<CorrelationMatrix> best;
  double objective = -std::numeric_limits<double>::infinity();
  std::size_t evaluations = 0;
};

RestartOutcome climb(const SearchConfig& cfg, const Objective& objective, std::size_t restart) {
  const std::uint64_t restart_seed = derive_seed(cfg.seed, restart);
  CorrelationMatrix current = [&] {
    if (!cfg.start) return random_correlation(cfg.n, restart_seed);
    if (restart == 0) return *cfg.start;
    return perturb_correlation(*cfg.start, cfg.perturb_scale, derive_seed(restart_seed, 0));
  }();

  constexpr double kInfeasible = -std::numeric_limits<double>::infinity();
  double current_obj = objective(current).value_or(kInfeasible);
  RestartOutcome out;
  out.evaluations = 1;

  double scale = cfg.perturb_scale;
  int stall = 0;
  for (std::size_t step = 1; step < cfg.budget; ++step) {
    CorrelationMatrix cand = perturb_correlation(current, scale, derive_seed(restart_seed, step));
    ++out.evaluations;
    const std::optional<double> obj = objective(cand);
    if (obj && *obj > current_obj) {
      current = std::move(cand);
      current_obj = *obj;
      stall = 0;
    } else if (++stall >= kStallLimit) {
      scale = std::max(scale * 0.5, kMinScale);
      stall = 0;
    }
  }
  out.best = std::move(current);
  out.objective = current_obj;
  return out;
}

SearchResult run_search(const SearchConfig& cfg, const Objective& objective, Execution exec) {
  validate_config(cfg);
  std::vector<RestartOutcome> outcomes(cfg.restarts);

  if (exec == Execution::Serial) {
    for (std::size_t r = 0; r < cfg.restarts; ++r) outcomes[r] = climb(cfg, objective, r);
  } else {
    std::vector<std::exception_ptr> errors(cfg.restarts);
    const auto restarts = static_cast<long long>(cfg.restarts);
#pragma omp parallel for schedule(dynamic)
    for (long long r = 0; r < restarts; ++r) {
      const auto idx = static_cast<std::size_t>(r);
      try {
        outcomes[idx] = climb(cfg, objective, idx);
      } catch (...) {
        errors[idx] = std::current_exception();
      }
    }
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  // Max by objective; ties go to the lowest restart index.
  std::size_t best = 0;
  std::size_t evaluations = 0;
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    evaluations += outcomes[r].evaluations;
    if (outcomes[r].objective > outcomes[best].objective) best = r;
  }
  const double obj = outcomes[best].objective;
  return SearchResult{*outcomes[best].best, obj, evaluations, cfg.seed, obj > kFoundThreshold};
}

}  // namespace

void validate_config(const SearchConfig& cfg) {
  if (cfg.n < 2) throw Error(ErrorKind::InvalidConfig, "n must be at least 2");
  if (cfg.budget < 1) throw Error(ErrorKind::InvalidConfig, "budget must be at least 1");
  if (cfg.restarts < 1) throw Error(ErrorKind::InvalidConfig, "restarts must be at least 1");
  if (!(cfg.perturb_scale > 0.0 && cfg.perturb_scale < 1.0)) {
    throw Error(ErrorKind::InvalidConfig, "perturb_scale must lie in (0, 1)");
  }
  if (!(cfg.p > 1.0)) throw Error(ErrorKind::InvalidExponent, fmt::format("exponent {} must exceed 1", cfg.p));
  if (cfg.start && cfg.start->size() != cfg.n) {
    throw Error(ErrorKind::InvalidConfig, "start matrix dimension does not match n");
  }
}

CorrelationMatrix random_correlation(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorKind::DimensionTooSmall, "random_correlation needs n >= 2");
  Rng rng(seed);
  std::vector<double> rows(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    double* row = rows.data() + i * n;
    double norm = 0.0;
    for (int attempt = 0;; ++attempt) {
      double ss = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        row[k] = rng.normal();
        ss += row[k] * row[k];
      }
      norm = std::sqrt(ss);
      if (norm >= kRowNormFloor) break;
      if (attempt == kMaxRowRedraws) throw Error(ErrorKind::DegenerateRow, fmt::format("row {} kept vanishing", i));
    }
    for (std::size_t k = 0; k < n; ++k) row[k] /= norm;
  }

  std::vector<double> gram(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < n; ++k) dot += rows[i * n + k] * rows[j * n + k];
      gram[i * n + j] = gram[j * n + i] = dot;
    }
  }
  return finish(gram, n);
}

CorrelationMatrix perturb_correlation(const CorrelationMatrix& r, double scale, std::uint64_t seed) {
  const std::size_t n = r.size();
  Rng rng(seed);
  SymMatrix noisy = r.matrix();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) noisy.set(i, j, clip_unit(noisy(i, j) + rng.uniform(-scale, scale)));

  const EigenDecomposition eig = jacobi_eigen(noisy);
  std::vector<double> a(n * n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = std::max(eig.values[k], kEigenFloor);
    for (std::size_t i = 0; i < n; ++i) {
      const double vik = eig.vectors[i * n + k] * lambda;
      for (std::size_t j = 0; j < n; ++j) a[i * n + j] += vik * eig.vectors[j * n + k];
    }
  }

  std::vector<double> inv_sqrt_diag(n);
  for (std::size_t i = 0; i < n; ++i) inv_sqrt_diag[i] = 1.0 / std::sqrt(a[i * n + i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] *= inv_sqrt_diag[i] * inv_sqrt_diag[j];
  return finish(a, n);
}

double p_violation_objective(const CorrelationMatrix& r, double p) {
  return determinant(r.matrix()) - f_bound(r.size(), r_p(r, p));
}

std::optional<double> negative_r1_objective(const CorrelationMatrix& r) {
  const OffDiagStats s = off_diag_stats(r);
  if (!(s.r1 < 0.0)) return std::nullopt;
  return f_bound(r.size(), s.r1) - f_bound(r.size(), s.r2);
}

SearchResult search_p_counterexample(const SearchConfig& cfg, Execution exec) {
  const double p = cfg.p;
  return run_search(
      cfg, [p](const CorrelationMatrix& r) -> std::optional<double> { return p_violation_objective(r, p); }, exec);
}

SearchResult search_improvement_with_negative_r1(const SearchConfig& cfg, Execution exec) {
  return run_search(cfg, negative_r1_objective, exec);
}

}  // namespace corrdet
