#include "corrdet/sweep.hpp"

#include <cmath>
#include <exception>

#include "corrdet/bounds.hpp"
#include "corrdet/error.hpp"
#include "corrdet/rng.hpp"

namespace corrdet {

std::string_view to_string(SweepCheck c) {
  switch (c) {
    case SweepCheck::Olkin: return "olkin";
    case SweepCheck::SandwichLower: return "sandwich_lower";
    case SweepCheck::SandwichUpper: return "sandwich_upper";
    case SweepCheck::Improvement: return "improvement_r1_nonneg";
    case SweepCheck::ClassicalOlkin: return "classical_majorization";
    case SweepCheck::VmSandwichLeft: return "vm_sandwich_left";
    case SweepCheck::VmSandwichRight: return "vm_sandwich_right";
    case SweepCheck::TraceIdentity: return "trace_identity";
    case SweepCheck::FrobeniusIdentity: return "frobenius_identity";
    case SweepCheck::GuaranteedP: return "guaranteed_p";
  }
  return "unknown";
}

std::size_t SweepSummary::total_failures() const noexcept {
  std::size_t total = 0;
  for (const auto& c : checks) total += c.failures;
  return total;
}

void SweepSummary::merge(const SweepSummary& o) noexcept {
  matrices += o.matrices;
  for (std::size_t i = 0; i < kSweepCheckCount; ++i) checks[i].merge(o.checks[i]);
}

std::uint64_t sweep_seed(std::uint64_t base, std::size_t n, std::size_t index) noexcept {
  return derive_seed(base, (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint64_t>(index));
}

void check_matrix(const CorrelationMatrix& r, const SweepConfig& cfg, SweepSummary& out) {
  const double tol = cfg.tol;
  const auto n = static_cast<double>(r.size());
  const BoundsReport rep = bounds_report(r);
  const Spectrum spec = eigenvalues_symmetric(r.matrix(), SortOrder::Ascending);

  ++out.matrices;
  out[SweepCheck::Olkin].record(rep.det_Rtilde - rep.det_R, rep.det_R <= rep.det_Rtilde + tol);
  out[SweepCheck::SandwichLower].record(rep.det_R - rep.det_Rbar, rep.det_Rbar <= rep.det_R + tol);
  out[SweepCheck::SandwichUpper].record(rep.det_Rhat - rep.det_R, rep.det_R <= rep.det_Rhat + tol);
  if (rep.r1_nonnegative) {
    out[SweepCheck::Improvement].record(rep.det_Rtilde - rep.det_Rhat,
                                        rep.det_Rhat <= rep.det_Rtilde + kEqualBoundsBand);
  }

  const MajorizationVerdict classical = majorizes(spec, equicorrelation_spectrum(r.size(), rep.stats.r1), tol);
  out[SweepCheck::ClassicalOlkin].record(std::min(classical.min_slack(), -std::abs(classical.equality_residuals[0])),
                                         classical.holds);

  const SandwichVerdict vm = verify_vm_sandwich(spec, rep.stats, tol);
  auto vm_margin = [](const MajorizationVerdict& v) {
    double m = v.min_slack();
    for (double e : v.equality_residuals) m = std::min(m, -std::abs(e));
    return m;
  };
  out[SweepCheck::VmSandwichLeft].record(vm_margin(vm.left), vm.left.holds);
  out[SweepCheck::VmSandwichRight].record(vm_margin(vm.right), vm.right.holds);

  const double trace_res = std::abs(spec.sum() - n);
  out[SweepCheck::TraceIdentity].record(-trace_res, trace_res <= 1e-9 * n);
  const double frob_res = std::abs(spec.sum_sq() - (n + n * (n - 1.0) * rep.stats.r2 * rep.stats.r2));
  out[SweepCheck::FrobeniusIdentity].record(-frob_res, frob_res <= 1e-9 * n * n);

  for (double p : cfg.guaranteed_p) {
    try {
      const PBoundResult pb = p_bound(r, rep.det_R, p, tol);
      out[SweepCheck::GuaranteedP].record(pb.margin, pb.bound_holds);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InternalInconsistency) throw;
      out[SweepCheck::GuaranteedP].record(e.value().value_or(-1.0), false);
    }
  }
}

SweepSummary run_sweep(const SweepConfig& cfg, Execution exec) {
  if (cfg.n_min < 2 || cfg.n_max < cfg.n_min) throw Error(ErrorKind::InvalidConfig, "need 2 <= n_min <= n_max");
  if (cfg.count < 1) throw Error(ErrorKind::InvalidConfig, "count must be at least 1");

  const std::size_t dims = cfg.n_max - cfg.n_min + 1;
  const auto total = static_cast<long long>(dims * cfg.count);
  auto item = [&](long long flat, SweepSummary& acc) {
    const std::size_t n = cfg.n_min + static_cast<std::size_t>(flat) / cfg.count;
    const std::size_t index = static_cast<std::size_t>(flat) % cfg.count;
    check_matrix(random_correlation(n, sweep_seed(cfg.seed, n, index)), cfg, acc);
  };

  SweepSummary summary;
  if (exec == Execution::Serial) {
    for (long long i = 0; i < total; ++i) item(i, summary);
    return summary;
  }

  // Counts and minima merge exactly, so thread scheduling cannot change
  // the result.
  std::exception_ptr error;
#pragma omp parallel
  {
    SweepSummary local;
#pragma omp for schedule(static)
    for (long long i = 0; i < total; ++i) {
      try {
        item(i, local);
      } catch (...) {
#pragma omp critical(corrdet_sweep_error)
        if (!error) error = std::current_exception();
      }
    }
#pragma omp critical(corrdet_sweep_merge)
    summary.merge(local);
  }
  if (error) std::rethrow_exception(error);
  return summary;
}

}  // namespace corrdet
