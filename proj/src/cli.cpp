#include "corrdet/cli.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "corrdet/bounds.hpp"
#include "corrdet/error.hpp"
#include "corrdet/explore.hpp"
#include "corrdet/majorization.hpp"
#include "corrdet/matrix_io.hpp"
#include "corrdet/sweep.hpp"

namespace corrdet::cli {
namespace {

using Json = nlohmann::ordered_json;

struct GlobalFlags {
  bool json = false;
  double tol = kDefaultTolerance;
  std::uint64_t seed = 42;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::NotSymmetric:
    case ErrorKind::InvalidConfig:
    case ErrorKind::InvalidExponent:
    case ErrorKind::LengthMismatch:
      return kUsage;
    case ErrorKind::DimensionTooSmall:
    case ErrorKind::NotUnitDiagonal:
    case ErrorKind::OffDiagonalOutOfRange:
    case ErrorKind::NotPositiveSemidefinite:
      return kValidation;
    case ErrorKind::IoError:
      return kIo;
    default:
      return kGuaranteeFailed;
  }
}

double parse_exponent(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "Inf") return kInfExponent;
  double p = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), p);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::InvalidConfig, fmt::format("--p expects a number or 'inf', got '{}'", s));
  }
  if (!(p > 1.0)) throw Error(ErrorKind::InvalidExponent, fmt::format("--p must exceed 1, got {}", s));
  return p;
}

Json exponent_json(double p) { return std::isinf(p) ? Json("inf") : Json(p); }

Json spectrum_json(const Spectrum& s) { return Json(s.values); }

Json matrix_json(const SymMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) rows.push_back(std::vector<double>(m.row(i).begin(), m.row(i).end()));
  return rows;
}

CorrelationMatrix load_correlation(const std::string& path) {
  return validate_correlation(read_matrix_csv(path));
}

// analyze ------------------------------------------------------------------

int cmd_analyze(const std::string& path, const GlobalFlags& g, std::ostream& out) {
  const CorrelationMatrix r = load_correlation(path);
  const BoundsReport rep = bounds_report(r);
  const Spectrum spec_r = eigenvalues_symmetric(r.matrix(), SortOrder::Ascending);
  const SandwichVerdict t1 = verify_vm_sandwich(spec_r, rep.stats, g.tol);
  const std::size_t n = rep.n;

  if (g.json) {
    Json j;
    j["n"] = n;
    j["r1"] = rep.stats.r1;
    j["r2"] = rep.stats.r2;
    j["r_inf"] = rep.stats.r_inf;
    j["det_R"] = rep.det_R;
    j["det_Rtilde"] = rep.det_Rtilde;
    j["det_Rhat"] = rep.det_Rhat;
    j["det_Rbar"] = rep.det_Rbar;
    j["olkin_holds"] = rep.olkin_holds;
    j["sandwich_holds"] = rep.sandwich_holds;
    j["improves_olkin"] = rep.improves_olkin;
    j["theorem1"] = {{"left_holds", t1.left.holds}, {"right_holds", t1.right.holds}, {"min_slack", t1.min_slack()}};
    j["spectra"] = {{"R", spectrum_json(spec_r)},
                    {"Rhat", spectrum_json(equicorrelation_spectrum(n, rep.stats.r2))},
                    {"Rbar", spectrum_json(equicorrelation_spectrum(n, -rep.stats.r2))},
                    {"Rtilde", spectrum_json(equicorrelation_spectrum(n, rep.stats.r1))}};
    out << dump_json(j) << '\n';
  } else {
    const auto row = [&](std::string_view label, double v) { fmt::print(out, "  {:<26}{:>16.10f}\n", label, v); };
    const auto flag = [&](std::string_view label, bool v) { fmt::print(out, "  {:<26}{:>16}\n", label, v ? "yes" : "no"); };
    const auto spectrum = [&](std::string_view label, const Spectrum& s) {
      fmt::print(out, "  {:<8}", label);
      for (double v : s.values) fmt::print(out, " {:>13.10f}", v);
      out << '\n';
    };
    fmt::print(out, "correlation matrix, n = {}\n\n", n);
    row("r1 (mean off-diagonal)", rep.stats.r1);
    row("r2 (quadratic mean)", rep.stats.r2);
    row("r_inf (max |r_ij|)", rep.stats.r_inf);
    row("det R", rep.det_R);
    row("det R~ = f(r1)  [Olkin]", rep.det_Rtilde);
    row("det R^ = f(r2)", rep.det_Rhat);
    row("det R- = f(-r2)", rep.det_Rbar);
    out << '\n';
    flag("olkin bound holds", rep.olkin_holds);
    flag("sandwich holds", rep.sandwich_holds);
    flag("vm lower (R- vm R)", t1.left.holds);
    flag("vm upper (R vm R^)", t1.right.holds);
    flag("improves olkin", rep.improves_olkin);
    if (std::isfinite(t1.min_slack())) row("vm min slack", t1.min_slack());
    out << "\n  spectra (ascending)\n";
    spectrum("R", spec_r);
    spectrum("R~", equicorrelation_spectrum(n, rep.stats.r1));
    spectrum("R^", equicorrelation_spectrum(n, rep.stats.r2));
    spectrum("R-", equicorrelation_spectrum(n, -rep.stats.r2));
  }
  return rep.olkin_holds && rep.sandwich_holds && t1.holds() ? kSuccess : kGuaranteeFailed;
}

// sweep --------------------------------------------------------------------

int cmd_sweep(const SweepConfig& cfg, bool serial, const GlobalFlags& g, std::ostream& out) {
  const SweepSummary s = run_sweep(cfg, serial ? Execution::Serial : Execution::Parallel);
  if (g.json) {
    Json checks = Json::object();
    for (std::size_t i = 0; i < kSweepCheckCount; ++i) {
      const auto c = static_cast<SweepCheck>(i);
      checks[std::string(to_string(c))] = {{"failures", s[c].failures}, {"worst_margin", s[c].worst_margin}};
    }
    Json j{{"n_min", cfg.n_min}, {"n_max", cfg.n_max}, {"count", cfg.count}, {"seed", cfg.seed},
           {"tol", cfg.tol},     {"matrices", s.matrices}, {"failures", s.total_failures()}, {"checks", checks}};
    out << dump_json(j) << '\n';
  } else {
    fmt::print(out, "sweep n = {}..{}, {} per dimension, seed {}, tol {:g}\n", cfg.n_min, cfg.n_max, cfg.count,
               cfg.seed, cfg.tol);
    fmt::print(out, "  {:<24}{:>10}{:>18}\n", "check", "failures", "worst margin");
    for (std::size_t i = 0; i < kSweepCheckCount; ++i) {
      const auto c = static_cast<SweepCheck>(i);
      if (std::isinf(s[c].worst_margin)) {
        fmt::print(out, "  {:<24}{:>10}{:>18}\n", to_string(c), s[c].failures, "-");
      } else {
        fmt::print(out, "  {:<24}{:>10}{:>18.3e}\n", to_string(c), s[c].failures, s[c].worst_margin);
      }
    }
    fmt::print(out, "matrices: {}  failures: {}\n", s.matrices, s.total_failures());
  }
  return s.total_failures() == 0 ? kSuccess : kGuaranteeFailed;
}

// search -------------------------------------------------------------------

int cmd_search(const std::string& task, SearchConfig cfg, const std::string& p_text, const std::string& start_path,
               const std::string& out_path, bool serial, std::ostream& out) {
  cfg.p = parse_exponent(p_text);
  if (!start_path.empty()) cfg.start = load_correlation(start_path);
  const Execution exec = serial ? Execution::Serial : Execution::Parallel;
  const bool p_task = task == "p-counterexample";
  const SearchResult res = p_task ? search_p_counterexample(cfg, exec) : search_improvement_with_negative_r1(cfg, exec);

  const CorrelationMatrix& best = res.best_matrix;
  const OffDiagStats stats = off_diag_stats(best);
  Json j;
  j["task"] = task;
  j["n"] = cfg.n;
  if (p_task) j["p"] = exponent_json(cfg.p);
  j["budget"] = cfg.budget;
  j["restarts"] = cfg.restarts;
  j["seed"] = res.seed;
  j["found"] = res.found;
  j["objective"] = res.objective;
  j["iterations_used"] = res.iterations_used;
  j["det_R"] = determinant(best.matrix());
  j["r1"] = stats.r1;
  j["r2"] = stats.r2;
  j["r_inf"] = stats.r_inf;
  if (p_task) {
    j["det_Rp"] = f_bound(cfg.n, r_p(best, cfg.p));
  } else {
    j["det_Rtilde"] = f_bound(cfg.n, stats.r1);
    j["det_Rhat"] = f_bound(cfg.n, stats.r2);
  }
  j["best_matrix"] = matrix_json(best.matrix());
  out << dump_json(j) << '\n';

  if (!out_path.empty()) write_matrix_csv(out_path, best.matrix());
  return res.found ? kSuccess : kNotFound;
}

// gen ----------------------------------------------------------------------

int cmd_gen(std::size_t n, std::uint64_t seed, const std::string& out_path, std::ostream& out) {
  const CorrelationMatrix r = random_correlation(n, seed);
  if (out_path.empty()) {
    out << format_matrix_csv(r.matrix());
  } else {
    write_matrix_csv(out_path, r.matrix());
  }
  return kSuccess;
}

}  // namespace

int run_worked_examples(std::span<const WorkedExample> fixtures, bool json, std::ostream& out) {
  bool all_pass = true;
  Json reports = Json::array();
  for (const auto& f : fixtures) {
    const FixtureOutcome o = evaluate_fixture(f);
    all_pass = all_pass && o.pass;
    if (json) {
      Json checks = Json::array();
      for (const auto& c : o.checks) {
        checks.push_back({{"field", c.field}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
      }
      Json q = Json::object();
      for (const auto& [k, v] : o.quantities) q[k] = v;
      reports.push_back(
          {{"name", o.name}, {"matrix", matrix_json(f.matrix)}, {"quantities", q}, {"checks", checks}, {"pass", o.pass}});
      continue;
    }
    fmt::print(out, "{}\n", o.name);
    for (std::size_t i = 0; i < f.matrix.size(); ++i) {
      out << "   ";
      for (double v : f.matrix.row(i)) fmt::print(out, " {:>6.2f}", v);
      out << '\n';
    }
    for (const auto& [k, v] : o.quantities) fmt::print(out, "  {:<16}{:>14.6f}\n", k, v);
    for (const auto& c : o.checks) {
      fmt::print(out, "  {} {:<16} expected {:.4f}, got {:.6f}\n", c.pass ? "PASS" : "FAIL", c.field, c.expected,
                 c.actual);
    }
    out << '\n';
  }
  if (json) {
    out << dump_json(reports) << '\n';
  } else {
    fmt::print(out, "{}\n", all_pass ? "all fixtures PASS" : "some fixtures FAIL");
  }
  return all_pass ? kSuccess : kGuaranteeFailed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Determinant bounds for correlation matrices", "corrdet"};
  app.require_subcommand(1);

  GlobalFlags g;
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_option("--tol", g.tol, "Majorization / bound tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Base seed for random generation")->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "Bounds and majorization report for a CSV matrix");
  std::string analyze_path;
  analyze->add_option("file", analyze_path, "Headerless CSV matrix")->required();

  auto* examples = app.add_subcommand("paper-examples", "Reproduce the three built-in worked examples");

  auto* sweep = app.add_subcommand("sweep", "Property checks over seeded random correlation matrices");
  SweepConfig sweep_cfg;
  bool sweep_serial = false;
  sweep->add_option("--n-min", sweep_cfg.n_min, "Smallest dimension")->capture_default_str()->check(CLI::Range(2, 500));
  sweep->add_option("--n-max", sweep_cfg.n_max, "Largest dimension")->capture_default_str()->check(CLI::Range(2, 500));
  sweep->add_option("--count", sweep_cfg.count, "Matrices per dimension")->capture_default_str()->check(
      CLI::PositiveNumber);
  sweep->add_flag("--serial", sweep_serial, "Use the serial reference kernel");

  auto* search = app.add_subcommand("search", "Hill-climbing search for counterexamples or improvements");
  std::string task;
  SearchConfig search_cfg;
  std::string p_text = "inf";
  std::string start_path;
  std::string search_out;
  bool search_serial = false;
  search->add_option("task", task, "p-counterexample | negative-r1")
      ->required()
      ->check(CLI::IsMember({"p-counterexample", "negative-r1"}));
  search->add_option("--p", p_text, "Exponent (> 1) or 'inf'")->capture_default_str();
  search->add_option("--n", search_cfg.n, "Dimension")->capture_default_str()->check(CLI::Range(2, 500));
  search->add_option("--budget", search_cfg.budget, "Evaluations per restart")->capture_default_str()->check(
      CLI::PositiveNumber);
  search->add_option("--restarts", search_cfg.restarts, "Independent restarts")->capture_default_str()->check(
      CLI::PositiveNumber);
  search->add_option("--scale", search_cfg.perturb_scale, "Initial perturbation scale")->capture_default_str()->check(
      CLI::Range(0.0, 1.0));
  search->add_option("--start", start_path, "CSV matrix to start restart 0 from");
  search->add_option("--out", search_out, "Write the best matrix as CSV");
  search->add_flag("--serial", search_serial, "Run restarts serially");

  auto* gen = app.add_subcommand("gen", "Write a seeded random correlation matrix as CSV");
  std::size_t gen_n = 0;
  std::string gen_out;
  gen->add_option("--n", gen_n, "Dimension")->required()->check(CLI::Range(2, 500));
  gen->add_option("--out", gen_out, "Output path (stdout when omitted)");

  for (auto* sub : {analyze, examples, sweep, search, gen}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_path, g, out);
    if (*examples) {
      const auto fixtures = worked_examples();
      return run_worked_examples(fixtures, g.json, out);
    }
    if (*sweep) {
      if (sweep_cfg.n_max < sweep_cfg.n_min) {
        err << "error: --n-max must be >= --n-min\n";
        return kUsage;
      }
      sweep_cfg.seed = g.seed;
      sweep_cfg.tol = g.tol;
      return cmd_sweep(sweep_cfg, sweep_serial, g, out);
    }
    if (*search) {
      search_cfg.seed = g.seed;
      return cmd_search(task, search_cfg, p_text, start_path, search_out, search_serial, out);
    }
    if (*gen) return cmd_gen(gen_n, g.seed, gen_out, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kUsage;
}

}  // namespace corrdet::cli
