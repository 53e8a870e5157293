#include "svet/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "svet/bounds.hpp"
#include "svet/entanglement.hpp"
#include "svet/optimizer.hpp"
#include "svet/parallel.hpp"
#include "svet/sweep.hpp"

namespace svet::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_optimizer_flags(CLI::App* cmd, OptimizerConfig& cfg) {
  cmd->add_option("--starts", cfg.starts, "Independent ascent runs")->capture_default_str();
  cmd->add_option("--max-sweeps", cfg.max_sweeps, "Sweeps per run")->capture_default_str();
  cmd->add_option("--tol", cfg.tol, "Per-sweep improvement threshold")->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "Random stream seed")->capture_default_str();
}

void check_optimizer(const OptimizerConfig& cfg) {
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    if (!s.empty()) s += ' ';
    s += a;
  }
  return s;
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

void print_bound(std::ostream& out, const char* label, BoundVariant v, double tau) {
  const BoundValue b = bound(v, tau);
  out << label << fixed(b.value, 9) << "  (threshold " << fixed(threshold(v), 6)
      << "; cos branch " << fixed(cos_branch(tau), 6) << ", sin branch "
      << fixed(sin_branch(tau), 6);
  if (b.at_threshold && b.branches_disagree) {
    out << "; at threshold, branches disagree by " << fixed(b.jump, 9);
  } else if (std::abs(tau - threshold(v)) < 1e-9) {
    out << "; within 1e-9 of threshold";
  }
  out << ")\n";
}

int cmd_sweep(const SweepGrid& grid, const OptimizerConfig& cfg, const std::string& path,
              const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (grid.steps < 2) throw UsageError("steps must be >= 2");
  try {
    grid.validate();
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  check_optimizer(cfg);

  std::ofstream file;
  const bool to_stdout = path == "-";
  if (!to_stdout) {
    file.open(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
  }

  RunManifest manifest;
  manifest.tool_version = kToolVersion;
  manifest.command_line = join(args);
  manifest.grid = grid;
  manifest.optimizer = cfg;
  manifest.started_utc = utc_now();

  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<SweepRow> rows = run_sweep(grid, cfg, thread_count());
  manifest.wall_clock_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::ostream& csv = to_stdout ? out : static_cast<std::ostream&>(file);
  write_csv(csv, rows, manifest);
  csv.flush();
  if (!csv) throw IoError("failed writing '" + path + "'");

  std::ostream& report = to_stdout ? err : out;
  report << "rows: " << rows.size() << '\n';
  for (std::size_t i : rows_above_original_bound(rows)) {
    report << "warning: row " << i << " (tau = " << format_g9(rows[i].tau)
           << ") exceeds the tau = 1/3 bound: " << format_g9(rows[i].s_numeric) << " > "
           << format_g9(rows[i].bound_third) << '\n';
  }
  std::size_t unconverged = 0;
  for (const SweepRow& r : rows) unconverged += !r.converged;
  if (unconverged > 0) report << "unconverged rows: " << unconverged << '\n';

  try {
    const Crossover c = crossover_scan(rows);
    report << "crossover tau* = " << format_g9(c.tau_star)
           << ", verdict = " << verdict_name(c.verdict) << '\n';
    if (std::isfinite(c.tau_star)) {
      const BoundDeviation d = max_bound_deviation(rows, c.tau_star, c.grid_step);
      report << "grid step at tau*: " << format_g9(c.grid_step) << '\n'
             << "max |numeric - bound| away from tau*: third = " << format_g9(d.third)
             << ", half = " << format_g9(d.half) << '\n';
    }
  } catch (const std::invalid_argument& e) {
    report << "crossover scan skipped: " << e.what() << '\n';
  }
  return kOk;
}

int cmd_maximize(double theta1, const OptimizerConfig& cfg, std::ostream& out) {
  check_optimizer(cfg);
  GGHZParam p(0.0);
  try {
    p = GGHZParam(theta1);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  const double tau = gghz_tangle(p).value;
  const MaxResult r = maximize(gghz_state(p), cfg);

  out << "theta1: " << fixed(p.theta1(), 9) << '\n'
      << "tau: " << fixed(tau, 9) << '\n'
      << "s_numeric: " << fixed(r.value, 9) << '\n';
  print_bound(out, "bound_third: ", BoundVariant::original_third, tau);
  print_bound(out, "bound_half: ", BoundVariant::comment_half, tau);
  out << "classical_bound: " << fixed(classical_bound(), 9)
      << (violates_classical(r.value) ? " (violated)" : " (not violated)") << '\n'
      << "converged: " << (r.converged ? "true" : "false") << " (sweeps " << r.sweeps_used
      << ", run " << r.run_index << ")\n"
      << "settings:\n";
  for (Slot s : kAllSlots) {
    const BlochVector& v = r.settings[s];
    out << "  " << std::left << std::setw(2) << slot_name(s) << std::right << " = ("
        << fixed(v.x, 9) << ", " << fixed(v.y, 9) << ", " << fixed(v.z, 9) << ")\n";
  }
  return kOk;
}

void print_point(std::ostream& out, const Eq2Point& p) {
  out << "theta1 = " << format_g9(p.theta1) << ", theta_d = " << format_g9(p.theta_d)
      << ", theta_d' = " << format_g9(p.theta_dp);
}

int cmd_audit(std::int64_t n, std::uint64_t seed, ConstraintMode mode,
              const std::vector<double>& witness, std::ostream& out) {
  if (n < 1) throw UsageError("n must be >= 1");
  const ChainAudit a = audit_chain(n, seed, mode, thread_count());
  out << "mode: " << mode_name(mode) << '\n'
      << "samples drawn: " << a.samples_drawn << '\n'
      << "samples tested: " << a.samples_tested << '\n'
      << "condition hits: " << a.condition_hits << '\n'
      << "violations: " << a.violation_count << '\n';
  for (std::size_t k = 1; k < kChainSteps; ++k) {
    if (a.broken_steps[k] > 0) {
      out << "chain step " << k - 1 << " -> " << k << " fails at " << a.broken_steps[k]
          << " points\n";
    }
  }
  if (!a.violations.empty()) {
    out << "first witness: ";
    print_point(out, a.violations.front());
    out << '\n';
  }

  int code = kOk;
  if (mode == ConstraintMode::sum_leq_one && a.violation_count > 0) code = kAuditViolation;

  if (!witness.empty()) {
    const Eq2Point p{witness[0], witness[1], witness[2]};
    PointAudit pa;
    try {
      pa = audit_point(p, mode);
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
    out << "supplied point: ";
    print_point(out, p);
    out << "\n  tau = " << format_g9(pa.tau) << ", cos^2 td + cos^2 td' = "
        << format_g9(pa.cos_sum) << (pa.in_constraint ? "" : " (outside constraint)")
        << "\n  condition holds: " << (pa.condition_holds ? "yes" : "no")
        << "\n  witness: " << (pa.violation ? "yes (condition holds, tau > 1/2)" : "no");
    if (pa.first_broken_step > 0) {
      out << "\n  chain breaks at step " << pa.first_broken_step - 1 << " -> "
          << pa.first_broken_step;
    }
    out << '\n';
    if (pa.violation && pa.in_constraint && mode == ConstraintMode::sum_leq_one) {
      code = kAuditViolation;
    }
  }
  return code;
}

std::array<Complex, 8> read_amplitudes(const std::vector<double>& reals,
                                       const std::string& file) {
  std::vector<double> values = reals;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot read '" + file + "'");
    values.clear();
    double v;
    while (in >> v) values.push_back(v);
    if (!in.eof()) throw UsageError("'" + file + "' contains a non-numeric token");
  }
  if (values.size() != 16) {
    throw UsageError("tangle needs 16 reals (re, im for each of 8 amplitudes), got " +
                     std::to_string(values.size()));
  }
  std::array<Complex, 8> amps;
  for (std::size_t i = 0; i < 8; ++i) amps[i] = Complex(values[2 * i], values[2 * i + 1]);
  return amps;
}

int cmd_tangle(const std::vector<double>& reals, const std::string& file, std::ostream& out) {
  const std::array<Complex, 8> amps = read_amplitudes(reals, file);
  Tangle t;
  try {
    t = three_tangle(amps);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  out << "tau: " << format_g9(t.value) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Svetlichny operator maximization for generalized GHZ states", "svetlichny"};
  app.require_subcommand(1);

  OptimizerConfig cfg;

  SweepGrid grid;
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "Maximize <S> on a uniform theta1 grid");
  sweep->add_option("--theta-min", grid.theta_min)->capture_default_str();
  sweep->add_option("--theta-max", grid.theta_max)->capture_default_str();
  sweep->add_option("--steps", grid.steps)->capture_default_str();
  sweep->add_option("--out", sweep_out, "CSV path, '-' for stdout")->required();
  add_optimizer_flags(sweep, cfg);

  double theta1 = 0.0;
  auto* maxcmd = app.add_subcommand("maximize", "Maximize <S> at one theta1");
  maxcmd->add_option("--theta1", theta1, "GGHZ angle in [0, pi/4]")->required();
  add_optimizer_flags(maxcmd, cfg);

  std::int64_t audit_n = 1000000;
  std::uint64_t audit_seed = 42;
  std::string mode_text = "sum-leq-one";
  std::vector<double> witness;
  auto* audit = app.add_subcommand("audit", "Audit the tau <= 1/2 implication chain");
  audit->add_option("--n", audit_n, "Samples")->capture_default_str();
  audit->add_option("--seed", audit_seed)->capture_default_str();
  audit->add_option("--mode", mode_text)
      ->check(CLI::IsMember({"free", "sum-leq-one"}))
      ->capture_default_str();
  audit->add_option("--witness", witness, "theta1 theta_d theta_d' to check directly")
      ->expected(3)
      ->delimiter(',');

  std::vector<double> tangle_reals;
  std::string tangle_file;
  auto* tangle = app.add_subcommand("tangle", "Three-tangle of 8 complex amplitudes");
  tangle->add_option("reals", tangle_reals, "re0 im0 re1 im1 ... re7 im7")
      ->allow_extra_args();
  tangle->add_option("--file", tangle_file, "File with 16 whitespace-separated reals");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*sweep) return cmd_sweep(grid, cfg, sweep_out, args, out, err);
    if (*maxcmd) return cmd_maximize(theta1, cfg, out);
    if (*audit) {
      const ConstraintMode mode =
          mode_text == "free" ? ConstraintMode::free : ConstraintMode::sum_leq_one;
      return cmd_audit(audit_n, audit_seed, mode, witness, out);
    }
    if (*tangle) return cmd_tangle(tangle_reals, tangle_file, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kUsage;
}

}  // namespace svet::cli
