#include "svet/sweep.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "svet/bounds.hpp"
#include "svet/entanglement.hpp"
#include "svet/parallel.hpp"

namespace svet {

std::string_view row_branch_name(RowBranch b) {
  return b == RowBranch::cos_branch ? "COS_BRANCH" : "SIN_BRANCH";
}

RowBranch nearest_branch(double tau, double value) {
  const double dc = std::abs(value - cos_branch(tau));
  const double ds = std::abs(value - sin_branch(tau));
  return dc <= ds ? RowBranch::cos_branch : RowBranch::sin_branch;
}

void SweepGrid::validate() const {
  if (steps < 2) throw std::invalid_argument("steps must be >= 2");
  // GGHZParam performs the range check and endpoint snapping.
  const double lo = GGHZParam(theta_min).theta1();
  const double hi = GGHZParam(theta_max).theta1();
  if (!(lo < hi)) throw std::invalid_argument("theta_min must be < theta_max");
}

double SweepGrid::theta(int i) const {
  const double lo = GGHZParam(theta_min).theta1();
  const double hi = GGHZParam(theta_max).theta1();
  if (i == steps - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

SweepRow sweep_point(double theta1, const OptimizerConfig& cfg) {
  const GGHZParam p(theta1);
  SweepRow row;
  row.theta1 = p.theta1();
  row.tau = gghz_tangle(p).value;
  const MaxResult r = maximize(gghz_state(p), cfg);
  row.s_numeric = r.value;
  row.converged = r.converged;
  row.bound_third = bound(BoundVariant::original_third, row.tau).value;
  row.bound_half = bound(BoundVariant::comment_half, row.tau).value;
  row.branch = nearest_branch(row.tau, row.s_numeric);
  return row;
}

std::vector<SweepRow> run_sweep(const SweepGrid& grid, const OptimizerConfig& cfg,
                                unsigned threads) {
  grid.validate();
  cfg.validate();
  std::vector<SweepRow> rows(static_cast<std::size_t>(grid.steps));
  parallel_for(rows.size(), threads, [&](std::size_t i) {
    rows[i] = sweep_point(grid.theta(static_cast<int>(i)), cfg);
  });
  return rows;
}

std::vector<std::size_t> rows_above_original_bound(const std::vector<SweepRow>& rows,
                                                   double slack) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].s_numeric > rows[i].bound_third + slack) out.push_back(i);
  }
  return out;
}

BoundDeviation max_bound_deviation(const std::vector<SweepRow>& rows, double tau_star,
                                   double exclusion) {
  BoundDeviation d;
  for (const SweepRow& r : rows) {
    if (std::isfinite(tau_star) && std::abs(r.tau - tau_star) <= exclusion) continue;
    d.third = std::max(d.third, std::abs(r.s_numeric - r.bound_third));
    d.half = std::max(d.half, std::abs(r.s_numeric - r.bound_half));
  }
  return d;
}

std::string format_g9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows,
               const RunManifest& m) {
  out << "# tool: svetlichny " << m.tool_version << '\n'
      << "# command: " << m.command_line << '\n'
      << "# theta_min: " << format_g9(m.grid.theta_min) << '\n'
      << "# theta_max: " << format_g9(m.grid.theta_max) << '\n'
      << "# steps: " << m.grid.steps << '\n'
      << "# seed: " << m.optimizer.seed << '\n'
      << "# starts: " << m.optimizer.starts << '\n'
      << "# max_sweeps: " << m.optimizer.max_sweeps << '\n'
      << "# tol: " << format_g9(m.optimizer.tol) << '\n'
      << "# started_utc: " << m.started_utc << '\n'
      << "# wall_clock_s: " << format_g9(m.wall_clock_s) << '\n'
      << kCsvHeader << '\n';
  for (const SweepRow& r : rows) {
    out << format_g9(r.theta1) << ',' << format_g9(r.tau) << ',' << format_g9(r.s_numeric)
        << ',' << format_g9(r.bound_third) << ',' << format_g9(r.bound_half) << ','
        << row_branch_name(r.branch) << ',' << (r.converged ? "true" : "false") << '\n';
  }
}

namespace {

double parse_double(std::string_view field, std::size_t line) {
  double v = 0.0;
  auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || end != field.data() + field.size()) {
    throw std::runtime_error("line " + std::to_string(line) + ": bad number '" +
                             std::string(field) + "'");
  }
  return v;
}

}  // namespace

std::vector<SweepRow> read_csv(std::istream& in) {
  std::vector<SweepRow> rows;
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != kCsvHeader) {
        throw std::runtime_error("line " + std::to_string(lineno) + ": unexpected header");
      }
      header_seen = true;
      continue;
    }
    std::vector<std::string_view> f;
    std::string_view rest(line);
    for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos;) {
      f.push_back(rest.substr(0, pos));
      rest.remove_prefix(pos + 1);
    }
    f.push_back(rest);
    if (f.size() != 7) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": expected 7 fields");
    }
    SweepRow r;
    r.theta1 = parse_double(f[0], lineno);
    r.tau = parse_double(f[1], lineno);
    r.s_numeric = parse_double(f[2], lineno);
    r.bound_third = parse_double(f[3], lineno);
    r.bound_half = parse_double(f[4], lineno);
    if (f[5] == "COS_BRANCH") r.branch = RowBranch::cos_branch;
    else if (f[5] == "SIN_BRANCH") r.branch = RowBranch::sin_branch;
    else throw std::runtime_error("line " + std::to_string(lineno) + ": bad branch");
    if (f[6] == "true") r.converged = true;
    else if (f[6] == "false") r.converged = false;
    else throw std::runtime_error("line " + std::to_string(lineno) + ": bad converged flag");
    rows.push_back(r);
  }
  if (!header_seen) throw std::runtime_error("missing CSV header");
  return rows;
}

}  // namespace svet
