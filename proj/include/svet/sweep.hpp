#pragma once

// theta1 sweeps of the numeric maximum against both analytic bounds, and the
// CSV format they are stored in.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "svet/optimizer.hpp"

namespace svet {

enum class RowBranch { cos_branch, sin_branch };
std::string_view row_branch_name(RowBranch b);

/// Analytic curve (4 sqrt(1 - tau) or 4 sqrt(2 tau)) closer to `value`;
/// ties go to the cos branch.
RowBranch nearest_branch(double tau, double value);

struct SweepRow {
  double theta1 = 0.0;
  double tau = 0.0;
  double s_numeric = 0.0;
  double bound_third = 0.0;
  double bound_half = 0.0;
  RowBranch branch = RowBranch::cos_branch;
  bool converged = false;
};

struct SweepGrid {
  double theta_min = 0.0;
  double theta_max = 0.78539816339744830962;
  int steps = 101;

  /// Throws std::invalid_argument unless 0 <= min < max <= pi/4 (with the
  /// GGHZParam endpoint snap) and steps >= 2.
  void validate() const;
  double theta(int i) const;
};

/// One row: maximize at theta1 and attach tau, both bounds and the branch.
SweepRow sweep_point(double theta1, const OptimizerConfig& cfg);

/// Rows in grid order; points run on `threads` workers.
std::vector<SweepRow> run_sweep(const SweepGrid& grid, const OptimizerConfig& cfg,
                                unsigned threads);

/// Rows whose numeric value exceeds bound_third by more than `slack`.
std::vector<std::size_t> rows_above_original_bound(const std::vector<SweepRow>& rows,
                                                   double slack = 1e-6);

/// Largest |s_numeric - bound| over rows with |tau - tau_star| > exclusion.
struct BoundDeviation {
  double third = 0.0;
  double half = 0.0;
};
BoundDeviation max_bound_deviation(const std::vector<SweepRow>& rows, double tau_star,
                                   double exclusion);

/// Everything needed to regenerate a sweep file.
struct RunManifest {
  std::string tool_version;
  std::string command_line;
  SweepGrid grid;
  OptimizerConfig optimizer;
  std::string started_utc;
  double wall_clock_s = 0.0;
};

inline constexpr std::string_view kCsvHeader =
    "theta1,tau,s_numeric,bound_third,bound_half,branch,converged";

/// `#` manifest lines, the header row, then one line per row. Floats use 9
/// significant digits; lines end in a single '\n'.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows,
               const RunManifest& manifest);

/// Parses a file produced by write_csv. Throws std::runtime_error on
/// malformed input.
std::vector<SweepRow> read_csv(std::istream& in);

std::string format_g9(double v);

}  // namespace svet
