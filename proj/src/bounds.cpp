#include "svet/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "svet/entanglement.hpp"
#include "svet/parallel.hpp"
#include "svet/rng.hpp"
#include "svet/state.hpp"
#include "svet/sweep.hpp"

namespace svet {
namespace {

constexpr double kThresholdAgreement = 1e-12;
constexpr double kChainSlack = 1e-12;
constexpr double kProbeWidth = 1e-10;
constexpr std::size_t kAuditBlock = 1 << 16;

void require_tau(double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw std::domain_error("tau must lie in [0, 1], got " + std::to_string(tau));
  }
}

double square(double x) { return x * x; }

}  // namespace

std::string_view variant_name(BoundVariant v) {
  return v == BoundVariant::original_third ? "ORIGINAL_THIRD" : "COMMENT_HALF";
}

double cos_branch(double tau) {
  require_tau(tau);
  return 4.0 * std::sqrt(1.0 - tau);
}

double sin_branch(double tau) {
  require_tau(tau);
  return 4.0 * std::sqrt(2.0 * tau);
}

BoundValue bound(BoundVariant variant, double tau) {
  require_tau(tau);
  const double t = threshold(variant);
  BoundValue out;
  if (tau < t) {
    out.value = cos_branch(tau);
  } else if (tau > t) {
    out.value = sin_branch(tau);
  } else {
    const double lo = cos_branch(tau);
    const double hi = sin_branch(tau);
    out.at_threshold = true;
    out.value = std::max(lo, hi);
    out.jump = std::abs(hi - lo);
    out.branches_disagree = out.jump > kThresholdAgreement;
  }
  return out;
}

JumpScan scan_jumps(BoundVariant variant, std::size_t points, double flag_above) {
  if (points < 1) throw std::invalid_argument("scan_jumps needs at least one interval");
  std::vector<double> probes;
  probes.reserve(points + 2);
  for (std::size_t i = 0; i <= points; ++i) {
    probes.push_back(static_cast<double>(i) / static_cast<double>(points));
  }
  probes.push_back(threshold(variant));
  std::sort(probes.begin(), probes.end());
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());

  auto f = [variant](double tau) { return bound(variant, tau).value; };
  JumpScan scan;
  for (double tau : probes) {
    const double here = f(tau);
    double jump = 0.0;
    if (tau - kProbeWidth >= 0.0) jump = std::max(jump, std::abs(here - f(tau - kProbeWidth)));
    if (tau + kProbeWidth <= 1.0) jump = std::max(jump, std::abs(f(tau + kProbeWidth) - here));
    if (jump > flag_above) ++scan.discontinuities;
    if (jump > scan.max_jump) {
      scan.max_jump = jump;
      scan.at_tau = tau;
    }
  }
  return scan;
}

std::string_view branch_name(Eq2Branch b) {
  switch (b) {
    case Eq2Branch::cos_branch: return "COS";
    case Eq2Branch::sin_branch: return "SIN";
    case Eq2Branch::tie: return "TIE";
  }
  return "?";
}

Eq2Result eq2_bound(const Eq2Point& p) {
  const double c2t = square(std::cos(2.0 * p.theta1));
  const double s2t = square(std::sin(2.0 * p.theta1));
  const double cos_sum = square(std::cos(p.theta_d)) + square(std::cos(p.theta_dp));
  const double sin_sum = square(std::sin(p.theta_d)) + square(std::sin(p.theta_dp));
  const double lhs = c2t * cos_sum;
  const double rhs = s2t * sin_sum;

  const double cos_value = 4.0 * std::abs(std::cos(2.0 * p.theta1)) * std::sqrt(cos_sum);
  const double sin_value = 4.0 * std::abs(std::sin(2.0 * p.theta1)) * std::sqrt(sin_sum);
  if (std::abs(lhs - rhs) <= kThresholdAgreement) {
    // lhs == rhs makes the two branch values equal up to rounding.
    return {0.5 * (cos_value + sin_value), Eq2Branch::tie};
  }
  if (lhs > rhs) return {cos_value, Eq2Branch::cos_branch};
  return {sin_value, Eq2Branch::sin_branch};
}

std::string_view mode_name(ConstraintMode m) {
  return m == ConstraintMode::free ? "FREE" : "SUM_LEQ_ONE";
}

PointAudit audit_point(const Eq2Point& p, ConstraintMode mode) {
  PointAudit a;
  a.point = p;
  a.tau = three_tangle(gghz_state(GGHZParam(p.theta1))).value;

  const double c2t = square(std::cos(2.0 * p.theta1));
  const double s2t = square(std::sin(2.0 * p.theta1));
  a.cos_sum = square(std::cos(p.theta_d)) + square(std::cos(p.theta_dp));
  const double sin_sum = square(std::sin(p.theta_d)) + square(std::sin(p.theta_dp));
  a.in_constraint = mode == ConstraintMode::free || a.cos_sum <= 1.0;

  const double e = kChainSlack;
  a.holds[0] = c2t * a.cos_sum >= s2t * sin_sum - e;
  a.holds[1] = c2t * a.cos_sum >= s2t * (2.0 - a.cos_sum) - e;
  a.holds[2] = a.cos_sum >= 2.0 * s2t - e;
  a.holds[3] = 2.0 * s2t <= 1.0 + e;
  a.holds[4] = s2t <= 0.5 + e;
  a.holds[5] = a.tau <= 0.5 + e;

  a.condition_holds = a.holds[0];
  a.violation = a.condition_holds && a.tau > 0.5 + e;
  if (a.condition_holds) {
    for (std::size_t k = 1; k < kChainSteps; ++k) {
      if (a.holds[k - 1] && !a.holds[k]) {
        a.first_broken_step = k;
        break;
      }
    }
  }
  return a;
}

ChainAudit audit_chain(std::int64_t n, std::uint64_t seed, ConstraintMode mode,
                       unsigned threads) {
  if (n < 1) throw std::invalid_argument("audit_chain needs n >= 1");
  const auto total = static_cast<std::size_t>(n);
  const std::size_t blocks = (total + kAuditBlock - 1) / kAuditBlock;
  const CounterStream stream(seed, 0);

  std::vector<ChainAudit> partial(blocks);
  parallel_for(blocks, threads, [&](std::size_t block) {
    ChainAudit& acc = partial[block];
    const std::size_t begin = block * kAuditBlock;
    const std::size_t end = std::min(total, begin + kAuditBlock);
    for (std::size_t i = begin; i < end; ++i) {
      const Eq2Point p{0.25 * std::numbers::pi * stream.uniform(3 * i),
                       std::numbers::pi * stream.uniform(3 * i + 1),
                       std::numbers::pi * stream.uniform(3 * i + 2)};
      ++acc.samples_drawn;
      const PointAudit pa = audit_point(p, mode);
      if (!pa.in_constraint) continue;
      ++acc.samples_tested;
      if (!pa.condition_holds) continue;
      ++acc.condition_hits;
      ++acc.broken_steps[pa.first_broken_step];
      if (pa.violation) {
        ++acc.violation_count;
        if (acc.violations.size() < ChainAudit::kMaxRecordedViolations) {
          acc.violations.push_back(p);
        }
      }
    }
  });

  ChainAudit out;
  out.constraint_mode = mode;
  for (const ChainAudit& acc : partial) {
    out.samples_drawn += acc.samples_drawn;
    out.samples_tested += acc.samples_tested;
    out.condition_hits += acc.condition_hits;
    out.violation_count += acc.violation_count;
    for (std::size_t k = 0; k < kChainSteps; ++k) out.broken_steps[k] += acc.broken_steps[k];
    for (const Eq2Point& p : acc.violations) {
      if (out.violations.size() == ChainAudit::kMaxRecordedViolations) break;
      out.violations.push_back(p);
    }
  }
  return out;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::third: return "THIRD";
    case Verdict::half: return "HALF";
    case Verdict::neither: return "NEITHER";
  }
  return "?";
}

Crossover crossover_scan(const std::vector<SweepRow>& rows) {
  if (rows.size() < 50) {
    throw std::invalid_argument("crossover_scan needs at least 50 rows, got " +
                                std::to_string(rows.size()));
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].tau > rows[i - 1].tau)) {
      throw std::invalid_argument("crossover_scan rows must be strictly increasing in tau");
    }
  }
  if (rows.front().tau > 0.05 || rows.back().tau < 0.95) {
    throw std::invalid_argument("crossover_scan rows must cover tau in [0, 1]");
  }

  std::vector<RowBranch> branch;
  branch.reserve(rows.size());
  for (const SweepRow& r : rows) branch.push_back(nearest_branch(r.tau, r.s_numeric));

  Crossover out;
  for (std::size_t i = 1; i < branch.size(); ++i) {
    if (branch[i] != branch[i - 1]) ++out.switches;
  }

  // Best single step from COS to SIN: cut index minimizing misassigned rows
  // (rows before the cut should be COS, rows from the cut on SIN).
  const std::size_t n = rows.size();
  std::size_t sin_before = 0;
  std::size_t cos_after = 0;
  for (RowBranch b : branch) cos_after += b == RowBranch::cos_branch;
  std::size_t best_cut = 0;
  std::size_t best_cost = cos_after;
  for (std::size_t cut = 1; cut <= n; ++cut) {
    if (branch[cut - 1] == RowBranch::sin_branch) ++sin_before;
    else --cos_after;
    const std::size_t cost = sin_before + cos_after;
    if (cost < best_cost) {
      best_cost = cost;
      best_cut = cut;
    }
  }
  if (best_cut == 0 || best_cut == n) return out;

  out.tau_star = 0.5 * (rows[best_cut - 1].tau + rows[best_cut].tau);
  out.grid_step = rows[best_cut].tau - rows[best_cut - 1].tau;
  if (std::abs(out.tau_star - 1.0 / 3.0) < out.grid_step) {
    out.verdict = Verdict::third;
  } else if (std::abs(out.tau_star - 0.5) < out.grid_step) {
    out.verdict = Verdict::half;
  }
  return out;
}

}  // namespace svet
