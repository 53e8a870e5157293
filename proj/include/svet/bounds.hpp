#pragma once

// Analytic bounds on max <S> for generalized GHZ states, the three-angle
// branch formula they are derived from, and an audit of the implication
// chain used to move the branch threshold from tau = 1/3 to tau = 1/2.

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

namespace svet {

/// Local (hybrid) bound on |<S>|.
constexpr double classical_bound() { return 4.0; }

/// True if `value` exceeds the classical bound by more than `slack`.
constexpr bool violates_classical(double value, double slack = 1e-9) {
  return value > classical_bound() + slack;
}

/// Which threshold separates the 4 sqrt(1 - tau) and 4 sqrt(2 tau) branches.
enum class BoundVariant { original_third, comment_half };

constexpr double threshold(BoundVariant v) {
  return v == BoundVariant::original_third ? 1.0 / 3.0 : 0.5;
}
std::string_view variant_name(BoundVariant v);

double cos_branch(double tau);  // 4 sqrt(1 - tau)
double sin_branch(double tau);  // 4 sqrt(2 tau)

struct BoundValue {
  double value = 0.0;
  bool at_threshold = false;
  /// Set when both branches were evaluated at the threshold and differ.
  bool branches_disagree = false;
  /// |sin_branch - cos_branch| at the threshold, zero elsewhere.
  double jump = 0.0;
};

/// Piecewise bound. At the exact threshold both branches are evaluated and
/// the larger returned. Throws std::domain_error for tau outside [0, 1].
BoundValue bound(BoundVariant variant, double tau);

struct JumpScan {
  double max_jump = 0.0;
  double at_tau = 0.0;
  std::size_t discontinuities = 0;  // probe points whose jump exceeds `flag_above`
};

/// Probes one-sided limits f(t - h), f(t), f(t + h) at every point of a
/// uniform grid of `points` + 1 nodes on [0, 1] plus the variant threshold,
/// and reports the largest mismatch. h = 1e-10 keeps the smooth-slope
/// contribution below 1e-9.
JumpScan scan_jumps(BoundVariant variant, std::size_t points, double flag_above = 1e-6);

// Three-angle branch formula.

struct Eq2Point {
  double theta1 = 0.0;
  double theta_d = 0.0;
  double theta_dp = 0.0;
};

enum class Eq2Branch { cos_branch, sin_branch, tie };
std::string_view branch_name(Eq2Branch b);

struct Eq2Result {
  double value = 0.0;
  Eq2Branch branch = Eq2Branch::tie;
};

/// Branch condition: cos^2(2t1)(cos^2 td + cos^2 td') vs
/// sin^2(2t1)(sin^2 td + sin^2 td'). Sides equal within 1e-12 give a tie.
Eq2Result eq2_bound(const Eq2Point& p);

// Implication-chain audit.

enum class ConstraintMode { free, sum_leq_one };
std::string_view mode_name(ConstraintMode m);

/// Steps of the chain, each implied by the previous one:
///   0  cos^2(2t1) C >= sin^2(2t1) (sin^2 td + sin^2 td')   (branch condition)
///   1  cos^2(2t1) C >= sin^2(2t1) (2 - C)
///   2  C >= 2 sin^2(2t1)
///   3  2 sin^2(2t1) <= 1
///   4  sin^2(2t1) <= 1/2
///   5  tau <= 1/2
/// with C = cos^2 td + cos^2 td'.
inline constexpr std::size_t kChainSteps = 6;

struct PointAudit {
  Eq2Point point;
  double tau = 0.0;
  double cos_sum = 0.0;  // C
  bool in_constraint = true;
  std::array<bool, kChainSteps> holds{};
  bool condition_holds = false;
  bool violation = false;  // condition holds but tau > 1/2
  /// Index k of the first step with holds[k - 1] && !holds[k]; 0 when none.
  std::size_t first_broken_step = 0;
};

/// Evaluates every chain step at one point. tau comes from the
/// hyperdeterminant of the corresponding GGHZ state.
PointAudit audit_point(const Eq2Point& p, ConstraintMode mode);

struct ChainAudit {
  std::size_t samples_drawn = 0;
  std::size_t samples_tested = 0;  // drawn minus rejected by the constraint
  std::size_t condition_hits = 0;
  std::size_t violation_count = 0;
  std::vector<Eq2Point> violations;  // first kMaxRecordedViolations only
  std::array<std::size_t, kChainSteps> broken_steps{};  // indexed by first_broken_step
  ConstraintMode constraint_mode = ConstraintMode::free;

  static constexpr std::size_t kMaxRecordedViolations = 1000;
};

/// Samples n points: theta1 uniform in [0, pi/4], theta_d and theta_d'
/// uniform in [0, pi]. In sum_leq_one mode samples with C > 1 are rejected.
/// Throws std::invalid_argument for n < 1.
ChainAudit audit_chain(std::int64_t n, std::uint64_t seed, ConstraintMode mode,
                       unsigned threads = 1);

// Crossover detection.

struct SweepRow;

enum class Verdict { third, half, neither };
std::string_view verdict_name(Verdict v);

struct Crossover {
  double tau_star = std::numeric_limits<double>::quiet_NaN();
  double grid_step = std::numeric_limits<double>::quiet_NaN();
  Verdict verdict = Verdict::neither;
  std::size_t switches = 0;  // number of branch changes along the sweep
};

/// Locates where the numeric maximum stops tracking 4 sqrt(1 - tau) and
/// starts tracking 4 sqrt(2 tau). Rows must be sorted by tau, number at
/// least 50 and reach within 0.05 of both ends of [0, 1]; otherwise throws
/// std::invalid_argument.
Crossover crossover_scan(const std::vector<SweepRow>& rows);

}  // namespace svet
