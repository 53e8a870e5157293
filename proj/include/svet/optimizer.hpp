#pragma once

// Maximization of <S> over the six measurement directions for a fixed state.
//
// <S> is affine in each Bloch vector when the other five are held fixed:
// every correlator term contains exactly one of (a, a'), one of (b, b') and
// one of (c, c'). The optimal vector for one slot is therefore the
// normalized coefficient vector of that slot, which makes coordinate ascent
// exact per step and monotone.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "svet/operators.hpp"
#include "svet/state.hpp"

namespace svet {

struct OptimizerConfig {
  int starts = 64;
  int max_sweeps = 200;
  double tol = 1e-10;  // absolute objective improvement per sweep
  std::uint64_t seed = 42;

  void validate() const;
};

struct MaxResult {
  double value = 0.0;
  MeasurementSettings settings{};
  int sweeps_used = 0;
  bool converged = false;
  int run_index = 0;
};

/// Correlation tensor T_ijk = <sigma_i (x) sigma_j (x) sigma_k> of a state.
/// <S> for any settings is a signed sum of eight contractions of T.
class CorrelationTensor {
 public:
  explicit CorrelationTensor(const PureState3& s);

  double operator()(int i, int j, int k) const { return t_[9 * i + 3 * j + k]; }

  /// T(a, b, c) for arbitrary real vectors.
  double contract(const BlochVector& a, const BlochVector& b, const BlochVector& c) const;

  /// T(a, b, .) as a vector over the third index.
  BlochVector contract_ab(const BlochVector& a, const BlochVector& b) const;

  /// <S> in the algebraic extension (vectors need not be unit).
  double svetlichny(const MeasurementSettings& m) const;

 private:
  std::array<double, 27> t_{};
};

/// Objective coefficient vector of `which`: <S>(v) = g.v + <S>(0).
BlochVector slot_coefficient(const CorrelationTensor& t, const MeasurementSettings& m,
                             Slot which);

/// Unit vector maximizing <S> over slot `which` with the other five fixed.
/// Returns the incumbent when the coefficient norm is below 1e-14.
BlochVector best_response(const CorrelationTensor& t, const MeasurementSettings& m,
                          Slot which);
BlochVector best_response(const PureState3& s, const MeasurementSettings& m, Slot which);

/// Deterministic initial settings for run `run` of a multi-start search.
MeasurementSettings random_settings(std::uint64_t seed, std::uint64_t run);

/// One coordinate-ascent run from `start`. If `trace` is non-null it receives
/// the objective before the first update and after every slot update.
MaxResult ascend(const CorrelationTensor& t, MeasurementSettings start,
                 const OptimizerConfig& cfg, std::vector<double>* trace = nullptr);

/// Best of cfg.starts independent runs; ties within 1e-12 go to the lowest
/// run index.
MaxResult maximize(const PureState3& s, const OptimizerConfig& cfg = {});

class GridTooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive search over a spherical grid for a, a', b and b', with c and c'
/// set by best response. Polar angles are pi*k/n_theta and azimuths
/// 2*pi*k/n_phi. Throws std::invalid_argument for grid sizes below 2 and
/// GridTooLargeError when (n_theta*n_phi)^4 exceeds kGridOracleBudget.
double grid_oracle(const PureState3& s, int n_theta, int n_phi, unsigned threads = 1);

inline constexpr double kGridOracleBudget = 2e8;

}  // namespace svet
