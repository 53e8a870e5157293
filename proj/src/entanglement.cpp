#include "svet/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace svet {
namespace {

constexpr double kRangeSlack = 1e-10;

}  // namespace

Tangle three_tangle(const PureState3& s) {
  // a(i, j, k) with i the A qubit.
  auto a = [&](int i, int j, int k) { return s[4 * i + 2 * j + k]; };

  const Complex d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) +
                     a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                     a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) +
                     a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);

  const Complex d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) +
                     a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
                     a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) +
                     a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
                     a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) +
                     a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);

  const Complex d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
                     a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);

  double tau = 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
  if (tau < -kRangeSlack || tau > 1.0 + kRangeSlack) {
    throw std::logic_error("three-tangle out of range: " + std::to_string(tau));
  }
  return Tangle{std::clamp(tau, 0.0, 1.0)};
}

Tangle three_tangle(const std::array<Complex, 8>& amps) {
  return three_tangle(PureState3::from_amplitudes(amps));
}

Tangle gghz_tangle(GGHZParam p) {
  const double s = std::sin(2.0 * p.theta1());
  return Tangle{s * s};
}

GGHZParam theta_for_tangle(double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw std::domain_error("tau must lie in [0, 1], got " + std::to_string(tau));
  }
  return GGHZParam(0.5 * std::asin(std::sqrt(tau)));
}

}  // namespace svet
