#pragma once

#include <array>

#include "svet/state.hpp"

namespace svet {

/// Three-tangle value in [0, 1].
struct Tangle {
  double value = 0.0;
};

/// Coffman-Kundu-Wootters three-tangle, 4 |d1 - 2 d2 + 4 d3|, from the
/// Cayley hyperdeterminant of the amplitudes.
Tangle three_tangle(const PureState3& s);

/// Overload for raw amplitudes; throws std::domain_error if they are not
/// normalized.
Tangle three_tangle(const std::array<Complex, 8>& amps);

/// sin^2(2 theta1), the tangle of cos(t)|000> + sin(t)|111>.
Tangle gghz_tangle(GGHZParam p);

/// Inverse of gghz_tangle: theta1 = asin(sqrt(tau)) / 2 for tau in [0, 1].
GGHZParam theta_for_tangle(double tau);

}  // namespace svet
