#pragma once

// Dichotomic single-qubit observables and the Svetlichny operator
//
//   S = A (x) (B (x) K + B' (x) K') + A' (x) (B (x) K' - B' (x) K),
//   K = C + C',  K' = C - C',
//
// where every letter is v.sigma for a Bloch vector v.

#include <array>
#include <cmath>
#include <cstddef>

#include "svet/state.hpp"

namespace svet {

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;

  static BlochVector from_spherical(double polar, double azimuth) {
    return {std::sin(polar) * std::cos(azimuth),
            std::sin(polar) * std::sin(azimuth), std::cos(polar)};
  }

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  double dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }

  /// True if |x^2 + y^2 + z^2 - 1| <= kNormTolerance.
  bool is_unit() const;

  friend BlochVector operator+(BlochVector l, const BlochVector& r) {
    return {l.x + r.x, l.y + r.y, l.z + r.z};
  }
  friend BlochVector operator-(BlochVector l, const BlochVector& r) {
    return {l.x - r.x, l.y - r.y, l.z - r.z};
  }
  friend BlochVector operator*(double s, const BlochVector& v) {
    return {s * v.x, s * v.y, s * v.z};
  }
  friend BlochVector operator-(const BlochVector& v) { return {-v.x, -v.y, -v.z}; }
  friend bool operator==(const BlochVector&, const BlochVector&) = default;
};

/// Position of a vector inside MeasurementSettings.
enum class Slot : std::size_t { a = 0, a_p, b, b_p, c, c_p };
inline constexpr std::array<Slot, 6> kAllSlots{Slot::a, Slot::a_p, Slot::b,
                                               Slot::b_p, Slot::c, Slot::c_p};
const char* slot_name(Slot s);

/// The six measurement directions (a, a', b, b', c, c').
struct MeasurementSettings {
  std::array<BlochVector, 6> v{};

  BlochVector& operator[](Slot s) { return v[static_cast<std::size_t>(s)]; }
  const BlochVector& operator[](Slot s) const { return v[static_cast<std::size_t>(s)]; }

  const BlochVector& a() const { return v[0]; }
  const BlochVector& a_p() const { return v[1]; }
  const BlochVector& b() const { return v[2]; }
  const BlochVector& b_p() const { return v[3]; }
  const BlochVector& c() const { return v[4]; }
  const BlochVector& c_p() const { return v[5]; }

  static MeasurementSettings all(const BlochVector& d) {
    return {{d, d, d, d, d, d}};
  }

  friend bool operator==(const MeasurementSettings&, const MeasurementSettings&) = default;
};

/// `unit` validates every vector; `algebraic` accepts arbitrary real vectors
/// so the operator can be treated as a multilinear function of them.
enum class VectorForm { unit, algebraic };

const Operator2& pauli(int i);  // 0 = x, 1 = y, 2 = z
Operator2 identity2();
Operator8 identity8();

/// v.x sigma_x + v.y sigma_y + v.z sigma_z. Throws std::domain_error for a
/// non-unit vector in VectorForm::unit.
Operator2 pauli_dot(const BlochVector& v, VectorForm form = VectorForm::unit);

/// Kronecker product a (x) b (x) c.
Operator8 tensor3(const Operator2& a, const Operator2& b, const Operator2& c);

Operator8 svetlichny_operator(const MeasurementSettings& m,
                              VectorForm form = VectorForm::unit);

/// Same operator built from the eight signed correlator terms
/// ABC + ABC' + AB'C - AB'C' + A'BC - A'BC' - A'B'C - A'B'C'.
Operator8 svetlichny_operator_expanded(const MeasurementSettings& m,
                                       VectorForm form = VectorForm::unit);

double svetlichny_expectation(const PureState3& s, const MeasurementSettings& m,
                              VectorForm form = VectorForm::unit);

/// Sign of the correlator term (i, j, k) in S, where each index picks the
/// unprimed (0) or primed (1) setting of A, B and C respectively.
constexpr int svetlichny_sign(int i, int j, int k) {
  constexpr int signs[2][2][2] = {{{1, 1}, {1, -1}}, {{1, -1}, {-1, -1}}};
  return signs[i][j][k];
}

inline const double kQuantumBound = 4.0 * std::sqrt(2.0);

}  // namespace svet
