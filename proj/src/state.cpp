#include "svet/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace svet {

PureState3 PureState3::from_amplitudes(const Amplitudes& amps) {
  if (!amps.allFinite()) {
    throw std::domain_error("state amplitudes must be finite");
  }
  const double n2 = amps.squaredNorm();
  if (std::abs(n2 - 1.0) > kNormTolerance) {
    throw std::domain_error("state is not normalized: sum |amp|^2 = " +
                            std::to_string(n2));
  }
  return PureState3(amps);
}

PureState3 PureState3::from_amplitudes(const std::array<Complex, 8>& amps) {
  Amplitudes v;
  for (int i = 0; i < 8; ++i) v[i] = amps[i];
  return from_amplitudes(v);
}

PureState3 PureState3::basis(int index) {
  if (index < 0 || index >= 8) {
    throw std::out_of_range("basis index must be in [0, 8)");
  }
  Amplitudes v = Amplitudes::Zero();
  v[index] = 1.0;
  return PureState3(v);
}

GGHZParam::GGHZParam(double theta1) {
  if (!std::isfinite(theta1) || theta1 < -kEndpointSnap ||
      theta1 > kMax + kEndpointSnap) {
    throw std::domain_error("theta1 must lie in [0, pi/4], got " +
                            std::to_string(theta1));
  }
  theta1_ = std::clamp(theta1, 0.0, kMax);
}

PureState3 gghz_state(GGHZParam p) {
  Amplitudes v = Amplitudes::Zero();
  v[0] = std::cos(p.theta1());
  v[7] = std::sin(p.theta1());
  return PureState3::from_amplitudes(v);
}

Complex inner_product(const PureState3& x, const PureState3& y) {
  return x.amplitudes().dot(y.amplitudes());  // Eigen conjugates the left side
}

double hermiticity_defect(const Operator8& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double expectation(const PureState3& s, const Operator8& m) {
  if (hermiticity_defect(m) > kHermitianTolerance) {
    throw ContractViolation("expectation() requires a Hermitian operator");
  }
  const Complex value = s.amplitudes().dot(m * s.amplitudes());
  // Hermitian input bounds the residue by ~1e-10 times the operator scale.
  if (std::abs(value.imag()) >= kHermitianTolerance * std::max(1.0, m.norm())) {
    throw ContractViolation("expectation value has a non-negligible imaginary part");
  }
  return value.real();
}

}  // namespace svet
