#pragma once

// Three-qubit pure states and the generalized GHZ family.
//
// Basis ordering: index = 4*a + 2*b + c, so qubit A is the most significant
// bit. |000> is index 0 and |111> is index 7. Every tensor product in this
// library follows the same A (x) B (x) C order.

#include <array>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace svet {

using Complex = std::complex<double>;
using Amplitudes = Eigen::Matrix<Complex, 8, 1>;
using Operator2 = Eigen::Matrix<Complex, 2, 2>;
using Operator8 = Eigen::Matrix<Complex, 8, 8>;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-10;

/// Raised when an operator handed to expectation() is not Hermitian.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Normalized amplitude vector of a three-qubit pure state.
class PureState3 {
 public:
  /// Throws std::domain_error unless sum |amp|^2 == 1 within kNormTolerance
  /// and every component is finite.
  static PureState3 from_amplitudes(const Amplitudes& amps);
  static PureState3 from_amplitudes(const std::array<Complex, 8>& amps);

  /// Computational basis state |index>, index in [0, 8).
  static PureState3 basis(int index);

  const Amplitudes& amplitudes() const { return amps_; }
  const Complex& operator[](int i) const { return amps_[i]; }

  double norm() const { return amps_.norm(); }

 private:
  explicit PureState3(const Amplitudes& amps) : amps_(amps) {}
  Amplitudes amps_;
};

/// Parameter of cos(t)|000> + sin(t)|111>, canonical range [0, pi/4].
class GGHZParam {
 public:
  /// Values within kEndpointSnap of an endpoint are snapped onto it; anything
  /// further outside throws std::domain_error.
  explicit GGHZParam(double theta1);

  double theta1() const { return theta1_; }

  static constexpr double kMax = 0.78539816339744830962;  // pi/4
  static constexpr double kEndpointSnap = 1e-9;

 private:
  double theta1_;
};

PureState3 gghz_state(GGHZParam p);

/// <x|y>, conjugate-linear in x.
Complex inner_product(const PureState3& x, const PureState3& y);

/// <s|M|s> for Hermitian M. Throws ContractViolation if M deviates from its
/// adjoint by more than kHermitianTolerance in any element.
double expectation(const PureState3& s, const Operator8& m);

/// Largest element-wise |M - M^dagger|.
double hermiticity_defect(const Operator8& m);

}  // namespace svet
