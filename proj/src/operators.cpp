#include "svet/operators.hpp"

#include <string>

namespace svet {
namespace {

void require_unit(const BlochVector& v, const char* what) {
  if (!v.is_unit()) {
    throw std::domain_error(std::string(what) + " must be a unit Bloch vector (norm " +
                            std::to_string(v.norm()) + ")");
  }
}

void require_unit(const MeasurementSettings& m) {
  for (Slot s : kAllSlots) require_unit(m[s], slot_name(s));
}

template <int R1, int C1, int R2, int C2>
Eigen::Matrix<Complex, R1 * R2, C1 * C2> kron(const Eigen::Matrix<Complex, R1, C1>& l,
                                              const Eigen::Matrix<Complex, R2, C2>& r) {
  Eigen::Matrix<Complex, R1 * R2, C1 * C2> out;
  for (int i = 0; i < R1; ++i)
    for (int j = 0; j < C1; ++j) out.template block<R2, C2>(i * R2, j * C2) = l(i, j) * r;
  return out;
}

}  // namespace

bool BlochVector::is_unit() const {
  const double n2 = x * x + y * y + z * z;
  return std::isfinite(n2) && std::abs(n2 - 1.0) <= kNormTolerance;
}

const char* slot_name(Slot s) {
  switch (s) {
    case Slot::a: return "a";
    case Slot::a_p: return "a'";
    case Slot::b: return "b";
    case Slot::b_p: return "b'";
    case Slot::c: return "c";
    case Slot::c_p: return "c'";
  }
  return "?";
}

const Operator2& pauli(int i) {
  static const std::array<Operator2, 3> sigma = [] {
    const Complex I(0.0, 1.0);
    std::array<Operator2, 3> s;
    s[0] << 0.0, 1.0, 1.0, 0.0;
    s[1] << 0.0, -I, I, 0.0;
    s[2] << 1.0, 0.0, 0.0, -1.0;
    return s;
  }();
  return sigma.at(static_cast<std::size_t>(i));
}

Operator2 identity2() { return Operator2::Identity(); }
Operator8 identity8() { return Operator8::Identity(); }

Operator2 pauli_dot(const BlochVector& v, VectorForm form) {
  if (form == VectorForm::unit) require_unit(v, "Bloch vector");
  return v.x * pauli(0) + v.y * pauli(1) + v.z * pauli(2);
}

Operator8 tensor3(const Operator2& a, const Operator2& b, const Operator2& c) {
  return kron(a, kron(b, c));
}

Operator8 svetlichny_operator(const MeasurementSettings& m, VectorForm form) {
  if (form == VectorForm::unit) require_unit(m);
  const auto alg = VectorForm::algebraic;
  const Operator2 A = pauli_dot(m.a(), alg);
  const Operator2 Ap = pauli_dot(m.a_p(), alg);
  const Operator2 B = pauli_dot(m.b(), alg);
  const Operator2 Bp = pauli_dot(m.b_p(), alg);
  const Operator2 C = pauli_dot(m.c(), alg);
  const Operator2 Cp = pauli_dot(m.c_p(), alg);
  const Operator2 K = C + Cp;
  const Operator2 Kp = C - Cp;

  const Eigen::Matrix<Complex, 4, 4> left = kron(B, K) + kron(Bp, Kp);
  const Eigen::Matrix<Complex, 4, 4> right = kron(B, Kp) - kron(Bp, K);
  return kron(A, left) + kron(Ap, right);
}

Operator8 svetlichny_operator_expanded(const MeasurementSettings& m, VectorForm form) {
  if (form == VectorForm::unit) require_unit(m);
  const auto alg = VectorForm::algebraic;
  const std::array<Operator2, 2> A{pauli_dot(m.a(), alg), pauli_dot(m.a_p(), alg)};
  const std::array<Operator2, 2> B{pauli_dot(m.b(), alg), pauli_dot(m.b_p(), alg)};
  const std::array<Operator2, 2> C{pauli_dot(m.c(), alg), pauli_dot(m.c_p(), alg)};
  Operator8 out = Operator8::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        out += static_cast<double>(svetlichny_sign(i, j, k)) * tensor3(A[i], B[j], C[k]);
  return out;
}

double svetlichny_expectation(const PureState3& s, const MeasurementSettings& m,
                              VectorForm form) {
  return expectation(s, svetlichny_operator(m, form));
}

}  // namespace svet
