#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "svet/operators.hpp"
#include "svet/state.hpp"

using namespace svet;

TEST_SUITE("state") {
  TEST_CASE("gghz_state endpoints and interior") {
    const PureState3 prod = gghz_state(GGHZParam(0.0));
    CHECK(prod[0] == Complex(1.0, 0.0));
    for (int i = 1; i < 8; ++i) CHECK(prod[i] == Complex(0.0, 0.0));

    const PureState3 ghz = gghz_state(GGHZParam(std::numbers::pi / 4));
    CHECK(ghz[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(ghz[7].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

    const PureState3 s = gghz_state(GGHZParam(std::numbers::pi / 6));
    CHECK(std::abs(s[0] - Complex(std::sqrt(3.0) / 2.0, 0.0)) < 1e-15);
    CHECK(std::abs(s[7] - Complex(0.5, 0.0)) < 1e-15);
    for (int i = 1; i < 7; ++i) CHECK(s[i] == Complex(0.0, 0.0));
  }

  TEST_CASE("GGHZParam rejects values outside [0, pi/4]") {
    CHECK_THROWS_AS(GGHZParam(-0.01), std::domain_error);
    CHECK_THROWS_AS(GGHZParam(std::numbers::pi / 4 + 1e-6), std::domain_error);
    CHECK_THROWS_AS(GGHZParam(std::nan("")), std::domain_error);
  }

  TEST_CASE("GGHZParam snaps a rounded pi/4 onto the endpoint") {
    // 0.7853981634 is pi/4 rounded to ten decimals, 2.6e-12 above it.
    CHECK(GGHZParam(0.7853981634).theta1() == GGHZParam::kMax);
    CHECK(GGHZParam(-5e-10).theta1() == 0.0);
  }

  TEST_CASE("normalization holds across the family") {
    for (int i = 0; i <= 1000; ++i) {
      const double t = GGHZParam::kMax * i / 1000.0;
      CHECK(std::abs(gghz_state(GGHZParam(t)).amplitudes().squaredNorm() - 1.0) < 1e-12);
    }
  }

  TEST_CASE("from_amplitudes validates") {
    Amplitudes v = Amplitudes::Zero();
    v[0] = 1.0;
    v[3] = 0.1;
    CHECK_THROWS_AS(PureState3::from_amplitudes(v), std::domain_error);
    v[3] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(PureState3::from_amplitudes(v), std::domain_error);
    CHECK_THROWS_AS(PureState3::basis(8), std::out_of_range);
  }

  TEST_CASE("inner_product") {
    const PureState3 z = PureState3::basis(0);
    const PureState3 o = PureState3::basis(7);
    CHECK(inner_product(z, z) == Complex(1.0, 0.0));
    CHECK(inner_product(z, o) == Complex(0.0, 0.0));
    const PureState3 ghz = gghz_state(GGHZParam(std::numbers::pi / 4));
    CHECK(std::abs(inner_product(ghz, z) - 1.0 / std::sqrt(2.0)) < 1e-15);

    // Conjugate-linear in the first argument.
    Amplitudes v = Amplitudes::Zero();
    v[0] = Complex(0.0, 1.0);
    const PureState3 iz = PureState3::from_amplitudes(v);
    CHECK(inner_product(iz, z) == Complex(0.0, -1.0));
    CHECK(inner_product(z, iz) == Complex(0.0, 1.0));
  }

  TEST_CASE("expectation of simple operators") {
    const PureState3 z = PureState3::basis(0);
    CHECK(expectation(z, identity8()) == doctest::Approx(1.0));

    const PureState3 ghz = gghz_state(GGHZParam(std::numbers::pi / 4));
    const Operator8 zzz = tensor3(pauli(2), pauli(2), pauli(2));
    const Operator8 xxx = tensor3(pauli(0), pauli(0), pauli(0));
    CHECK(std::abs(expectation(ghz, zzz)) < 1e-15);
    CHECK(expectation(ghz, xxx) == doctest::Approx(1.0).epsilon(1e-14));
  }

  TEST_CASE("expectation rejects non-Hermitian operators") {
    Operator8 m = identity8();
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(expectation(PureState3::basis(0), m), ContractViolation);
  }

  TEST_CASE("expectation: real for Hermitian input, linear in the operator") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> n;
    for (int trial = 0; trial < 1000; ++trial) {
      const PureState3 s = oracle::random_state(rng);
      const Operator8 m1 = oracle::random_hermitian(rng);
      const Operator8 m2 = oracle::random_hermitian(rng);
      const Complex raw = s.amplitudes().dot(m1 * s.amplitudes());
      REQUIRE(std::abs(raw.imag()) < 1e-10);

      const double alpha = n(rng), beta = n(rng);
      const double combined = expectation(s, alpha * m1 + beta * m2);
      const double separate = alpha * expectation(s, m1) + beta * expectation(s, m2);
      REQUIRE(std::abs(combined - separate) < 1e-10);
    }
  }
}
