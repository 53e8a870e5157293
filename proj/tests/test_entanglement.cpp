#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "svet/entanglement.hpp"

using namespace svet;

namespace {

PureState3 apply_local(const PureState3& s, const oracle::Mat2& ua, const oracle::Mat2& ub,
                       const oracle::Mat2& uc) {
  const Amplitudes v = oracle::kron3(ua, ub, uc) * s.amplitudes();
  return PureState3::from_amplitudes(v / v.norm());
}

}  // namespace

TEST_SUITE("entanglement") {
  TEST_CASE("three_tangle of reference states") {
    CHECK(three_tangle(PureState3::basis(0)).value == 0.0);
    CHECK(three_tangle(gghz_state(GGHZParam(std::numbers::pi / 4))).value ==
          doctest::Approx(1.0).epsilon(1e-14));

    // W state: every hyperdeterminant term contains one of the zero
    // amplitudes a000, a111, a011, a101, a110.
    Amplitudes w = Amplitudes::Zero();
    w[1] = w[2] = w[4] = 1.0 / std::sqrt(3.0);
    CHECK(three_tangle(PureState3::from_amplitudes(w)).value == 0.0);
  }

  TEST_CASE("biseparable states have zero tangle") {
    // |0>_A (x) (|00> + |11>)/sqrt2
    Amplitudes v = Amplitudes::Zero();
    v[0] = v[3] = 1.0 / std::sqrt(2.0);
    CHECK(three_tangle(PureState3::from_amplitudes(v)).value < 1e-15);
  }

  TEST_CASE("raw amplitude overload rejects unnormalized input") {
    std::array<Complex, 8> amps{};
    amps[0] = 1.0;
    amps[7] = 1.0;
    CHECK_THROWS_AS(three_tangle(amps), std::domain_error);
    amps[0] = amps[7] = 1.0 / std::sqrt(2.0);
    CHECK(three_tangle(amps).value == doctest::Approx(1.0));
  }

  TEST_CASE("gghz_tangle") {
    CHECK(gghz_tangle(GGHZParam(0.0)).value == 0.0);
    CHECK(gghz_tangle(GGHZParam(std::numbers::pi / 4)).value == doctest::Approx(1.0));
    const GGHZParam p(std::numbers::pi / 12);
    CHECK(gghz_tangle(p).value == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(std::abs(three_tangle(gghz_state(p)).value - 0.25) < 1e-12);
  }

  TEST_CASE("closed form matches the hyperdeterminant on a 1000-point grid") {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const GGHZParam p(GGHZParam::kMax * i / 999.0);
      worst = std::max(worst,
                       std::abs(three_tangle(gghz_state(p)).value - gghz_tangle(p).value));
    }
    CHECK(worst < 1e-10);
  }

  TEST_CASE("theta_for_tangle") {
    CHECK(theta_for_tangle(0.0).theta1() == 0.0);
    CHECK(theta_for_tangle(1.0).theta1() == doctest::Approx(std::numbers::pi / 4));
    const GGHZParam third = theta_for_tangle(1.0 / 3.0);
    CHECK(third.theta1() == doctest::Approx(0.30773985433519363).epsilon(1e-14));
    CHECK(std::abs(gghz_tangle(third).value - 1.0 / 3.0) < 1e-12);
    CHECK_THROWS_AS(theta_for_tangle(-0.1), std::domain_error);
    CHECK_THROWS_AS(theta_for_tangle(1.1), std::domain_error);

    for (int i = 0; i <= 200; ++i) {
      const double tau = i / 200.0;
      REQUIRE(std::abs(gghz_tangle(theta_for_tangle(tau)).value - tau) < 1e-12);
    }
  }

  TEST_CASE("tangle range and local-unitary invariance on random states") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
      const double t = three_tangle(oracle::random_state(rng)).value;
      REQUIRE(t >= 0.0);
      REQUIRE(t <= 1.0 + 1e-10);
    }
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
      const PureState3 s = oracle::random_state(rng);
      const PureState3 u = apply_local(s, oracle::random_unitary(rng),
                                       oracle::random_unitary(rng), oracle::random_unitary(rng));
      worst = std::max(worst, std::abs(three_tangle(u).value - three_tangle(s).value));
    }
    CHECK(worst < 1e-8);
  }
}
