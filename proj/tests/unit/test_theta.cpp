#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle_values.hpp"
#include "thetaspline/error.hpp"
#include "thetaspline/theta.hpp"

using namespace thetaspline;

TEST_SUITE("thetafn") {

TEST_CASE("values against the plain series") {
  for (int i = 0; i < 6; ++i) {
    double t = oracle::kThetaT[i];
    INFO("t = " << t);
    CHECK(theta_eval(0, t) == doctest::Approx(oracle::kTheta0[i]).epsilon(1e-13));
    CHECK(theta_eval(1, t) == doctest::Approx(oracle::kTheta1[i]).epsilon(1e-13));
  }
  CHECK(theta_eval(0, 0.0) == 1.0);
  CHECK(theta_eval(1, 0.0) == 1.0);
  CHECK_THROWS_AS(theta_eval(0, -1.0), DomainError);
  CHECK_THROWS_AS(theta_eval(2, 1.0), DomainError);
}

TEST_CASE("the two representations agree on the overlap window") {
  for (int d : {0, 1}) {
    for (int i = 0; i < 20; ++i) {
      double t = 1.5 + 4.5 * i / 19.0;
      double a = theta_direct(d, t), b = theta_transformed(d, t);
      CHECK(std::fabs(a - b) <= 1e-12 * std::fabs(a));
    }
  }
}

TEST_CASE("Theta_0 star forms agree") {
  for (double x : {0.05, 0.1, 0.2, 0.4}) {
    CHECK(theta0_star_direct(x) == doctest::Approx(theta0_star_transformed(x)).epsilon(1e-12));
  }
}

TEST_CASE("decay and monotonicity") {
  double prev = 1.0;
  for (double t = 0.5; t < 60; t *= 1.5) {
    double v = theta_eval(0, t);
    CHECK(v < prev);
    CHECK(v > 0);
    prev = v;
  }
  // large t: e^{-t/4} scale
  double t = 200.0;
  CHECK(theta_eval(1, t) == doctest::Approx(2 * std::sqrt(t / std::numbers::pi) * std::exp(-t / 4)).epsilon(1e-12));
}

TEST_CASE("large-t leading forms") {
  // Theta_1 ~ 2 sqrt(t/pi) e^(-t/4) with exponentially small correction,
  // Theta_0 ~ 4 e^(-t/4)/sqrt(pi t) with an O(1/t) correction
  double prev0 = 0.0, prev1 = 2.0;
  for (double t = 20.0; t <= 100.0; t += 5.0) {
    double r1 = theta_eval(1, t) / (2 * std::sqrt(t / std::numbers::pi) * std::exp(-t / 4));
    double r0 = theta_eval(0, t) / (4 * std::exp(-t / 4) / std::sqrt(std::numbers::pi * t));
    CHECK(r1 <= prev1);
    CHECK(std::fabs(r1 - 1) <= 2.5 * std::exp(-2 * t));
    CHECK(r0 >= prev0);
    CHECK(std::fabs(r0 - 1) * t <= 2.5);
    prev0 = r0;
    prev1 = r1;
  }
}

TEST_CASE("bounded and positive on a log grid") {
  for (int d : {0, 1}) {
    for (double t = 1e-6; t <= 200.0; t *= 1.2) {
      double v = theta_eval(d, t);
      CHECK(v > 0);
      CHECK(v <= 1.1);
    }
  }
}

TEST_CASE("Laplace identity") {
  for (int d : {0, 1}) {
    for (double t : {0.1, 0.5, 1.0, 4.0, 12.0, 30.0}) {
      INFO("d " << d << " t " << t);
      CHECK(laplace_identity_residual(d, t) <= 1e-8);
    }
  }
}

}
