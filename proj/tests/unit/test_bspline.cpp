#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle_values.hpp"
#include "thetaspline/bspline.hpp"
#include "thetaspline/error.hpp"
#include "thetaspline/knots.hpp"

using namespace thetaspline;

namespace {

std::vector<KnotSet> five_families(int N) {
  std::vector<KnotSet> out;
  out.push_back(omega_squared(PolyFamily{FamilyKind::chebyshev_T, 0, N, 0.0}, 1.0));
  out.push_back(omega_star(PolyFamily{FamilyKind::chebyshev_U, 1, N, 0.0}, 1.0));
  out.push_back(cardinal_knots(N));
  out.push_back(reciprocal_knots(std::max(1, N / 2)));
  out.push_back(general_knots(N));
  return out;
}

}  // namespace

TEST_SUITE("bspline") {

TEST_CASE("small knot sets against the reference") {
  auto k = custom_knots({"0", "1", "2", "3"});
  PrecisionContext ctx;
  const double ts[] = {0.5, 1.5, 2.5};
  for (int i = 0; i < 3; ++i) {
    auto ev = eval_divided_difference(k, XReal(ts[i], 128), ctx);
    CHECK(ev.b_value.to_double() == doctest::Approx(oracle::kB2_0123[i]).epsilon(1e-15));
  }
  auto card = cardinal_knots(3);
  CHECK(eval_divided_difference(card, XReal(0L, 128), ctx).b_value.to_double() ==
        doctest::Approx(oracle::kCardinalCubicCenter).epsilon(1e-15));
}

TEST_CASE("chebyshev knot set against the reference") {
  auto k = omega_squared(PolyFamily{FamilyKind::chebyshev_T, 0, 4, 0.0}, 2.0);
  PrecisionContext ctx;
  for (int i = 0; i < 4; ++i) {
    double t = oracle::kChebT4EvalT[i];
    auto ev = eval_divided_difference(k, XReal(t, 128), ctx);
    CHECK(ev.b_value.to_double() == doctest::Approx(oracle::kChebT4B[i]).epsilon(1e-13));
    CHECK(ev.assoc_log.to_double() == doctest::Approx(oracle::kChebT4Assoc[i]).epsilon(1e-13));
  }
}

TEST_CASE("both sides of the divided difference agree") {
  for (const auto& k : five_families(9)) {
    SplineKernel kernel(k, 512);
    for (int i = 1; i <= 50; ++i) {
      XReal x(k.min() + (k.max() - k.min()) * i / 51.0, 512);
      double f = kernel.b_value_forward(x).to_double();
      double m = kernel.b_value_mirrored(x).to_double();
      CHECK(f == doctest::Approx(m).epsilon(1e-12));
    }
  }
}

TEST_CASE("strict positivity at random interior points") {
  std::mt19937_64 rng(20261016);
  for (const auto& k : five_families(11)) {
    SplineKernel kernel(k, 256);
    std::uniform_real_distribution<double> pick(k.min(), k.max());
    for (int i = 0; i < 200; ++i) {
      double t = pick(rng);
      if (t <= k.min() || t >= k.max()) continue;
      CHECK(kernel.b_value(XReal(t, 256)).sign() > 0);
    }
  }
}

TEST_CASE("doubling the precision does not move the value") {
  auto k = omega_squared(PolyFamily{FamilyKind::chebyshev_T, 0, 32, 0.0}, 1.0);
  PrecisionContext ctx;
  for (double t : {0.002, 0.1, 0.6}) {
    auto ev = eval_divided_difference(k, XReal(t, 128), ctx);
    SplineKernel twice(k, 2 * ev.precision_used);
    double a = ev.b_value.to_double();
    double b = twice.b_value(XReal(t, 2 * ev.precision_used)).to_double();
    CHECK(std::fabs(a - b) <= 1e-12 * std::fabs(b));
  }
}

TEST_CASE("normalization for all five knot families") {
  for (int N : {3, 8, 16, 32}) {
    for (const auto& k : five_families(N)) {
      auto I = integrate_bspline(k);
      INFO("kind " << to_string(k.kind()) << " N " << N);
      CHECK(std::fabs(I.value - 1.0) <= 1e-10);
    }
  }
}

TEST_CASE("support and positivity") {
  for (const auto& k : five_families(10)) {
    SplineKernel kernel(k, 256);
    const double a = k.min(), b = k.max();
    CHECK(kernel.b_value(XReal(a - 0.1, 256)).is_zero());
    CHECK(kernel.b_value(XReal(b + 0.1, 256)).is_zero());
    for (int i = 1; i < 200; ++i) {
      double t = a + (b - a) * i / 200.0;
      CHECK(kernel.b_value(XReal(t, 256)).sign() >= 0);
    }
  }
}

TEST_CASE("associated spline is constant on the first interval and matches the jump") {
  auto k = omega_squared(PolyFamily{FamilyKind::chebyshev_T, 1, 6, 0.0}, 1.0);
  SplineKernel kernel(k, 512);
  const double t1 = k.as_doubles()[1];
  double jump = kernel.jump_value().to_double();
  for (double f : {1e-6, 0.1, 0.5, 0.99}) {
    CHECK(kernel.assoc_value(XReal(f * t1, 512)).to_double() == doctest::Approx(jump).epsilon(1e-12));
  }
  CHECK(kernel.assoc_value(XReal(0L, 512)).to_double() == doctest::Approx(jump));
  // beyond the first interval it is no longer constant
  double a = kernel.assoc_value(XReal(1.5 * t1, 512)).to_double();
  CHECK(std::fabs(a - jump) > 1e-6 * std::fabs(jump));
}

TEST_CASE("recurrence and divided difference agree") {
  PrecisionContext ctx;
  for (const auto& k : five_families(12)) {
    const double a = k.min(), b = k.max();
    for (int i = 1; i < 40; ++i) {
      double t = a + (b - a) * (i + 0.37) / 41.0;
      double rec = eval_recurrence(k, t);
      double dd = eval_divided_difference(k, XReal(t, 256), ctx).b_value.to_double();
      CHECK(rec == doctest::Approx(dd).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("interval index and escalation at large N") {
  auto k = omega_squared(PolyFamily{FamilyKind::chebyshev_T, 0, 64, 0.0}, 1.0);
  PrecisionContext ctx;
  auto ev = eval_divided_difference(k, XReal(0.3, 128), ctx);
  CHECK(ev.interval_index >= 1);
  SplineKernel wide(k, 4096);
  CHECK(ev.b_value.to_double() == doctest::Approx(wide.b_value(XReal(0.3, 4096)).to_double()).epsilon(1e-15));
  int bits = 0;
  auto a = eval_assoc(k, XReal(1e-5, 128), ctx, &bits);
  CHECK(a.sign == 1);
  SplineKernel kernel(k, 2048);
  CHECK(a.log_mag == doctest::Approx(kernel.jump_value().to_log().log_mag).epsilon(1e-9));
}

TEST_CASE("errors") {
  PrecisionContext ctx;
  auto neg = custom_knots({"-1", "0", "1"});
  CHECK_THROWS_AS(eval_assoc(neg, XReal(0.5, 128), ctx), DomainError);
}

}
