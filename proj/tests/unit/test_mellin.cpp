#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle_values.hpp"
#include "thetaspline/error.hpp"
#include "thetaspline/interp.hpp"
#include "thetaspline/knots.hpp"
#include "thetaspline/mellin.hpp"
#include "thetaspline/theta.hpp"

using namespace thetaspline;

TEST_SUITE("mellin") {

TEST_CASE("closed form of the theta transforms") {
  CHECK(mellin_theta_closed(0, 1.0) == doctest::Approx(oracle::kFourBeta2).epsilon(1e-13));
  CHECK(mellin_theta_closed(1, 1.0) == doctest::Approx(oracle::kSevenZeta3).epsilon(1e-13));
  CHECK_THROWS_AS(mellin_theta_closed(0, 0.0), PoleError);
}

TEST_CASE("quadrature matches the closed form") {
  for (int d : {0, 1}) {
    for (double sigma : {0.25, 1.0, 2.5, 4.0}) {
      auto m = mellin_theta_numeric(d, sigma);
      CHECK(m.value.real() == doctest::Approx(mellin_theta_closed(d, sigma)).epsilon(1e-10));
    }
  }
  CHECK(mellin_theta_numeric(1, 0.5).value.real() == doctest::Approx(oracle::kMellinTheta1_half).epsilon(1e-10));
}

TEST_CASE("complex point against the reference") {
  auto m = mellin_theta_numeric(0, {1.0, 2.0});
  CHECK(m.value.real() == doctest::Approx(oracle::kMellinTheta0_1p2i_re).epsilon(1e-10));
  CHECK(m.value.imag() == doctest::Approx(oracle::kMellinTheta0_1p2i_im).epsilon(1e-10));
}

TEST_CASE("convolution multiplies transforms") {
  // e^-t convolved with itself is 2 K_0(2 sqrt t)
  auto e = [](double t) { return std::exp(-t); };
  for (double t : {0.1, 1.0, 3.0}) {
    CHECK(mellin_convolve(e, e, t) == doctest::Approx(2 * std::cyl_bessel_k(0.0, 2 * std::sqrt(t))).epsilon(1e-11));
  }
  auto conv = [&](double t) { return mellin_convolve(e, e, t); };
  auto m = mellin_numeric(conv, 1.5, QuadratureRule{}, 0.0);
  CHECK(m.value.real() == doctest::Approx(std::pow(std::tgamma(1.5), 2)).epsilon(1e-8));
}

TEST_CASE("both routes for g_N agree with the reference") {
  PolyFamily f{FamilyKind::chebyshev_T, 0, 8, 0.0};
  auto c05 = gn_contour(f, 2.0, 0.5);
  auto d05 = gn_direct(f, 2.0, 0.5);
  CHECK(c05.value.real() == doctest::Approx(oracle::kGnT8u2s05).epsilon(1e-12));
  CHECK(d05.value.real() == doctest::Approx(oracle::kGnT8u2s05).epsilon(1e-12));
  auto c25 = gn_contour(f, 2.0, 2.5);
  auto d25 = gn_direct(f, 2.0, 2.5);
  CHECK(c25.value.real() == doctest::Approx(oracle::kGnT8u2s25).epsilon(1e-12));
  CHECK(d25.value.real() == doctest::Approx(oracle::kGnT8u2s25).epsilon(1e-12));
  CHECK_THROWS_AS(gn_contour(f, 2.0, -0.5), DomainError);
}

TEST_CASE("route agreement at three degrees") {
  for (auto kind : {FamilyKind::chebyshev_T, FamilyKind::chebyshev_U}) {
    for (int d : {0, 1}) {
      for (int N : {6, 10, 16}) {
        PolyFamily f{kind, d, N, 0.0};
        for (double s : {d + 0.5, d + 1.0, d + 2.5}) {
          double c = gn_contour(f, 1.0, s).value.real();
          double g = gn_direct(f, 1.0, s).value.real();
          CHECK(std::fabs(c - g) <= 1e-8 * std::fabs(g));
        }
      }
    }
  }
}

TEST_CASE("conjugate symmetry") {
  PolyFamily f{FamilyKind::chebyshev_U, 1, 12, 0.0};
  for (double v : {0.5, 3.0, 8.0}) {
    auto a = gn_contour(f, 1.0, {3.0, v}).value;
    auto b = gn_contour(f, 1.0, {3.0, -v}).value;
    CHECK(std::abs(a - std::conj(b)) <= 1e-12 * std::abs(a));
  }
}

TEST_CASE("convolution is commutative") {
  auto F = [](double t) { return std::exp(-t * t); };
  auto G = [](double t) { return 1.0 / (1.0 + t) / (1.0 + t); };
  for (double t : {0.2, 1.0, 7.0}) {
    CHECK(mellin_convolve(F, G, t) == doctest::Approx(mellin_convolve(G, F, t)).epsilon(1e-9));
  }
}

TEST_CASE("probe decays at about pi/2") {
  PolyFamily f{FamilyKind::chebyshev_T, 0, 20, 0.0};
  auto rows = rbeta_probe(f, 1.0, 2.0, {10.0, 15.0}, {20});
  double rate = std::log(rows[0].lhs / rows[1].lhs) / 5.0;
  CHECK(rate > std::numbers::pi / 2 - 0.3);
}

TEST_CASE("routes agree for non-chebyshev families too") {
  PolyFamily h{FamilyKind::hermite, 1, 6, 0.0};
  for (double s : {1.5, 3.5}) {
    auto c = gn_contour(h, 1.0, s);
    auto d = gn_direct(h, 1.0, s);
    CHECK(c.value.real() == doctest::Approx(d.value.real()).epsilon(1e-9));
  }
}

TEST_CASE("assoc mellin first interval is analytic") {
  auto k = custom_knots({"0", "1", "2", "3"});
  // B*_2 = t^-2 B_2; on [0,1] B_2 = t^2/2 so B* = 1/2
  auto m = mellin_assoc_bspline(k, 0.5);
  // int_0^1 t^-1/2 / 2 = 1, plus the rest by quadrature; compare to a direct sum
  double rest = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    double t = 1.0 + 2.0 * (i + 0.5) / n;
    double b = t < 2 ? (-2 * t * t + 6 * t - 3) / 2 : (3 - t) * (3 - t) / 2;
    rest += b / (t * t) * std::pow(t, -0.5) * 2.0 / n;
  }
  CHECK(m.value.real() == doctest::Approx(1.0 + rest).epsilon(1e-9));
}

TEST_CASE("the (r, beta) probe against the reference") {
  PolyFamily f{FamilyKind::chebyshev_T, 0, 10, 0.0};
  auto rows = rbeta_probe(f, 1.0, 2.0, {1.0, 5.0}, {10});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].lhs == doctest::Approx(oracle::kRBetaT10v1).epsilon(1e-10));
  CHECK(rows[1].lhs == doctest::Approx(oracle::kRBetaT10v5).epsilon(1e-10));
  CHECK(rbeta_mu(2.0, 0) == 3.0);
  CHECK(rbeta_mu(3.5, 1) == 5.5);
}

TEST_CASE("h_d transforms") {
  for (int i = 0; i < 4; ++i) {
    CHECK(hd_mellin_closed(0, oracle::kHd0S[i]) == doctest::Approx(oracle::kHd0[i]).epsilon(1e-12));
    CHECK(hd_mellin_closed(1, oracle::kHd1S[i]) == doctest::Approx(oracle::kHd1[i]).epsilon(1e-12));
  }
}

}
