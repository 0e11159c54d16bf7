#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "thetaspline/error.hpp"
#include "thetaspline/precision.hpp"
#include "thetaspline/quadrature.hpp"
#include "thetaspline/xreal.hpp"

using namespace thetaspline;
using boost::multiprecision::cpp_dec_float_100;

TEST_SUITE("numerics") {

TEST_CASE("xreal arithmetic against a decimal reference") {
  XReal a = XReal::from_string("1.1", 256);
  XReal b = XReal::from_string("3.3", 256);
  XReal r = (a * b - a) / b + sqrt(a);
  cpp_dec_float_100 ra("1.1"), rb("3.3");
  cpp_dec_float_100 ref = (ra * rb - ra) / rb + sqrt(ra);
  CHECK(r.to_double() == doctest::Approx(ref.convert_to<double>()).epsilon(1e-16));
  // 60 digits agree
  std::string got = r.to_string(60);
  std::string want = ref.str(60, std::ios_base::scientific);
  CHECK(got.substr(0, 50) == want.substr(0, 50));
}

TEST_CASE("xreal operations take the wider precision") {
  XReal a(1.0, 64);
  XReal b = XReal::pi(512);
  a += b;
  CHECK(a.precision() == 512);
  CHECK(XReal(2L, 100) * 3L == XReal(6L, 100));
  CHECK(XReal(1.0, 64) < XReal(2.0, 64));
  CHECK_THROWS_AS(XReal::from_string("1.2.3", 64), ValidationError);
}

TEST_CASE("log value round trips and survives huge magnitudes") {
  auto v = LogValue::from_double(-3.5);
  CHECK(v.sign == -1);
  CHECK(v.to_double() == doctest::Approx(-3.5));
  LogValue big{1, 5000.0};
  auto q = big / LogValue{1, 4999.0};
  CHECK(q.to_double() == doctest::Approx(std::exp(1.0)));
  CHECK(LogValue::from_double(0.0).is_zero());
  CHECK_THROWS_AS(big / LogValue::zero(), DomainError);
}

TEST_CASE("adaptive evaluation stops at the first agreeing pair") {
  PrecisionContext ctx;
  int calls = 0;
  auto res = adaptive_eval(
      [&](int bits) {
        ++calls;
        return XReal::pi(bits);
      },
      ctx);
  CHECK(res.bits == 128);
  CHECK(calls == 2);

  // (e^a - 1 - a - a^2/2)/a^3 with a = 2^-60 cancels to 0 at 128 bits
  auto cubic_term = [](long e) {
    return [e](int bits) {
      XReal a = ldexp(XReal(1L, bits), e);
      XReal one(1L, bits);
      XReal num = exp(a) - one - a - ldexp(square(a), -1);
      return num / pow(a, 3UL);
    };
  };
  auto hard = adaptive_eval(cubic_term(-60), ctx);
  CHECK(hard.bits == 256);
  CHECK(hard.value.to_double() == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("adaptive evaluation is reproducible at the returned precision") {
  auto f = [](int bits) {
    XReal a = ldexp(XReal(1L, bits), -60);
    XReal one(1L, bits);
    return (exp(a) - one - a - ldexp(square(a), -1)) / pow(a, 3UL);
  };
  auto res = adaptive_eval(f, PrecisionContext{});
  CHECK(f(res.bits) == res.value);
}

TEST_CASE("log value products match extended products") {
  for (double x : {-3.7e-120, 2.5, 1e200}) {
    for (double y : {4.1e-80, -0.3, 7.0e100}) {
      auto lv = LogValue::from_double(x) * LogValue::from_double(y);
      auto xr = (XReal(x, 256) * XReal(y, 256)).to_log();
      CHECK(lv.sign == xr.sign);
      CHECK(lv.log_mag == doctest::Approx(xr.log_mag).epsilon(1e-12));
    }
  }
}

TEST_CASE("precision exhaustion is reported") {
  PrecisionContext ctx;
  ctx.max_bits = 256;
  // needs about 300 bits; 128 and 256 give different garbage
  auto f = [](int bits) {
    XReal a = ldexp(XReal(1L, bits), -100);
    XReal one(1L, bits);
    return (exp(a) - one - a - ldexp(square(a), -1)) / pow(a, 3UL);
  };
  CHECK_THROWS_AS(adaptive_eval(f, ctx), PrecisionExhausted);
  ctx.max_bits = 1024;
  CHECK(adaptive_eval(f, ctx).value.to_double() == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("precision context validation and environment override") {
  PrecisionContext bad;
  bad.start_bits = 1;
  CHECK_THROWS_AS(bad.validate(), ValidationError);
  ::setenv("THETASPLINE_MAX_BITS", "4096", 1);
  CHECK(PrecisionContext::from_env().max_bits == 4096);
  ::setenv("THETASPLINE_MAX_BITS", "lots", 1);
  CHECK_THROWS_AS(PrecisionContext::from_env(), ValidationError);
  ::unsetenv("THETASPLINE_MAX_BITS");
  CHECK(PrecisionContext::from_env().max_bits == 16384);
}

TEST_CASE("gauss-legendre rule integrates polynomials exactly") {
  GaussLegendre gl(10);
  double sum = 0.0, moment = 0.0;
  for (size_t i = 0; i < gl.nodes.size(); ++i) {
    sum += gl.weights[i];
    moment += gl.weights[i] * std::pow(gl.nodes[i], 18);
  }
  CHECK(sum == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(moment == doctest::Approx(2.0 / 19.0).epsilon(1e-14));
}

TEST_CASE("adaptive quadrature") {
  QuadratureRule rule;
  auto r = integrate([](double x) { return std::exp(x); }, 0.0, 1.0, rule);
  CHECK(r.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
  // a kink at 1/3 is resolved by bisection
  auto k = integrate([](double x) { return std::fabs(x - 1.0 / 3.0); }, 0.0, 1.0, rule);
  CHECK(k.value == doctest::Approx(5.0 / 18.0).epsilon(1e-12));
  rule.kind = QuadKind::tanh_sinh;
  auto ts = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, rule);
  CHECK(ts.value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("singular endpoint and infinite range") {
  QuadratureRule rule;
  auto s = integrate_singular([](double x) { return std::pow(x, -0.75); }, 0.0, 1.0, 0.25, rule);
  CHECK(s.value == doctest::Approx(4.0).epsilon(1e-12));
  auto inf = integrate_to_infinity([](double x) { return std::exp(-x) * x * x; }, 0.0,
                                   DecayHint{DecayHint::Kind::exponential, 1.0}, rule);
  CHECK(inf.value == doctest::Approx(2.0).epsilon(1e-12));
  auto pw = integrate_to_infinity([](double x) { return 1.0 / (1.0 + x * x * x * x); }, 0.0,
                                  DecayHint{DecayHint::Kind::power, 4.0}, rule);
  CHECK(pw.value == doctest::Approx(std::numbers::pi / (2 * std::sqrt(2.0))).epsilon(1e-12));
  // 1/x^2 tails cannot reach the default absolute tolerance
  CHECK_THROWS_AS(integrate_to_infinity([](double x) { return 1.0 / (1.0 + x * x); }, 0.0,
                                        DecayHint{DecayHint::Kind::power, 2.0}, rule),
                  NonConvergent);
  CHECK_THROWS_AS(integrate_to_infinity([](double) { return 1.0; }, 0.0, DecayHint{DecayHint::Kind::power, 0.5}, rule),
                  DomainError);
}

TEST_CASE("line integral of a complex oscillating integrand") {
  // int exp(-e^y) e^{(1+2i) y} dy = Gamma(1+2i)
  using cplx = std::complex<double>;
  auto g = [](double y) { return std::exp(-std::exp(y)) * std::exp(cplx(1.0, 2.0) * y); };
  LineHint hint;
  hint.left_rate = 1.0;
  hint.right_rate = 1.0;
  auto r = integrate_line(g, hint, QuadratureRule{});
  CHECK(r.value.real() == doctest::Approx(0.15190400267003614).epsilon(1e-11));
  CHECK(r.value.imag() == doctest::Approx(0.01980488016185498).epsilon(1e-10));
}

TEST_CASE("panel limit raises NonConvergent") {
  QuadratureRule rule;
  rule.panel_limit = 8;
  rule.rel_tol = 1e-15;
  rule.abs_tol = 1e-18;
  CHECK_THROWS_AS(integrate([](double x) { return std::sin(1.0 / (x + 1e-6)); }, 0.0, 1.0, rule), NonConvergent);
}

}
