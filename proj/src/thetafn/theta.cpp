#include "thetaspline/theta.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "thetaspline/error.hpp"
#include "thetaspline/specialfn.hpp"

namespace thetaspline {

namespace {

constexpr double pi = std::numbers::pi;

void check(int d, double t, const ThetaSpec& spec) {
  spec.validate();
  if (d != 0 && d != 1) throw DomainError("d must be 0 or 1");
  if (!(t > 0) || !std::isfinite(t)) throw DomainError("theta needs finite t > 0");
}

// Sums term(k) for k = first, first+1, ... until a term drops below
// tail_tol relative to the running sum.
template <class Term>
double series(Term term, long first, const ThetaSpec& spec, double start) {
  double sum = start;
  for (long k = first; k < first + spec.max_terms; ++k) {
    double a = term(k);
    sum += a;
    if (std::fabs(a) <= spec.tail_tol * std::fabs(sum) || a == 0.0) return sum;
  }
  throw SlowConvergence("theta series needs more than " + std::to_string(spec.max_terms) + " terms");
}

}  // namespace

void ThetaSpec::validate() const {
  if (!(switch_t > 0)) throw ValidationError("switch_t must be positive");
  if (!(tail_tol > 0)) throw ValidationError("tail_tol must be positive");
  if (max_terms < 1) throw ValidationError("max_terms must be positive");
}

double theta_direct(int d, double t, const ThetaSpec& spec) {
  check(d, t, spec);
  if (d == 1) {
    double s = series([t](long k) { return (k % 2 ? -2.0 : 2.0) * std::exp(-pi * pi * k * k / t); }, 1, spec, 0.0);
    return 1.0 + s;
  }
  double s = series(
      [t](long k) {
        double m = 2.0 * k + 1;
        return (k % 2 ? -1.0 : 1.0) * std::exp(-0.25 * pi * pi * m * m / t) / m;
      },
      0, spec, 0.0);
  return 1.0 - 4.0 / pi * s;
}

double theta_transformed(int d, double t, const ThetaSpec& spec) {
  check(d, t, spec);
  if (d == 1) {
    double s = series([t](long k) { return std::exp(-static_cast<double>(k) * (k + 1) * t); }, 1, spec, 1.0);
    return 2.0 * std::sqrt(t / pi) * std::exp(-t / 4.0) * s;
  }
  const double r = std::sqrt(t) / 2.0;
  return 2.0 * series([r](long k) { return (k % 2 ? -1.0 : 1.0) * std::erfc((2.0 * k + 1) * r); }, 0, spec, 0.0);
}

double theta_eval(int d, double t, const ThetaSpec& spec) {
  if (t == 0.0) return 1.0;
  return t <= spec.switch_t ? theta_direct(d, t, spec) : theta_transformed(d, t, spec);
}

double theta0_star_direct(double x, const ThetaSpec& spec) {
  check(0, x, spec);
  return series(
      [x](long k) {
        double m = 2.0 * k + 1;
        return (k % 2 ? -m : m) * std::exp(-0.25 * pi * pi * m * m * x);
      },
      0, spec, 0.0);
}

double theta0_star_transformed(double x, const ThetaSpec& spec) {
  check(0, x, spec);
  double s = series(
      [x](long k) { return (k % 2 ? -1.0 : 1.0) * (2.0 * k + 1) * std::exp(-static_cast<double>(k) * (k + 1) / x); }, 1,
      spec, 1.0);
  return std::pow(pi * x, -1.5) * std::exp(-0.25 / x) * s;
}

double laplace_identity_residual(int d, double t, const QuadratureRule& rule) {
  if (!(t > 0)) throw DomainError("Laplace identity needs t > 0");
  QuadratureRule r = rule;
  r.abs_tol = std::min(rule.abs_tol, 1e-14 / t);
  auto f = [d, t](double z) { return z == 0.0 ? 0.0 : theta_eval(d, 1.0 / z) * std::exp(-t * z); };
  auto integral = integrate_to_infinity(f, 0.0, DecayHint{DecayHint::Kind::exponential, t}, r);
  double target = std::pow(t, 0.5 * d) / hd_eval(d, std::sqrt(t));
  return std::fabs(t * integral.value - target);
}

}  // namespace thetaspline
