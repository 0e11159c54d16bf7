#include "thetaspline/specialfn.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "thetaspline/error.hpp"

namespace thetaspline {

namespace {

bool is_pole(double x) { return x <= 0 && std::floor(x) == x; }

void check_d(int d) {
  if (d != 0 && d != 1) throw DomainError("parity index d must be 0 or 1");
}

// Borwein's acceleration for sum_{k>=0} (-1)^k a_k with a_k a moment sequence.
// n = 40 gives an error near 5.8^-40 times the first term.
template <class Term>
double alternating_sum(Term a) {
  constexpr int n = 40;
  std::array<double, n + 1> dk{};
  double term = 1.0 / n;  // (n+i-1)! 4^i / ((n-i)! (2i)!) at i = 0, times n below
  double acc = term;
  dk[0] = n * acc;
  for (int i = 1; i <= n; ++i) {
    term *= 4.0 * (n + i - 1) * (n - i + 1) / ((2.0 * i - 1) * (2.0 * i));
    acc += term;
    dk[i] = n * acc;
  }
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * (dk[k] - dk[n]) * a(k);
  }
  return -sum / dk[n];
}

}  // namespace

double gamma(double x) {
  if (is_pole(x)) throw PoleError("Gamma has a pole at " + std::to_string(x));
  return std::tgamma(x);
}

double log_gamma(double x) {
  if (is_pole(x)) throw PoleError("Gamma has a pole at " + std::to_string(x));
  return std::lgamma(x);
}

int gamma_sign(double x) {
  if (is_pole(x)) throw PoleError("Gamma has a pole at " + std::to_string(x));
  if (x > 0) return 1;
  // between -k-1 and -k the sign is (-1)^(k+1)
  long k = static_cast<long>(std::floor(-x));
  return (k % 2 == 0) ? -1 : 1;
}

std::complex<double> log_gamma(std::complex<double> z) {
  using C = std::complex<double>;
  constexpr double pi = std::numbers::pi;
  if (z.real() < 0.5) {
    if (z.imag() == 0.0 && is_pole(z.real())) throw PoleError("complex Gamma pole");
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(C(1.0) - z);
  }
  static constexpr std::array<double, 9> c = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  C w = z - 1.0;
  C x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (w + static_cast<double>(i));
  C t = w + 7.5;
  return 0.5 * std::log(2 * pi) + (w + 0.5) * std::log(t) - t + std::log(x);
}

double upper_inc_gamma_half(double tau) {
  if (!(tau >= 0)) throw DomainError("Gamma(1/2, tau) needs tau >= 0");
  return std::sqrt(std::numbers::pi) * std::erfc(std::sqrt(tau));
}

double upper_inc_gamma(double s, double tau) {
  if (s != 0.5) throw DomainError("upper incomplete gamma implemented for s = 1/2 only");
  return upper_inc_gamma_half(tau);
}

double zeta(double s) {
  if (!(s > 1)) throw DomainError("zeta needs s > 1");
  double eta = alternating_sum([s](int k) { return std::pow(k + 1.0, -s); });
  return eta / (1.0 - std::exp2(1.0 - s));
}

double dirichlet_beta(double s) {
  if (!(s > 0)) throw DomainError("Dirichlet beta needs s > 0");
  return alternating_sum([s](int k) { return std::pow(2.0 * k + 1.0, -s); });
}

double hd_eval(int d, double z) {
  check_d(d);
  return d == 0 ? std::cosh(z) : std::sinh(z);
}

XReal hd_eval(int d, const XReal& z) {
  check_d(d);
  return d == 0 ? cosh(z) : sinh(z);
}

}  // namespace thetaspline
