#pragma once

#include <complex>

#include "thetaspline/xreal.hpp"

namespace thetaspline {

/// Gamma function for real x; PoleError at 0, -1, -2, ...
double gamma(double x);
/// ln|Gamma(x)|; PoleError at non-positive integers.
double log_gamma(double x);
/// Sign of Gamma(x) (+1 for x > 0, alternating between poles for x < 0).
int gamma_sign(double x);
/// Principal log Gamma for complex z (Lanczos, with reflection for Re z < 1/2).
std::complex<double> log_gamma(std::complex<double> z);

/// Gamma(1/2, tau) = sqrt(pi) erfc(sqrt(tau)).
double upper_inc_gamma_half(double tau);
/// Upper incomplete gamma; only s = 1/2 is supported.
double upper_inc_gamma(double s, double tau);

/// Riemann zeta for s > 1, through the alternating eta series.
double zeta(double s);
/// Dirichlet beta, sum (-1)^k (2k+1)^-s, for s > 0.
double dirichlet_beta(double s);

/// h_0 = cosh, h_1 = sinh.
double hd_eval(int d, double z);
XReal hd_eval(int d, const XReal& z);

}  // namespace thetaspline
