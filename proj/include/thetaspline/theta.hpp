#pragma once

#include "thetaspline/quadrature.hpp"

namespace thetaspline {

struct ThetaSpec {
  int d = 0;
  double switch_t = 3.0;
  double tail_tol = 1e-18;
  long max_terms = 1000000;

  void validate() const;
};

/// The defining series, in powers of exp(-c/t). Intended for t <= switch_t.
double theta_direct(int d, double t, const ThetaSpec& spec = {});
/// Series in powers of exp(-c t). Theta_1 uses the product identity; Theta_0
/// uses 2 sum_k (-1)^k erfc((2k+1) sqrt(t)/2), the termwise integral of the
/// transformed Theta_0^* series.
double theta_transformed(int d, double t, const ThetaSpec& spec = {});
/// Dispatches on switch_t; t = 0 returns the limit 1.
double theta_eval(int d, double t, const ThetaSpec& spec = {});

/// sum_k (-1)^k (2k+1) exp(-(pi^2/4)(2k+1)^2 x).
double theta0_star_direct(double x, const ThetaSpec& spec = {});
/// (pi x)^(-3/2) exp(-1/(4x)) (1 + sum_k (-1)^k (2k+1) exp(-k(k+1)/x)).
double theta0_star_transformed(double x, const ThetaSpec& spec = {});

/// |t int_0^inf Theta_d(1/z) e^(-tz) dz - t^(d/2)/h_d(sqrt t)|.
double laplace_identity_residual(int d, double t, const QuadratureRule& rule = {});

}  // namespace thetaspline
