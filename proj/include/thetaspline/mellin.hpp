#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "thetaspline/knots.hpp"
#include "thetaspline/precision.hpp"
#include "thetaspline/quadrature.hpp"

namespace thetaspline {

using cplx = std::complex<double>;

struct MellinPoint {
  cplx s;
  cplx value;
  double err_estimate = 0.0;
  int precision_bits = 53;  // 53 when only doubles were involved
};

/// int_0^maxknot B*_N(t) t^(sigma-1) dt for knots with minimum 0. The first
/// interval, where B*_N is constant, is integrated in closed form; the rest by
/// quadrature on samples from the extended-precision kernel.
MellinPoint mellin_assoc_bspline(const KnotSet& knots, cplx sigma, const QuadratureRule& rule = {},
                                 const PrecisionContext& ctx = {});

/// M(Theta_d, sigma) = 4 Gamma(2 sigma + d) c_d(2 sigma + d) / Gamma(1 + sigma)
/// with c_0 = beta and c_1(x) = (1 - 2^-x) zeta(x).
double mellin_theta_closed(int d, double sigma);
/// int_0^inf Theta_d(t) t^(sigma-1) dt by quadrature in log variables.
MellinPoint mellin_theta_numeric(int d, cplx sigma, const QuadratureRule& rule = {});

using RealFunction = std::function<double(double)>;

/// int_0^inf F(tau) G(t/tau) dtau/tau, in log variables centered at ln t.
double mellin_convolve(const RealFunction& F, const RealFunction& G, double t, const QuadratureRule& rule = {});
/// int_0^inf F(t) t^(sigma-1) dt for F decaying at both ends (class L).
MellinPoint mellin_numeric(const RealFunction& F, cplx sigma, const QuadratureRule& rule = {}, double center = 0.0);

/// The contour route for g_N(s):
/// (2/Gamma(1+sigma)) ((N+1)!/(N^(1+sigma) Gamma(N+1-sigma)))
///   * int_0^inf x^(s-d-1) / ((1 + (x/(beta u))^2) G(ix/beta)) dx,
/// sigma = (s-d)/2 and G(it) = prod (1 + t^2/x_k^2).
MellinPoint gn_contour(const PolyFamily& fam, double u, cplx s, const QuadratureRule& rule = {});
/// The direct route: u^2 beta^(s-d) N^(-1-sigma) prod x_k^2 int B*_N t^(sigma-1) dt.
MellinPoint gn_direct(const PolyFamily& fam, double u, cplx s, const QuadratureRule& rule = {},
                      const PrecisionContext& ctx = {});

/// int_0^inf t^(s-1) / ((1 + (t/u)^2) G(it)) dt, complex s = r + iv.
MellinPoint contour_integral(const PolyFamily& fam, const std::vector<double>& zeros, double u, cplx s,
                             double power_shift, const QuadratureRule& rule = {});

/// Same integral for G(it) = prod (1 + t^2/z_k^2) with arbitrary zeros z_k.
MellinPoint contour_integral(const std::vector<double>& zeros, double u, cplx s, double power_shift,
                             const QuadratureRule& rule = {});

struct RBetaRow {
  double v;
  int N;
  double lhs;
  double envelope;  // |v|^mu exp(-pi|v|/2)
  double ratio;
};

/// lhs = beta_N^r |int t^(s-1)/((1+(t/u)^2) G(it)) dt| at s = r + iv against
/// |v|^mu e^(-pi|v|/2), mu = 3 + max(r + d - 2, 0).
std::vector<RBetaRow> rbeta_probe(const PolyFamily& fam, double u, double r, const std::vector<double>& v_grid,
                                  const std::vector<int>& N_list = {10, 20, 40}, const QuadratureRule& rule = {});

/// The exponent mu used by the probe envelope.
double rbeta_mu(double r, int d);

}  // namespace thetaspline
