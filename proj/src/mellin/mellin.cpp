#include "thetaspline/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "thetaspline/bspline.hpp"
#include "thetaspline/error.hpp"
#include "thetaspline/specialfn.hpp"
#include "thetaspline/theta.hpp"

namespace thetaspline {

namespace {

constexpr double pi = std::numbers::pi;

double panel_for(double v) { return std::fabs(v) > 5.0 ? pi / std::fabs(v) : 1.0; }

// exp(log_mag + i phase)
cplx polar_exp(double log_mag, double phase) { return std::exp(log_mag) * cplx(std::cos(phase), std::sin(phase)); }

// ln(1 + e^z) without overflow
double softplus(double z) { return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

bool close(const cplx& a, const cplx& b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

// ln of (N+1)! / (Gamma(1+sigma) N^(1+sigma) Gamma(N+1-sigma)), complex sigma.
cplx log_gamma_ratio(int N, cplx sigma) {
  const double lnN = std::log(static_cast<double>(N));
  const double lfact = std::lgamma(N + 2.0);
  if (sigma.imag() == 0.0) {
    double s = sigma.real();
    if (s <= -1.0 && std::floor(s) == s) throw PoleError("Gamma(1+sigma) pole");
    double a = log_gamma(1.0 + s);
    double b = log_gamma(N + 1.0 - s);
    double sign = gamma_sign(1.0 + s) * gamma_sign(N + 1.0 - s);
    cplx out(lfact - a - (1.0 + s) * lnN - b, 0.0);
    if (sign < 0) out += cplx(0.0, pi);
    return out;
  }
  return lfact - log_gamma(1.0 + sigma) - (1.0 + sigma) * lnN - log_gamma(cplx(N + 1.0) - sigma);
}

std::vector<double> zeros_as_doubles(const PolyFamily& fam) {
  std::vector<double> out;
  for (const auto& x : family_zeros(fam, 128)) out.push_back(x.to_double());
  return out;
}

}  // namespace

MellinPoint mellin_assoc_bspline(const KnotSet& knots, cplx sigma, const QuadratureRule& rule,
                                 const PrecisionContext& ctx) {
  if (knots.min() != 0.0) throw DomainError("Mellin integral of B*_N needs min knot 0");
  if (!(sigma.real() > 0)) throw DomainError("Mellin integral of B*_N needs Re sigma > 0");
  QuadratureRule r = rule;
  r.rel_tol = std::min(rule.rel_tol, 1e-13);
  auto compute = [&](int bits) {
    SplineKernel kernel(knots, bits);
    const auto& kv = knots.as_doubles();
    double c = kernel.jump_value().to_double();
    if (!std::isfinite(c) || std::fabs(c) > 1e300) throw IntegrandOverflow("B*_N leaves double range");
    const double t1 = kv[1];
    cplx first = c * std::exp(sigma * std::log(t1)) / sigma;
    auto f = [&](double t) {
      double b = kernel.assoc_value(XReal(t, bits)).to_double();
      return b * std::exp((sigma - 1.0) * std::log(t));
    };
    std::vector<double> breaks(kv.begin() + 1, kv.end());
    auto rest = integrate(f, std::span<const double>(breaks), r);
    return std::pair<cplx, double>(first + rest.value, rest.err_estimate);
  };
  auto [res, bits] = escalate<std::pair<cplx, double>>(
      compute, [](const auto& a, const auto& b) { return close(a.first, b.first, 1e-12); }, ctx);
  return {2.0 * sigma, res.first, res.second, bits};
}

double mellin_theta_closed(int d, double sigma) {
  if (d != 0 && d != 1) throw DomainError("d must be 0 or 1");
  if (!(sigma > 0)) throw PoleError("M(Theta_d, sigma) needs sigma > 0");
  double x = 2.0 * sigma + d;
  double c = d == 0 ? dirichlet_beta(x) : (1.0 - std::exp2(-x)) * zeta(x);
  return 4.0 * gamma(x) * c / gamma(1.0 + sigma);
}

MellinPoint mellin_theta_numeric(int d, cplx sigma, const QuadratureRule& rule) {
  if (!(sigma.real() > 0)) throw DomainError("M(Theta_d, sigma) needs Re sigma > 0");
  // Theta_d(t) = 1 to within exp(-pi^2/(4a)) < 1e-21 on (0, a]
  const double a = 0.05;
  const double la = std::log(a);
  cplx head = std::exp(sigma * la) / sigma;
  auto g = [&](double y) { return theta_eval(d, std::exp(y)) * std::exp(sigma * y); };
  LineHint hint;
  hint.lower = la;
  hint.center = std::max(la, std::log(1.0 + 4.0 * sigma.real()));
  hint.panel_width = panel_for(sigma.imag());
  auto tail = integrate_line(g, hint, rule);
  return {sigma, head + tail.value, tail.err_estimate, 53};
}

double mellin_convolve(const RealFunction& F, const RealFunction& G, double t, const QuadratureRule& rule) {
  if (!(t > 0)) throw DomainError("Mellin convolution needs t > 0");
  auto g = [&](double x) { return F(std::exp(x)) * G(t * std::exp(-x)); };
  LineHint hint;
  // tau = sqrt(t) splits the argument evenly between F and G
  hint.center = 0.5 * std::log(t);
  return integrate_line(g, hint, rule).value;
}

MellinPoint mellin_numeric(const RealFunction& F, cplx sigma, const QuadratureRule& rule, double center) {
  auto g = [&](double y) { return F(std::exp(y)) * std::exp(sigma * y); };
  LineHint hint;
  hint.center = center;
  hint.panel_width = panel_for(sigma.imag());
  auto res = integrate_line(g, hint, rule);
  return {sigma, res.value, res.err_estimate, 53};
}

namespace {

template <class LogG>
MellinPoint contour_impl(LogG log_g, int n_zeros, double center, double u, cplx s, double power_shift,
                         const QuadratureRule& rule) {
  const double re = s.real() - power_shift;
  if (!(re > 0)) throw DomainError("contour integral diverges at t = 0");
  if (!(re < 2.0 * n_zeros + 2)) throw DomainError("contour integral diverges at infinity");
  if (!(u > 0)) throw ValidationError("u must be positive");
  const double lnu = std::log(u);
  auto g = [&](double y) {
    double log_mag = re * y - softplus(2.0 * (y - lnu)) - log_g(std::exp(y));
    if (log_mag < -745.0) return cplx(0.0);
    return polar_exp(log_mag, s.imag() * y);
  };
  LineHint hint;
  hint.center = center;
  hint.left_rate = re;
  hint.right_rate = 2.0;
  hint.panel_width = panel_for(s.imag());
  auto res = integrate_line(g, hint, rule);
  return {s, res.value, res.err_estimate, 53};
}

}  // namespace

MellinPoint contour_integral(const PolyFamily& fam, const std::vector<double>& zeros, double u, cplx s,
                             double power_shift, const QuadratureRule& rule) {
  double center = std::log((std::max(s.real() - power_shift, 0.0) + 0.5) / fam.beta_N());
  return contour_impl([&](double t) { return log_g_imag(fam, zeros, t); }, fam.N, center, u, s, power_shift, rule);
}

MellinPoint contour_integral(const std::vector<double>& zeros, double u, cplx s, double power_shift,
                             const QuadratureRule& rule) {
  double zmin = zeros.empty() ? 1.0 : *std::min_element(zeros.begin(), zeros.end());
  auto log_g = [&](double t) {
    double sum = 0.0;
    for (double z : zeros) sum += std::log1p((t / z) * (t / z));
    return sum;
  };
  return contour_impl(log_g, static_cast<int>(zeros.size()), std::log(zmin), u, s, power_shift, rule);
}

MellinPoint gn_contour(const PolyFamily& fam, double u, cplx s, const QuadratureRule& rule) {
  fam.validate();
  const int d = fam.d;
  if (!(s.real() > d && s.real() < 2.0 * fam.N + d + 1)) throw DomainError("g_N needs d < Re s < 2N+d+1");
  if (!(u > 0)) throw ValidationError("u_N must be positive");
  const cplx sigma = (s - static_cast<double>(d)) / 2.0;
  std::vector<double> zeros;
  if (!fam.is_chebyshev()) zeros = zeros_as_doubles(fam);
  auto J = contour_integral(fam, zeros, u, s, d, rule);
  cplx log_factor = std::log(2.0) + log_gamma_ratio(fam.N, sigma) + (s - static_cast<double>(d)) * std::log(fam.beta_N());
  cplx factor = std::exp(log_factor);
  if (!std::isfinite(std::abs(factor))) throw IntegrandOverflow("gamma prefactor leaves double range");
  return {s, factor * J.value, std::abs(factor) * J.err_estimate, 53};
}

MellinPoint gn_direct(const PolyFamily& fam, double u, cplx s, const QuadratureRule& rule,
                      const PrecisionContext& ctx) {
  fam.validate();
  const int d = fam.d;
  const cplx sigma = (s - static_cast<double>(d)) / 2.0;
  auto knots = omega_squared(fam, u);
  XReal prod(1L, 256);
  for (auto& x : family_zeros(fam, 256)) prod *= square(x);
  auto I = mellin_assoc_bspline(knots, sigma, rule, ctx);
  cplx log_factor = 2.0 * std::log(u) + (s - static_cast<double>(d)) * std::log(fam.beta_N()) -
                    (1.0 + sigma) * std::log(static_cast<double>(fam.N)) + std::log(prod.to_double());
  cplx factor = std::exp(log_factor);
  return {s, factor * I.value, std::abs(factor) * I.err_estimate, I.precision_bits};
}

double rbeta_mu(double r, int d) { return 3.0 + std::max(r + d - 2.0, 0.0); }

std::vector<RBetaRow> rbeta_probe(const PolyFamily& fam, double u, double r, const std::vector<double>& v_grid,
                                  const std::vector<int>& N_list, const QuadratureRule& rule) {
  if (!(r > 1.0 - fam.d)) throw DomainError("the probe needs r > 1 - d");
  const double mu = rbeta_mu(r, fam.d);
  std::vector<RBetaRow> rows;
  for (int N : N_list) {
    PolyFamily f = fam;
    f.N = N;
    std::vector<double> zeros;
    if (!f.is_chebyshev()) zeros = zeros_as_doubles(f);
    for (double v : v_grid) {
      auto J = contour_integral(f, zeros, u, cplx(r, v), 0.0, rule);
      double lhs = std::pow(f.beta_N(), r) * std::abs(J.value);
      double env = std::pow(std::fabs(v), mu) * std::exp(-0.5 * pi * std::fabs(v));
      rows.push_back({v, N, lhs, env, env > 0 ? lhs / env : std::numeric_limits<double>::infinity()});
    }
  }
  return rows;
}

}  // namespace thetaspline
