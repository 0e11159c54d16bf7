#include "thetaspline/interp.hpp"

#include <cmath>
#include <numbers>

#include "thetaspline/error.hpp"
#include "thetaspline/mellin.hpp"
#include "thetaspline/specialfn.hpp"

namespace thetaspline {

namespace {

constexpr double pi = std::numbers::pi;

double rel_gap(double a, double b) {
  double scale = std::max(std::fabs(a), std::fabs(b));
  return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

// x^p for x >= 0, p > 0
XReal power(const XReal& x, double p) {
  if (x.is_zero()) return XReal(x.precision());
  return pow(x, XReal(p, x.precision()));
}

// (1/2) x^m log x with the limit 0 at x = 0
XReal half_xm_log(const XReal& x, int m) {
  if (x.is_zero()) return XReal(x.precision());
  return pow(x, static_cast<unsigned long>(m)) * log(x) / 2L;
}

double log_factorial(int n) { return std::lgamma(n + 1.0); }

}  // namespace

XReal lagrange_eval(const std::vector<XReal>& nodes, const std::vector<XReal>& values, const XReal& x) {
  if (nodes.size() != values.size()) throw ValidationError("nodes and values differ in length");
  if (nodes.empty()) throw ValidationError("interpolation needs at least one node");
  const int bits = std::max(nodes.front().precision(), x.precision());
  std::vector<XReal> w(nodes.size(), XReal(1L, bits));
  for (size_t j = 0; j < nodes.size(); ++j) {
    for (size_t k = 0; k < nodes.size(); ++k) {
      if (k == j) continue;
      XReal diff = nodes[j] - nodes[k];
      if (diff.is_zero()) throw DuplicateNode("node " + nodes[j].to_string(20) + " repeats");
      w[j] *= diff;
    }
  }
  XReal num(bits), den(bits);
  for (size_t j = 0; j < nodes.size(); ++j) {
    XReal diff = x - nodes[j];
    if (diff.is_zero()) return values[j];
    XReal c = XReal(1L, bits) / (w[j] * diff);
    num += c * values[j];
    den += c;
  }
  return num / den;
}

XReal lagrange_eval(const std::vector<XReal>& nodes, const XFunction& f, const XReal& x) {
  std::vector<XReal> values;
  values.reserve(nodes.size());
  for (const auto& n : nodes) values.push_back(f(n));
  return lagrange_eval(nodes, values, x);
}

int find_knot(const KnotSet& knots, double u) {
  const auto& kd = knots.as_doubles();
  for (size_t i = 0; i < kd.size(); ++i) {
    if (std::fabs(kd[i] - u) <= 1e-12 * std::max(1.0, std::fabs(u))) return static_cast<int>(i);
  }
  throw ValidationError("u = " + std::to_string(u) + " is not a knot");
}

namespace {

struct RemainderParts {
  double lhs;
  double w;
  int bits;
};

// f(u) - L(u) at knots[u_index] from the remaining knots, and w(u).
RemainderParts remainder(const KnotSet& knots, int u_index, const std::function<XReal(const XReal&)>& f,
                         const PrecisionContext& ctx) {
  if (u_index < 0 || u_index >= knots.size()) throw ValidationError("u index outside the knot set");
  auto res = adaptive_eval(
      [&](int bits) {
        auto kv = knots.materialize(bits);
        XReal u = kv[u_index];
        kv.erase(kv.begin() + u_index);
        return f(u) - lagrange_eval(kv, f, u);
      },
      ctx);
  auto kv = knots.materialize(256);
  XReal w(1L, 256);
  for (int i = 0; i < knots.size(); ++i) {
    if (i != u_index) w *= kv[u_index] - kv[i];
  }
  return {res.value.to_double(), w.to_double(), res.bits};
}

}  // namespace

IdentityResult remainder_identity(const KnotSet& knots, int u_index, double s, int d, const PrecisionContext& ctx,
                              const QuadratureRule& rule) {
  if (knots.min() != 0.0) throw DomainError("the identity needs min knot 0");
  if (!(s > d)) throw DomainError("the identity needs s > d");
  const double sigma = (s - d) / 2.0;
  const int N = knots.N();
  if (std::floor(sigma) == sigma) {
    int m = static_cast<int>(sigma);
    if (m < N + 1) return remainder_identity_log(knots, u_index, m, ctx, rule);
    throw DomainError("s - d = 2m with m >= N+1 has no log analogue");
  }
  auto parts = remainder(knots, u_index, [sigma](const XReal& x) { return power(x, sigma); }, ctx);
  // M = (-1)^(N+1) Gamma(N+1-sigma) / (Gamma(-sigma)(N+1)!)
  double log_m = log_gamma(N + 1.0 - sigma) - log_gamma(-sigma) - log_factorial(N + 1);
  int sign = ((N + 1) % 2 == 0 ? 1 : -1) * gamma_sign(N + 1.0 - sigma) * gamma_sign(-sigma);
  double M = sign * std::exp(log_m);
  auto integral = mellin_assoc_bspline(knots, sigma, rule, ctx);
  double rhs = M * parts.w * integral.value.real();
  return {parts.lhs, rhs, rel_gap(parts.lhs, rhs), parts.bits, "power"};
}

IdentityResult remainder_identity_log(const KnotSet& knots, int u_index, int m, const PrecisionContext& ctx,
                                  const QuadratureRule& rule) {
  if (knots.min() != 0.0) throw DomainError("the identity needs min knot 0");
  const int N = knots.N();
  if (m < 1 || m >= N + 1) throw DomainError("the log identity needs 1 <= m < N+1");
  auto parts = remainder(knots, u_index, [m](const XReal& x) { return half_xm_log(x, m); }, ctx);
  double M = 0.5 * ((m + N) % 2 == 0 ? 1.0 : -1.0) *
             std::exp(log_factorial(m) + log_factorial(N - m) - log_factorial(N + 1));
  auto integral = mellin_assoc_bspline(knots, static_cast<double>(m), rule, ctx);
  double rhs = M * parts.w * integral.value.real();
  return {parts.lhs, rhs, rel_gap(parts.lhs, rhs), parts.bits, "log"};
}

IdentityResult symmetric_identity(const std::vector<double>& zeros, double y, double s, const PrecisionContext& ctx,
                               const QuadratureRule& rule) {
  const int N = static_cast<int>(zeros.size());
  if (!(s > 0 && s < 2.0 * N + 1)) throw DomainError("the identity needs 0 < s < 2N+1");
  if (std::floor(s / 2) == s / 2) throw DomainError("the identity excludes even s");
  for (double z : zeros) {
    if (!(z > 0)) throw ValidationError("zeros must be positive");
    if (std::fabs(y) == z) throw ValidationError("y must not be a zero");
  }
  if (y == 0.0) throw ValidationError("y must be nonzero");
  auto f = [s](const XReal& x) { return power(abs(x), s); };
  auto res = adaptive_eval(
      [&](int bits) {
        std::vector<XReal> nodes{XReal(bits)};
        for (double z : zeros) {
          nodes.emplace_back(z, bits);
          nodes.emplace_back(-z, bits);
        }
        XReal yy(y, bits);
        return f(yy) - lagrange_eval(nodes, f, yy);
      },
      ctx);
  // G(it) = (-1)^N prod z_k^2 prod (1 + t^2/z_k^2)
  double log_prod = 0.0;
  double g_y = 1.0;
  for (double z : zeros) {
    log_prod += 2.0 * std::log(z);
    g_y *= y * y - z * z;
  }
  auto J = contour_integral(zeros, std::fabs(y), cplx(s, 0.0), 0.0, rule);
  double sign = N % 2 == 0 ? 1.0 : -1.0;
  double rhs = 2.0 * std::sin(s * pi / 2) / pi * g_y * sign * std::exp(-log_prod) * J.value.real();
  double lhs = res.value.to_double();
  return {lhs, rhs, rel_gap(lhs, rhs), res.bits, "power"};
}

double hd_mellin_closed(int d, double s) {
  if (!(s > d)) throw DomainError("the integral needs s > d");
  if (d == 0) return 2.0 * gamma(s) * dirichlet_beta(s);
  return 2.0 * gamma(s) * (1.0 - std::exp2(-s)) * zeta(s);
}

std::vector<ConvergenceRecord> interpolation_limit(const InterpLimitSpec& spec, const std::vector<int>& N_list,
                                           const PrecisionContext& ctx) {
  const int d = spec.family.d;
  const bool log_case = spec.m > 0;
  const double expo = log_case ? 2.0 * spec.m : spec.s - d;  // exponent of beta_N
  if (!log_case && !(spec.s > d)) throw DomainError("the limit needs s > d");
  double limit = log_case ? (spec.m % 2 == 0 ? 1.0 : -1.0) * hd_mellin_closed(d, 2.0 * spec.m + d)
                          : 2.0 * std::sin((spec.s - d) * pi / 2) / pi * hd_mellin_closed(d, spec.s);
  std::string id = log_case ? "interp_limit_log_d" + std::to_string(d) + "_m" + std::to_string(spec.m)
                            : "interp_limit_power_d" + std::to_string(d);
  std::vector<ConvergenceRecord> out;
  for (int N : N_list) {
    PolyFamily fam = spec.family;
    fam.N = N;
    const double u = spec.u_of_N(N);
    const double beta = fam.beta_N();
    auto res = adaptive_eval(
        [&](int bits) {
          auto xs = family_zeros(fam, bits);
          std::vector<XReal> nodes{XReal(bits)};
          XReal u2 = square(XReal(u, bits));
          XReal q0(1L, bits), qu(1L, bits);
          for (auto& x : xs) {
            XReal x2 = square(x);
            q0 *= -x2;
            qu *= u2 - x2;
            nodes.push_back(x2);
          }
          XReal diff(bits);
          if (log_case) {
            auto f = [m = spec.m](const XReal& x) { return half_xm_log(x, m); };
            diff = f(u2) - lagrange_eval(nodes, f, u2);
          } else {
            const double sigma = (spec.s - d) / 2.0;
            auto f = [sigma](const XReal& x) { return power(x, sigma); };
            diff = f(u2) - lagrange_eval(nodes, f, u2);
          }
          return power(XReal(beta, bits), expo) * q0 / qu * diff;
        },
        ctx);
    out.push_back(make_record(id, N, log_case ? spec.m : spec.s, res.value.to_log(), limit, res.bits));
  }
  return out;
}

}  // namespace thetaspline
