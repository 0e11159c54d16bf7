#pragma once

#include <functional>
#include <string>
#include <vector>

#include "thetaspline/knots.hpp"
#include "thetaspline/precision.hpp"
#include "thetaspline/quadrature.hpp"
#include "thetaspline/records.hpp"

namespace thetaspline {

using XFunction = std::function<XReal(const XReal&)>;

/// Barycentric (second form) Lagrange interpolation at x, with weights at
/// the precision of the nodes. Returns the node value when x is a node.
/// DuplicateNode when two nodes coincide.
XReal lagrange_eval(const std::vector<XReal>& nodes, const std::vector<XReal>& values, const XReal& x);
XReal lagrange_eval(const std::vector<XReal>& nodes, const XFunction& f, const XReal& x);

struct IdentityResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_gap = 0.0;
  int precision_bits = 0;
  std::string route;  // "power" or "log"
};

/// Interpolation remainder of u^sigma, sigma = (s-d)/2, at the knot
/// knots[u_index] from the other knots, against
/// M_{N,s,d} w(u) int B*_N t^(sigma-1) dt with
/// M_{N,s,d} = (-1)^(N+1) Gamma(N+1-sigma) / (Gamma(-sigma) (N+1)!).
/// When s-d is an even integer the coefficient vanishes and the log case
/// with m = (s-d)/2 is used instead.
IdentityResult remainder_identity(const KnotSet& knots, int u_index, double s, int d, const PrecisionContext& ctx = {},
                              const QuadratureRule& rule = {});
/// The same for f(u) = (1/2) u^m log u with
/// coefficient (1/2)(-1)^(m+N) m!(N-m)!/(N+1)!, 1 <= m < N+1.
IdentityResult remainder_identity_log(const KnotSet& knots, int u_index, int m, const PrecisionContext& ctx = {},
                                  const QuadratureRule& rule = {});
/// Index of the knot equal to `u` (relative 1e-12); ValidationError if none.
int find_knot(const KnotSet& knots, double u);

/// |y|^s minus its interpolant at 0, +-z_k, against
/// (2 sin(s pi/2)/pi) G(y) int_0^inf t^(s-1)/((1+(t/y)^2) G(it)) dt,
/// G(y) = prod (y^2 - z_k^2).
IdentityResult symmetric_identity(const std::vector<double>& zeros, double y, double s, const PrecisionContext& ctx = {},
                               const QuadratureRule& rule = {});

/// The scaled interpolation differences at u_N^2 with nodes {0, x_k^2} and
/// their limits (2 sin((s-d)pi/2)/pi) int t^(s-1)/h_d, or for the log case
/// (m > 0) (-1)^m int t^(2m+d-1)/h_d.
struct InterpLimitSpec {
  PolyFamily family;
  double s = 1.0;  // used when m == 0
  int m = 0;
  std::function<double(int)> u_of_N = [](int) { return 1.0; };
};
std::vector<ConvergenceRecord> interpolation_limit(const InterpLimitSpec& spec, const std::vector<int>& N_list,
                                           const PrecisionContext& ctx = {});

/// int_0^inf t^(s-1)/h_d(t) dt = 2 Gamma(s) beta(s) or 2 Gamma(s)(1-2^-s) zeta(s).
double hd_mellin_closed(int d, double s);

}  // namespace thetaspline
