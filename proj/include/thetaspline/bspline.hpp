#pragma once

#include <vector>

#include "thetaspline/knots.hpp"
#include "thetaspline/precision.hpp"
#include "thetaspline/quadrature.hpp"
#include "thetaspline/xreal.hpp"

namespace thetaspline {

/// Truncated-power sums for one knot set at one precision. Caches 1/W'(v)
/// where W(t) = prod (t - v).
class SplineKernel {
 public:
  SplineKernel(const KnotSet& knots, int bits);
  explicit SplineKernel(std::vector<XReal> sorted_knots);

  int N() const { return static_cast<int>(knots_.size()) - 2; }
  int bits() const { return bits_; }
  const std::vector<XReal>& knots() const { return knots_; }

  /// B_N(t) through whichever truncated-power form sums fewer knots.
  XReal b_value(const XReal& t) const;
  /// (N+1) sum_{v > t} (v - t)^N / W'(v).
  XReal b_value_forward(const XReal& t) const;
  /// (-1)^(N+1) (N+1) sum_{v < t} (t - v)^N / W'(v).
  XReal b_value_mirrored(const XReal& t) const;
  /// t^-N B_N(t) for t > 0; the jump value at t = 0 when min knot is 0.
  XReal assoc_value(const XReal& t) const;
  /// (-1)^(N+1) (N+1) / W'(min knot): the constant on the first interval.
  XReal jump_value() const;
  /// Index i with knot_i <= t < knot_{i+1}; -1 left of the support and N+1
  /// at or right of the last knot.
  int interval_index(const XReal& t) const;

 private:
  std::vector<XReal> knots_;
  std::vector<XReal> inv_wprime_;
  int bits_;
};

struct SplineEval {
  XReal t;
  XReal b_value;
  LogValue assoc_log;  // ln t^-N B_N(t) with sign; zero when undefined
  int precision_used = 0;
  int interval_index = 0;
};

/// B_N(t) under adaptive precision.
SplineEval eval_divided_difference(const KnotSet& knots, const XReal& t, const PrecisionContext& ctx);

/// t^-N B_N(t) for knots in [0, inf); LogValue so that huge or tiny values
/// survive. DomainError for t < 0 or a negative minimum knot.
LogValue eval_assoc(const KnotSet& knots, const XReal& t, const PrecisionContext& ctx, int* bits_used = nullptr);

/// Cox-de Boor in double, rescaled to unit integral. Independent oracle.
double eval_recurrence(const KnotSet& knots, double t);
double eval_recurrence(const std::vector<double>& knots, double t);

/// Integral of B_N over its support, Gauss-Legendre per knot interval with
/// values from the extended-precision kernel.
Integral<double> integrate_bspline(const KnotSet& knots, const QuadratureRule& rule = {},
                                   const PrecisionContext& ctx = {});

}  // namespace thetaspline
