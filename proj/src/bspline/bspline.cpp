#include "thetaspline/bspline.hpp"

#include <algorithm>
#include <cmath>

#include "thetaspline/error.hpp"

namespace thetaspline {

SplineKernel::SplineKernel(const KnotSet& knots, int bits) : SplineKernel(knots.materialize(bits)) {}

SplineKernel::SplineKernel(std::vector<XReal> sorted_knots) : knots_(std::move(sorted_knots)) {
  if (knots_.size() < 2) throw ValidationError("a spline needs at least two knots");
  bits_ = knots_.front().precision();
  inv_wprime_.reserve(knots_.size());
  for (size_t i = 0; i < knots_.size(); ++i) {
    XReal w(1L, bits_);
    for (size_t j = 0; j < knots_.size(); ++j) {
      if (j != i) w *= knots_[i] - knots_[j];
    }
    if (w.is_zero()) throw DuplicateKnot("coincident knots at " + knots_[i].to_string(20));
    XReal one(1L, bits_);
    inv_wprime_.push_back(one / w);
  }
}

int SplineKernel::interval_index(const XReal& t) const {
  if (t < knots_.front()) return -1;
  auto it = std::upper_bound(knots_.begin(), knots_.end(), t, [](const XReal& a, const XReal& b) { return a < b; });
  return static_cast<int>(it - knots_.begin()) - 1;
}

XReal SplineKernel::b_value_forward(const XReal& t) const {
  const unsigned long n = static_cast<unsigned long>(N());
  XReal sum(bits_);
  for (size_t i = 0; i < knots_.size(); ++i) {
    if (knots_[i] > t) sum += pow(knots_[i] - t, n) * inv_wprime_[i];
  }
  return sum * static_cast<long>(n + 1);
}

XReal SplineKernel::b_value_mirrored(const XReal& t) const {
  const unsigned long n = static_cast<unsigned long>(N());
  XReal sum(bits_);
  for (size_t i = 0; i < knots_.size(); ++i) {
    if (knots_[i] < t) sum += pow(t - knots_[i], n) * inv_wprime_[i];
  }
  sum *= static_cast<long>(n + 1);
  return (n % 2 == 0) ? -sum : sum;
}

XReal SplineKernel::b_value(const XReal& t) const {
  if (t < knots_.front() || !(t < knots_.back())) return XReal(bits_);
  int below = interval_index(t) + 1;  // knots <= t
  int above = static_cast<int>(knots_.size()) - below;
  // fewer terms means less cancellation
  return above <= below ? b_value_forward(t) : b_value_mirrored(t);
}

XReal SplineKernel::jump_value() const {
  XReal v = inv_wprime_.front() * static_cast<long>(N() + 1);
  return (N() % 2 == 0) ? -v : v;
}

XReal SplineKernel::assoc_value(const XReal& t) const {
  if (t.sign() < 0) throw DomainError("associated B-spline needs t >= 0");
  if (knots_.front().sign() < 0) throw DomainError("associated B-spline needs nonnegative knots");
  if (t.is_zero()) return knots_.front().is_zero() ? jump_value() : XReal(bits_);
  return b_value(t) / pow(t, static_cast<unsigned long>(N()));
}

SplineEval eval_divided_difference(const KnotSet& knots, const XReal& t, const PrecisionContext& ctx) {
  auto res = adaptive_eval(
      [&](int bits) {
        SplineKernel kernel(knots, bits);
        return kernel.b_value(t.with_precision(std::max(bits, t.precision())));
      },
      ctx);
  SplineEval out{t, res.value, {}, res.bits, 0};
  const auto& kd = knots.as_doubles();
  double td = t.to_double();
  out.interval_index = td < kd.front() ? -1 : static_cast<int>(std::upper_bound(kd.begin(), kd.end(), td) - kd.begin()) - 1;
  if (knots.min() >= 0 && t.sign() > 0) {
    LogValue b = res.value.to_log();
    if (!b.is_zero()) out.assoc_log = {b.sign, b.log_mag - knots.N() * t.to_log().log_mag};
  }
  return out;
}

LogValue eval_assoc(const KnotSet& knots, const XReal& t, const PrecisionContext& ctx, int* bits_used) {
  if (t.sign() < 0) throw DomainError("associated B-spline needs t >= 0");
  if (knots.min() < 0) throw DomainError("associated B-spline needs nonnegative knots");
  auto res = adaptive_eval(
      [&](int bits) {
        SplineKernel kernel(knots, bits);
        return kernel.assoc_value(t.with_precision(std::max(bits, t.precision())));
      },
      ctx);
  if (bits_used) *bits_used = res.bits;
  return res.value.to_log();
}

double eval_recurrence(const std::vector<double>& k, double t) {
  const int n = static_cast<int>(k.size()) - 2;
  if (n < 0) throw ValidationError("a spline needs at least two knots");
  if (t < k.front() || t >= k.back()) return 0.0;
  // degree-0 indicator functions, then raise the degree in place
  std::vector<double> b(k.size() - 1, 0.0);
  for (size_t j = 0; j + 1 < k.size(); ++j) {
    if (k[j] <= t && t < k[j + 1]) b[j] = 1.0;
  }
  for (int deg = 1; deg <= n; ++deg) {
    for (size_t j = 0; j + deg + 1 < k.size(); ++j) {
      double left = (t - k[j]) / (k[j + deg] - k[j]) * b[j];
      double right = (k[j + deg + 1] - t) / (k[j + deg + 1] - k[j + 1]) * b[j + 1];
      b[j] = left + right;
    }
  }
  return b[0] * (n + 1) / (k.back() - k.front());
}

double eval_recurrence(const KnotSet& knots, double t) { return eval_recurrence(knots.as_doubles(), t); }

Integral<double> integrate_bspline(const KnotSet& knots, const QuadratureRule& rule, const PrecisionContext& ctx) {
  const int n_points = std::max(rule.points_per_panel, knots.N() / 2 + 2);
  GaussLegendre gl(n_points);
  PrecisionContext local = ctx;
  local.target_rel_tol = std::max(ctx.target_rel_tol, 1e-14);
  auto res = adaptive_eval(
      [&](int bits) {
        SplineKernel kernel(knots, bits);
        const auto& kv = kernel.knots();
        XReal total(bits);
        for (size_t i = 0; i + 1 < kv.size(); ++i) {
          XReal half = (kv[i + 1] - kv[i]) / 2L;
          XReal mid = (kv[i + 1] + kv[i]) / 2L;
          XReal panel(bits);
          for (int j = 0; j < n_points; ++j) {
            XReal t = mid + half * XReal(gl.nodes[j], bits);
            panel += kernel.b_value(t) * XReal(gl.weights[j], bits);
          }
          total += panel * half;
        }
        return total;
      },
      local);
  double v = res.value.to_double();
  return {v, 4e-16 * std::max(1.0, std::fabs(v)), std::fabs(v), knots.size() - 1};
}

}  // namespace thetaspline
