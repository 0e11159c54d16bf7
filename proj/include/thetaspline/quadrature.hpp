#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "thetaspline/error.hpp"

namespace thetaspline {

enum class QuadKind { gauss_legendre_composite, tanh_sinh };

struct QuadratureRule {
  QuadKind kind = QuadKind::gauss_legendre_composite;
  int points_per_panel = 20;
  int panel_limit = 20000;
  double abs_tol = 1e-15;
  double rel_tol = 1e-13;
};

template <class T>
struct Integral {
  T value{};
  double err_estimate = 0.0;
  double abs_integral = 0.0;  // quadrature of |f|, the roundoff scale
  int panels = 0;
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
  explicit GaussLegendre(int n);
};

/// Decay of |f(t)| as t -> infinity: C*exp(-rate*t) or C*t^(-rate).
struct DecayHint {
  enum class Kind { exponential, power };
  Kind kind = Kind::exponential;
  double rate = 1.0;
};

/// Exponential decay of |g(x)| in both directions for integrals over the
/// real line (the form Mellin integrals take after t = e^x).
struct LineHint {
  double left_rate = 1.0;
  double right_rate = 1.0;
  double center = 0.0;
  double panel_width = 1.0;
  double tail_rel = 1e-18;
  double max_extent = 4000.0;
  /// Finite lower limit; when set, no left tail search is made.
  double lower = -std::numeric_limits<double>::infinity();
};

namespace detail {

inline double magnitude(double v) { return std::fabs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <class T>
struct PanelSum {
  T value{};
  double abs_value = 0.0;
};

template <class F, class T = std::invoke_result_t<F&, double>>
PanelSum<T> gauss_panel(F& f, const GaussLegendre& gl, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  PanelSum<T> out;
  for (size_t i = 0; i < gl.nodes.size(); ++i) {
    T y = f(mid + half * gl.nodes[i]);
    out.value += gl.weights[i] * y;
    out.abs_value += gl.weights[i] * magnitude(y);
  }
  out.value *= half;
  out.abs_value *= std::fabs(half);
  return out;
}

template <class T>
struct Panel {
  double a, b;
  T coarse;               // whole-panel rule
  PanelSum<T> left, right;
  double err;
  T fine() const { return left.value + right.value; }
};

template <class T>
struct PanelOrder {
  bool operator()(const Panel<T>& x, const Panel<T>& y) const {
    if (x.err != y.err) return x.err < y.err;
    return x.a > y.a;
  }
};

template <class F, class T = std::invoke_result_t<F&, double>>
Integral<T> adaptive_gauss(F& f, std::span<const double> breaks, const QuadratureRule& rule) {
  GaussLegendre gl(rule.points_per_panel);
  std::priority_queue<Panel<T>, std::vector<Panel<T>>, PanelOrder<T>> queue;
  auto make = [&](double a, double b, T coarse) {
    double m = 0.5 * (a + b);
    Panel<T> p{a, b, coarse, gauss_panel(f, gl, a, m), gauss_panel(f, gl, m, b), 0.0};
    p.err = magnitude(p.coarse - p.fine());
    return p;
  };
  T total{};
  double total_err = 0.0;
  double total_abs = 0.0;
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    auto whole = gauss_panel(f, gl, breaks[i], breaks[i + 1]);
    auto p = make(breaks[i], breaks[i + 1], whole.value);
    total += p.fine();
    total_err += p.err;
    total_abs += p.left.abs_value + p.right.abs_value;
    queue.push(std::move(p));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  auto converged = [&] {
    double target = std::max({rule.abs_tol, rule.rel_tol * magnitude(total), 50.0 * eps * total_abs});
    return total_err <= target;
  };
  while (!queue.empty() && !converged()) {
    if (static_cast<int>(queue.size()) >= rule.panel_limit) {
      throw NonConvergent("panel limit " + std::to_string(rule.panel_limit) +
                          " reached with error estimate " + std::to_string(total_err));
    }
    Panel<T> p = queue.top();
    queue.pop();
    double m = 0.5 * (p.a + p.b);
    if (!(m > p.a && m < p.b)) {
      throw NonConvergent("panel width underflow near t=" + std::to_string(p.a));
    }
    total -= p.fine();
    total_err -= p.err;
    total_abs -= p.left.abs_value + p.right.abs_value;
    for (auto child : {make(p.a, m, p.left.value), make(m, p.b, p.right.value)}) {
      total += child.fine();
      total_err += child.err;
      total_abs += child.left.abs_value + child.right.abs_value;
      queue.push(std::move(child));
    }
  }
  // Deterministic final summation in position order.
  std::vector<Panel<T>> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const auto& x, const auto& y) { return x.a < y.a; });
  Integral<T> out;
  for (const auto& p : panels) {
    out.value += p.fine();
    out.err_estimate += p.err;
    out.abs_integral += p.left.abs_value + p.right.abs_value;
  }
  out.err_estimate = std::max(out.err_estimate, 10.0 * eps * out.abs_integral);
  out.panels = static_cast<int>(panels.size());
  return out;
}

/// Tanh-sinh on [a, b] with level halving; tolerates integrable endpoint
/// singularities because nodes never touch the endpoints.
template <class F, class T = std::invoke_result_t<F&, double>>
Integral<T> tanh_sinh(F& f, double a, double b, const QuadratureRule& rule) {
  constexpr double half_pi = 1.57079632679489661923;
  constexpr double t_max = 4.0;
  const double h = 0.5 * (b - a);
  auto contribution = [&](double t, T& sum, double& abs_sum) {
    double u = half_pi * std::sinh(t);
    double ch = std::cosh(u);
    double w = half_pi * std::cosh(t) / (ch * ch);
    // distance from the nearer endpoint, computed without cancellation
    double delta = 2.0 / (std::exp(2.0 * std::fabs(u)) + 1.0);
    double x = t >= 0 ? b - h * delta : a + h * delta;
    if (!(x > a && x < b) || w == 0.0) return;
    T y = f(x);
    sum += w * y;
    abs_sum += w * magnitude(y);
  };
  double step = 1.0;
  T sum{};
  double abs_sum = 0.0;
  contribution(0.0, sum, abs_sum);
  for (int k = 1; k * step <= t_max; ++k) {
    contribution(k * step, sum, abs_sum);
    contribution(-k * step, sum, abs_sum);
  }
  T estimate = h * step * sum;
  double err = std::numeric_limits<double>::infinity();
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int level = 1; level <= 12; ++level) {
    step *= 0.5;
    for (int k = 1; k * step <= t_max; k += 2) {
      contribution(k * step, sum, abs_sum);
      contribution(-k * step, sum, abs_sum);
    }
    T next = h * step * sum;
    err = magnitude(next - estimate);
    estimate = next;
    double l1 = std::fabs(h) * step * abs_sum;
    if (level >= 3 && err <= std::max({rule.abs_tol, rule.rel_tol * magnitude(estimate), 50.0 * eps * l1})) {
      return {estimate, std::max(err, 10.0 * eps * l1), l1, level};
    }
  }
  throw NonConvergent("tanh-sinh did not converge, last difference " + std::to_string(err));
}

}  // namespace detail

/// Integral over consecutive breakpoints (knots, oscillation zeros, ...).
template <class F>
auto integrate(F&& f, std::span<const double> breaks, const QuadratureRule& rule) {
  using T = std::invoke_result_t<F&, double>;
  if (rule.kind == QuadKind::tanh_sinh) {
    Integral<T> out;
    for (size_t i = 0; i + 1 < breaks.size(); ++i) {
      if (!(breaks[i + 1] > breaks[i])) continue;
      auto part = detail::tanh_sinh(f, breaks[i], breaks[i + 1], rule);
      out.value += part.value;
      out.err_estimate += part.err_estimate;
      out.abs_integral += part.abs_integral;
      out.panels += 1;
    }
    return out;
  }
  return detail::adaptive_gauss(f, breaks, rule);
}

template <class F>
auto integrate(F&& f, double a, double b, const QuadratureRule& rule) {
  const double breaks[2] = {a, b};
  return integrate(std::forward<F>(f), std::span<const double>(breaks), rule);
}

/// Integral over [a, b] of f with f(t) ~ (t - a)^(sigma - 1) at a. The
/// substitution t = a + (b - a) tau^(1/sigma) turns the singular factor into a
/// smooth one.
template <class F>
auto integrate_singular(F&& f, double a, double b, double sigma, const QuadratureRule& rule) {
  if (!(sigma > 0)) throw DomainError("endpoint exponent sigma must be positive");
  const double h = b - a;
  const double inv = 1.0 / sigma;
  auto g = [&](double tau) {
    double t = a + h * std::pow(tau, inv);
    return f(t) * (h * inv * std::pow(tau, inv - 1.0));
  };
  return integrate(g, 0.0, 1.0, rule);
}

/// Integral over [a, inf). The range is truncated where the decay hint bounds
/// the tail below abs_tol/10 and split into geometrically growing panels. A
/// declared endpoint power (sigma != 1) is removed on the first panel.
template <class F>
auto integrate_to_infinity(F&& f, double a, DecayHint hint, const QuadratureRule& rule,
                           double endpoint_sigma = 1.0) {
  using T = std::invoke_result_t<F&, double>;
  if (!(hint.rate > 0) || (hint.kind == DecayHint::Kind::power && !(hint.rate > 1))) {
    throw DomainError("decay hint does not guarantee integrability");
  }
  auto tail_bound = [&](double t) {
    double m = std::max(detail::magnitude(f(t)), detail::magnitude(f(a + 0.75 * (t - a))) *
                                                     (hint.kind == DecayHint::Kind::exponential
                                                          ? std::exp(-hint.rate * 0.25 * (t - a))
                                                          : std::pow(0.75, hint.rate)));
    if (hint.kind == DecayHint::Kind::exponential) return m / hint.rate;
    return m * (t - a) / (hint.rate - 1.0);
  };
  double width = 1.0;
  double T_end = a + width;
  while (tail_bound(T_end) > 0.1 * rule.abs_tol) {
    width *= 2.0;
    T_end = a + width;
    if (width > 1e12) throw NonConvergent("integrand does not decay as declared");
  }
  std::vector<double> breaks{a};
  for (double w = 1.0; w <= width; w *= 2.0) breaks.push_back(a + w);
  Integral<T> out;
  size_t first = 0;
  if (endpoint_sigma != 1.0) {
    out = integrate_singular(f, a, breaks[1], endpoint_sigma, rule);
    first = 1;
  }
  auto rest = integrate(f, std::span<const double>(breaks).subspan(first), rule);
  out.value += rest.value;
  out.err_estimate += rest.err_estimate + 0.1 * rule.abs_tol;
  out.abs_integral += rest.abs_integral;
  out.panels += rest.panels;
  return out;
}

/// Integral of g over the real line, for integrands decaying exponentially in
/// both directions. Walks outward from hint.center until the tail is
/// negligible against the largest |g| seen, then integrates panel-wise with
/// panels of hint.panel_width.
template <class F>
auto integrate_line(F&& g, const LineHint& hint, const QuadratureRule& rule) {
  const double w = hint.panel_width;
  if (std::isfinite(hint.lower) && hint.center < hint.lower) {
    throw DomainError("line integral center lies below the lower limit");
  }
  double peak = detail::magnitude(g(hint.center));
  auto walk = [&](double direction, double rate) {
    double x = hint.center;
    int steps = 0;
    while (true) {
      x += direction * w;
      ++steps;
      double m = std::max(detail::magnitude(g(x)), detail::magnitude(g(x - 0.5 * direction * w)));
      peak = std::max(peak, m);
      if (steps >= 2 && peak > 0 && m / rate <= std::max(0.1 * rule.abs_tol, hint.tail_rel * peak)) {
        return x;
      }
      // nothing but underflow this far out from the center
      if (peak == 0 && steps >= 64) return x;
      if (std::fabs(x - hint.center) > hint.max_extent) {
        throw NonConvergent("line integrand does not decay within the search window");
      }
    }
  };
  double hi = walk(+1.0, hint.right_rate);
  double lo = std::isfinite(hint.lower) ? hint.lower : walk(-1.0, hint.left_rate);
  using T = std::invoke_result_t<F&, double>;
  if (peak == 0) return Integral<T>{};
  std::vector<double> breaks;
  for (double x = lo; x < hi - 0.5 * w; x += w) breaks.push_back(x);
  breaks.push_back(hi);
  return integrate(g, std::span<const double>(breaks), rule);
}

}  // namespace thetaspline
