#include "thetaspline/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <thread>
#include <tuple>

#include "thetaspline/bspline.hpp"
#include "thetaspline/error.hpp"
#include "thetaspline/knots.hpp"
#include "thetaspline/mellin.hpp"
#include "thetaspline/theta.hpp"

namespace thetaspline {

namespace {

constexpr double pi = std::numbers::pi;

std::string fmt_param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// Times a record computation; numeric failures become a record with
// precision_bits = -1 and infinite errors so that one hard point does not
// sink the whole table.
ConvergenceRecord timed(const std::string& id, int N, double point, bool timing,
                        const std::function<ConvergenceRecord()>& body) {
  auto start = std::chrono::steady_clock::now();
  ConvergenceRecord r;
  try {
    r = body();
  } catch (const Error& e) {
    if (e.error_class() != ErrorClass::numeric) throw;
    r.experiment_id = id;
    r.N = N;
    r.point = point;
    r.abs_err = r.rel_err = std::numeric_limits<double>::infinity();
    r.precision_bits = -1;
  }
  if (timing) {
    r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

// ln of the closed-form Chebyshev zero product (2N+1+lambda)^d 2^-(2N+d-1+lambda)
double log_cheb_zero_product(int N, int d, int lambda) {
  return d * std::log(2.0 * N + 1 + lambda) - (2.0 * N + d - 1 + lambda) * std::numbers::ln2;
}

double log_zero_product(const PolyFamily& fam) {
  XReal p(1L, 256);
  for (auto& x : family_zeros(fam, 256)) p *= square(x);
  return p.to_log().log_mag;
}

PolyFamily chebyshev(int lambda, int d, int N) {
  return PolyFamily{lambda == 0 ? FamilyKind::chebyshev_T : FamilyKind::chebyshev_U, d, N, 0.0};
}

std::string family_tag(const PolyFamily& fam) {
  switch (fam.kind) {
    case FamilyKind::chebyshev_T: return "T";
    case FamilyKind::chebyshev_U: return "U";
    case FamilyKind::gegenbauer: return "gegenbauer" + fmt_param(fam.lambda);
    case FamilyKind::hermite: return "hermite";
    case FamilyKind::equidistant: return "equidistant";
  }
  return "?";
}

// u^2 P / N * B*_N(N t / beta^2) with ln P supplied
ConvergenceRecord scaled_assoc_record(const std::string& id, const KnotSet& knots, const PolyFamily& fam, double u,
                                      double log_prod, double t, const PrecisionContext& ctx) {
  const int N = fam.N;
  const double beta = fam.beta_N();
  // tau = N t / beta^2 carried at high precision so all levels see one point
  XReal tau = XReal(t, 512) * static_cast<long>(N) / square(XReal(beta, 512));
  int bits = 0;
  LogValue b = eval_assoc(knots, tau, ctx, &bits);
  LogValue scaled = b.scaled(2.0 * std::log(u) + log_prod - std::log(static_cast<double>(N)));
  return make_record(id, N, t, scaled, theta_eval(fam.d, t), bits);
}

}  // namespace

const std::vector<int>& default_N_list() {
  static const std::vector<int> v{16, 32, 64, 128};
  return v;
}

const std::vector<double>& default_t_grid() {
  static const std::vector<double> v{0.25, 1, 4, 9, 16};
  return v;
}

std::vector<ConvergenceRecord> parallel_records(std::vector<std::function<ConvergenceRecord()>> tasks, int threads) {
  std::vector<ConvergenceRecord> out(tasks.size());
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min<int>(threads, static_cast<int>(tasks.size()));
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        out[i] = tasks[i]();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<ConvergenceRecord> run_theta_pointwise(int lambda, int d, double u, const std::vector<double>& t_grid,
                                                   const std::vector<int>& N_list, const ExperimentOptions& opt) {
  if (lambda != 0 && lambda != 1) throw ValidationError("lambda must be 0 (T) or 1 (U)");
  const std::string id = std::string("theta_pointwise_") + (lambda ? "U" : "T") + "_d" + std::to_string(d);
  std::vector<std::function<ConvergenceRecord()>> tasks;
  for (int N : N_list) {
    auto fam = chebyshev(lambda, d, N);
    auto knots = std::make_shared<KnotSet>(omega_squared(fam, u));
    for (double t : t_grid) {
      if (!(t >= 0 && N * t / (fam.beta_N() * fam.beta_N()) < knots->max())) {
        throw ValidationError("t = " + fmt_param(t) + " puts the scaled argument outside the support");
      }
      tasks.push_back([=, &opt] {
        return timed(id, N, t, opt.timing, [&] {
          return scaled_assoc_record(id, *knots, fam, u, log_cheb_zero_product(N, d, lambda), t, opt.ctx);
        });
      });
    }
  }
  auto out = parallel_records(std::move(tasks), opt.threads);
  sort_records(out);
  return out;
}

std::vector<ConvergenceRecord> conjecture_probe(const PolyFamily& fam, double u, const std::vector<double>& t_grid,
                                                const std::vector<int>& N_list, const ExperimentOptions& opt) {
  const std::string id = "CONJECTURE_pointwise_" + family_tag(fam) + "_d" + std::to_string(fam.d);
  std::vector<std::function<ConvergenceRecord()>> tasks;
  for (int N : N_list) {
    PolyFamily f = fam;
    f.N = N;
    auto knots = std::make_shared<KnotSet>(omega_squared(f, u));
    double log_prod = log_zero_product(f);
    for (double t : t_grid) {
      tasks.push_back([=, &opt] {
        return timed(id, N, t, opt.timing, [&] { return scaled_assoc_record(id, *knots, f, u, log_prod, t, opt.ctx); });
      });
    }
  }
  auto out = parallel_records(std::move(tasks), opt.threads);
  sort_records(out);
  return out;
}

std::vector<ConvergenceRecord> run_theta_mellin(const PolyFamily& fam, double u,
                                                const std::vector<std::complex<double>>& s_grid,
                                                const std::vector<int>& N_list, const ExperimentOptions& opt) {
  const int d = fam.d;
  std::vector<std::function<ConvergenceRecord()>> tasks;
  // limits first, once per s
  std::vector<std::complex<double>> limits;
  for (auto s : s_grid) {
    cplx sigma = (s - static_cast<double>(d)) / 2.0;
    if (s.imag() == 0.0) {
      limits.emplace_back(mellin_theta_closed(d, sigma.real()), 0.0);
    } else {
      QuadratureRule r = opt.rule;
      r.rel_tol = 1e-13;
      limits.push_back(mellin_theta_numeric(d, sigma, r).value);
    }
  }
  for (int N : N_list) {
    PolyFamily f = fam;
    f.N = N;
    for (size_t i = 0; i < s_grid.size(); ++i) {
      auto s = s_grid[i];
      auto limit = limits[i];
      std::string id = "theta_mellin_" + family_tag(f) + "_d" + std::to_string(d) + "_re" + fmt_param(s.real());
      tasks.push_back([=, &opt] {
        return timed(id, N, s.imag(), opt.timing, [&] {
          auto g = gn_contour(f, u, s, opt.rule);
          if (s.imag() == 0.0) {
            return make_record(id, N, 0.0, LogValue::from_double(g.value.real()), limit.real(), g.precision_bits);
          }
          // complex point: magnitudes in the value columns, errors from the complex difference
          auto r = make_record(id, N, s.imag(), LogValue::from_double(std::abs(g.value)), std::abs(limit),
                               g.precision_bits);
          r.abs_err = std::abs(g.value - limit);
          r.rel_err = r.abs_err / std::max(std::abs(limit), 1e-300);
          return r;
        });
      });
    }
  }
  auto out = parallel_records(std::move(tasks), opt.threads);
  sort_records(out);
  return out;
}

std::vector<ConvergenceRecord> run_gaussian(GaussKnots kind, const std::vector<int>& N_list,
                                            const std::vector<double>& t_grid, const ExperimentOptions& opt) {
  const std::string id = kind == GaussKnots::cardinal ? "gaussian_cardinal" : "gaussian_general";
  std::vector<ConvergenceRecord> out;
  for (int N : N_list) {
    KnotSet knots = kind == GaussKnots::cardinal ? cardinal_knots(N) : general_knots(N);
    double c;
    if (kind == GaussKnots::cardinal) {
      c = std::sqrt((N + 1.0) / 12.0);
    } else {
      double ss = 0.0;
      for (double k : knots.as_doubles()) ss += k * k;
      c = std::sqrt(ss) / (N + 2.0);
    }
    for (double t : t_grid) {
      out.push_back(timed(id, N, t, opt.timing, [&] {
        double v = c * eval_recurrence(knots, c * t);
        return make_record(id, N, t, LogValue::from_double(v), std::exp(-t * t / 2) / std::sqrt(2 * pi), 53);
      }));
    }
  }
  sort_records(out);
  return out;
}

std::vector<ConvergenceRecord> run_cosh(const std::vector<int>& nu_list, const std::vector<double>& t_grid,
                                        const ExperimentOptions& opt) {
  const std::string id = "cosh_reciprocal";
  std::vector<std::function<ConvergenceRecord()>> tasks;
  for (int nu : nu_list) {
    auto knots = std::make_shared<KnotSet>(reciprocal_knots(nu));
    for (double t : t_grid) {
      tasks.push_back([=, &opt] {
        return timed(id, 2 * nu, t, opt.timing, [&] {
          XReal x = XReal(t, 512) / static_cast<long>(2 * nu + 2);
          auto ev = eval_divided_difference(*knots, x, opt.ctx);
          LogValue v = ev.b_value.to_log().scaled(-std::log(nu + 1.0));
          auto r = make_record(id, 2 * nu, t, v, 2.0 / (pi * std::cosh(t)), ev.precision_used);
          return r;
        });
      });
    }
  }
  auto out = parallel_records(std::move(tasks), opt.threads);
  sort_records(out);
  return out;
}

std::vector<ConvergenceRecord> run_perfect_spline(const std::vector<int>& N_list, const std::vector<double>& t_grid,
                                                  int lambda, int d, double u, const ExperimentOptions& opt) {
  if (lambda != 0 && lambda != 1) throw ValidationError("lambda must be 0 (T) or 1 (U)");
  const std::string id = std::string("perfect_spline_") + (lambda ? "U" : "T") + "_d" + std::to_string(d);
  std::vector<std::function<ConvergenceRecord()>> tasks;
  for (int N : N_list) {
    auto fam = chebyshev(lambda, d, N);
    auto knots = std::make_shared<KnotSet>(omega_star(fam, u));
    const double beta = fam.beta_N();
    for (double t : t_grid) {
      tasks.push_back([=, &opt] {
        return timed(id, N, t, opt.timing, [&] {
          XReal y = XReal(t, 512) * static_cast<long>(2 * N) / square(XReal(beta, 512));
          XReal one(1L, 512);
          auto ev = eval_divided_difference(*knots, y - one, opt.ctx);
          LogValue b = ev.b_value.to_log();
          // B*_N at y/2 on Omega equals 2 (y/2)^-N B_N(y-1) on Omega*
          double shift = std::log(2.0 * u * u) + log_cheb_zero_product(N, d, lambda) - std::log(static_cast<double>(N)) -
                         N * (y.to_log().log_mag - std::log(2.0));
          return make_record(id, N, t, b.scaled(shift), theta_eval(d, t), ev.precision_used);
        });
      });
    }
  }
  auto out = parallel_records(std::move(tasks), opt.threads);
  sort_records(out);
  return out;
}

std::vector<RescalingRow> check_rescaling(const PolyFamily& fam, double u, const std::vector<double>& y_points,
                                          const PrecisionContext& ctx) {
  KnotSet omega = omega_squared(fam, u);
  KnotSet star = omega_star(fam, u);
  std::vector<RescalingRow> rows;
  for (double y : y_points) {
    XReal yy(y, 512);
    auto lhs = eval_divided_difference(omega, yy, ctx);
    auto rhs = eval_divided_difference(star, yy * 2L - XReal(1L, 512), ctx);
    XReal r2 = rhs.b_value * 2L;
    int bits = std::max(lhs.precision_used, rhs.precision_used);
    double gap = 0.0;
    XReal scale = abs(lhs.b_value);
    if (!scale.is_zero()) gap = (abs(lhs.b_value.with_precision(bits) - r2) / scale).to_double();
    rows.push_back({y, lhs.b_value.to_double(), r2.to_double(), gap, bits});
  }
  return rows;
}

std::vector<ConvergenceRecord> route_consistency(const PolyFamily& fam, double u, const std::vector<double>& s_list,
                                                 const std::vector<int>& N_list, const ExperimentOptions& opt) {
  const std::string id = "route_consistency_" + family_tag(fam) + "_d" + std::to_string(fam.d);
  std::vector<std::function<ConvergenceRecord()>> tasks;
  for (int N : N_list) {
    PolyFamily f = fam;
    f.N = N;
    for (double s : s_list) {
      tasks.push_back([=, &opt] {
        return timed(id, N, s, opt.timing, [&] {
          auto direct = gn_direct(f, u, s, opt.rule, opt.ctx);
          auto contour = gn_contour(f, u, s, opt.rule);
          return make_record(id, N, s, LogValue::from_double(contour.value.real()), direct.value.real(),
                             direct.precision_bits);
        });
      });
    }
  }
  auto out = parallel_records(std::move(tasks), opt.threads);
  sort_records(out);
  return out;
}

std::vector<TrendResult> check_trend(const std::vector<ConvergenceRecord>& records) {
  std::map<std::pair<std::string, double>, std::vector<const ConvergenceRecord*>> groups;
  for (const auto& r : records) groups[{r.experiment_id, r.point}].push_back(&r);
  std::vector<TrendResult> out;
  for (auto& [key, rows] : groups) {
    std::sort(rows.begin(), rows.end(), [](auto* a, auto* b) { return a->N < b->N; });
    TrendResult t{key.first, key.second, rows.front()->rel_err, rows.back()->rel_err, 0.0, false};
    if (rows.size() >= 2) {
      double prev = rows[rows.size() - 2]->rel_err;
      t.last_ratio = prev > 0 ? t.err_last / prev : (t.err_last > 0 ? INFINITY : 0.0);
      t.ok = t.err_last < t.err_first && t.err_last <= 1.1 * prev;
    }
    out.push_back(t);
  }
  return out;
}

}  // namespace thetaspline
