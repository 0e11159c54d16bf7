#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "thetaspline/polyfamilies.hpp"
#include "thetaspline/precision.hpp"
#include "thetaspline/quadrature.hpp"
#include "thetaspline/records.hpp"

namespace thetaspline {

struct ExperimentOptions {
  PrecisionContext ctx;
  QuadratureRule rule;
  int threads = 0;      // 0: hardware concurrency
  bool timing = false;  // wall_ms stays 0 unless set, keeping output reproducible
};

const std::vector<int>& default_N_list();
const std::vector<double>& default_t_grid();

/// u^2 prod x_k^2 / N * B*_N(N t / beta_N^2) against Theta_d(t) for
/// Chebyshev T (lambda 0) or U (lambda 1), with the zero product in closed
/// form (2N+1+lambda)^d 2^-(2N+d-1+lambda).
std::vector<ConvergenceRecord> run_theta_pointwise(int lambda, int d, double u, const std::vector<double>& t_grid,
                                                   const std::vector<int>& N_list, const ExperimentOptions& opt = {});

/// g_N(s) by the contour route against M(Theta_d, (s-d)/2): closed form for
/// real s, quadrature of Theta_d for complex s. The record point is Im s.
std::vector<ConvergenceRecord> run_theta_mellin(const PolyFamily& fam, double u, const std::vector<std::complex<double>>& s_grid,
                                                const std::vector<int>& N_list, const ExperimentOptions& opt = {});

enum class GaussKnots { cardinal, general };

/// c B_N(c t) against the standard normal density; c = sqrt((N+1)/12) for
/// cardinal knots and (sum t_k^2)^(1/2)/(N+2) for general centered knots.
std::vector<ConvergenceRecord> run_gaussian(GaussKnots kind, const std::vector<int>& N_list,
                                            const std::vector<double>& t_grid, const ExperimentOptions& opt = {});

/// B_2nu(t/(2nu+2))/(nu+1) on reciprocal knots against 2/(pi cosh t).
std::vector<ConvergenceRecord> run_cosh(const std::vector<int>& nu_list, const std::vector<double>& t_grid,
                                        const ExperimentOptions& opt = {});

/// 2u^2 prod x_k^2 / (N (y/2)^N) * B_N(y - 1, Omega*) with y = 2Nt/beta_N^2,
/// against Theta_d(t).
std::vector<ConvergenceRecord> run_perfect_spline(const std::vector<int>& N_list, const std::vector<double>& t_grid,
                                                  int lambda, int d, double u = 1.0,
                                                  const ExperimentOptions& opt = {});

struct RescalingRow {
  double y;
  double lhs;  // B_N(y, Omega)
  double rhs;  // 2 B_N(2y - 1, Omega*)
  double rel_gap;
  int precision_bits;
};
/// Checks B_N(y, Omega) = 2 B_N(2y-1, Omega*) at extended precision.
std::vector<RescalingRow> check_rescaling(const PolyFamily& fam, double u, const std::vector<double>& y_points,
                                          const PrecisionContext& ctx = {});

/// The pointwise relation for families where it is only conjectured, with
/// the zero product computed numerically. Records carry a CONJECTURE_ id.
std::vector<ConvergenceRecord> conjecture_probe(const PolyFamily& fam, double u, const std::vector<double>& t_grid,
                                                const std::vector<int>& N_list, const ExperimentOptions& opt = {});

/// Direct route (Mellin of B*_N) against the contour route for g_N(s).
/// scaled holds the contour value, limit the direct one.
std::vector<ConvergenceRecord> route_consistency(const PolyFamily& fam, double u, const std::vector<double>& s_list,
                                                 const std::vector<int>& N_list, const ExperimentOptions& opt = {});

struct TrendResult {
  std::string experiment_id;
  double point;
  double err_first;  // smallest N
  double err_last;   // largest N
  double last_ratio;  // err(largest N) / err(previous N)
  bool ok;
};
/// Error at the largest N below the smallest N, last doubling at most 10%
/// worse. One row per (experiment_id, point).
std::vector<TrendResult> check_trend(const std::vector<ConvergenceRecord>& records);

/// Runs tasks on a fixed pool; results come back in task order.
std::vector<ConvergenceRecord> parallel_records(std::vector<std::function<ConvergenceRecord()>> tasks, int threads);

}  // namespace thetaspline
