#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "thetaspline/xreal.hpp"

namespace thetaspline {

enum class FamilyKind { chebyshev_T, chebyshev_U, gegenbauer, hermite, equidistant };

/// An even (d=0) or odd (d=1) polynomial of degree 2N+d with simple real
/// zeros +-x_k, described by its family. Only zeros and scaling constants are
/// materialized; the leading normalization is never needed downstream.
struct PolyFamily {
  FamilyKind kind = FamilyKind::chebyshev_T;
  int d = 0;
  int N = 1;
  double lambda = 0.0;  // Gegenbauer parameter

  void validate() const;
  int degree() const { return 2 * N + d; }
  /// Gegenbauer with lambda 0 or 1 is Chebyshev T or U.
  FamilyKind effective_kind() const;
  bool is_chebyshev() const;
  /// 0 for T, 1 for U; meaningful only for Chebyshev families.
  int cheb_lambda() const;

  double beta_N() const;
  /// Radius and error scale of the local cosine approximation.
  double gamma_N() const;
  double delta_N() const;

  std::string name() const;
  static FamilyKind parse_kind(std::string_view text);
};

/// Positive zeros x_1 < ... < x_N at the given precision. Chebyshev and
/// equidistant zeros come from closed forms; Gegenbauer and Hermite zeros are
/// bracketed in double, polished by Newton at working precision, and each is
/// certified by a sign change (ZeroFindingFailure otherwise).
std::vector<XReal> family_zeros(const PolyFamily& fam, int bits);

enum class ChebKind { T, U };

/// T_m(z) or U_m(z) at real z, by the three-term recurrence.
XReal cheb_eval(ChebKind kind, int m, const XReal& z);
/// i^-m Q_m(i t), which is real: cosh/sinh of m asinh(t) for T and
/// cosh/sinh((m+1) asinh t)/cosh(asinh t) for U.
XReal cheb_eval_imag(ChebKind kind, int m, const XReal& t);
/// Same quantity as a LogValue, for arguments where it leaves double range.
LogValue cheb_eval_imag_log(ChebKind kind, int m, double t);
/// Q_m^(d)(0) with d = m mod 2: (-1)^N (2N+1)^d for T, (-1)^N (2N+2)^d for U.
long cheb_derivative_at_zero(ChebKind kind, int m);

/// ln prod_k (1 + t^2/x_k^2), the even factor G(it) normalized to G(0) = 1.
/// Closed forms for Chebyshev families, a sum over zeros otherwise.
double log_g_imag(const PolyFamily& fam, const std::vector<double>& zeros, double t);

/// P(x)/P^(d)(0) * x^-d evaluated at real x as prod (1 - x^2/x_k^2).
double g_real(const std::vector<double>& zeros, double x);

/// One row of the local-cosine probe.
struct ScalingRow {
  std::complex<double> z;
  double lhs_error;  // |beta^d P(z/beta)/P^(d)(0) - cos(z - d pi/2)|
  double bound;      // delta_N min(|z|^2, 1) h_d(|z|)
  double ratio;
};

/// Compares the scaled polynomial with cos(z - d pi/2) on |z| <= gamma_N.
/// Diagnostic only: the constant in the bound is unspecified.
std::vector<ScalingRow> scaling_probe(const PolyFamily& fam, const std::vector<std::complex<double>>& z_grid,
                                  int bits = 256);

}  // namespace thetaspline
