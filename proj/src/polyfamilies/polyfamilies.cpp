#include "thetaspline/polyfamilies.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "thetaspline/error.hpp"

namespace thetaspline {

namespace {

constexpr double pi = std::numbers::pi;

// Values of the three-term recurrences. Double versions rescale to stay in
// range since only signs matter for bracketing.
struct Recurrence {
  FamilyKind kind;
  int m;
  double lambda;

  double sign_value(double x) const {
    double p0 = 1.0;
    double p1 = kind == FamilyKind::hermite ? 2.0 * x : 2.0 * lambda * x;
    if (m == 0) return p0;
    for (int n = 2; n <= m; ++n) {
      double p2 = kind == FamilyKind::hermite
                      ? 2.0 * x * p1 - 2.0 * (n - 1) * p0
                      : (2.0 * (n + lambda - 1) * x * p1 - (n + 2 * lambda - 2) * p0) / n;
      p0 = p1;
      p1 = p2;
      double big = std::max(std::fabs(p0), std::fabs(p1));
      if (big > 1e150) {
        p0 /= big;
        p1 /= big;
      }
    }
    return p1;
  }

  // value and derivative at working precision
  std::pair<XReal, XReal> value_and_derivative(const XReal& x) const {
    const int bits = x.precision();
    XReal p0(1L, bits), p1(bits), d0(bits), d1(bits);
    if (kind == FamilyKind::hermite) {
      p1 = x * 2L;
      d1 = XReal(2L, bits);
    } else {
      XReal two_lambda(2.0 * lambda, bits);
      p1 = two_lambda * x;
      d1 = two_lambda;
    }
    for (int n = 2; n <= m; ++n) {
      XReal p2(bits), d2(bits);
      if (kind == FamilyKind::hermite) {
        p2 = x * p1 * 2L - p0 * static_cast<long>(2 * (n - 1));
        d2 = p1 * static_cast<long>(2 * n);
      } else {
        XReal a(2.0 * (n + lambda - 1), bits);
        XReal b(n + 2 * lambda - 2, bits);
        p2 = (a * x * p1 - b * p0) / static_cast<long>(n);
        d2 = (a * (p1 + x * d1) - b * d0) / static_cast<long>(n);
      }
      p0 = std::move(p1);
      p1 = std::move(p2);
      d0 = std::move(d1);
      d1 = std::move(d2);
    }
    return {p1, d1};
  }
};

double bisect(const Recurrence& rec, double lo, double hi) {
  double flo = rec.sign_value(lo);
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    double fm = rec.sign_value(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<XReal> recurrence_zeros(const PolyFamily& fam, int bits) {
  const int m = fam.degree();
  Recurrence rec{fam.kind, m, fam.lambda};
  std::vector<double> brackets;
  if (fam.kind == FamilyKind::hermite) {
    double h = pi / std::sqrt(2.0 * m + 1.0) / 16.0;
    double top = std::sqrt(2.0 * m + 1.0) + 1.0;
    for (double x = 0.5 * h; x <= top + h; x += h) brackets.push_back(x);
  } else {
    const int M = 16 * (m + 1);
    for (int j = M - 1; j >= 0; --j) brackets.push_back(std::cos(0.5 * pi * j / M));
  }
  std::vector<XReal> zeros;
  double prev_x = brackets.front();
  double prev_f = rec.sign_value(prev_x);
  for (size_t i = 1; i < brackets.size(); ++i) {
    double x = brackets[i];
    double f = rec.sign_value(x);
    if ((f < 0) != (prev_f < 0) || f == 0.0) {
      double guess = f == 0.0 ? x : bisect(rec, prev_x, x);
      // Newton at working precision
      XReal z(guess, bits + 16);
      for (int it = 0; it < 100; ++it) {
        auto [p, dp] = rec.value_and_derivative(z);
        XReal step = p / dp;
        z -= step;
        if (step.is_zero() || abs(step) <= ldexp(abs(z), -(bits + 8))) break;
      }
      XReal eps = ldexp(abs(z), -(bits / 2));
      auto lo = rec.value_and_derivative(z - eps).first;
      auto hi = rec.value_and_derivative(z + eps).first;
      if (lo.sign() * hi.sign() >= 0) {
        throw ZeroFindingFailure("no sign change around zero near " + std::to_string(guess) + " of " +
                                 fam.name());
      }
      zeros.push_back(z.with_precision(bits));
      if (f == 0.0 && i + 1 < brackets.size()) {
        ++i;
        x = brackets[i];
        f = rec.sign_value(x);
      }
    }
    prev_x = x;
    prev_f = f;
  }
  if (static_cast<int>(zeros.size()) != fam.N) {
    throw ZeroFindingFailure("found " + std::to_string(zeros.size()) + " positive zeros of " + fam.name() +
                             ", expected " + std::to_string(fam.N));
  }
  return zeros;
}

// cos(num/den * pi) at the requested precision, with guard bits on pi.
XReal cos_pi_ratio(long num, long den, int bits) {
  XReal arg = XReal::pi(bits + 32) * num / den;
  return cos(arg).with_precision(bits);
}

double log_cosh(double x) {
  x = std::fabs(x);
  return x + std::log1p(std::exp(-2.0 * x)) - std::numbers::ln2;
}

double log_sinh(double x) {
  if (x < 20.0) return std::log(std::sinh(x));
  return x + std::log1p(-std::exp(-2.0 * x)) - std::numbers::ln2;
}

}  // namespace

void PolyFamily::validate() const {
  if (d != 0 && d != 1) throw ValidationError("d must be 0 or 1");
  if (N < 1) throw ValidationError("N must be at least 1");
  if (kind == FamilyKind::gegenbauer && !(lambda >= 0)) throw ValidationError("Gegenbauer lambda must be >= 0");
}

FamilyKind PolyFamily::effective_kind() const {
  if (kind == FamilyKind::gegenbauer) {
    if (lambda == 0.0) return FamilyKind::chebyshev_T;
    if (lambda == 1.0) return FamilyKind::chebyshev_U;
  }
  return kind;
}

bool PolyFamily::is_chebyshev() const {
  auto k = effective_kind();
  return k == FamilyKind::chebyshev_T || k == FamilyKind::chebyshev_U;
}

int PolyFamily::cheb_lambda() const { return effective_kind() == FamilyKind::chebyshev_U ? 1 : 0; }

double PolyFamily::beta_N() const {
  switch (effective_kind()) {
    case FamilyKind::chebyshev_T: return 2.0 * N + d;
    case FamilyKind::chebyshev_U: return 2.0 * N + d + 1;
    case FamilyKind::gegenbauer: return 2.0 * N + d + lambda;
    case FamilyKind::equidistant: return (2.0 * N + d - 1) * pi / 2.0;
    case FamilyKind::hermite: return std::sqrt(4.0 * N + 2.0 * d + 1);
  }
  return 0.0;
}

double PolyFamily::gamma_N() const {
  switch (effective_kind()) {
    case FamilyKind::chebyshev_T:
    case FamilyKind::chebyshev_U:
    case FamilyKind::gegenbauer: return std::sqrt(static_cast<double>(N));
    default: return std::cbrt(static_cast<double>(N));
  }
}

double PolyFamily::delta_N() const {
  double g = gamma_N();
  switch (effective_kind()) {
    case FamilyKind::chebyshev_T:
    case FamilyKind::chebyshev_U:
    case FamilyKind::gegenbauer: return g * g * g / (static_cast<double>(N) * N);
    default: return g * g / N;
  }
}

std::string PolyFamily::name() const {
  std::string base;
  switch (kind) {
    case FamilyKind::chebyshev_T: base = "chebyshev-T"; break;
    case FamilyKind::chebyshev_U: base = "chebyshev-U"; break;
    case FamilyKind::gegenbauer: base = "gegenbauer(" + std::to_string(lambda) + ")"; break;
    case FamilyKind::hermite: base = "hermite"; break;
    case FamilyKind::equidistant: base = "equidistant"; break;
  }
  return base + " N=" + std::to_string(N) + " d=" + std::to_string(d);
}

FamilyKind PolyFamily::parse_kind(std::string_view text) {
  if (text == "chebyshev-T" || text == "T") return FamilyKind::chebyshev_T;
  if (text == "chebyshev-U" || text == "U") return FamilyKind::chebyshev_U;
  if (text == "gegenbauer") return FamilyKind::gegenbauer;
  if (text == "hermite") return FamilyKind::hermite;
  if (text == "equidistant") return FamilyKind::equidistant;
  throw ValidationError("unknown family '" + std::string(text) + "'");
}

std::vector<XReal> family_zeros(const PolyFamily& fam, int bits) {
  fam.validate();
  const long m = fam.degree();
  std::vector<XReal> zeros;
  zeros.reserve(fam.N);
  switch (fam.effective_kind()) {
    case FamilyKind::chebyshev_T:
      // cos((2k-1) pi / 2m), k = N..1 gives ascending order
      for (long k = fam.N; k >= 1; --k) zeros.push_back(cos_pi_ratio(2 * k - 1, 2 * m, bits));
      return zeros;
    case FamilyKind::chebyshev_U:
      for (long k = fam.N; k >= 1; --k) zeros.push_back(cos_pi_ratio(k, m + 1, bits));
      return zeros;
    case FamilyKind::equidistant:
      for (long k = 1; k <= fam.N; ++k) zeros.push_back(XReal::ratio(2 * k + fam.d - 1, 2L * fam.N + fam.d - 1, bits));
      return zeros;
    default:
      return recurrence_zeros(fam, bits);
  }
}

XReal cheb_eval(ChebKind kind, int m, const XReal& z) {
  if (m < 0) throw DomainError("Chebyshev degree must be >= 0");
  const int bits = z.precision();
  XReal p0(1L, bits);
  if (m == 0) return p0;
  XReal p1 = kind == ChebKind::T ? z : z * 2L;
  for (int n = 2; n <= m; ++n) {
    XReal p2 = z * p1 * 2L - p0;
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  return p1;
}

XReal cheb_eval_imag(ChebKind kind, int m, const XReal& t) {
  if (m < 0) throw DomainError("Chebyshev degree must be >= 0");
  XReal a = asinh(t);
  if (kind == ChebKind::T) return m % 2 == 0 ? cosh(a * static_cast<long>(m)) : sinh(a * static_cast<long>(m));
  XReal top = m % 2 == 0 ? cosh(a * static_cast<long>(m + 1)) : sinh(a * static_cast<long>(m + 1));
  return top / cosh(a);
}

LogValue cheb_eval_imag_log(ChebKind kind, int m, double t) {
  if (m < 0) throw DomainError("Chebyshev degree must be >= 0");
  double a = std::asinh(t);
  int k = kind == ChebKind::T ? m : m + 1;
  LogValue out;
  if (m % 2 == 0) {
    out = {1, log_cosh(k * a)};
  } else {
    if (t == 0.0) return LogValue::zero();
    out = {t > 0 ? 1 : -1, log_sinh(k * std::fabs(a))};
  }
  if (kind == ChebKind::U) out.log_mag -= log_cosh(a);
  return out;
}

long cheb_derivative_at_zero(ChebKind kind, int m) {
  if (m < 0) throw DomainError("Chebyshev degree must be >= 0");
  long N = m / 2;
  long d = m % 2;
  long sign = N % 2 == 0 ? 1 : -1;
  if (d == 0) return sign;
  return sign * (kind == ChebKind::T ? 2 * N + 1 : 2 * N + 2);
}

double log_g_imag(const PolyFamily& fam, const std::vector<double>& zeros, double t) {
  t = std::fabs(t);
  if (t == 0.0) return 0.0;
  if (fam.is_chebyshev()) {
    const double a = std::asinh(t);
    const int N = fam.N;
    const bool T = fam.effective_kind() == FamilyKind::chebyshev_T;
    if (T) {
      if (fam.d == 0) return log_cosh(2.0 * N * a);
      double k = 2.0 * N + 1;
      return log_sinh(k * a) - std::log(t * k);
    }
    if (fam.d == 0) return log_cosh((2.0 * N + 1) * a) - log_cosh(a);
    double k = 2.0 * N + 2;
    return log_sinh(k * a) - log_cosh(a) - std::log(t * k);
  }
  double sum = 0.0;
  for (double x : zeros) sum += std::log1p((t / x) * (t / x));
  return sum;
}

double g_real(const std::vector<double>& zeros, double x) {
  double p = 1.0;
  for (double z : zeros) p *= 1.0 - (x / z) * (x / z);
  return p;
}

std::vector<ScalingRow> scaling_probe(const PolyFamily& fam, const std::vector<std::complex<double>>& z_grid, int bits) {
  auto zx = family_zeros(fam, bits);
  std::vector<double> scaled;
  const double beta = fam.beta_N();
  for (const auto& x : zx) scaled.push_back(beta * x.to_double());
  std::vector<ScalingRow> rows;
  for (auto z : z_grid) {
    std::complex<double> p = fam.d == 1 ? z : std::complex<double>(1.0);
    for (double b : scaled) p *= 1.0 - (z / b) * (z / b);
    std::complex<double> target = fam.d == 0 ? std::cos(z) : std::sin(z);
    double lhs = std::abs(p - target);
    double r = std::abs(z);
    double bound = fam.delta_N() * std::min(r * r, 1.0) * (fam.d == 0 ? std::cosh(r) : std::sinh(r));
    double ratio = bound > 0 ? lhs / bound : 0.0;
    rows.push_back({z, lhs, bound, ratio});
  }
  return rows;
}

}  // namespace thetaspline
