#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace thetaspline {

/// Sign plus natural-log magnitude. Used for quantities whose magnitude
/// leaves the double exponent range (2^{2N} scale factors, B*_N values at
/// large N).
struct LogValue {
  int sign = 0;          // -1, 0, +1
  double log_mag = 0.0;  // ln|x|, meaningless when sign == 0

  static LogValue from_double(double x);
  static LogValue zero() { return {}; }
  /// exp(log_mag) with sign; overflows to +-inf and underflows to 0.
  double to_double() const;
  bool is_zero() const { return sign == 0; }

  LogValue operator*(const LogValue& o) const;
  LogValue operator/(const LogValue& o) const;
  /// |x|^p keeping the sign of x when p is an odd integer is not tracked;
  /// callers use pow only on positive values.
  LogValue pow(double p) const;
  /// Multiplies by exp(shift).
  LogValue scaled(double shift) const { return sign == 0 ? *this : LogValue{sign, log_mag + shift}; }
};

/// Multiple-precision binary float with an explicit precision in bits.
/// Arithmetic rounds to nearest at the larger operand precision.
class XReal {
 public:
  explicit XReal(int bits = 128);
  XReal(double v, int bits);
  XReal(long v, int bits);
  XReal(int v, int bits) : XReal(static_cast<long>(v), bits) {}

  static XReal from_string(std::string_view text, int bits);
  static XReal pi(int bits);
  static XReal ln2(int bits);
  /// num/den rounded once.
  static XReal ratio(long num, long den, int bits);

  XReal(const XReal& other);
  XReal(XReal&& other) noexcept;
  XReal& operator=(const XReal& other);
  XReal& operator=(XReal&& other) noexcept;
  ~XReal();

  int precision() const { return static_cast<int>(mpfr_get_prec(v_)); }
  /// Copy rounded (or widened) to a new precision.
  XReal with_precision(int bits) const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  LogValue to_log() const;
  /// Decimal representation with the given number of significant digits.
  std::string to_string(int digits = 30) const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  XReal& operator+=(const XReal& o);
  XReal& operator-=(const XReal& o);
  XReal& operator*=(const XReal& o);
  XReal& operator/=(const XReal& o);
  XReal& operator*=(long k);
  XReal& operator/=(long k);

  XReal operator-() const;

  friend XReal operator+(XReal a, const XReal& b) { return a += b; }
  friend XReal operator-(XReal a, const XReal& b) { return a -= b; }
  friend XReal operator*(XReal a, const XReal& b) { return a *= b; }
  friend XReal operator/(XReal a, const XReal& b) { return a /= b; }
  friend XReal operator*(XReal a, long k) { return a *= k; }
  friend XReal operator/(XReal a, long k) { return a /= k; }

  friend std::partial_ordering operator<=>(const XReal& a, const XReal& b);
  friend bool operator==(const XReal& a, const XReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

XReal abs(const XReal& x);
XReal sqrt(const XReal& x);
XReal square(const XReal& x);
XReal pow(const XReal& x, unsigned long n);
XReal pow(const XReal& x, long n);
XReal pow(const XReal& x, const XReal& y);
XReal exp(const XReal& x);
XReal log(const XReal& x);
XReal cos(const XReal& x);
XReal sin(const XReal& x);
XReal acos(const XReal& x);
XReal cosh(const XReal& x);
XReal sinh(const XReal& x);
XReal asinh(const XReal& x);
XReal acosh(const XReal& x);
/// x * 2^k, exact.
XReal ldexp(const XReal& x, long k);

}  // namespace thetaspline
