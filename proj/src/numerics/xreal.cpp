#include "thetaspline/xreal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "thetaspline/error.hpp"

namespace thetaspline {

// ---------------------------------------------------------------------------
// LogValue

LogValue LogValue::from_double(double x) {
  if (x == 0.0) return {};
  return {x > 0 ? 1 : -1, std::log(std::fabs(x))};
}

double LogValue::to_double() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_mag);
}

LogValue LogValue::operator*(const LogValue& o) const {
  if (sign == 0 || o.sign == 0) return {};
  return {sign * o.sign, log_mag + o.log_mag};
}

LogValue LogValue::operator/(const LogValue& o) const {
  if (o.sign == 0) throw DomainError("LogValue division by zero");
  if (sign == 0) return {};
  return {sign * o.sign, log_mag - o.log_mag};
}

LogValue LogValue::pow(double p) const {
  if (sign == 0) return {};
  return {1, log_mag * p};
}

// ---------------------------------------------------------------------------
// XReal

namespace {

mpfr_prec_t clamp_bits(int bits) {
  return std::max<mpfr_prec_t>(MPFR_PREC_MIN, std::min<mpfr_prec_t>(bits, MPFR_PREC_MAX));
}

mpfr_prec_t wider(const XReal& a, const XReal& b) {
  return std::max(mpfr_get_prec(a.get()), mpfr_get_prec(b.get()));
}

}  // namespace

XReal::XReal(int bits) {
  mpfr_init2(v_, clamp_bits(bits));
  mpfr_set_zero(v_, 1);
}

XReal::XReal(double v, int bits) {
  mpfr_init2(v_, clamp_bits(bits));
  mpfr_set_d(v_, v, MPFR_RNDN);
}

XReal::XReal(long v, int bits) {
  mpfr_init2(v_, clamp_bits(bits));
  mpfr_set_si(v_, v, MPFR_RNDN);
}

XReal XReal::from_string(std::string_view text, int bits) {
  XReal r(bits);
  std::string s(text);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw ValidationError("not a decimal number: '" + s + "'");
  }
  return r;
}

XReal XReal::pi(int bits) {
  XReal r(bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

XReal XReal::ln2(int bits) {
  XReal r(bits);
  mpfr_const_log2(r.v_, MPFR_RNDN);
  return r;
}

XReal XReal::ratio(long num, long den, int bits) {
  XReal r(num, bits + 64);
  mpfr_div_si(r.v_, r.v_, den, MPFR_RNDN);
  return r.with_precision(bits);
}

XReal::XReal(const XReal& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

XReal::XReal(XReal&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

XReal& XReal::operator=(const XReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

XReal& XReal::operator=(XReal&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

XReal::~XReal() { mpfr_clear(v_); }

XReal XReal::with_precision(int bits) const {
  XReal r(bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

LogValue XReal::to_log() const {
  if (mpfr_zero_p(v_)) return {};
  XReal a(precision());
  mpfr_abs(a.v_, v_, MPFR_RNDN);
  mpfr_log(a.v_, a.v_, MPFR_RNDN);
  return {mpfr_sgn(v_) > 0 ? 1 : -1, mpfr_get_d(a.v_, MPFR_RNDN)};
}

std::string XReal::to_string(int digits) const {
  if (mpfr_zero_p(v_)) return "0";
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  std::string fmt = "%." + std::to_string(std::max(1, digits - 1)) + "Re";
  int n = mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), v_);
  if (n >= static_cast<int>(buf.size())) {
    buf.resize(static_cast<size_t>(n) + 1);
    mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), v_);
  }
  return std::string(buf.data());
}

XReal& XReal::operator+=(const XReal& o) {
  mpfr_prec_t p = wider(*this, o);
  if (p > mpfr_get_prec(v_)) mpfr_prec_round(v_, p, MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

XReal& XReal::operator-=(const XReal& o) {
  mpfr_prec_t p = wider(*this, o);
  if (p > mpfr_get_prec(v_)) mpfr_prec_round(v_, p, MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

XReal& XReal::operator*=(const XReal& o) {
  mpfr_prec_t p = wider(*this, o);
  if (p > mpfr_get_prec(v_)) mpfr_prec_round(v_, p, MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

XReal& XReal::operator/=(const XReal& o) {
  mpfr_prec_t p = wider(*this, o);
  if (p > mpfr_get_prec(v_)) mpfr_prec_round(v_, p, MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

XReal& XReal::operator*=(long k) {
  mpfr_mul_si(v_, v_, k, MPFR_RNDN);
  return *this;
}

XReal& XReal::operator/=(long k) {
  mpfr_div_si(v_, v_, k, MPFR_RNDN);
  return *this;
}

XReal XReal::operator-() const {
  XReal r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const XReal& a, const XReal& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

#define THETASPLINE_UNARY(name, fn)          \
  XReal name(const XReal& x) {               \
    XReal r(x.precision());                  \
    fn(r.get(), x.get(), MPFR_RNDN);         \
    return r;                                \
  }

THETASPLINE_UNARY(abs, mpfr_abs)
THETASPLINE_UNARY(sqrt, mpfr_sqrt)
THETASPLINE_UNARY(square, mpfr_sqr)
THETASPLINE_UNARY(exp, mpfr_exp)
THETASPLINE_UNARY(log, mpfr_log)
THETASPLINE_UNARY(cos, mpfr_cos)
THETASPLINE_UNARY(sin, mpfr_sin)
THETASPLINE_UNARY(acos, mpfr_acos)
THETASPLINE_UNARY(cosh, mpfr_cosh)
THETASPLINE_UNARY(sinh, mpfr_sinh)
THETASPLINE_UNARY(asinh, mpfr_asinh)
THETASPLINE_UNARY(acosh, mpfr_acosh)

#undef THETASPLINE_UNARY

XReal pow(const XReal& x, unsigned long n) {
  XReal r(x.precision());
  mpfr_pow_ui(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

XReal pow(const XReal& x, long n) {
  XReal r(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

XReal pow(const XReal& x, const XReal& y) {
  XReal r(std::max(x.precision(), y.precision()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

XReal ldexp(const XReal& x, long k) {
  XReal r(x);
  mpfr_mul_2si(r.get(), r.get(), k, MPFR_RNDN);
  return r;
}

}  // namespace thetaspline
