#include "thetaspline/precision.hpp"

#include <cstdlib>
#include <string>

#include "thetaspline/error.hpp"

namespace thetaspline {

void PrecisionContext::validate() const {
  if (start_bits < 2) throw ValidationError("start_bits must be >= 2");
  if (start_bits > max_bits) throw ValidationError("start_bits must not exceed max_bits");
  if (!(target_rel_tol > 0)) throw ValidationError("target_rel_tol must be positive");
  if (escalation_factor < 2) throw ValidationError("escalation_factor must be >= 2");
}

PrecisionContext PrecisionContext::from_env() {
  PrecisionContext ctx;
  if (const char* env = std::getenv("THETASPLINE_MAX_BITS")) {
    char* end = nullptr;
    long bits = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || bits < 2) {
      throw ValidationError(std::string("THETASPLINE_MAX_BITS is not a positive integer: ") + env);
    }
    ctx.max_bits = static_cast<int>(bits);
    if (ctx.start_bits > ctx.max_bits) ctx.start_bits = ctx.max_bits;
  }
  return ctx;
}

bool agree(const XReal& a, const XReal& b, double rel_tol) {
  if (a.is_zero() && b.is_zero()) return true;
  if (!a.is_finite() || !b.is_finite()) return false;
  int bits = std::max(a.precision(), b.precision());
  XReal diff = abs(a.with_precision(bits) - b);
  XReal scale = abs(b.with_precision(bits));
  XReal sa = abs(a);
  if (sa > scale) scale = sa;
  return diff <= scale * XReal(rel_tol, bits);
}

AdaptiveResult adaptive_eval(const PrecisionProcedure& computation, const PrecisionContext& ctx) {
  ctx.validate();
  int bits = ctx.start_bits;
  XReal previous = computation(bits);
  while (true) {
    long next = static_cast<long>(bits) * ctx.escalation_factor;
    if (next > ctx.max_bits) {
      throw PrecisionExhausted("no agreement to " + std::to_string(ctx.target_rel_tol) +
                               " below " + std::to_string(ctx.max_bits) + " bits");
    }
    XReal current = computation(static_cast<int>(next));
    if (agree(previous, current, ctx.target_rel_tol)) return {std::move(previous), bits};
    bits = static_cast<int>(next);
    previous = std::move(current);
  }
}

}  // namespace thetaspline
