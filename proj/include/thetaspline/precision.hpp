#pragma once

#include <functional>
#include <string>
#include <utility>

#include "thetaspline/error.hpp"

#include "thetaspline/xreal.hpp"

namespace thetaspline {

/// Working-precision policy for ill-conditioned sums.
struct PrecisionContext {
  int start_bits = 128;
  int max_bits = 16384;
  double target_rel_tol = 1e-20;
  int escalation_factor = 2;

  /// Throws ValidationError when the invariants do not hold.
  void validate() const;
  /// Defaults, with max_bits taken from THETASPLINE_MAX_BITS when set.
  static PrecisionContext from_env();
};

struct AdaptiveResult {
  XReal value;
  int bits = 0;  // precision of the accepted evaluation
};

using PrecisionProcedure = std::function<XReal(int bits)>;

/// Evaluates `computation` at start_bits, start_bits*f, ... and returns the
/// result at p for the first p whose value agrees with the one at f*p to
/// target_rel_tol. Re-running `computation(result.bits)` reproduces the value.
/// Throws PrecisionExhausted once max_bits would be exceeded.
AdaptiveResult adaptive_eval(const PrecisionProcedure& computation, const PrecisionContext& ctx);

/// True when a and b agree to rel_tol (two exact zeros agree).
bool agree(const XReal& a, const XReal& b, double rel_tol);

/// The adaptive_eval policy for results that are not a single XReal (complex
/// quadrature values, pairs). `agrees(previous, current)` decides acceptance.
template <class T, class Proc, class Agree>
std::pair<T, int> escalate(Proc&& computation, Agree&& agrees, const PrecisionContext& ctx) {
  ctx.validate();
  int bits = ctx.start_bits;
  T previous = computation(bits);
  while (true) {
    long next = static_cast<long>(bits) * ctx.escalation_factor;
    if (next > ctx.max_bits) {
      throw PrecisionExhausted("no agreement below " + std::to_string(ctx.max_bits) + " bits");
    }
    T current = computation(static_cast<int>(next));
    if (agrees(previous, current)) return {std::move(previous), bits};
    bits = static_cast<int>(next);
    previous = std::move(current);
  }
}

}  // namespace thetaspline
