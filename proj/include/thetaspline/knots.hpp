#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "thetaspline/polyfamilies.hpp"
#include "thetaspline/xreal.hpp"

namespace thetaspline {

enum class KnotKind { omega_squared, omega_star, cardinal, reciprocal, general, custom };

std::string to_string(KnotKind kind);

/// N+2 distinct knots. The knots are regenerated at whatever precision an
/// evaluation runs at, so rounding of the knots never pollutes a
/// cancellation-prone sum.
class KnotSet {
 public:
  using Generator = std::function<std::vector<XReal>(int bits)>;

  /// Validates distinctness at `check_bits` (DuplicateKnot otherwise).
  KnotSet(KnotKind kind, Generator generator, int check_bits = 256);

  KnotKind kind() const { return kind_; }
  int N() const { return static_cast<int>(doubles_.size()) - 2; }
  int size() const { return static_cast<int>(doubles_.size()); }
  /// Sorted knots at the requested precision.
  std::vector<XReal> materialize(int bits) const;
  const std::vector<double>& as_doubles() const { return doubles_; }
  double min() const { return doubles_.front(); }
  double max() const { return doubles_.back(); }

  // family metadata, when the set comes from a polynomial family
  std::optional<PolyFamily> family;
  double u = 0.0;
  std::vector<std::string> warnings;

 private:
  KnotKind kind_;
  Generator generator_;
  std::vector<double> doubles_;
};

/// {0, u^2} and the squared positive zeros of the family.
KnotSet omega_squared(const PolyFamily& fam, double u = 1.0);
/// The image of omega_squared under y -> 2y - 1: {-1, 2u^2 - 1, 2x_k^2 - 1}.
KnotSet omega_star(const PolyFamily& fam, double u = 1.0);
/// k - (N+1)/2, k = 0..N+1.
KnotSet cardinal_knots(int N);
/// 1/(2k-1), -nu <= k <= nu+1 (N = 2 nu).
KnotSet reciprocal_knots(int nu);
/// Centered Chebyshev extrema cos(k pi/(N+1)), k = 0..N+1; sum zero.
KnotSet general_knots(int N);
/// Decimal strings, parsed at each requested precision.
KnotSet custom_knots(const std::vector<std::string>& decimals);

}  // namespace thetaspline
