#include "thetaspline/knots.hpp"

#include <algorithm>
#include <cmath>

#include "thetaspline/error.hpp"

namespace thetaspline {

std::string to_string(KnotKind kind) {
  switch (kind) {
    case KnotKind::omega_squared: return "omega_squared";
    case KnotKind::omega_star: return "omega_star";
    case KnotKind::cardinal: return "cardinal";
    case KnotKind::reciprocal: return "reciprocal";
    case KnotKind::general: return "general";
    case KnotKind::custom: return "custom";
  }
  return "?";
}

KnotSet::KnotSet(KnotKind kind, Generator generator, int check_bits)
    : kind_(kind), generator_(std::move(generator)) {
  auto knots = materialize(check_bits);
  if (knots.size() < 2) throw ValidationError("a knot set needs at least two knots");
  for (const auto& k : knots) doubles_.push_back(k.to_double());
}

std::vector<XReal> KnotSet::materialize(int bits) const {
  auto knots = generator_(bits);
  std::sort(knots.begin(), knots.end(), [](const XReal& a, const XReal& b) { return a < b; });
  for (size_t i = 0; i + 1 < knots.size(); ++i) {
    if (!(knots[i] < knots[i + 1])) {
      throw DuplicateKnot("knot " + knots[i].to_string(20) + " repeats at " + std::to_string(bits) + " bits");
    }
  }
  return knots;
}

namespace {

void warn_scaling(KnotSet& ks, const PolyFamily& fam, double u) {
  if (fam.beta_N() * u < 10.0) {
    ks.warnings.push_back("beta_N*u_N = " + std::to_string(fam.beta_N() * u) + " is below 10");
  }
}

}  // namespace

KnotSet omega_squared(const PolyFamily& fam, double u) {
  fam.validate();
  if (!(u > 0)) throw ValidationError("u_N must be positive");
  KnotSet ks(KnotKind::omega_squared, [fam, u](int bits) {
    std::vector<XReal> out;
    out.emplace_back(bits);
    XReal uu(u, bits);
    out.push_back(square(uu));
    for (auto& x : family_zeros(fam, bits)) out.push_back(square(x));
    return out;
  });
  ks.family = fam;
  ks.u = u;
  warn_scaling(ks, fam, u);
  return ks;
}

KnotSet omega_star(const PolyFamily& fam, double u) {
  fam.validate();
  if (!(u > 0)) throw ValidationError("u_N must be positive");
  KnotSet ks(KnotKind::omega_star, [fam, u](int bits) {
    std::vector<XReal> out;
    XReal one(1L, bits);
    out.push_back(-one);
    XReal uu(u, bits);
    out.push_back(square(uu) * 2L - one);
    for (auto& x : family_zeros(fam, bits)) out.push_back(square(x) * 2L - one);
    return out;
  });
  ks.family = fam;
  ks.u = u;
  warn_scaling(ks, fam, u);
  return ks;
}

KnotSet cardinal_knots(int N) {
  if (N < 0) throw ValidationError("N must be >= 0");
  return KnotSet(KnotKind::cardinal, [N](int bits) {
    std::vector<XReal> out;
    for (long k = 0; k <= N + 1; ++k) out.push_back(XReal::ratio(2 * k - (N + 1), 2, bits));
    return out;
  });
}

KnotSet reciprocal_knots(int nu) {
  if (nu < 1) throw ValidationError("nu must be >= 1");
  return KnotSet(KnotKind::reciprocal, [nu](int bits) {
    std::vector<XReal> out;
    for (long k = -nu; k <= nu + 1; ++k) out.push_back(XReal::ratio(1, 2 * k - 1, bits));
    return out;
  });
}

KnotSet general_knots(int N) {
  if (N < 1) throw ValidationError("N must be >= 1");
  return KnotSet(KnotKind::general, [N](int bits) {
    std::vector<XReal> out;
    XReal p = XReal::pi(bits + 32);
    for (long k = 0; k <= N + 1; ++k) {
      // exact zero at the center keeps the sum exactly zero
      if (2 * k == N + 1) {
        out.emplace_back(bits);
        continue;
      }
      out.push_back(cos(p * k / static_cast<long>(N + 1)).with_precision(bits));
    }
    return out;
  });
}

KnotSet custom_knots(const std::vector<std::string>& decimals) {
  return KnotSet(KnotKind::custom, [decimals](int bits) {
    std::vector<XReal> out;
    for (const auto& s : decimals) out.push_back(XReal::from_string(s, bits));
    return out;
  });
}

}  // namespace thetaspline
