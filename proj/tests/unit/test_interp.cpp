#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracle_values.hpp"
#include "thetaspline/error.hpp"
#include "thetaspline/experiments.hpp"
#include "thetaspline/interp.hpp"
#include "thetaspline/knots.hpp"

using namespace thetaspline;

TEST_SUITE("interp") {

TEST_CASE("lagrange reproduces polynomials") {
  std::vector<XReal> nodes;
  for (double x : {-1.0, 0.0, 0.5, 2.0, 3.0}) nodes.emplace_back(x, 128);
  auto f = [](const XReal& x) { return x * x * x - x * 2L + XReal(1L, x.precision()); };
  XReal at(1.25, 128);
  CHECK(lagrange_eval(nodes, f, at).to_double() == doctest::Approx(f(at).to_double()).epsilon(1e-30));
  CHECK(lagrange_eval(nodes, f, nodes[2]).to_double() == doctest::Approx(f(nodes[2]).to_double()));
  nodes.push_back(XReal(0.5, 128));
  CHECK_THROWS_AS(lagrange_eval(nodes, f, at), DuplicateNode);
}

TEST_CASE("lagrange does not depend on node order") {
  std::vector<XReal> nodes, values;
  for (double x : {0.0, 0.1, 0.35, 0.5, 0.8, 1.0}) {
    nodes.emplace_back(x, 128);
    values.push_back(sqrt(XReal(x, 128)));
  }
  XReal at(0.63, 128);
  double a = lagrange_eval(nodes, values, at).to_double();
  std::reverse(nodes.begin(), nodes.end());
  std::reverse(values.begin(), values.end());
  std::swap(nodes[1], nodes[4]);
  std::swap(values[1], values[4]);
  CHECK(lagrange_eval(nodes, values, at).to_double() == doctest::Approx(a).epsilon(1e-15));
}

TEST_CASE("power remainder against the reference") {
  auto k = custom_knots({"0", "1", "2", "3"});
  auto r = remainder_identity(k, 2, 0.5, 0);
  CHECK(r.route == "power");
  CHECK(r.lhs == doctest::Approx(oracle::kRem0123u2s05).epsilon(1e-14));
  CHECK(r.rel_gap <= 1e-9);
}

TEST_CASE("log remainder against the reference") {
  auto k = custom_knots({"0", "1", "2", "3"});
  auto r = remainder_identity_log(k, 1, 1);
  CHECK(r.route == "log");
  CHECK(r.lhs == doctest::Approx(oracle::kRem0123u1log1).epsilon(1e-14));
  CHECK(r.rel_gap <= 1e-9);
  // an even s - d goes to the log route
  CHECK(remainder_identity(k, 1, 2.0, 0).route == "log");
}

TEST_CASE("identity matrix on chebyshev knots") {
  for (auto kind : {FamilyKind::chebyshev_T, FamilyKind::chebyshev_U}) {
    for (int d : {0, 1}) {
      PolyFamily f{kind, d, 8, 0.0};
      auto k = omega_squared(f, 1.0);
      for (int u_index : {1, find_knot(k, 1.0)}) {
        for (double s : {d + 0.5, d + 1.5, d + 3.5}) {
          auto r = remainder_identity(k, u_index, s, d);
          INFO("d " << d << " u_index " << u_index << " s " << s);
          CHECK(r.rel_gap <= 1e-9);
        }
        for (int m : {1, 2}) CHECK(remainder_identity_log(k, u_index, m).rel_gap <= 1e-9);
      }
    }
  }
}

TEST_CASE("hand case of the symmetric identity") {
  auto r = symmetric_identity({1.0}, 2.0, 1.0);
  CHECK(r.lhs == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("symmetric identity on numeric cases") {
  const std::vector<std::vector<double>> zero_sets = {{1.0, 2.0, 3.0}, {0.5, 1.7}, {0.3, 0.9, 1.4, 2.2}};
  for (const auto& z : zero_sets) {
    for (double s : {0.7, 2.5}) {
      auto r = symmetric_identity(z, 1.3, s);
      CHECK(r.rel_gap <= 1e-9);
    }
  }
  CHECK_THROWS_AS(symmetric_identity({1.0}, 2.0, 5.0), DomainError);
}

TEST_CASE("scaled interpolation differences approach their limits") {
  for (int d : {0, 1}) {
    InterpLimitSpec spec{PolyFamily{FamilyKind::chebyshev_T, d, 4, 0.0}, d + 0.5, 0};
    auto recs = interpolation_limit(spec, {8, 16, 32, 64});
    for (const auto& t : check_trend(recs)) CHECK(t.ok);
    CHECK(recs.back().rel_err < 1e-3);
    InterpLimitSpec log_spec{PolyFamily{FamilyKind::chebyshev_U, d, 4, 0.0}, 1.0, 1};
    auto lrecs = interpolation_limit(log_spec, {8, 16, 32, 64});
    CHECK(lrecs.back().rel_err < 1e-3);
  }
}

TEST_CASE("find_knot") {
  auto k = custom_knots({"0", "0.5", "1"});
  CHECK(find_knot(k, 0.5) == 1);
  CHECK_THROWS_AS(find_knot(k, 0.6), ValidationError);
}

}
