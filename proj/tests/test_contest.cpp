#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "electoral/contest.hpp"

using namespace electoral;

TEST_CASE("win probability closed forms") {
  const MedianBelief tri = MedianBelief::triangular(0.5);
  CHECK(win_probability(tri, PlatformProfile(0.4, 0.4)) == 0.5);
  CHECK(win_probability(MedianBelief::uniform(), PlatformProfile(0.9, 0.9)) == 0.5);
  CHECK(win_probability(tri, PlatformProfile(0.2, 0.6)) == Catch::Approx(0.32).margin(1e-15));
  CHECK(win_probability(tri, PlatformProfile(0.8, 0.6)) == Catch::Approx(0.18).margin(1e-15));
  CHECK_THROWS_AS(PlatformProfile(1.2, 0.5), DomainError);
}

TEST_CASE("ideal pair ordering enforced") {
  CHECK_THROWS_AS(IdealPair(0.5, 0.5), DomainError);
  CHECK_THROWS_AS(IdealPair(0.7, 0.2), DomainError);
  CHECK_NOTHROW(IdealPair(0.0, 1.0));
}

TEST_CASE("expected payoff values") {
  const ElectionModel model{UtilitySpec::quadratic(), MedianBelief::uniform(), IdealPair(0.0, 1.0)};
  // P = F(0.4) = 0.4
  CHECK(expected_payoff(model, Side::Left, PlatformProfile(0.2, 0.6)) ==
        Catch::Approx(-0.232).margin(1e-15));
  CHECK(expected_payoff(model, Side::Right, PlatformProfile(0.2, 0.6)) ==
        Catch::Approx(-0.352).margin(1e-15));
  // identical platforms: the win probability cancels
  for (double c : {0.0, 0.3, 0.9}) {
    CHECK(expected_payoff(model, Side::Left, PlatformProfile(c, c)) ==
          Catch::Approx(model.utility.value(c, 0.0)).margin(1e-15));
    CHECK(expected_payoff(model, Side::Right, PlatformProfile(c, c)) ==
          Catch::Approx(model.utility.value(c, 1.0)).margin(1e-15));
  }
}

TEST_CASE("expected policy values") {
  CHECK(expected_policy(MedianBelief::uniform(), PlatformProfile(0.7, 0.7)) == 0.7);
  CHECK(expected_policy(MedianBelief::uniform(), PlatformProfile(0.2, 0.6)) ==
        Catch::Approx(0.44).margin(1e-15));
  CHECK(expected_policy(MedianBelief::triangular(0.5), PlatformProfile(0.2, 0.6)) ==
        Catch::Approx(0.472).margin(1e-15));
}

TEST_CASE("P-kernel properties (S), (M), (Po) and policy containment") {
  for (const MedianBelief& belief :
       {MedianBelief::uniform(), MedianBelief::triangular(0.5), MedianBelief::power(2.0)}) {
    const int n = 101;
    for (int i = 0; i < n; ++i) {
      const double xl = static_cast<double>(i) / (n - 1);
      double prev = -1.0;
      for (int j = 0; j < n; ++j) {
        const double xr = static_cast<double>(j) / (n - 1);
        const double p = win_probability(belief, PlatformProfile(xl, xr));
        const double q = win_probability(belief, PlatformProfile(xr, xl));
        REQUIRE(std::abs(p + q - 1.0) < 1e-12);  // (S)
        REQUIRE(p > 0.0);                        // (Po)
        REQUIRE(p < 1.0);
        const double pi = expected_policy(belief, PlatformProfile(xl, xr));
        REQUIRE(pi >= std::min(xl, xr) - 1e-15);
        REQUIRE(pi <= std::max(xl, xr) + 1e-15);
        (void)prev;
      }
    }
    // (M): strictly increasing in x_l below x_r, strictly decreasing above
    const double xr = 0.6;
    for (int i = 1; i < 60; ++i) {
      const double a = (i - 1) / 100.0, b = i / 100.0;
      REQUIRE(win_probability(belief, PlatformProfile(a, xr)) <
              win_probability(belief, PlatformProfile(b, xr)));
    }
    for (int i = 62; i <= 100; ++i) {
      const double a = (i - 1) / 100.0, b = i / 100.0;
      REQUIRE(win_probability(belief, PlatformProfile(a, xr)) >
              win_probability(belief, PlatformProfile(b, xr)));
    }
  }
}

TEST_CASE("reduced objective is continuous at the tie and vanishes there") {
  const UtilitySpec u = UtilitySpec::quadratic();
  const MedianBelief f = MedianBelief::triangular(0.5);
  const double t = 0.2, opp = 0.6;
  CHECK(reduced_objective(u, f, t, opp, opp) == 0.0);
  CHECK(std::abs(reduced_objective(u, f, t, opp - 1e-9, opp)) < 1e-8);
  CHECK(std::abs(reduced_objective(u, f, t, opp + 1e-9, opp)) < 1e-8);
}
