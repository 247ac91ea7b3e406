#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "electoral/preferences.hpp"
#include "electoral/solver.hpp"

using electoral::DomainError;
using electoral::UtilitySpec;

TEST_CASE("utility closed forms") {
  const UtilitySpec quad = UtilitySpec::quadratic();
  CHECK(quad.value(0.7, 0.7) == Catch::Approx(0.0).margin(1e-15));
  CHECK(quad.value(0.2, 0.5) == Catch::Approx(-0.09).margin(1e-15));

  const UtilitySpec expo = UtilitySpec::exponential();
  CHECK(expo.value(0.5, 0.5) == Catch::Approx(-0.5).margin(1e-15));

  const UtilitySpec aff = UtilitySpec::affine(UtilitySpec::quadratic(), 2.0, 1.0);
  CHECK(aff.value(0.2, 0.5) == Catch::Approx(2.0 * -0.09 + 1.0).margin(1e-15));

  CHECK_THROWS_AS(quad.value(-0.1, 0.5), DomainError);
  CHECK_THROWS_AS(quad.value(0.5, 1.1), DomainError);
  CHECK_THROWS_AS(UtilitySpec::affine(UtilitySpec::quadratic(), 0.0, 0.0), DomainError);
}

TEST_CASE("validation: peaked at t and strictly concave") {
  for (const UtilitySpec& u :
       {UtilitySpec::quadratic(), UtilitySpec::exponential(),
        UtilitySpec::affine(UtilitySpec::quadratic(), 2.0, 1.0),
        UtilitySpec::affine(UtilitySpec::exponential(), 0.5, -3.0)}) {
    const auto report = electoral::validate_utility(u, 101);
    CHECK(report.peaked_at_t);
    CHECK(report.strictly_concave);
    CHECK(report.witnesses.empty());
  }
  CHECK_THROWS_AS(electoral::validate_utility(UtilitySpec::quadratic(), 4), DomainError);
}

TEST_CASE("exponential maximizer over x is exactly t") {
  // derivative -e^(x-t) + 1 vanishes exactly at x = t
  const UtilitySpec expo = UtilitySpec::exponential();
  for (int ti = 0; ti <= 10; ++ti) {
    const double t = ti / 10.0;
    const double peak = expo.value(t, t);
    for (int i = 0; i <= 200; ++i) {
      const double x = i / 200.0;
      if (x != t) CHECK(expo.value(x, t) < peak);
    }
  }
}

TEST_CASE("affine wrapping preserves best responses") {
  const UtilitySpec quad = UtilitySpec::quadratic();
  const UtilitySpec aff = UtilitySpec::affine(UtilitySpec::quadratic(), 3.0, -2.0);
  const electoral::MedianBelief belief = electoral::MedianBelief::triangular(0.5);
  for (double opp : {0.1, 0.45, 0.8}) {
    const auto a = electoral::best_response(quad, belief, 0.3, opp);
    const auto b = electoral::best_response(aff, belief, 0.3, opp);
    CHECK(b.smallest == Catch::Approx(a.smallest).margin(1e-7));
    CHECK(b.largest == Catch::Approx(a.largest).margin(1e-7));
  }
}
