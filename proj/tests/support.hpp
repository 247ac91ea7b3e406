#ifndef ELECTORAL_TESTS_SUPPORT_HPP
#define ELECTORAL_TESTS_SUPPORT_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "electoral/contest.hpp"

namespace testsupport {

inline electoral::UtilitySpec make_utility(std::size_t index) {
  switch (index % 3) {
    case 0: return electoral::UtilitySpec::quadratic();
    case 1: return electoral::UtilitySpec::exponential();
    default:
      return electoral::UtilitySpec::affine(electoral::UtilitySpec::quadratic(), 2.0, 1.0);
  }
}

inline electoral::MedianBelief make_belief(std::size_t index) {
  switch (index % 5) {
    case 0: return electoral::MedianBelief::uniform();
    case 1: return electoral::MedianBelief::triangular(0.5);
    case 2: return electoral::MedianBelief::triangular(0.3);
    case 3: return electoral::MedianBelief::power(2.0);
    default: return electoral::MedianBelief::power(0.5);
  }
}

/// Independent best-response oracle: maximizes the full expected payoff of
/// the candidate with ideal t over a dense grid of own platforms spanning
/// all of [0,1], with no reference to the solver's reduced objective or
/// search interval.
inline double brute_force_best_response(const electoral::UtilitySpec& u,
                                        const electoral::MedianBelief& f, double t, double opp_x,
                                        std::size_t grid = 100000) {
  double best_x = 0.0;
  double best_val = -1e300;
  for (std::size_t i = 0; i <= grid; ++i) {
    const double y = static_cast<double>(i) / static_cast<double>(grid);
    const double p = electoral::win_probability(f, electoral::PlatformProfile(y, opp_x));
    const double val = p * u.value(y, t) + (1.0 - p) * u.value(opp_x, t);
    if (val > best_val) {
      best_val = val;
      best_x = y;
    }
  }
  return best_x;
}

struct RandomInstance {
  electoral::UtilitySpec utility;
  electoral::MedianBelief belief;
  double t;
  double x;
};

/// Seeded stream of (utility, belief, ideal, opponent platform) instances.
inline std::vector<RandomInstance> random_instances(std::size_t count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<RandomInstance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back({make_utility(rng() % 3), make_belief(rng() % 5), unit(rng), unit(rng)});
  }
  return out;
}

}  // namespace testsupport

#endif  // ELECTORAL_TESTS_SUPPORT_HPP
