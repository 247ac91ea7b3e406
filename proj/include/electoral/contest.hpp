#ifndef ELECTORAL_CONTEST_HPP
#define ELECTORAL_CONTEST_HPP

#include "electoral/beliefs.hpp"
#include "electoral/common.hpp"
#include "electoral/preferences.hpp"

namespace electoral {

enum class Side { Left, Right };

/// The platforms announced by the two candidates. No ordering is required;
/// the win-probability kernel handles all cases.
struct PlatformProfile {
  double x_l = 0.0;
  double x_r = 0.0;

  PlatformProfile() = default;
  PlatformProfile(double xl, double xr) : x_l(xl), x_r(xr) {
    require_unit(x_l, "x_l");
    require_unit(x_r, "x_r");
  }
};

/// The candidates' ideal policies, strictly ordered t_l < t_r.
struct IdealPair {
  double t_l = 0.0;
  double t_r = 1.0;

  IdealPair() = default;
  IdealPair(double tl, double tr) : t_l(tl), t_r(tr) {
    require_unit(t_l, "t_l");
    require_unit(t_r, "t_r");
    if (!(t_l < t_r)) throw DomainError("ideal policies must satisfy t_l < t_r");
  }

  double ideal(Side side) const { return side == Side::Left ? t_l : t_r; }
};

/// One fully specified contest: payoff family, median belief, ideal pair.
struct ElectionModel {
  UtilitySpec utility;
  MedianBelief belief;
  IdealPair ideals;
};

/// Probability that the left candidate wins:
///   F((x_l+x_r)/2) if x_l < x_r, 1/2 on ties, 1 - F(mid) if x_l > x_r.
/// Strictly inside (0,1) for full-support beliefs.
inline double win_probability(const MedianBelief& belief, const PlatformProfile& profile) {
  if (profile.x_l == profile.x_r) return 0.5;
  const double mid = 0.5 * (profile.x_l + profile.x_r);
  const double f = belief.cdf(mid);
  return profile.x_l < profile.x_r ? f : 1.0 - f;
}

/// U_{t_i}(x_l,x_r) = P u(x_l,t_i) + (1-P) u(x_r,t_i), with t_i picked by side.
inline double expected_payoff(const ElectionModel& model, Side side,
                              const PlatformProfile& profile) {
  const double p = win_probability(model.belief, profile);
  const double t = model.ideals.ideal(side);
  return p * model.utility.value(profile.x_l, t) +
         (1.0 - p) * model.utility.value(profile.x_r, t);
}

/// pi(x_l,x_r) = P x_l + (1-P) x_r; the pre-election forecast of enacted
/// policy. Always inside the closed interval spanned by the platforms.
inline double expected_policy(const MedianBelief& belief, const PlatformProfile& profile) {
  const double p = win_probability(belief, profile);
  return p * profile.x_l + (1.0 - p) * profile.x_r;
}

/// Reduced best-response objective for a candidate with ideal t choosing
/// own_x against opp_x:
///   g(own_x) = P_own(own_x, opp_x) * (u(own_x,t) - u(opp_x,t)).
/// Maximizing g over own_x is equivalent to maximizing the expected payoff,
/// and g is continuous at own_x = opp_x (the payoff difference vanishes
/// there) where U itself jumps.
inline double reduced_objective(const UtilitySpec& utility, const MedianBelief& belief,
                                double ideal_t, double own_x, double opp_x) {
  // P_own is the win probability with own_x in the "left" slot; by the
  // symmetry P(a,b) = 1 - P(b,a) this covers both candidates.
  const double p_own = win_probability(belief, PlatformProfile(own_x, opp_x));
  return p_own * (utility.value(own_x, ideal_t) - utility.value(opp_x, ideal_t));
}

}  // namespace electoral

#endif  // ELECTORAL_CONTEST_HPP
