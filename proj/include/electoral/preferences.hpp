#ifndef ELECTORAL_PREFERENCES_HPP
#define ELECTORAL_PREFERENCES_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <memory>
#include <vector>

#include "electoral/common.hpp"

namespace electoral {

/// Candidate payoff family u(x,t): strictly concave in the platform x and
/// uniquely maximized at the ideal policy t. Two closed forms plus positive
/// affine transforms of either:
///   quadratic    u(x,t) = -(x-t)^2
///   exponential  u(x,t) = -e^(x-t) + x
class UtilitySpec {
public:
  enum class Family { Quadratic, Exponential, Affine };

  static UtilitySpec quadratic() { return UtilitySpec(Family::Quadratic); }
  static UtilitySpec exponential() { return UtilitySpec(Family::Exponential); }

  static UtilitySpec affine(UtilitySpec base, double scale, double shift) {
    if (!(scale > 0.0)) throw DomainError("affine scale must be > 0");
    UtilitySpec u(Family::Affine);
    u.scale_ = scale;
    u.shift_ = shift;
    u.base_ = std::make_shared<UtilitySpec>(std::move(base));
    return u;
  }

  Family family() const { return family_; }
  double scale() const { return scale_; }
  double shift() const { return shift_; }
  const UtilitySpec& base() const { return *base_; }

  double value(double x, double t) const {
    require_unit(x, "x");
    require_unit(t, "t");
    return value_unchecked(x, t);
  }

private:
  explicit UtilitySpec(Family f) : family_(f) {}

  double value_unchecked(double x, double t) const {
    switch (family_) {
      case Family::Quadratic:
        return -(x - t) * (x - t);
      case Family::Exponential:
        return -std::exp(x - t) + x;
      case Family::Affine:
        return scale_ * base_->value_unchecked(x, t) + shift_;
    }
    return 0.0;  // unreachable
  }

  Family family_;
  double scale_ = 1.0;
  double shift_ = 0.0;
  std::shared_ptr<const UtilitySpec> base_;
};

inline double utility(const UtilitySpec& spec, double x, double t) {
  return spec.value(x, t);
}

struct UtilityValidation {
  bool peaked_at_t = true;
  bool strictly_concave = true;
  // violating (x, t) pairs for the peak check and (x, x'', t) triples for
  // the midpoint concavity check, flattened
  std::vector<std::array<double, 3>> witnesses;
};

/// Checks the two defining invariants on grids: u(t,t) > u(x,t) for x != t,
/// and strict midpoint concavity in x, for t in {0, 0.1, ..., 1}.
inline UtilityValidation validate_utility(const UtilitySpec& spec, std::size_t grid_size) {
  if (grid_size < 5) throw DomainError("grid_size must be >= 5");
  UtilityValidation report;
  for (int ti = 0; ti <= 10; ++ti) {
    const double t = ti / 10.0;
    const double peak = spec.value(t, t);
    std::vector<double> vals(grid_size);
    for (std::size_t i = 0; i < grid_size; ++i) {
      const double x = static_cast<double>(i) / static_cast<double>(grid_size - 1);
      vals[i] = spec.value(x, t);
      if (x != t && !(peak > vals[i])) {
        report.peaked_at_t = false;
        report.witnesses.push_back({x, t, 0.0});
      }
    }
    for (std::size_t i = 1; i + 1 < grid_size; ++i) {
      // evenly spaced grid: vals[i] is the midpoint of its neighbors
      if (!(vals[i] - 0.5 * (vals[i - 1] + vals[i + 1]) > 1e-12)) {
        report.strictly_concave = false;
        const double x0 = static_cast<double>(i - 1) / static_cast<double>(grid_size - 1);
        const double x2 = static_cast<double>(i + 1) / static_cast<double>(grid_size - 1);
        report.witnesses.push_back({x0, x2, t});
      }
    }
  }
  return report;
}

}  // namespace electoral

#endif  // ELECTORAL_PREFERENCES_HPP
