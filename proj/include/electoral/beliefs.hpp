#ifndef ELECTORAL_BELIEFS_HPP
#define ELECTORAL_BELIEFS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "electoral/common.hpp"

namespace electoral {

/// Belief distribution over the median voter's ideal policy: a continuous,
/// full-support distribution on [0,1], evaluated through its CDF and density.
///
/// Built-in families: uniform, triangular (arbitrary mode), power (F = x^k),
/// and a tabulated density given as (x, f) samples. The tabulated CDF is the
/// trapezoid integral of the samples, renormalized so that F(1) = 1; this
/// guards against user densities that integrate to 1 +- eps.
class MedianBelief {
public:
  enum class Family { Uniform, Triangular, Power, Numeric };

  static MedianBelief uniform() { return MedianBelief(Family::Uniform, 0.0); }

  static MedianBelief triangular(double mode) {
    require_unit(mode, "mode");
    return MedianBelief(Family::Triangular, mode);
  }

  static MedianBelief power(double k) {
    if (!(k > 0.0)) throw DomainError("power exponent k must be > 0");
    return MedianBelief(Family::Power, k);
  }

  /// samples: strictly increasing x covering [0,1], nonnegative density values,
  /// strictly positive on the interior (full support).
  static MedianBelief numeric(std::vector<std::pair<double, double>> samples) {
    if (samples.size() < 2) throw DomainError("numeric belief needs at least 2 samples");
    for (std::size_t i = 0; i < samples.size(); ++i) {
      require_unit(samples[i].first, "sample abscissa");
      if (samples[i].second < 0.0) throw DomainError("density samples must be nonnegative");
      if (i > 0 && !(samples[i].first > samples[i - 1].first))
        throw DomainError("sample abscissae must be strictly increasing");
    }
    if (std::abs(samples.front().first) > 1e-12 || std::abs(samples.back().first - 1.0) > 1e-12)
      throw DomainError("numeric samples must span [0,1]");
    samples.front().first = 0.0;
    samples.back().first = 1.0;
    for (std::size_t i = 1; i + 1 < samples.size(); ++i)
      if (samples[i].second < 1e-12)
        throw DomainError("density must be strictly positive on the interior (full support)");

    MedianBelief b(Family::Numeric, 0.0);
    b.samples_ = std::move(samples);
    b.cumulative_.resize(b.samples_.size(), 0.0);
    for (std::size_t i = 1; i < b.samples_.size(); ++i) {
      const double dx = b.samples_[i].first - b.samples_[i - 1].first;
      b.cumulative_[i] = b.cumulative_[i - 1] +
                         0.5 * dx * (b.samples_[i].second + b.samples_[i - 1].second);
    }
    const double total = b.cumulative_.back();
    if (!(total > 0.0)) throw DomainError("density integrates to zero");
    for (double& c : b.cumulative_) c /= total;
    b.norm_ = total;
    return b;
  }

  Family family() const { return family_; }
  double mode() const { return param_; }
  double exponent() const { return param_; }
  const std::vector<std::pair<double, double>>& samples() const { return samples_; }

  /// F(x). Exact closed form for the analytic families; monotone linear
  /// interpolation of the integrated density for the numeric family.
  double cdf(double x) const {
    require_unit(x, "x");
    switch (family_) {
      case Family::Uniform:
        return x;
      case Family::Triangular: {
        const double c = param_;
        if (x <= c) return c > 0.0 ? x * x / c : 1.0 - (1.0 - x) * (1.0 - x);
        return 1.0 - (1.0 - x) * (1.0 - x) / (1.0 - c);
      }
      case Family::Power:
        return std::pow(x, param_);
      case Family::Numeric: {
        const std::size_t i = segment(x);
        const double x0 = samples_[i].first, x1 = samples_[i + 1].first;
        const double w = (x - x0) / (x1 - x0);
        return std::clamp(cumulative_[i] + w * (cumulative_[i + 1] - cumulative_[i]), 0.0, 1.0);
      }
    }
    return 0.0;  // unreachable
  }

  /// f(x); for the numeric family, linear interpolation of the samples
  /// divided by the renormalization constant.
  double density(double x) const {
    require_unit(x, "x");
    switch (family_) {
      case Family::Uniform:
        return 1.0;
      case Family::Triangular: {
        const double c = param_;
        if (x <= c) return c > 0.0 ? 2.0 * x / c : 2.0 * (1.0 - x);
        return 2.0 * (1.0 - x) / (1.0 - c);
      }
      case Family::Power:
        return param_ * std::pow(x, param_ - 1.0);
      case Family::Numeric: {
        const std::size_t i = segment(x);
        const double x0 = samples_[i].first, x1 = samples_[i + 1].first;
        const double w = (x - x0) / (x1 - x0);
        return (samples_[i].second + w * (samples_[i + 1].second - samples_[i].second)) / norm_;
      }
    }
    return 0.0;  // unreachable
  }

private:
  MedianBelief(Family f, double p) : family_(f), param_(p) {}

  std::size_t segment(double x) const {
    // index i with samples_[i].first <= x <= samples_[i+1].first
    auto it = std::upper_bound(samples_.begin(), samples_.end(), x,
                               [](double v, const std::pair<double, double>& s) {
                                 return v < s.first;
                               });
    std::size_t i = static_cast<std::size_t>(it - samples_.begin());
    if (i == 0) return 0;
    if (i >= samples_.size()) return samples_.size() - 2;
    return i - 1;
  }

  Family family_;
  double param_ = 0.0;  // triangular mode or power exponent
  std::vector<std::pair<double, double>> samples_;
  std::vector<double> cumulative_;
  double norm_ = 1.0;
};

/// Scans an evenly spaced interior grid for a point where x*f(x) > F(x),
/// the condition under which the no-commitment counterexample can be built.
/// Returns the first such x, or nullopt if the grid shows none.
inline std::optional<double> counterexample_condition(const MedianBelief& belief,
                                                      std::size_t grid_size) {
  if (grid_size < 3) throw DomainError("grid_size must be >= 3");
  for (std::size_t i = 1; i + 1 < grid_size; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(grid_size - 1);
    if (x * belief.density(x) > belief.cdf(x) + 1e-12) return x;
  }
  return std::nullopt;
}

}  // namespace electoral

#endif  // ELECTORAL_BELIEFS_HPP
