#ifndef ELECTORAL_ASSUMPTIONS_HPP
#define ELECTORAL_ASSUMPTIONS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "electoral/contest.hpp"

namespace electoral {

/// Outcome of a sampled certificate: pass with the minimum slack observed,
/// or the first violating tuple. Certificates are necessarily incomplete
/// (finite sampling of a continuum); tuples_checked lets callers scale
/// confidence.
struct CertificateReport {
  bool passed = true;
  std::size_t tuples_checked = 0;
  std::optional<std::vector<double>> witness;
  double margin = std::numeric_limits<double>::infinity();
};

namespace detail {

// strictness slack distinguishing ">" from ">=" at double precision
inline constexpr double kStrictSlack = 1e-12;
inline constexpr double kDenominatorFloor = 1e-14;
inline constexpr std::uint32_t kCertificateSeed = 9103u;

/// Deterministic stratified tuple source: ordered tuples are drawn inside
/// windows of cycling widths so that both spread-out and tightly clustered
/// configurations are exercised. Reproducible for a fixed seed; independent
/// of the utility or belief under test.
class TupleSampler {
public:
  explicit TupleSampler(std::uint32_t seed) : rng_(seed) {}

  /// k strictly increasing values in [0,1].
  std::vector<double> ordered(std::size_t k) {
    static constexpr double widths[] = {1.0, 0.5, 0.25, 0.1};
    const double w = widths[draw_ % 4];
    ++draw_;
    std::uniform_real_distribution<double> origin(0.0, 1.0 - w);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double a = w < 1.0 ? origin(rng_) : 0.0;
    std::vector<double> v(k);
    for (;;) {
      for (double& x : v) x = a + w * unit(rng_);
      std::sort(v.begin(), v.end());
      double gap = 1.0;
      for (std::size_t i = 1; i < k; ++i) gap = std::min(gap, v[i] - v[i - 1]);
      if (gap > 1e-4 * w) return v;
    }
  }

  std::size_t draws() const { return draw_; }

private:
  std::mt19937 rng_;
  std::size_t draw_ = 0;
};

inline double payoff(const UtilitySpec& u, const MedianBelief& f, double t, double a, double b) {
  const double p = win_probability(f, PlatformProfile(a, b));
  return p * u.value(a, t) + (1.0 - p) * u.value(b, t);
}

}  // namespace detail

/// Strict log supermodularity of the payoff difference u(x,t) - u(y,t):
/// for t < t' <= x < x' < y and for y < x < x' <= t < t',
///   [u(x',t')-u(y,t')]/[u(x,t')-u(y,t')] > [u(x',t)-u(y,t)]/[u(x,t)-u(y,t)].
/// Belief-independent; invariant under positive affine transforms of u.
inline CertificateReport check_sls(const UtilitySpec& utility, std::size_t samples,
                                   std::uint32_t seed = detail::kCertificateSeed) {
  if (samples < 100) throw DomainError("samples must be >= 100");
  detail::TupleSampler sampler(seed);
  CertificateReport report;
  for (std::size_t n = 0; n < samples; ++n) {
    std::vector<double> v = sampler.ordered(5);
    double t, tp, x, xp, y;
    if (n % 2 == 0) {  // t < t' <= x < x' < y
      t = v[0];
      tp = v[1];
      x = n % 4 == 2 ? tp : v[2];
      xp = v[3];
      y = v[4];
    } else {  // y < x < x' <= t < t'
      y = v[0];
      x = v[1];
      xp = v[2];
      t = n % 4 == 3 ? xp : v[3];
      tp = v[4];
    }
    ++report.tuples_checked;
    const double num_hi = utility.value(xp, tp) - utility.value(y, tp);
    const double den_hi = utility.value(x, tp) - utility.value(y, tp);
    const double num_lo = utility.value(xp, t) - utility.value(y, t);
    const double den_lo = utility.value(x, t) - utility.value(y, t);
    if (std::abs(den_hi) < detail::kDenominatorFloor ||
        std::abs(den_lo) < detail::kDenominatorFloor)
      continue;  // ratio undefined at double precision; tuple counted, not judged
    const double slack = num_hi / den_hi - num_lo / den_lo;
    report.margin = std::min(report.margin, slack);
    if (!(slack > detail::kStrictSlack)) {
      report.passed = false;
      report.witness = std::vector<double>{t, tp, x, xp, y};
      break;
    }
  }
  return report;
}

/// Strict single crossing of the expected payoff: for t <= x < x' < y < y' <= t',
///   U_t(x',y)  >= U_t(x,y)   =>  U_t(x',y')  > U_t(x,y'),   and
///   U_t'(x',y) >= U_t'(x',y') =>  U_t'(x,y)  > U_t'(x,y').
/// Tuples with a false antecedent count as passes.
inline CertificateReport check_sscp(const UtilitySpec& utility, const MedianBelief& belief,
                                    std::size_t samples,
                                    std::uint32_t seed = detail::kCertificateSeed) {
  if (samples < 100) throw DomainError("samples must be >= 100");
  detail::TupleSampler sampler(seed);
  CertificateReport report;
  auto U = [&](double t, double a, double b) { return detail::payoff(utility, belief, t, a, b); };
  for (std::size_t n = 0; n < samples; ++n) {
    std::vector<double> v = sampler.ordered(6);
    const double t = v[0];
    const double x = n % 4 == 1 ? t : v[1];
    const double xp = v[2];
    const double y = v[3];
    const double tp = v[5];
    const double yp = n % 4 == 3 ? tp : v[4];
    ++report.tuples_checked;
    if (U(t, xp, y) >= U(t, x, y)) {
      const double slack = U(t, xp, yp) - U(t, x, yp);
      report.margin = std::min(report.margin, slack);
      if (!(slack > detail::kStrictSlack)) {
        report.passed = false;
        report.witness = std::vector<double>{t, tp, x, xp, y, yp};
        break;
      }
    }
    if (U(tp, xp, y) >= U(tp, xp, yp)) {
      const double slack = U(tp, x, y) - U(tp, x, yp);
      report.margin = std::min(report.margin, slack);
      if (!(slack > detail::kStrictSlack)) {
        report.passed = false;
        report.witness = std::vector<double>{t, tp, x, xp, y, yp};
        break;
      }
    }
  }
  return report;
}

/// The single-crossing shift implied by SLS: for t_l < t_l' <= x_l < x_l' < x_r,
///   U_{t_l}(x_l',x_r) >= U_{t_l}(x_l,x_r) => U_{t_l'}(x_l',x_r) > U_{t_l'}(x_l,x_r),
/// and the mirror statement for the right candidate.
inline CertificateReport check_sls_implies_shift(const UtilitySpec& utility,
                                                 const MedianBelief& belief, std::size_t samples,
                                                 std::uint32_t seed = detail::kCertificateSeed) {
  if (samples < 100) throw DomainError("samples must be >= 100");
  detail::TupleSampler sampler(seed);
  CertificateReport report;
  auto U = [&](double t, double a, double b) { return detail::payoff(utility, belief, t, a, b); };
  for (std::size_t n = 0; n < samples; ++n) {
    std::vector<double> v = sampler.ordered(5);
    ++report.tuples_checked;
    double slack = std::numeric_limits<double>::infinity();
    bool active = false;
    if (n % 2 == 0) {  // t_l < t_l' <= x_l < x_l' < x_r
      const double tl = v[0], tlp = v[1];
      const double xl = n % 4 == 2 ? tlp : v[2];
      const double xlp = v[3], xr = v[4];
      if (U(tl, xlp, xr) >= U(tl, xl, xr)) {
        active = true;
        slack = U(tlp, xlp, xr) - U(tlp, xl, xr);
      }
    } else {  // x_l < x_r < x_r' <= t_r < t_r'
      const double xl = v[0], xr = v[1], xrp = v[2];
      const double tr = n % 4 == 3 ? xrp : v[3];
      const double trp = v[4];
      if (U(tr, xl, xrp) >= U(tr, xl, xr)) {
        active = true;
        slack = U(trp, xl, xrp) - U(trp, xl, xr);
      }
    }
    if (!active) continue;
    report.margin = std::min(report.margin, slack);
    if (!(slack > detail::kStrictSlack)) {
      report.passed = false;
      report.witness = v;
      break;
    }
  }
  return report;
}

}  // namespace electoral

#endif  // ELECTORAL_ASSUMPTIONS_HPP
