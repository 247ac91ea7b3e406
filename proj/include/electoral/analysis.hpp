#ifndef ELECTORAL_ANALYSIS_HPP
#define ELECTORAL_ANALYSIS_HPP

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "electoral/solver.hpp"

namespace electoral {

enum class Regime { CommitmentSmallest, CommitmentLargest, NoCommitment };

inline const char* regime_name(Regime r) {
  switch (r) {
    case Regime::CommitmentSmallest: return "commitment-smallest";
    case Regime::CommitmentLargest: return "commitment-largest";
    case Regime::NoCommitment: return "no-commitment";
  }
  return "";
}

/// One evaluated point of an indirect-expected-policy sweep.
struct SweepRow {
  double t_l = 0.0;
  double t_r = 0.0;
  Regime regime = Regime::NoCommitment;
  double x_l = 0.0;
  double x_r = 0.0;
  double win_prob = 0.0;
  double pi_star = 0.0;
  bool converged = true;
};

/// Equilibrium platforms per regime, with the expected policy evaluated
/// at them: the indirect expected policy as a function of (t_l, t_r).
inline SweepRow indirect_expected_policy(const ElectionModel& model, Regime regime,
                                         const SolverOptions& opts = {}) {
  SweepRow row;
  row.t_l = model.ideals.t_l;
  row.t_r = model.ideals.t_r;
  row.regime = regime;
  PlatformProfile platforms;
  if (regime == Regime::NoCommitment) {
    platforms = no_commitment_equilibrium(model.ideals);
  } else {
    const EquilibriumReport eq = extremal_equilibria(model, opts);
    platforms = regime == Regime::CommitmentSmallest ? eq.smallest : eq.largest;
    row.converged = eq.converged;
  }
  row.x_l = platforms.x_l;
  row.x_r = platforms.x_r;
  row.win_prob = win_probability(model.belief, platforms);
  row.pi_star = expected_policy(model.belief, platforms);
  return row;
}

enum class VaryIdeal { TL, TR };

/// One row per value, varying one ideal policy with the other held at the
/// template's value. Rows are evaluated independently; a non-converged row
/// is flagged and retained.
inline std::vector<SweepRow> sweep_ideal(const ElectionModel& model_template, VaryIdeal vary,
                                         const std::vector<double>& values, Regime regime,
                                         const SolverOptions& opts = {}) {
  std::vector<SweepRow> rows;
  rows.reserve(values.size());
  for (double v : values) {
    require_unit(v, "sweep value");
    const double tl = vary == VaryIdeal::TL ? v : model_template.ideals.t_l;
    const double tr = vary == VaryIdeal::TR ? v : model_template.ideals.t_r;
    ElectionModel m{model_template.utility, model_template.belief, IdealPair(tl, tr)};
    rows.push_back(indirect_expected_policy(m, regime, opts));
  }
  return rows;
}

/// Closed form of the no-commitment indirect expected policy for quadratic
/// utility and the triangular(0.5) belief, as a four-branch piecewise
/// function of the ideal pair.
inline double triangular_pi_star_closed_form(double t_l, double t_r) {
  require_unit(t_l, "t_l");
  require_unit(t_r, "t_r");
  const double mid = 0.5 * (t_l + t_r);
  if (t_l == t_r) return t_r;
  if (t_l > t_r) {
    const double q = 2.0 * (1.0 - mid) * (1.0 - mid);
    return q * t_l + (1.0 - q) * t_r;
  }
  if (t_l <= 1.0 - t_r) {
    const double p = 2.0 * mid * mid;
    return p * t_l + (1.0 - p) * t_r;
  }
  const double q = 2.0 * (1.0 - mid) * (1.0 - mid);
  return (1.0 - q) * t_l + q * t_r;
}

/// d pi*/d t_l = (3 t_l^2 + 2 t_l t_r - t_r^2) / 2 on the branch t_l <= 1 - t_r,
/// with its only positive root at t_l = t_r / 3.
inline double triangular_pi_star_derivative(double t_l, double t_r) {
  require_unit(t_l, "t_l");
  require_unit(t_r, "t_r");
  if (t_l > 1.0 - t_r + 1e-12)
    throw DomainError("derivative formula only valid on the branch t_l <= 1 - t_r");
  return 0.5 * (3.0 * t_l * t_l + 2.0 * t_l * t_r - t_r * t_r);
}

struct RegimeSegment {
  Regime regime = Regime::NoCommitment;
  SweepRow row;
  double dpi_dxl = 0.0;
  double dpi_dxr = 0.0;
  bool on_increasing_segment = false;
};

struct RegimeComparison {
  RegimeSegment commitment_smallest;
  RegimeSegment commitment_largest;
  RegimeSegment no_commitment;
};

namespace detail {

/// Directional derivative of pi in one platform coordinate via central
/// differences at step 1e-5, falling back to one-sided differences when the
/// stencil would leave [0,1] or cross the opponent's platform.
inline double pi_slope(const MedianBelief& belief, double x_l, double x_r, Side side) {
  const double h = 1e-5;
  const double x = side == Side::Left ? x_l : x_r;
  const double opp = side == Side::Left ? x_r : x_l;
  double lo = x - h, hi = x + h;
  if (lo < 0.0) lo = x;
  if (hi > 1.0) hi = x;
  // keep the stencil on one side of the tie point
  if (x < opp && hi >= opp) hi = x;
  if (x > opp && lo <= opp) lo = x;
  if (hi <= lo) return 0.0;
  auto pi = [&](double v) {
    return side == Side::Left ? expected_policy(belief, PlatformProfile(v, x_r))
                              : expected_policy(belief, PlatformProfile(x_l, v));
  };
  return (pi(hi) - pi(lo)) / (hi - lo);
}

inline RegimeSegment classify_segment(const ElectionModel& model, Regime regime,
                                      const SolverOptions& opts) {
  RegimeSegment seg;
  seg.regime = regime;
  seg.row = indirect_expected_policy(model, regime, opts);
  seg.dpi_dxl = pi_slope(model.belief, seg.row.x_l, seg.row.x_r, Side::Left);
  seg.dpi_dxr = pi_slope(model.belief, seg.row.x_l, seg.row.x_r, Side::Right);
  // equilibrium platforms sit on the increasing region of pi: raising x_l
  // toward the opponent raises pi, and so does raising x_r
  seg.on_increasing_segment = seg.dpi_dxl > 0.0 && seg.dpi_dxr > 0.0;
  return seg;
}

}  // namespace detail

/// Tests, for each regime's equilibrium platforms, whether they sit on the
/// increasing region of the expected policy function. Commitment equilibria
/// must; no-commitment platforms may not.
inline RegimeComparison regime_comparison(const ElectionModel& model,
                                          const SolverOptions& opts = {}) {
  RegimeComparison cmp;
  cmp.commitment_smallest = detail::classify_segment(model, Regime::CommitmentSmallest, opts);
  cmp.commitment_largest = detail::classify_segment(model, Regime::CommitmentLargest, opts);
  cmp.no_commitment = detail::classify_segment(model, Regime::NoCommitment, opts);
  return cmp;
}

/// 12-significant-digit formatting shared by all emitted files so that
/// identical inputs produce byte-identical output.
inline std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

inline void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "t_l,t_r,regime,x_l,x_r,win_prob,pi_star,converged\n";
  for (const SweepRow& r : rows) {
    out << format_value(r.t_l) << ',' << format_value(r.t_r) << ',' << regime_name(r.regime)
        << ',' << format_value(r.x_l) << ',' << format_value(r.x_r) << ','
        << format_value(r.win_prob) << ',' << format_value(r.pi_star) << ','
        << (r.converged ? '1' : '0') << '\n';
  }
}

}  // namespace electoral

#endif  // ELECTORAL_ANALYSIS_HPP
