#ifndef ELECTORAL_SOLVER_HPP
#define ELECTORAL_SOLVER_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "electoral/contest.hpp"

namespace electoral {

struct BestResponseOptions {
  std::size_t grid_size = 2001;
  double refine_tol = 1e-10;
  double tie_tol = 1e-9;
};

/// Smallest and largest maximizers of the reduced objective, with the
/// optimal value. Both lie in the sandwich interval: in (x, t] if the
/// opponent plays x < t, {t} if x = t, in [t, x) if x > t.
struct BestResponseSet {
  double smallest = 0.0;
  double largest = 0.0;
  double value = 0.0;
};

namespace detail {

/// Golden-section search for a maximum of f on [a,b].
template <typename F>
double golden_maximize(F&& f, double a, double b, double tol) {
  constexpr double invphi = 0.6180339887498949;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace detail

/// Best response of a candidate with ideal policy ideal_t against an
/// opponent at opponent_x. The objective may be multimodal, so the search
/// is a dense grid scan over the closed interval between ideal_t and
/// opponent_x; all grid points within tie_tol of the maximum are bracketed
/// and refined by golden-section search, and the extreme refined maximizers
/// are reported.
inline BestResponseSet best_response(const UtilitySpec& utility, const MedianBelief& belief,
                                     double ideal_t, double opponent_x,
                                     const BestResponseOptions& opts = {}) {
  require_unit(ideal_t, "t");
  require_unit(opponent_x, "opponent_x");
  if (opts.grid_size < 101) throw DomainError("grid_size must be >= 101");

  if (opponent_x == ideal_t) return {ideal_t, ideal_t, 0.0};

  const double lo = std::min(ideal_t, opponent_x);
  const double hi = std::max(ideal_t, opponent_x);
  auto g = [&](double y) { return reduced_objective(utility, belief, ideal_t, y, opponent_x); };

  const std::size_t n = opts.grid_size;
  std::vector<double> vals(n);
  double gmax = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double y = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    vals[i] = g(y);
    gmax = std::max(gmax, vals[i]);
  }

  auto grid_point = [&](std::size_t i) {
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  };

  BestResponseSet result;
  result.smallest = hi;
  result.largest = lo;
  result.value = gmax;
  std::size_t i = 0;
  while (i < n) {
    if (vals[i] < gmax - opts.tie_tol) {
      ++i;
      continue;
    }
    std::size_t j = i;  // contiguous run of near-maximal points
    while (j + 1 < n && vals[j + 1] >= gmax - opts.tie_tol) ++j;
    const double a = grid_point(i == 0 ? 0 : i - 1);
    const double b = grid_point(j + 1 >= n ? n - 1 : j + 1);
    double y = detail::golden_maximize(g, a, b, opts.refine_tol);
    y = std::clamp(y, lo, hi);
    result.smallest = std::min(result.smallest, y);
    result.largest = std::max(result.largest, y);
    result.value = std::max(result.value, g(y));
    i = j + 1;
  }
  return result;
}

inline BestResponseSet best_response(const ElectionModel& model, Side side, double opponent_x,
                                     const BestResponseOptions& opts = {}) {
  return best_response(model.utility, model.belief, model.ideals.ideal(side), opponent_x, opts);
}

struct SolverOptions {
  BestResponseOptions br;
  double fixpoint_tol = 1e-9;
  std::size_t max_iters = 10000;
  // slack when asserting that the Tarski iterates stay monotone
  double monotonicity_tol = 1e-7;
};

/// Coordinatewise smallest and largest Nash equilibria, with convergence
/// diagnostics of the monotone iterations that produced them.
struct EquilibriumReport {
  PlatformProfile smallest;
  PlatformProfile largest;
  std::size_t iterations_smallest = 0;
  std::size_t iterations_largest = 0;
  bool converged = false;
  // set when an iterate had to be clamped to preserve monotonicity
  bool monotonicity_clamped = false;
};

namespace detail {

enum class Direction { Ascending, Descending };

struct IterationResult {
  PlatformProfile profile;
  std::size_t iterations = 0;
  bool converged = false;
  bool clamped = false;
};

/// Iterates the joint best-response map (x_l,x_r) -> (phi_{t_l}(x_r),
/// phi_{t_r}(x_l)) using the smallest (ascending) or largest (descending)
/// selection, starting from the corresponding corner of [t_l,t_r]^2.
/// Monotonicity of the iterates is asserted each step; overshoots beyond
/// the tolerance are clamped and flagged.
inline IterationResult iterate_extremal(const ElectionModel& model, Direction dir,
                                        const SolverOptions& opts) {
  const double start = dir == Direction::Ascending ? model.ideals.t_l : model.ideals.t_r;
  double x_l = start, x_r = start;
  IterationResult out;
  for (std::size_t it = 0; it < opts.max_iters; ++it) {
    const BestResponseSet br_l = best_response(model, Side::Left, x_r, opts.br);
    const BestResponseSet br_r = best_response(model, Side::Right, x_l, opts.br);
    double next_l = dir == Direction::Ascending ? br_l.smallest : br_l.largest;
    double next_r = dir == Direction::Ascending ? br_r.smallest : br_r.largest;
    const double sign = dir == Direction::Ascending ? 1.0 : -1.0;
    if (sign * (next_l - x_l) < -opts.monotonicity_tol) {
      next_l = x_l;
      out.clamped = true;
    }
    if (sign * (next_r - x_r) < -opts.monotonicity_tol) {
      next_r = x_r;
      out.clamped = true;
    }
    const double step = std::max(std::abs(next_l - x_l), std::abs(next_r - x_r));
    x_l = next_l;
    x_r = next_r;
    out.iterations = it + 1;
    if (step < opts.fixpoint_tol) {
      out.converged = true;
      break;
    }
  }
  out.profile = PlatformProfile(x_l, x_r);
  return out;
}

}  // namespace detail

/// Computes the extremal Nash equilibria by monotone iteration of the joint
/// best-response map: the smallest equilibrium is reached from (t_l,t_l)
/// with the smallest best-response selection, the largest from (t_r,t_r)
/// with the largest selection.
inline EquilibriumReport extremal_equilibria(const ElectionModel& model,
                                             const SolverOptions& opts = {}) {
  const auto lo = detail::iterate_extremal(model, detail::Direction::Ascending, opts);
  const auto hi = detail::iterate_extremal(model, detail::Direction::Descending, opts);
  EquilibriumReport report;
  report.smallest = lo.profile;
  report.largest = hi.profile;
  report.iterations_smallest = lo.iterations;
  report.iterations_largest = hi.iterations;
  report.converged = lo.converged && hi.converged;
  report.monotonicity_clamped = lo.clamped || hi.clamped;
  return report;
}

/// Independent oracle for the equilibrium set: scans a resolution^2 grid
/// over [t_l,t_r]^2, marks profiles whose coordinates are mutual approximate
/// best responses, clusters adjacent hits, and refines each cluster by one
/// best-response round. Also surfaces intermediate equilibria that monotone
/// iteration cannot reach. Returned sorted coordinatewise.
inline std::vector<PlatformProfile> enumerate_equilibria(const ElectionModel& model,
                                                         std::size_t resolution, double tol,
                                                         const BestResponseOptions& br_opts = {}) {
  if (resolution < 51) throw DomainError("resolution must be >= 51");
  const double t_l = model.ideals.t_l, t_r = model.ideals.t_r;
  const double step = (t_r - t_l) / static_cast<double>(resolution - 1);
  if (!(tol > 0.0)) tol = 2.0 * step;

  std::vector<double> grid(resolution);
  std::vector<BestResponseSet> br_l(resolution), br_r(resolution);
  for (std::size_t i = 0; i < resolution; ++i) {
    grid[i] = t_l + step * static_cast<double>(i);
    br_l[i] = best_response(model, Side::Left, grid[i], br_opts);   // vs x_r = grid[i]
    br_r[i] = best_response(model, Side::Right, grid[i], br_opts);  // vs x_l = grid[i]
  }

  auto is_hit = [&](std::size_t il, std::size_t ir) {
    const double xl = grid[il], xr = grid[ir];
    return xl >= br_l[ir].smallest - tol && xl <= br_l[ir].largest + tol &&
           xr >= br_r[il].smallest - tol && xr <= br_r[il].largest + tol;
  };

  std::vector<char> hit(resolution * resolution, 0);
  for (std::size_t il = 0; il < resolution; ++il)
    for (std::size_t ir = 0; ir < resolution; ++ir)
      hit[il * resolution + ir] = is_hit(il, ir) ? 1 : 0;

  // flood-fill clustering over the 8-neighborhood
  std::vector<PlatformProfile> found;
  std::vector<char> seen(resolution * resolution, 0);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t il = 0; il < resolution; ++il) {
    for (std::size_t ir = 0; ir < resolution; ++ir) {
      const std::size_t idx = il * resolution + ir;
      if (!hit[idx] || seen[idx]) continue;
      double sum_l = 0.0, sum_r = 0.0;
      std::size_t count = 0;
      stack.assign(1, {il, ir});
      seen[idx] = 1;
      while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        sum_l += grid[a];
        sum_r += grid[b];
        ++count;
        for (int da = -1; da <= 1; ++da) {
          for (int db = -1; db <= 1; ++db) {
            if (da == 0 && db == 0) continue;
            const std::ptrdiff_t na = static_cast<std::ptrdiff_t>(a) + da;
            const std::ptrdiff_t nb = static_cast<std::ptrdiff_t>(b) + db;
            if (na < 0 || nb < 0 || na >= static_cast<std::ptrdiff_t>(resolution) ||
                nb >= static_cast<std::ptrdiff_t>(resolution))
              continue;
            const std::size_t nidx =
                static_cast<std::size_t>(na) * resolution + static_cast<std::size_t>(nb);
            if (hit[nidx] && !seen[nidx]) {
              seen[nidx] = 1;
              stack.push_back({static_cast<std::size_t>(na), static_cast<std::size_t>(nb)});
            }
          }
        }
      }
      // one best-response round from the cluster centroid, each coordinate
      // snapped to the nearest point of the opponent-conditional response set
      double xl = sum_l / static_cast<double>(count);
      double xr = sum_r / static_cast<double>(count);
      const BestResponseSet rl = best_response(model, Side::Left, xr, br_opts);
      const BestResponseSet rr = best_response(model, Side::Right, xl, br_opts);
      xl = std::clamp(xl, rl.smallest, rl.largest);
      xr = std::clamp(xr, rr.smallest, rr.largest);
      found.emplace_back(xl, xr);
    }
  }
  std::sort(found.begin(), found.end(), [](const PlatformProfile& a, const PlatformProfile& b) {
    return a.x_l != b.x_l ? a.x_l < b.x_l : a.x_r < b.x_r;
  });
  return found;
}

/// Without commitment the platforms cannot affect the election and the
/// unique equilibrium is the ideal pair itself.
inline PlatformProfile no_commitment_equilibrium(const IdealPair& ideals) {
  return PlatformProfile(ideals.t_l, ideals.t_r);
}

}  // namespace electoral

#endif  // ELECTORAL_SOLVER_HPP
