#pragma once
// Best-packing: minimal pairwise distance, maximin configurations via a
// large-s energy schedule plus worst-point polishing, greedy separated-point
// lower bounds, and the volume-based upper-bound certificate
// N0 = floor(gamma / (beta_{d'} rho^alpha)) + 1  =>  delta_N <= 2 rho for N >= N0.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "rieszpack/energy.hpp"
#include "rieszpack/neighborhood.hpp"

namespace rieszpack {

inline double min_pairwise_distance(const std::vector<Point>& points) {
  if (points.size() < 2)
    throw std::invalid_argument("min_pairwise_distance: need at least two points");
  return std::sqrt(detail::min_squared_gap(points));
}

inline double min_pairwise_distance(const Configuration& config) {
  return min_pairwise_distance(config.points);
}

enum class PackingMethod { schedule, polish, exact };

struct PackingReport {
  Configuration config;
  double delta = 0.0;
  PackingMethod method = PackingMethod::schedule;
  bool lower_bound_certified = false;
};

struct PackingOptions {
  OptimizerOptions optimizer;
  std::vector<double> s_schedule = {8.0, 16.0, 32.0, 64.0};
  double improve_tol = 1e-10;
  int max_polish_moves = 0;  // 0 -> 400*N
};

namespace detail {

inline std::pair<int, int> worst_pair(const std::vector<Point>& pts) {
  int bi = 0, bj = 1;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double d2 = squared_dist(pts[i], pts[j]);
      if (d2 < best) {
        best = d2;
        bi = static_cast<int>(i);
        bj = static_cast<int>(j);
      }
    }
  return {bi, bj};
}

inline double nearest_other(const std::vector<Point>& pts, int i, const Point& y) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (static_cast<int>(j) == i) continue;
    best = std::min(best, squared_dist(y, pts[j]));
  }
  return std::sqrt(best);
}

// derivative-free ascent of min_j |y - y_j| for one point: step-halving over
// the ambient axes plus directions away from the one/two nearest neighbors
inline bool pattern_ascent(const CompactSet& set, std::vector<Point>& pts, int i) {
  const int d = set.ambient_dim();
  double f = nearest_other(pts, i, pts[i]);
  const double f0 = f;
  double step = 0.5 * f;
  const double min_step = 1e-12 * std::max(1.0, set.diameter());
  while (step > min_step) {
    // nearest one and two neighbors of the current position
    int n1 = -1, n2 = -1;
    double d1 = std::numeric_limits<double>::infinity(), d2 = d1;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (static_cast<int>(j) == i) continue;
      const double dd = squared_dist(pts[i], pts[j]);
      if (dd < d1) {
        d2 = d1; n2 = n1;
        d1 = dd; n1 = static_cast<int>(j);
      } else if (dd < d2) {
        d2 = dd; n2 = static_cast<int>(j);
      }
    }
    std::vector<Point> dirs;
    for (int k = 0; k < d; ++k) {
      Point e(d, 0.0);
      e[k] = 1.0;
      dirs.push_back(e);
      e[k] = -1.0;
      dirs.push_back(e);
    }
    if (n1 >= 0) {
      Point away(d);
      for (int k = 0; k < d; ++k) away[k] = pts[i][k] - pts[n1][k];
      dirs.push_back(away);
    }
    if (n1 >= 0 && n2 >= 0) {
      Point away(d);
      for (int k = 0; k < d; ++k) away[k] = 2.0 * pts[i][k] - pts[n1][k] - pts[n2][k];
      dirs.push_back(away);
    }
    bool improved = false;
    for (const auto& dir : dirs) {
      const double nrm = norm(dir);
      if (nrm == 0.0) continue;
      Point y(d);
      for (int k = 0; k < d; ++k) y[k] = pts[i][k] + step * dir[k] / nrm;
      y = project(set, y);
      const double fy = nearest_other(pts, i, y);
      if (fy > f) {
        f = fy;
        pts[i] = std::move(y);
        improved = true;
        break;
      }
    }
    if (!improved) step *= 0.5;
  }
  return f > f0;
}

// 1-D manifolds admit an exact finisher: pin interval extremes to the
// boundary, move the worst point into the largest hole, then equalize gaps by
// midpoint sweeps until the spacing is uniform to machine precision.
inline std::vector<double> equalize_line(std::vector<double> xs, double lo, double hi) {
  std::sort(xs.begin(), xs.end());
  const int n = static_cast<int>(xs.size());
  xs.front() = lo;
  xs.back() = hi;
  for (int pass = 0; pass < 200000; ++pass) {
    double moved = 0.0;
    for (int i = 1; i + 1 < n; ++i) {
      const double target = 0.5 * (xs[i - 1] + xs[i + 1]);
      moved = std::max(moved, std::abs(target - xs[i]));
      xs[i] = target;
    }
    if (moved < 1e-16 * (hi - lo)) break;
  }
  return xs;
}

inline std::vector<double> equalize_circle_angles(std::vector<double> th) {
  std::sort(th.begin(), th.end());
  const int n = static_cast<int>(th.size());
  for (int pass = 0; pass < 200000; ++pass) {
    double moved = 0.0;
    for (int i = 1; i < n; ++i) {
      const double prev = th[i - 1];
      const double next = i + 1 < n ? th[i + 1] : th[0] + 2.0 * kPi;
      const double target = 0.5 * (prev + next);
      moved = std::max(moved, std::abs(target - th[i]));
      th[i] = target;
    }
    if (moved < 1e-16) break;
  }
  return th;
}

inline void polish_1d(const CompactSet& set, std::vector<Point>& pts) {
  if (set.kind() == SetKind::interval) {
    std::vector<double> xs;
    xs.reserve(pts.size());
    for (const auto& p : pts) xs.push_back(p[0]);
    xs = equalize_line(std::move(xs), set.a(), set.b());
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = {xs[i]};
  } else {
    std::vector<double> th;
    th.reserve(pts.size());
    for (const auto& p : pts) {
      double t = std::atan2(p[1], p[0]);
      if (t < 0) t += 2.0 * kPi;
      th.push_back(t);
    }
    th = equalize_circle_angles(std::move(th));
    for (std::size_t i = 0; i < pts.size(); ++i)
      pts[i] = {set.radius() * std::cos(th[i]), set.radius() * std::sin(th[i])};
  }
}

inline bool maximin_polish(const CompactSet& set, std::vector<Point>& pts,
                           const PackingOptions& opts) {
  const double before = std::sqrt(min_squared_gap(pts));
  if (set.kind() == SetKind::interval || set.kind() == SetKind::circle) {
    polish_1d(set, pts);
    return std::sqrt(min_squared_gap(pts)) > before + opts.improve_tol;
  }
  const int cap = opts.max_polish_moves > 0 ? opts.max_polish_moves
                                            : 400 * static_cast<int>(pts.size());
  int moves = 0;
  while (moves < cap) {
    const auto [i, j] = worst_pair(pts);
    bool moved = pattern_ascent(set, pts, i);
    ++moves;
    if (!moved && moves < cap) {
      moved = pattern_ascent(set, pts, j);
      ++moves;
    }
    if (!moved) {
      // worst pair locally stuck; a sweep over the remaining points can only
      // raise nearest-neighbor distances, never lower the global minimum
      bool any = false;
      for (std::size_t k = 0; k < pts.size() && moves < cap; ++k, ++moves)
        any = pattern_ascent(set, pts, static_cast<int>(k)) || any;
      if (!any) break;
    }
  }
  return std::sqrt(min_squared_gap(pts)) > before + opts.improve_tol;
}

// discrete maximin exchange over the endpoint lattice of a self-similar set
inline std::vector<Point> maximin_exchange(const std::vector<Point>& sites, std::vector<int> occ,
                                           int max_passes) {
  const int n = static_cast<int>(occ.size());
  const int m = static_cast<int>(sites.size());
  std::vector<Point> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = sites[occ[i]];
  std::vector<char> used(m, 0);
  for (int c : occ) used[c] = 1;
  bool improved = true;
  int passes = 0;
  while (improved && passes++ < max_passes) {
    improved = false;
    for (int i = 0; i < n; ++i) {
      double cur = nearest_other(pts, i, pts[i]);
      int best_site = -1;
      for (int c = 0; c < m; ++c) {
        if (used[c]) continue;
        const double f = nearest_other(pts, i, sites[c]);
        if (f > cur) {
          cur = f;
          best_site = c;
        }
      }
      if (best_site >= 0) {
        used[occ[i]] = 0;
        used[best_site] = 1;
        occ[i] = best_site;
        pts[i] = sites[best_site];
        improved = true;
      }
    }
  }
  return pts;
}

}  // namespace detail

inline PackingReport best_packing(const CompactSet& set, int n, const PackingOptions& opts = {}) {
  if (n < 2) throw std::invalid_argument("best_packing: N must be >= 2");
  const auto& oo = opts.optimizer;

  std::vector<Point> best_pts;
  double best_delta = -1.0;
  bool polished_won = false;

  if (set.kind() == SetKind::self_similar_1d) {
    const auto sites = detail::lattice_sites(set);
    if (n > static_cast<int>(sites.size()))
      throw std::invalid_argument("best_packing: N exceeds depth-m lattice size");
    for (int r = 0; r < oo.restarts; ++r) {
      std::mt19937_64 rng(oo.seed + static_cast<std::uint64_t>(r));
      auto occ = detail::pick_distinct_sites(rng, static_cast<int>(sites.size()), n);
      auto pts = detail::maximin_exchange(sites, std::move(occ), 200);
      const double delta = std::sqrt(detail::min_squared_gap(pts));
      if (delta > best_delta) {
        best_delta = delta;
        best_pts = std::move(pts);
        polished_won = true;
      }
    }
  } else {
    OptimizerOptions stage = oo;
    stage.restarts = 1;
    const int per_stage =
        std::max(50, (oo.max_iterations > 0 ? oo.max_iterations : 200 * n) /
                         static_cast<int>(opts.s_schedule.size()));
    for (int r = 0; r < oo.restarts; ++r) {
      auto pts = detail::sample_distinct(set, oo.seed + static_cast<std::uint64_t>(r), n);
      for (double s : opts.s_schedule)
        pts = detail::descend(set, std::move(pts), s, stage, per_stage).points;
      const double schedule_delta = std::sqrt(detail::min_squared_gap(pts));
      const bool improved = detail::maximin_polish(set, pts, opts);
      const double delta = std::sqrt(detail::min_squared_gap(pts));
      if (delta > best_delta) {
        best_delta = delta;
        best_pts = std::move(pts);
        polished_won = improved && delta > schedule_delta + opts.improve_tol;
      }
    }
  }

  PackingReport report{Configuration{set, std::move(best_pts)}, best_delta,
                       polished_won ? PackingMethod::polish : PackingMethod::schedule, true};
  return report;
}

// Volume counting certificate: if L_{d'}(A(rho)) < gamma rho^{d'-alpha} and
// rho < (gamma/beta_{d'})^{1/alpha}, then delta_N(A) <= 2 rho for every
// N >= N0 with N0 = floor(gamma/(beta_{d'} rho^alpha)) + 1.
inline long long certify_packing_upper_bound(const CompactSet& set, double rho, double gamma,
                                             double alpha) {
  const int dp = set.ambient_dim();
  if (!(rho > 0) || !(gamma > 0) || !(alpha > 0) || alpha > dp)
    throw std::invalid_argument("certify_packing_upper_bound: bad rho/gamma/alpha");
  const double bd = beta_alpha(dp);
  if (!(rho < std::pow(gamma / bd, 1.0 / alpha)))
    throw std::invalid_argument("certify_packing_upper_bound: rho >= (gamma/beta_d')^(1/alpha)");
  const double vol = neighborhood_volume_exact(set, rho);
  if (!(vol < gamma * std::pow(rho, dp - alpha)))
    throw std::invalid_argument(
        "certify_packing_upper_bound: volume hypothesis fails, L(A(rho)) = " +
        std::to_string(vol) + " is not below gamma*rho^(d'-alpha)");
  return static_cast<long long>(std::floor(gamma / (bd * std::pow(rho, alpha)))) + 1;
}

struct GreedyPacking {
  int count = 0;
  Configuration config;
};

// greedy rho-separated fill: certifies delta_k(A) >= rho by exhibiting k points
inline GreedyPacking greedy_lower_bound(const CompactSet& set, double rho, std::uint64_t seed = 0,
                                        int budget = 2000) {
  if (!(rho > 0)) throw std::invalid_argument("greedy_lower_bound: rho must be positive");
  std::mt19937_64 rng(seed);
  std::vector<Point> accepted;
  int fails = 0;
  while (fails < budget) {
    Point x = detail::sample_one(set, rng);
    bool ok = true;
    for (const auto& p : accepted)
      if (dist(p, x) < rho) {
        ok = false;
        break;
      }
    if (ok) {
      accepted.push_back(std::move(x));
      fails = 0;
    } else {
      ++fails;
    }
  }
  const int k = static_cast<int>(accepted.size());
  return GreedyPacking{k, Configuration{set, std::move(accepted)}};
}

}  // namespace rieszpack
