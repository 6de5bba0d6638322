#pragma once
// Riesz s-energy of point configurations, its ambient gradient, and energy
// minimization over a compact set: projected gradient descent with
// backtracking line search and multistart for the continuous catalog sets,
// discrete local exchange over the depth-m endpoint lattice for 1-D
// self-similar sets. Deterministic for a fixed seed.

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "rieszpack/geometry.hpp"

namespace rieszpack {

struct Configuration {
  CompactSet set;
  std::vector<Point> points;

  int size() const { return static_cast<int>(points.size()); }
};

inline void validate_configuration(const Configuration& config, double tol = 1e-9) {
  for (const auto& p : config.points)
    if (distance_to_set(config.set, p) > tol)
      throw std::invalid_argument("configuration: point off the set");
  for (std::size_t i = 0; i < config.points.size(); ++i)
    for (std::size_t j = i + 1; j < config.points.size(); ++j)
      if (squared_dist(config.points[i], config.points[j]) == 0.0)
        throw std::invalid_argument("configuration: coincident points " + std::to_string(i) +
                                    "," + std::to_string(j));
}

struct OptimizerOptions {
  int restarts = 16;
  int max_iterations = 0;  // 0 -> 200*N
  double grad_tol = 1e-9;
  double energy_rel_tol = 1e-13;
  int stall_iterations = 50;
  double min_pair_distance = 1e-14;
  std::uint64_t seed = 0;
};

struct EnergyReport {
  Configuration config;
  double s = 0.0;
  double energy = 0.0;
  int iterations = 0;
  bool converged = false;
  int restarts_used = 0;
};

namespace detail {

// r^(-s) via r2 = r^2; multiply chain for the integer exponents the
// optimizer uses in bulk, pow() otherwise.
inline double inv_pow_r2(double r2, double s) {
  const double si = std::nearbyint(s);
  if (si == s && si >= 1.0 && si <= 512.0) {
    auto n = static_cast<unsigned>(si);
    const double base = 1.0 / r2;
    double acc = 1.0, b = base;
    unsigned half = n >> 1;
    while (half > 0) {
      if (half & 1) acc *= b;
      b *= b;
      half >>= 1;
    }
    if (n & 1) acc *= std::sqrt(base);
    return acc;
  }
  return std::pow(r2, -0.5 * s);
}

}  // namespace detail

inline double riesz_energy(const std::vector<Point>& points, double s) {
  if (s <= 0) throw std::invalid_argument("riesz_energy: s must be positive");
  const std::size_t n = points.size();
  double e = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double r2 = squared_dist(points[i], points[j]);
      if (r2 == 0.0)
        throw std::domain_error("riesz_energy: infinite energy, coincident points " +
                                std::to_string(i) + " and " + std::to_string(j));
      e += 2.0 * detail::inv_pow_r2(r2, s);
    }
  return e;
}

inline double riesz_energy(const Configuration& config, double s) {
  return riesz_energy(config.points, s);
}

// d E_s / d y_i = -2 s sum_{j != i} (y_i - y_j) |y_i - y_j|^(-s-2)
inline std::vector<Point> riesz_gradient(const std::vector<Point>& points, double s) {
  if (s <= 0) throw std::invalid_argument("riesz_gradient: s must be positive");
  const std::size_t n = points.size();
  const std::size_t d = n ? points[0].size() : 0;
  std::vector<Point> grad(n, Point(d, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double r2 = squared_dist(points[i], points[j]);
      if (r2 == 0.0)
        throw std::domain_error("riesz_gradient: infinite energy, coincident points " +
                                std::to_string(i) + " and " + std::to_string(j));
      const double w = 2.0 * s * detail::inv_pow_r2(r2, s + 2.0);
      for (std::size_t k = 0; k < d; ++k) {
        const double diff = points[i][k] - points[j][k];
        grad[i][k] -= w * diff;
        grad[j][k] += w * diff;
      }
    }
  return grad;
}

inline std::vector<Point> riesz_gradient(const Configuration& config, double s) {
  return riesz_gradient(config.points, s);
}

namespace detail {

// ambient gradient with the infeasible component removed: tangential part on
// circle/sphere, active-bound clipping on interval/cube
inline double projected_gradient_norm(const CompactSet& set, const std::vector<Point>& pts,
                                      const std::vector<Point>& grad) {
  double sq = 0.0;
  auto box_component = [](double x, double lo, double hi, double g) {
    if (x <= lo) return std::min(g, 0.0);
    if (x >= hi) return std::max(g, 0.0);
    return g;
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    switch (set.kind()) {
      case SetKind::interval: {
        const double g = box_component(pts[i][0], set.a(), set.b(), grad[i][0]);
        sq += g * g;
        break;
      }
      case SetKind::cube: {
        for (std::size_t k = 0; k < pts[i].size(); ++k) {
          const double g = box_component(pts[i][k], 0.0, 1.0, grad[i][k]);
          sq += g * g;
        }
        break;
      }
      case SetKind::circle:
      case SetKind::sphere2: {
        const double r = norm(pts[i]);
        double dot = 0.0;
        for (std::size_t k = 0; k < pts[i].size(); ++k) dot += grad[i][k] * pts[i][k] / r;
        for (std::size_t k = 0; k < pts[i].size(); ++k) {
          const double g = grad[i][k] - dot * pts[i][k] / r;
          sq += g * g;
        }
        break;
      }
      case SetKind::self_similar_1d:
        // discrete set, handled by the exchange path
        break;
    }
  }
  return std::sqrt(sq);
}

inline double min_squared_gap(const std::vector<Point>& pts) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      m = std::min(m, squared_dist(pts[i], pts[j]));
  return m;
}

inline std::vector<Point> sample_distinct(const CompactSet& set, std::uint64_t seed, int n) {
  auto pts = sample(set, seed, n);
  std::uint64_t bump = 1;
  while (min_squared_gap(pts) == 0.0) pts = sample(set, seed + 7919 * bump++, n);
  return pts;
}

struct DescentResult {
  std::vector<Point> points;
  double energy = 0.0;
  int iterations = 0;
  bool converged = false;
};

inline DescentResult descend(const CompactSet& set, std::vector<Point> pts, double s,
                             const OptimizerOptions& opts, int max_iter) {
  DescentResult res;
  double energy = riesz_energy(pts, s);
  double step = 0.05 * set.diameter();
  int stalled = 0;
  bool converged = false;
  int it = 0;
  const double min_gap2 = opts.min_pair_distance * opts.min_pair_distance;
  std::vector<Point> trial(pts.size());
  for (; it < max_iter; ++it) {
    const auto grad = riesz_gradient(pts, s);
    if (projected_gradient_norm(set, pts, grad) < opts.grad_tol) {
      converged = true;
      break;
    }
    double gmax = 0.0;
    for (const auto& g : grad)
      for (double v : g) gmax = std::max(gmax, std::abs(v));
    if (gmax == 0.0) {
      converged = true;
      break;
    }
    // backtracking: halve until the energy decreases and no pair collapses
    double t = step / gmax;
    bool accepted = false;
    for (int half = 0; half < 60; ++half, t *= 0.5) {
      for (std::size_t i = 0; i < pts.size(); ++i) {
        Point y(pts[i]);
        for (std::size_t k = 0; k < y.size(); ++k) y[k] -= t * grad[i][k];
        trial[i] = project(set, y);
      }
      if (min_squared_gap(trial) < min_gap2) continue;
      const double e2 = riesz_energy(trial, s);
      if (e2 < energy) {
        const double rel = (energy - e2) / std::max(energy, 1e-300);
        pts.swap(trial);
        stalled = rel < opts.energy_rel_tol ? stalled + 1 : 0;
        energy = e2;
        step = std::min(t * gmax * 2.0, 0.5 * set.diameter());
        accepted = true;
        break;
      }
    }
    if (!accepted || stalled >= opts.stall_iterations) {
      converged = true;
      break;
    }
  }
  res.points = std::move(pts);
  res.energy = energy;
  res.iterations = it;
  res.converged = converged;
  return res;
}

// best-improvement exchange over the depth-m endpoint lattice
inline DescentResult exchange_minimize(std::vector<int> occupied,
                                       const std::vector<Point>& sites, double s, int max_passes) {
  const int n = static_cast<int>(occupied.size());
  const int m = static_cast<int>(sites.size());
  std::vector<Point> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = sites[occupied[i]];
  std::vector<char> used(m, 0);
  for (int idx : occupied) used[idx] = 1;
  double energy = riesz_energy(pts, s);
  int passes = 0;
  bool improved = true;
  while (improved && passes < max_passes) {
    improved = false;
    ++passes;
    for (int i = 0; i < n; ++i) {
      // energy contribution of point i against the rest
      auto contribution = [&](const Point& y) {
        double e = 0.0;
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          const double r2 = squared_dist(y, pts[j]);
          if (r2 == 0.0) return std::numeric_limits<double>::infinity();
          e += 2.0 * inv_pow_r2(r2, s);
        }
        return e;
      };
      const double cur = contribution(pts[i]);
      double best = cur;
      int best_site = -1;
      for (int c = 0; c < m; ++c) {
        if (used[c]) continue;
        const double e = contribution(sites[c]);
        if (e < best) { best = e; best_site = c; }
      }
      if (best_site >= 0) {
        used[occupied[i]] = 0;
        used[best_site] = 1;
        energy += best - cur;
        occupied[i] = best_site;
        pts[i] = sites[best_site];
        improved = true;
      }
    }
  }
  DescentResult res;
  res.points = std::move(pts);
  res.energy = riesz_energy(res.points, s);  // recompute: avoid drift from increments
  res.iterations = passes;
  res.converged = passes < max_passes;
  return res;
}

inline std::vector<Point> lattice_sites(const CompactSet& set) {
  std::vector<Point> sites;
  sites.reserve(set.cells().size() * 2);
  const double len = set.cell_length();
  for (double lo : set.cells()) {
    sites.push_back({lo});
    sites.push_back({lo + len});
  }
  return sites;
}

inline std::vector<int> pick_distinct_sites(std::mt19937_64& rng, int m, int n) {
  // Floyd's algorithm keeps the draw O(n) regardless of lattice size
  std::vector<int> chosen;
  std::vector<char> in(m, 0);
  for (int j = m - n; j < m; ++j) {
    std::uniform_int_distribution<int> d(0, j);
    int t = d(rng);
    if (in[t]) t = j;
    in[t] = 1;
    chosen.push_back(t);
  }
  return chosen;
}

}  // namespace detail

inline EnergyReport minimize_energy(const CompactSet& set, int n, double s,
                                    const OptimizerOptions& opts = {}) {
  if (n < 2) throw std::invalid_argument("minimize_energy: N must be >= 2");
  if (s <= 0) throw std::invalid_argument("minimize_energy: s must be positive");
  if (opts.restarts < 1) throw std::invalid_argument("minimize_energy: restarts must be >= 1");
  const int max_iter = opts.max_iterations > 0 ? opts.max_iterations : 200 * n;

  detail::DescentResult best;
  best.energy = std::numeric_limits<double>::infinity();

  if (set.kind() == SetKind::self_similar_1d) {
    const auto sites = detail::lattice_sites(set);
    if (n > static_cast<int>(sites.size()))
      throw std::invalid_argument("minimize_energy: N exceeds depth-m lattice size");
    for (int r = 0; r < opts.restarts; ++r) {
      std::mt19937_64 rng(opts.seed + static_cast<std::uint64_t>(r));
      auto occ = detail::pick_distinct_sites(rng, static_cast<int>(sites.size()), n);
      auto res = detail::exchange_minimize(occ, sites, s, std::max(20, max_iter / 10));
      if (res.energy < best.energy) best = std::move(res);
    }
  } else {
    for (int r = 0; r < opts.restarts; ++r) {
      auto pts = detail::sample_distinct(set, opts.seed + static_cast<std::uint64_t>(r), n);
      auto res = detail::descend(set, std::move(pts), s, opts, max_iter);
      if (res.energy < best.energy) best = std::move(res);
    }
  }
  return EnergyReport{Configuration{set, std::move(best.points)}, s, best.energy,
                      best.iterations, best.converged, opts.restarts};
}

}  // namespace rieszpack
