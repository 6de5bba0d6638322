#pragma once
// Minkowski content estimation from neighborhood volumes, the explicit
// packing/energy sandwich inequalities recovered from the counting lemmas,
// and a dimension estimate from the decay rate of the best-packing distance.

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rieszpack/cantor.hpp"
#include "rieszpack/constants.hpp"
#include "rieszpack/neighborhood.hpp"
#include "rieszpack/packing.hpp"

namespace rieszpack {

enum class ContentNormalization { ball_volume, raw };

struct ContentEstimate {
  double alpha = 0.0;
  ContentNormalization normalization = ContentNormalization::ball_volume;
  std::vector<double> rho_values;
  std::vector<double> volumes;
  std::vector<double> normalized;
  double lower_content = 0.0;  // min over the finer half of the grid
  double upper_content = 0.0;  // max over the finer half of the grid
};

inline std::vector<double> geometric_rho_grid(double rho0 = 0.5, double factor = 0.5,
                                              int count = 17) {
  std::vector<double> grid;
  grid.reserve(count);
  double r = rho0;
  for (int i = 0; i < count; ++i, r *= factor) grid.push_back(r);
  return grid;
}

inline ContentEstimate content_estimate(const CompactSet& set, double alpha,
                                        const std::vector<double>& rho_grid,
                                        ContentNormalization normalization =
                                            ContentNormalization::ball_volume) {
  const int dp = set.ambient_dim();
  if (!(alpha > 0.0) || alpha > dp)
    throw std::invalid_argument("content_estimate: alpha must lie in (0, d']");
  if (rho_grid.empty()) throw std::invalid_argument("content_estimate: empty rho grid");
  for (std::size_t i = 0; i + 1 < rho_grid.size(); ++i)
    if (!(rho_grid[i] > rho_grid[i + 1]) || !(rho_grid.back() > 0.0))
      throw std::invalid_argument("content_estimate: rho grid must decrease toward 0");

  ContentEstimate est;
  est.alpha = alpha;
  est.normalization = normalization;
  const double denom_const =
      normalization == ContentNormalization::ball_volume ? beta_alpha(dp - alpha) : 1.0;
  for (double rho : rho_grid) {
    const double v = neighborhood_volume_exact(set, rho);
    est.rho_values.push_back(rho);
    est.volumes.push_back(v);
    est.normalized.push_back(v / (denom_const * std::pow(rho, dp - alpha)));
  }
  // liminf/limsup proxies over the finer (tail) half
  const std::size_t start = est.normalized.size() / 2;
  est.lower_content = est.normalized[start];
  est.upper_content = est.normalized[start];
  for (std::size_t i = start; i < est.normalized.size(); ++i) {
    est.lower_content = std::min(est.lower_content, est.normalized[i]);
    est.upper_content = std::max(est.upper_content, est.normalized[i]);
  }
  return est;
}

struct SandwichCheck {
  std::string name;
  double lhs = 0.0;  // measured side
  double rhs = 0.0;  // bound it must respect
  bool is_lower_bound = false;  // true: require lhs >= rhs, else lhs <= rhs
  double slack = 0.0;           // factor by which the inequality holds (>= 1 passes)
  bool pass = false;
};

struct SandwichReport {
  bool insufficient_data = false;
  double allowance = 1.0;
  std::vector<SandwichCheck> checks;
  bool all_pass() const {
    if (insufficient_data) return false;
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Explicit-constant sandwich: with raw contents M = liminf/limsup of
// L_{d'}(A(r))/r^{d'-alpha} and mu = L_{d'}(B(0,2)),
//   (M_lo/mu)^{1/alpha} <= liminf delta_N N^{1/alpha} <= 2 beta_{d'}^{-1/alpha} M_lo^{1/alpha}
// and the same bracket for limsup with M_hi; on the energy side (s > d'),
//   (1/2) 2^{-s/alpha} g^{-s} <= limsup E/N^{1+s/alpha} <= eta_s g^{-s}
// combined with the packing bracket. Finite-N tail statistics stand in for
// the limits, so each inequality carries a multiplicative allowance (applied
// per s-th root on the energy side); the default 1.10 covers the O(N^{-1/d})
// boundary corrections still present at N <= 128.
inline SandwichReport check_sandwich(const CompactSet& set, double alpha, double s,
                                     const std::vector<std::pair<long long, double>>& packing_seq,
                                     const std::vector<std::pair<long long, double>>& energy_seq,
                                     const ContentEstimate& content, double allowance = 1.10) {
  const int dp = set.ambient_dim();
  SandwichReport report;
  report.allowance = allowance;
  if (packing_seq.empty() || (s > 0 && energy_seq.empty())) {
    report.insufficient_data = true;
    return report;
  }
  // raw contents, recomputed from the stored volumes if necessary
  double m_lo = content.lower_content, m_hi = content.upper_content;
  if (content.normalization == ContentNormalization::ball_volume) {
    const double b = beta_alpha(dp - alpha);
    m_lo *= b;
    m_hi *= b;
  }
  const double mu = beta_alpha(dp) * std::pow(2.0, dp);

  auto tail_minmax = [](const std::vector<double>& xs) {
    const std::size_t start = xs.size() / 2;
    double lo = xs[start], hi = xs[start];
    for (std::size_t i = start; i < xs.size(); ++i) {
      lo = std::min(lo, xs[i]);
      hi = std::max(hi, xs[i]);
    }
    return std::pair<double, double>(lo, hi);
  };

  std::vector<double> pack_norm;
  for (const auto& [n, delta] : packing_seq)
    pack_norm.push_back(delta * std::pow(static_cast<double>(n), 1.0 / alpha));
  const auto [g_lo, g_hi] = tail_minmax(pack_norm);

  auto add_check = [&](const std::string& name, double lhs, double rhs, bool lower) {
    SandwichCheck c;
    c.name = name;
    c.lhs = lhs;
    c.rhs = rhs;
    c.is_lower_bound = lower;
    c.slack = lower ? lhs * allowance / rhs : rhs * allowance / lhs;
    c.pass = c.slack >= 1.0;
    report.checks.push_back(c);
  };

  const double inv_a = 1.0 / alpha;
  add_check("packing_liminf_lower", g_lo, std::pow(m_lo / mu, inv_a), true);
  add_check("packing_liminf_upper", g_lo,
            2.0 * std::pow(beta_alpha(dp), -inv_a) * std::pow(m_lo, inv_a), false);
  add_check("packing_limsup_lower", g_hi, std::pow(m_hi / mu, inv_a), true);
  add_check("packing_limsup_upper", g_hi,
            2.0 * std::pow(beta_alpha(dp), -inv_a) * std::pow(m_hi, inv_a), false);

  if (s > 0) {
    if (!(s > dp))
      throw std::invalid_argument("check_sandwich: energy-side inequalities need s > d'");
    std::vector<double> en_norm;
    for (const auto& [n, e] : energy_seq)
      en_norm.push_back(e / std::pow(static_cast<double>(n), 1.0 + s / alpha));
    const auto [e_lo, e_hi] = tail_minmax(en_norm);
    const double eta = pair_sum_tail_bound(s, dp);
    // explicit constants from the two counting arguments, content-level
    auto lower_const = [&](double m) {
      return 0.5 * std::pow(2.0, -s * inv_a) *
             std::pow(2.0 * std::pow(beta_alpha(dp), -inv_a) * std::pow(m, inv_a), -s);
    };
    auto upper_const = [&](double m) { return eta * std::pow(m / mu, -s * inv_a); };
    // compare s-th roots so the allowance is per-root
    add_check("energy_limsup_lower", std::pow(e_hi, 1.0 / s),
              std::pow(lower_const(m_lo), 1.0 / s), true);
    add_check("energy_limsup_upper", std::pow(e_hi, 1.0 / s),
              std::pow(upper_const(m_lo), 1.0 / s), false);
    add_check("energy_liminf_lower", std::pow(e_lo, 1.0 / s),
              std::pow(lower_const(m_hi), 1.0 / s), true);
    add_check("energy_liminf_upper", std::pow(e_lo, 1.0 / s),
              std::pow(upper_const(m_hi), 1.0 / s), false);
  }
  return report;
}

struct DimensionEstimateOptions {
  std::vector<long long> n_list;  // empty -> per-kind default
  PackingOptions packing;
};

// slopes of log delta_N against log N between consecutive sweep entries;
// alpha_j = -1/slope_j, reported as (min, max) over the finer half
inline std::pair<double, double> minkowski_dimension_estimate(
    const CompactSet& set, DimensionEstimateOptions opts = {}) {
  if (opts.n_list.empty()) {
    switch (set.kind()) {
      case SetKind::sphere2: opts.n_list = {12, 24, 48, 96}; break;
      case SetKind::self_similar_1d: opts.n_list = {10, 20, 40, 80, 160}; break;
      default: opts.n_list = {8, 16, 32, 64, 128}; break;
    }
  }
  if (opts.n_list.size() < 2)
    throw std::invalid_argument("minkowski_dimension_estimate: need at least two N values");
  std::optional<CantorSolver> solver;
  if (set.kind() == SetKind::self_similar_1d) {
    int depth = set.depth();
    while (2.0 * std::pow(static_cast<double>(set.ifs().p), depth) <
           2.0 * static_cast<double>(opts.n_list.back()))
      ++depth;
    solver.emplace(set.ifs(), depth);
  }
  std::vector<double> deltas;
  for (long long n : opts.n_list)
    deltas.push_back(solver ? solver->exact_delta(n).delta.to_double()
                            : best_packing(set, static_cast<int>(n), opts.packing).delta);
  std::vector<double> alphas;
  for (std::size_t i = 0; i + 1 < opts.n_list.size(); ++i) {
    const double slope = (std::log(deltas[i + 1]) - std::log(deltas[i])) /
                         (std::log(static_cast<double>(opts.n_list[i + 1])) -
                          std::log(static_cast<double>(opts.n_list[i])));
    alphas.push_back(-1.0 / slope);
  }
  const std::size_t start = alphas.size() / 2;
  double lo = alphas[start], hi = alphas[start];
  for (std::size_t i = start; i < alphas.size(); ++i) {
    lo = std::min(lo, alphas[i]);
    hi = std::max(hi, alphas[i]);
  }
  return {lo, hi};
}

}  // namespace rieszpack
