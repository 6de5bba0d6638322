#pragma once
// Exact best-packing on 1-D self-similar sets. Depth-m cell endpoints form an
// integer lattice after clearing denominators, so the maximin value over the
// truncation is computed exactly: feasibility of a separation g is a greedy
// left-to-right count, monotone in g, and an integer bisection yields the
// largest achievable separation together with a witness whose minimal gap
// equals it exactly. Results are memoized per N and verified stable when the
// depth increases by 2.

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "rieszpack/geometry.hpp"
#include "rieszpack/packing.hpp"
#include "rieszpack/rational.hpp"

namespace rieszpack {

struct ExactPacking {
  IfsSpec ifs;
  long long n = 0;
  Rational delta;
  std::vector<Rational> witness;
  int depth_used = 0;
};

struct OscillationRow {
  int m = 0;
  long long n = 0;
  Rational delta;
  double limit_normalized = 0.0;  // delta * (k p^m)^{1/lambda} resp. ((k-1) p^m)^{1/lambda}
  double raw_normalized = 0.0;    // delta * N^{1/lambda}
};

struct OscillationReport {
  IfsSpec ifs;
  long long k = 0;
  std::vector<int> m_range;
  std::vector<OscillationRow> along_kpm;
  std::vector<OscillationRow> along_cm;
  double ratio = 0.0;         // empirical ratio of the two subsequence limits
  double ratio_theory = 0.0;  // (k/(k-1))^{1/lambda}
};

namespace detail {

struct IntLattice {
  std::vector<std::int64_t> sites;  // sorted, distinct
  std::int64_t scale = 1;           // site/scale is the exact coordinate
};

inline std::int64_t ipow_checked(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline IntLattice endpoint_lattice(const IfsSpec& ifs, int depth) {
  std::int64_t lcm_den = 1;
  for (const auto& t : ifs.translations) lcm_den = std::lcm(lcm_den, t.den);
  const std::int64_t sn = ifs.sigma.num, sd = ifs.sigma.den;
  IntLattice lat;
  lat.scale = checked_mul(lcm_den, ipow_checked(sd, depth));
  const double count = 2.0 * std::pow(static_cast<double>(ifs.p), depth);
  if (count > 8e6) throw std::invalid_argument("endpoint_lattice: depth too large");
  lat.sites.reserve(static_cast<std::size_t>(count));
  // contribution of digit i at level l is t_i * sigma^l * scale
  std::vector<std::vector<std::int64_t>> contrib(depth, std::vector<std::int64_t>(ifs.p));
  for (int l = 0; l < depth; ++l)
    for (int i = 0; i < ifs.p; ++i)
      contrib[l][i] = checked_mul(checked_mul(ifs.translations[i].num, lcm_den / ifs.translations[i].den),
                                  checked_mul(ipow_checked(sn, l), ipow_checked(sd, depth - l)));
  const std::int64_t cell_len = checked_mul(lcm_den, ipow_checked(sn, depth));
  // depth-first in ascending translation order emits sites already sorted
  std::vector<int> digit(depth, 0);
  std::vector<std::int64_t> acc(depth + 1, 0);
  int l = 0;
  while (true) {
    if (l == depth) {
      lat.sites.push_back(acc[depth]);
      lat.sites.push_back(acc[depth] + cell_len);
      --l;
      while (l >= 0 && digit[l] == ifs.p - 1) {
        digit[l] = 0;
        --l;
      }
      if (l < 0) break;
      ++digit[l];
    }
    acc[l + 1] = acc[l] + contrib[l][digit[l]];
    ++l;
  }
  return lat;
}

// greedy left-to-right count of sites with pairwise separation >= g
inline long long separated_count(const std::vector<std::int64_t>& sites, std::int64_t g,
                                 long long stop_at) {
  long long count = 0;
  std::int64_t last = 0;
  for (std::int64_t x : sites) {
    if (count == 0 || x - last >= g) {
      last = x;
      if (++count >= stop_at) return count;
    }
  }
  return count;
}

inline std::int64_t maximin_on_lattice(const std::vector<std::int64_t>& sites, long long n) {
  // largest integer g with count(g) >= n; count is nonincreasing in g
  std::int64_t lo = 1, hi = sites.back() - sites.front() + 1;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (separated_count(sites, mid, n) >= n)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

inline std::vector<std::int64_t> maximin_witness(const std::vector<std::int64_t>& sites,
                                                 std::int64_t g, long long n) {
  std::vector<std::int64_t> w;
  w.reserve(n);
  for (std::int64_t x : sites) {
    if (w.empty() || x - w.back() >= g) {
      w.push_back(x);
      if (static_cast<long long>(w.size()) == n) break;
    }
  }
  return w;
}

}  // namespace detail

class CantorSolver {
 public:
  explicit CantorSolver(IfsSpec ifs, int depth = 12) : ifs_(std::move(ifs)), depth_(depth) {
    if (depth_ < 1) throw std::invalid_argument("CantorSolver: depth must be >= 1");
  }

  const IfsSpec& ifs() const { return ifs_; }
  int depth() const { return depth_; }

  // exact delta_N over the depth-m endpoint truncation, stability-checked at
  // depth+2; memoized on N (single-threaded use)
  const ExactPacking& exact_delta(long long n) {
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
    if (n < 2) throw std::invalid_argument("exact_delta: N must be >= 2");
    const double capacity = 2.0 * std::pow(static_cast<double>(ifs_.p), depth_);
    if (static_cast<double>(n) > capacity)
      throw std::invalid_argument("exact_delta: N exceeds 2 p^depth, increase depth");
    ensure_lattices();
    const std::int64_t g = detail::maximin_on_lattice(lattice_.sites, n);
    const std::int64_t g_hi = detail::maximin_on_lattice(lattice_hi_.sites, n);
    const Rational delta(g, lattice_.scale);
    const Rational delta_hi(g_hi, lattice_hi_.scale);
    if (delta != delta_hi)
      throw std::runtime_error("exact_delta: insufficient depth, value changed from " +
                               delta.str() + " to " + delta_hi.str() +
                               " when the depth increased by 2");
    ExactPacking result{ifs_, n, delta, {}, depth_};
    for (std::int64_t x : detail::maximin_witness(lattice_.sites, g, n))
      result.witness.push_back(Rational(x, lattice_.scale));
    return memo_.emplace(n, std::move(result)).first->second;
  }

 private:
  void ensure_lattices() {
    if (!lattice_.sites.empty()) return;
    lattice_ = detail::endpoint_lattice(ifs_, depth_);
    lattice_hi_ = detail::endpoint_lattice(ifs_, depth_ + 2);
  }

  IfsSpec ifs_;
  int depth_;
  detail::IntLattice lattice_, lattice_hi_;
  std::map<long long, ExactPacking> memo_;
};

inline ExactPacking exact_delta(const IfsSpec& ifs, long long n, int depth = 12) {
  CantorSolver solver(ifs, depth);
  return solver.exact_delta(n);
}

inline PackingReport exact_packing_report(const ExactPacking& exact) {
  std::vector<Point> pts;
  pts.reserve(exact.witness.size());
  for (const auto& w : exact.witness) pts.push_back({w.to_double()});
  return PackingReport{
      Configuration{CompactSet::self_similar_1d(exact.ifs, exact.depth_used), std::move(pts)},
      exact.delta.to_double(), PackingMethod::exact, true};
}

// Subsequence oscillation along N = k p^m and c_m = (k-1) p^m + 1: both
// deltas equal sigma^m delta_k exactly, yet the normalized sequences
// delta_N N^{1/lambda} have distinct subsequence limits with ratio
// (k/(k-1))^{1/lambda}.
inline OscillationReport subsequence_oscillation(const IfsSpec& ifs, long long k, int m_max,
                                                 int base_depth = 0) {
  if (k < 2) throw std::invalid_argument("subsequence_oscillation: k must be >= 2");
  if (m_max < 1) throw std::invalid_argument("subsequence_oscillation: m_max must be >= 1");

  // depth for the base problem: capacity margin of 4k endpoints
  int dk = 1;
  while (2.0 * std::pow(static_cast<double>(ifs.p), dk) < 4.0 * static_cast<double>(k)) ++dk;
  dk = std::max(dk, 4);

  CantorSolver base(ifs, dk);
  const Rational delta_k = base.exact_delta(k).delta;
  if (!(delta_k < ifs.gap)) {
    long long k2 = k + 1;
    while (!(exact_delta(ifs, k2, dk + 2).delta < ifs.gap)) ++k2;
    throw std::invalid_argument("subsequence_oscillation: hypothesis delta_k < h fails (delta_" +
                                std::to_string(k) + " = " + delta_k.str() + ", h = " +
                                ifs.gap.str() + "); smallest valid k is " + std::to_string(k2));
  }

  OscillationReport report{ifs, k, {}, {}, {}, 0.0, 0.0};
  const double inv_lambda = 1.0 / ifs.lambda;
  for (int m = 1; m <= m_max; ++m) {
    const long long pm = static_cast<long long>(std::llround(std::pow(ifs.p, m)));
    const long long n_full = k * pm;
    const long long n_crit = (k - 1) * pm + 1;
    const int depth = std::max(m + dk, base_depth);
    CantorSolver solver(ifs, depth);
    const Rational d_full = solver.exact_delta(n_full).delta;
    const Rational d_crit = solver.exact_delta(n_crit).delta;
    const Rational expected = pow(ifs.sigma, m) * delta_k;
    if (d_full != expected || d_crit != expected)
      throw std::runtime_error("subsequence_oscillation: exact identity failed at m = " +
                               std::to_string(m));
    report.m_range.push_back(m);
    report.along_kpm.push_back(
        {m, n_full, d_full,
         d_full.to_double() * std::pow(static_cast<double>(n_full), inv_lambda),
         d_full.to_double() * std::pow(static_cast<double>(n_full), inv_lambda)});
    report.along_cm.push_back(
        {m, n_crit, d_crit,
         d_crit.to_double() * std::pow(static_cast<double>(n_crit - 1), inv_lambda),
         d_crit.to_double() * std::pow(static_cast<double>(n_crit), inv_lambda)});
  }
  report.ratio = report.along_kpm.back().limit_normalized / report.along_cm.back().limit_normalized;
  report.ratio_theory =
      std::pow(static_cast<double>(k) / static_cast<double>(k - 1), inv_lambda);
  return report;
}

}  // namespace rieszpack
