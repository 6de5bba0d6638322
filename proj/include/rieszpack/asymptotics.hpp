#pragma once
// N- and s-sweeps of minimal energy and best packing, normalized against the
// limiting laws: E/N^{1+s/d} -> C_{s,d} H_d(A)^{-s/d} (C_{s,1} = 2 zeta(s),
// unknown for d > 1) and delta_N N^{1/d} -> C_{inf,d} H_d(A)^{1/d}, plus the
// fixed-N and constant-level s-th root limits.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rieszpack/cantor.hpp"
#include "rieszpack/constants.hpp"
#include "rieszpack/energy.hpp"
#include "rieszpack/packing.hpp"

namespace rieszpack {

enum class SweepMode { energy, packing };

struct SweepRow {
  long long n = 0;
  double raw = 0.0;
  double normalized = 0.0;
  std::optional<double> theory;
  std::optional<double> rel_gap;
};

struct AsymptoticsTable {
  CompactSet set;
  SweepMode mode = SweepMode::packing;
  double s = 0.0;  // meaningful for energy mode
  double d_used = 0.0;
  std::vector<SweepRow> rows;
};

inline std::optional<double> energy_theory(const CompactSet& set, double s) {
  // C_{s,d} is known only for d = 1
  if (set.intrinsic_dim() == 1.0 && set.hausdorff_measure())
    return 2.0 * zeta(s) * std::pow(*set.hausdorff_measure(), -s);
  return std::nullopt;
}

inline std::optional<double> packing_theory(const CompactSet& set) {
  const double d = set.intrinsic_dim();
  if (set.hausdorff_measure() && (d == 1.0 || d == 2.0 || d == 3.0))
    return packing_limit_constant(static_cast<int>(d)) *
           std::pow(*set.hausdorff_measure(), 1.0 / d);
  return std::nullopt;
}

inline AsymptoticsTable energy_sweep(const CompactSet& set, double s,
                                     const std::vector<long long>& n_list,
                                     const OptimizerOptions& opts = {}) {
  const double d = set.intrinsic_dim();
  if (!(s > d))
    throw std::invalid_argument("energy_sweep: requires s > d (the N^{1+s/d} regime)");
  for (std::size_t i = 0; i + 1 < n_list.size(); ++i)
    if (n_list[i] >= n_list[i + 1])
      throw std::invalid_argument("energy_sweep: N_list must be increasing");
  AsymptoticsTable table{set, SweepMode::energy, s, d, {}};
  const auto theory = energy_theory(set, s);
  for (long long n : n_list) {
    const auto report = minimize_energy(set, static_cast<int>(n), s, opts);
    SweepRow row;
    row.n = n;
    row.raw = report.energy;
    row.normalized = report.energy / std::pow(static_cast<double>(n), 1.0 + s / d);
    row.theory = theory;
    if (theory) row.rel_gap = std::abs(row.normalized - *theory) / *theory;
    table.rows.push_back(row);
  }
  return table;
}

inline AsymptoticsTable packing_sweep(const CompactSet& set, const std::vector<long long>& n_list,
                                      const PackingOptions& opts = {}) {
  for (std::size_t i = 0; i + 1 < n_list.size(); ++i)
    if (n_list[i] >= n_list[i + 1])
      throw std::invalid_argument("packing_sweep: N_list must be increasing");
  const double d = set.intrinsic_dim();
  AsymptoticsTable table{set, SweepMode::packing, 0.0, d, {}};
  const auto theory = packing_theory(set);
  // exact values replace the numerical optimizer on self-similar sets
  std::optional<CantorSolver> solver;
  if (set.kind() == SetKind::self_similar_1d) solver.emplace(set.ifs(), set.depth());
  for (long long n : n_list) {
    SweepRow row;
    row.n = n;
    row.raw = solver ? solver->exact_delta(n).delta.to_double()
                     : best_packing(set, static_cast<int>(n), opts).delta;
    row.normalized = row.raw * std::pow(static_cast<double>(n), 1.0 / d);
    row.theory = theory;
    if (theory) row.rel_gap = std::abs(row.normalized - *theory) / *theory;
    table.rows.push_back(row);
  }
  return table;
}

// two-point Richardson step assuming an O(1/N) correction: v_N = g + c/N
inline double richardson_extrapolate(double v_half, double v_full) {
  return 2.0 * v_full - v_half;
}

// product E_s(A,N)^{1/s} * delta_N(A) -> 1 as s -> infinity at fixed N
inline std::vector<std::pair<double, double>> root_limit_fixed_n(
    const CompactSet& set, int n, const std::vector<double>& s_list,
    const PackingOptions& opts = {}) {
  for (std::size_t i = 0; i + 1 < s_list.size(); ++i)
    if (s_list[i] >= s_list[i + 1])
      throw std::invalid_argument("root_limit_fixed_n: s_list must be increasing");
  for (double s : s_list)
    if (!(s > set.ambient_dim()))
      throw std::invalid_argument("root_limit_fixed_n: all s must exceed d'");
  const double delta = best_packing(set, n, opts).delta;
  std::vector<std::pair<double, double>> out;
  out.reserve(s_list.size());
  for (double s : s_list) {
    const auto report = minimize_energy(set, n, s, opts.optimizer);
    out.emplace_back(s, std::exp(std::log(report.energy) / s) * delta);
  }
  return out;
}

// (C_{s,1})^{1/s} = (2 zeta(s))^{1/s} -> 1 = 1/C_{inf,1}
inline std::vector<std::pair<double, double>> csd_root_limit(const std::vector<double>& s_list) {
  std::vector<std::pair<double, double>> out;
  out.reserve(s_list.size());
  for (double s : s_list) {
    if (!(s > 1.0)) throw std::invalid_argument("csd_root_limit: requires s > 1");
    out.emplace_back(s, std::pow(2.0 * zeta(s), 1.0 / s));
  }
  return out;
}

}  // namespace rieszpack
