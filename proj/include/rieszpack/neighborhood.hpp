#pragma once
// Lebesgue volume of the rho-neighborhood A(rho) for the catalog sets.
// Closed forms exist for every catalog set (Steiner formula for the cube,
// an exact gap-merging recursion for 1-D self-similar sets); Monte-Carlo
// estimation over the inflated bounding box is available as an independent
// route for the positive-measure sets.

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "rieszpack/constants.hpp"
#include "rieszpack/geometry.hpp"

namespace rieszpack {

struct VolumeEstimate {
  double value = 0.0;
  double std_error = 0.0;
  bool exact = false;
};

namespace detail {

// L1(K(rho)) for the hull-normalized attractor K: once 2*rho closes the
// widest first-level gap the neighborhood is one interval; otherwise recurse
// on the rescaled children and subtract the overlaps across child gaps.
inline double ifs_neighborhood_length(const IfsSpec& ifs, double rho) {
  double gmax = 0.0;
  for (int i = 0; i + 1 < ifs.p; ++i)
    gmax = std::max(gmax, ifs.translations_d[i + 1] - ifs.translations_d[i] - ifs.sigma_d);
  if (2.0 * rho >= gmax) return 1.0 + 2.0 * rho;
  double len = ifs.p * ifs.sigma_d * ifs_neighborhood_length(ifs, rho / ifs.sigma_d);
  for (int i = 0; i + 1 < ifs.p; ++i) {
    const double gap = ifs.translations_d[i + 1] - ifs.translations_d[i] - ifs.sigma_d;
    len -= std::max(0.0, 2.0 * rho - gap);
  }
  return len;
}

}  // namespace detail

inline double neighborhood_volume_exact(const CompactSet& set, double rho) {
  if (!(rho > 0)) throw std::invalid_argument("neighborhood_volume: rho must be positive");
  switch (set.kind()) {
    case SetKind::interval:
      return (set.b() - set.a()) + 2.0 * rho;
    case SetKind::circle: {
      const double r = set.radius();
      if (rho < r) return kPi * ((r + rho) * (r + rho) - (r - rho) * (r - rho));
      return kPi * (r + rho) * (r + rho);
    }
    case SetKind::sphere2: {
      const double r = set.radius();
      const double outer = (r + rho) * (r + rho) * (r + rho);
      const double inner = rho < r ? (r - rho) * (r - rho) * (r - rho) : 0.0;
      return 4.0 * kPi / 3.0 * (outer - inner);
    }
    case SetKind::cube: {
      // Steiner formula: sum_j C(d,j) beta_{d-j} rho^{d-j}
      const int d = set.cube_dim();
      double vol = 0.0;
      double choose = 1.0;
      for (int j = d; j >= 0; --j) {
        vol += choose * beta_alpha(d - j) * std::pow(rho, d - j);
        choose = choose * j / (d - j + 1);
      }
      return vol;
    }
    case SetKind::self_similar_1d:
      return detail::ifs_neighborhood_length(set.ifs(), rho);
  }
  throw std::logic_error("neighborhood_volume_exact: unreachable");
}

inline VolumeEstimate neighborhood_volume_mc(const CompactSet& set, double rho, long samples,
                                             std::uint64_t seed) {
  if (!(rho > 0)) throw std::invalid_argument("neighborhood_volume: rho must be positive");
  if (samples < 1) throw std::invalid_argument("neighborhood_volume: samples must be >= 1");
  if (set.kind() == SetKind::self_similar_1d)
    throw std::invalid_argument("neighborhood_volume_mc: not applicable to measure-zero sets, "
                                "use the exact recursion");
  auto [lo, hi] = set.bounding_box();
  double box_vol = 1.0;
  for (std::size_t k = 0; k < lo.size(); ++k) {
    lo[k] -= rho;
    hi[k] += rho;
    box_vol *= hi[k] - lo[k];
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  long hits = 0;
  Point x(lo.size());
  for (long i = 0; i < samples; ++i) {
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = lo[k] + (hi[k] - lo[k]) * unif(rng);
    if (distance_to_set(set, x) <= rho) ++hits;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  VolumeEstimate est;
  est.value = box_vol * p;
  est.std_error = box_vol * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  est.exact = false;
  return est;
}

// exact closed form when available, Monte-Carlo otherwise
inline VolumeEstimate neighborhood_volume(const CompactSet& set, double rho, long samples = 200000,
                                          std::uint64_t seed = 0) {
  (void)samples;
  (void)seed;
  VolumeEstimate est;
  est.value = neighborhood_volume_exact(set, rho);
  est.exact = true;
  return est;
}

}  // namespace rieszpack
