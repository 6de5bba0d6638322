#pragma once
// Shared constants and special functions: unit-ball volumes, best sphere
// packing densities for d <= 3, the packing limit constant on the unit cube,
// zeta, and the explicit pair-sum tail bound used by the energy-vs-packing
// consistency checks.

#include <cmath>
#include <stdexcept>

namespace rieszpack {

constexpr double kPi = 3.14159265358979323846;

// volume of the unit ball in R^alpha, extended to non-integer alpha
inline double beta_alpha(double alpha) {
  if (alpha < 0) throw std::invalid_argument("beta_alpha: alpha must be >= 0");
  return std::pow(kPi, alpha / 2.0) / std::tgamma(1.0 + alpha / 2.0);
}

// largest sphere packing density in R^d (known for d = 1, 2, 3)
inline double sphere_packing_density(int d) {
  switch (d) {
    case 1: return 1.0;
    case 2: return kPi / std::sqrt(12.0);
    case 3: return kPi / std::sqrt(18.0);
    default: throw std::invalid_argument("sphere_packing_density: known only for d in {1,2,3}");
  }
}

// C_inf(d) = 2 (Delta_d / beta_d)^(1/d); packing limit on the unit d-cube
inline double packing_limit_constant(int d) {
  return 2.0 * std::pow(sphere_packing_density(d) / beta_alpha(d), 1.0 / d);
}

// partial sum plus Euler-Maclaurin tail; absolute error well below 1e-12 for s > 1
inline double zeta(double s) {
  if (s <= 1.0) throw std::invalid_argument("zeta: requires s > 1");
  const int cut = 200;
  double sum = 0.0;
  for (int i = cut - 1; i >= 1; --i) sum += std::pow(static_cast<double>(i), -s);
  const double k = static_cast<double>(cut);
  double tail = std::pow(k, 1.0 - s) / (s - 1.0);
  tail += 0.5 * std::pow(k, -s);
  tail += s / 12.0 * std::pow(k, -s - 1.0);
  tail -= s * (s + 1.0) * (s + 2.0) / 720.0 * std::pow(k, -s - 3.0);
  return sum + tail;
}

// explicit form of the eta_s bound from the ball-shell counting argument:
// sum_k 4 d' (2k+3)^(d'-1) k^(-s), finite for s > d'. Expanding the binomial
// turns it into a zeta combination, exact to zeta's own accuracy:
// 4 d' sum_j C(d'-1, j) 2^j 3^(d'-1-j) zeta(s - j).
inline double pair_sum_tail_bound(double s, int dprime) {
  if (!(s > dprime)) throw std::invalid_argument("pair_sum_tail_bound: requires s > d'");
  double sum = 0.0;
  double choose = 1.0;
  for (int j = 0; j <= dprime - 1; ++j) {
    sum += choose * std::pow(2.0, j) * std::pow(3.0, dprime - 1 - j) * zeta(s - j);
    choose = choose * (dprime - 1 - j) / (j + 1);
  }
  return 4.0 * dprime * sum;
}

}  // namespace rieszpack
