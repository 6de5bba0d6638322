#pragma once
// Region counting for the asymptotic equidistribution checks: fractions of a
// configuration falling in closed regions versus Hausdorff-measure fractions.
// Regions are closed and boundary points count in, so complements can double
// count boundary points; the deviation metric is max over regions.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "rieszpack/constants.hpp"
#include "rieszpack/energy.hpp"

namespace rieszpack {

struct Region {
  enum class Kind { subinterval, arc, spherical_cap, subcube };

  Kind kind = Kind::subinterval;
  SetKind set_kind = SetKind::interval;
  std::string id;
  double measure_fraction = 0.0;

  double a = 0.0, b = 0.0;          // subinterval
  double theta1 = 0.0, theta2 = 0.0;  // arc, radians in [0, 2pi]
  Point axis;                        // spherical cap: {y : y.axis >= height*R}
  double height = 0.0;               // cap height parameter in [-1, 1]
  Point lo, hi;                      // subcube corners

  static Region subinterval(const CompactSet& set, double a, double b) {
    if (set.kind() != SetKind::interval)
      throw std::invalid_argument("Region::subinterval: set must be an interval");
    if (!(a < b)) throw std::invalid_argument("Region::subinterval: requires a < b");
    Region r;
    r.kind = Kind::subinterval;
    r.set_kind = SetKind::interval;
    r.a = a;
    r.b = b;
    const double lo = std::max(a, set.a()), hi = std::min(b, set.b());
    r.measure_fraction = std::max(0.0, hi - lo) / (set.b() - set.a());
    r.id = "interval[" + std::to_string(a) + "," + std::to_string(b) + "]";
    return r;
  }

  static Region arc(const CompactSet& set, double theta1, double theta2) {
    if (set.kind() != SetKind::circle)
      throw std::invalid_argument("Region::arc: set must be a circle");
    if (!(0.0 <= theta1 && theta1 < theta2 && theta2 <= 2.0 * kPi))
      throw std::invalid_argument("Region::arc: need 0 <= theta1 < theta2 <= 2*pi");
    Region r;
    r.kind = Kind::arc;
    r.set_kind = SetKind::circle;
    r.theta1 = theta1;
    r.theta2 = theta2;
    r.measure_fraction = (theta2 - theta1) / (2.0 * kPi);
    r.id = "arc[" + std::to_string(theta1) + "," + std::to_string(theta2) + "]";
    return r;
  }

  static Region spherical_cap(const CompactSet& set, Point axis, double height) {
    if (set.kind() != SetKind::sphere2)
      throw std::invalid_argument("Region::spherical_cap: set must be a sphere");
    if (!(height >= -1.0 && height <= 1.0))
      throw std::invalid_argument("Region::spherical_cap: height must lie in [-1, 1]");
    const double n = norm(axis);
    if (n == 0.0) throw std::invalid_argument("Region::spherical_cap: zero axis");
    for (double& v : axis) v /= n;
    Region r;
    r.kind = Kind::spherical_cap;
    r.set_kind = SetKind::sphere2;
    r.axis = std::move(axis);
    r.height = height;
    r.measure_fraction = (1.0 - height) / 2.0;
    r.id = "cap[h=" + std::to_string(height) + "]";
    return r;
  }

  static Region subcube(const CompactSet& set, Point lo, Point hi) {
    if (set.kind() != SetKind::cube)
      throw std::invalid_argument("Region::subcube: set must be a cube");
    if (static_cast<int>(lo.size()) != set.ambient_dim() || lo.size() != hi.size())
      throw std::invalid_argument("Region::subcube: corner dimension mismatch");
    Region r;
    r.kind = Kind::subcube;
    r.set_kind = SetKind::cube;
    r.measure_fraction = 1.0;
    for (std::size_t k = 0; k < lo.size(); ++k) {
      const double l = std::max(lo[k], 0.0), h = std::min(hi[k], 1.0);
      r.measure_fraction *= std::max(0.0, h - l);
    }
    r.lo = std::move(lo);
    r.hi = std::move(hi);
    r.id = "subcube";
    return r;
  }

  // closed membership with a small inclusive tolerance so boundary points of
  // optimizer output are counted deterministically
  bool contains(const Point& x, double tol = 1e-9) const {
    switch (kind) {
      case Kind::subinterval:
        return x[0] >= a - tol && x[0] <= b + tol;
      case Kind::arc: {
        double t = std::atan2(x[1], x[0]);
        if (t < 0) t += 2.0 * kPi;
        return t >= theta1 - tol && t <= theta2 + tol;
      }
      case Kind::spherical_cap: {
        double dot = 0.0;
        for (std::size_t k = 0; k < x.size(); ++k) dot += x[k] * axis[k];
        return dot >= height * norm(x) - tol;
      }
      case Kind::subcube: {
        for (std::size_t k = 0; k < x.size(); ++k)
          if (x[k] < lo[k] - tol || x[k] > hi[k] + tol) return false;
        return true;
      }
    }
    return false;
  }
};

inline double region_fraction(const Configuration& config, const Region& region) {
  if (config.set.kind() != region.set_kind)
    throw std::invalid_argument("region_fraction: region does not belong to the config's set");
  if (config.points.empty()) throw std::invalid_argument("region_fraction: empty configuration");
  long count = 0;
  for (const auto& p : config.points)
    if (region.contains(p)) ++count;
  return static_cast<double>(count) / static_cast<double>(config.points.size());
}

struct DeviationRow {
  long long n = 0;
  double max_deviation = 0.0;
};

inline std::vector<DeviationRow> equidist_deviation(const std::vector<Configuration>& configs,
                                                    const std::vector<Region>& regions) {
  if (regions.empty()) throw std::invalid_argument("equidist_deviation: no regions");
  std::vector<DeviationRow> rows;
  rows.reserve(configs.size());
  for (const auto& config : configs) {
    double dev = 0.0;
    for (const auto& region : regions)
      dev = std::max(dev, std::abs(region_fraction(config, region) - region.measure_fraction));
    rows.push_back({config.size(), dev});
  }
  return rows;
}

}  // namespace rieszpack
