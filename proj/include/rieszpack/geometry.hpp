#pragma once
// Catalog of compact sets (interval, circle, sphere, cube, 1-D self-similar
// IFS sets) with projection, distance, uniform sampling and IFS cell
// evaluation. Sets are immutable after construction; RNG state is always
// caller-supplied through seeds.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rieszpack/constants.hpp"
#include "rieszpack/rational.hpp"

namespace rieszpack {

using Point = std::vector<double>;

inline double squared_dist(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

inline double dist(const Point& a, const Point& b) { return std::sqrt(squared_dist(a, b)); }

inline double norm(const Point& a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return std::sqrt(s);
}

// p similitudes x -> sigma*x + t_i on [0,1] with a common rational ratio and
// pairwise disjoint child intervals [t_i, t_i+sigma]. Normalized so the
// attractor spans [0,1]: t_min = 0 and t_max = 1-sigma, hence 0 and 1 lie in
// the set and every cell endpoint is a point of the attractor.
struct IfsSpec {
  int p = 0;
  Rational sigma;
  std::vector<Rational> translations;  // ascending
  double sigma_d = 0.0;
  std::vector<double> translations_d;
  Rational gap;       // smallest distance between adjacent child intervals
  double gap_d = 0.0;
  double lambda = 0.0;  // similarity dimension -log_sigma(p)

  IfsSpec(Rational sigma_, std::vector<Rational> ts) : sigma(sigma_), translations(std::move(ts)) {
    p = static_cast<int>(translations.size());
    if (p < 2) throw std::invalid_argument("IfsSpec: need at least 2 similitudes");
    if (!(Rational(0) < sigma && sigma < Rational(1)))
      throw std::invalid_argument("IfsSpec: sigma must lie in (0,1)");
    std::sort(translations.begin(), translations.end());
    if (translations.front() != Rational(0) || translations.back() != Rational(1) - sigma)
      throw std::invalid_argument(
          "IfsSpec: expects hull-normalized maps (t_min = 0, t_max = 1 - sigma)");
    bool have_gap = false;
    for (int i = 0; i + 1 < p; ++i) {
      const Rational g = translations[i + 1] - (translations[i] + sigma);
      if (!(Rational(0) < g))
        throw std::invalid_argument("IfsSpec: child intervals must be disjoint with positive gaps");
      if (!have_gap || g < gap) { gap = g; have_gap = true; }
    }
    sigma_d = sigma.to_double();
    translations_d.reserve(p);
    for (const auto& t : translations) translations_d.push_back(t.to_double());
    gap_d = gap.to_double();
    lambda = -std::log(static_cast<double>(p)) / std::log(sigma_d);
  }

  static IfsSpec cantor() {
    return IfsSpec(Rational(1, 3), {Rational(0), Rational(2, 3)});
  }
};

// Left endpoint of the depth-m cell F_{i1..im}([0,1]).
inline Rational ifs_evaluate_exact(const IfsSpec& ifs, const std::vector<int>& address) {
  Rational x(0);
  for (auto it = address.rbegin(); it != address.rend(); ++it) {
    if (*it < 0 || *it >= ifs.p) throw std::out_of_range("ifs_evaluate: symbol out of range");
    x = ifs.translations[*it] + ifs.sigma * x;
  }
  return x;
}

inline double ifs_evaluate(const IfsSpec& ifs, const std::vector<int>& address) {
  return ifs_evaluate_exact(ifs, address).to_double();
}

enum class SetKind { interval, circle, sphere2, cube, self_similar_1d };

inline std::string set_kind_name(SetKind k) {
  switch (k) {
    case SetKind::interval: return "interval";
    case SetKind::circle: return "circle";
    case SetKind::sphere2: return "sphere2";
    case SetKind::cube: return "cube";
    case SetKind::self_similar_1d: return "selfsimilar1d";
  }
  return "?";
}

class CompactSet {
 public:
  static CompactSet interval(double a, double b) {
    if (!(a < b)) throw std::invalid_argument("interval: requires a < b");
    CompactSet s(SetKind::interval, 1, 1.0);
    s.a_ = a;
    s.b_ = b;
    s.measure_ = b - a;
    return s;
  }
  static CompactSet circle(double radius) {
    if (!(radius > 0)) throw std::invalid_argument("circle: radius must be positive");
    CompactSet s(SetKind::circle, 2, 1.0);
    s.radius_ = radius;
    s.measure_ = 2.0 * kPi * radius;
    return s;
  }
  static CompactSet sphere2(double radius) {
    if (!(radius > 0)) throw std::invalid_argument("sphere2: radius must be positive");
    CompactSet s(SetKind::sphere2, 3, 2.0);
    s.radius_ = radius;
    s.measure_ = 4.0 * kPi * radius * radius;
    return s;
  }
  static CompactSet cube(int dim) {
    if (dim < 1) throw std::invalid_argument("cube: dimension must be >= 1");
    CompactSet s(SetKind::cube, dim, static_cast<double>(dim));
    s.measure_ = 1.0;
    return s;
  }
  static CompactSet self_similar_1d(IfsSpec ifs, int depth = 12) {
    if (depth < 1) throw std::invalid_argument("self_similar_1d: depth must be >= 1");
    CompactSet s(SetKind::self_similar_1d, 1, ifs.lambda);
    s.ifs_ = std::move(ifs);
    s.depth_ = depth;
    s.build_cells();
    return s;
  }

  SetKind kind() const { return kind_; }
  int ambient_dim() const { return ambient_dim_; }
  double intrinsic_dim() const { return intrinsic_dim_; }
  std::optional<double> hausdorff_measure() const { return measure_; }

  double a() const { return a_; }
  double b() const { return b_; }
  double radius() const { return radius_; }
  int cube_dim() const { return ambient_dim_; }
  const IfsSpec& ifs() const {
    if (!ifs_) throw std::logic_error("not a self-similar set");
    return *ifs_;
  }
  int depth() const { return depth_; }
  // sorted left endpoints of the depth-m cells, each of length cell_length()
  const std::vector<double>& cells() const { return cells_; }
  double cell_length() const { return cell_len_; }

  std::pair<Point, Point> bounding_box() const {
    switch (kind_) {
      case SetKind::interval: return {{a_}, {b_}};
      case SetKind::circle: return {{-radius_, -radius_}, {radius_, radius_}};
      case SetKind::sphere2:
        return {{-radius_, -radius_, -radius_}, {radius_, radius_, radius_}};
      case SetKind::cube: {
        Point lo(ambient_dim_, 0.0), hi(ambient_dim_, 1.0);
        return {lo, hi};
      }
      case SetKind::self_similar_1d: return {{0.0}, {1.0}};
    }
    throw std::logic_error("bounding_box: unreachable");
  }

  double diameter() const {
    switch (kind_) {
      case SetKind::interval: return b_ - a_;
      case SetKind::circle:
      case SetKind::sphere2: return 2.0 * radius_;
      case SetKind::cube: return std::sqrt(static_cast<double>(ambient_dim_));
      case SetKind::self_similar_1d: return 1.0;
    }
    throw std::logic_error("diameter: unreachable");
  }

 private:
  CompactSet(SetKind k, int ambient, double intrinsic)
      : kind_(k), ambient_dim_(ambient), intrinsic_dim_(intrinsic) {}

  void build_cells() {
    cells_ = {0.0};
    for (int level = 0; level < depth_; ++level) {
      std::vector<double> next;
      next.reserve(cells_.size() * ifs_->p);
      for (double t : ifs_->translations_d)
        for (double c : cells_) next.push_back(t + ifs_->sigma_d * c);
      cells_ = std::move(next);
    }
    std::sort(cells_.begin(), cells_.end());
    cell_len_ = std::pow(ifs_->sigma_d, depth_);
  }

  SetKind kind_;
  int ambient_dim_;
  double intrinsic_dim_;
  std::optional<double> measure_;
  double a_ = 0.0, b_ = 0.0, radius_ = 0.0;
  std::optional<IfsSpec> ifs_;
  int depth_ = 0;
  std::vector<double> cells_;
  double cell_len_ = 0.0;
};

namespace detail {

inline void check_dim(const CompactSet& set, const Point& x) {
  if (static_cast<int>(x.size()) != set.ambient_dim())
    throw std::invalid_argument("point dimension does not match set ambient dimension");
}

// nearest depth-m cell; ties (up to rounding) resolve toward the smaller
// coordinate
inline std::size_t nearest_cell(const CompactSet& set, double x) {
  const auto& cells = set.cells();
  const double len = set.cell_length();
  auto it = std::lower_bound(cells.begin(), cells.end(), x);
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  auto consider = [&](std::size_t i) {
    const double lo = cells[i], hi = cells[i] + len;
    const double d = x < lo ? lo - x : (x > hi ? x - hi : 0.0);
    if (d < best_d - 1e-12) { best_d = d; best = i; }
  };
  if (it != cells.begin()) consider(static_cast<std::size_t>(it - cells.begin()) - 1);
  if (it != cells.end()) consider(static_cast<std::size_t>(it - cells.begin()));
  return best;
}

}  // namespace detail

inline Point project(const CompactSet& set, const Point& x) {
  detail::check_dim(set, x);
  switch (set.kind()) {
    case SetKind::interval:
      return {std::clamp(x[0], set.a(), set.b())};
    case SetKind::circle: {
      const double r = std::hypot(x[0], x[1]);
      if (r == 0.0) return {set.radius(), 0.0};
      return {x[0] * set.radius() / r, x[1] * set.radius() / r};
    }
    case SetKind::sphere2: {
      const double r = norm(x);
      if (r == 0.0) return {0.0, 0.0, set.radius()};
      Point y(3);
      for (int i = 0; i < 3; ++i) y[i] = x[i] * set.radius() / r;
      return y;
    }
    case SetKind::cube: {
      Point y(x);
      for (double& v : y) v = std::clamp(v, 0.0, 1.0);
      return y;
    }
    case SetKind::self_similar_1d: {
      const std::size_t i = detail::nearest_cell(set, x[0]);
      const double lo = set.cells()[i];
      return {std::clamp(x[0], lo, lo + set.cell_length())};
    }
  }
  throw std::logic_error("project: unreachable");
}

inline double distance_to_set(const CompactSet& set, const Point& x) {
  detail::check_dim(set, x);
  switch (set.kind()) {
    case SetKind::interval:
      return std::max({set.a() - x[0], x[0] - set.b(), 0.0});
    case SetKind::circle:
      return std::abs(std::hypot(x[0], x[1]) - set.radius());
    case SetKind::sphere2:
      return std::abs(norm(x) - set.radius());
    case SetKind::cube: {
      double s = 0.0;
      for (double v : x) {
        const double d = std::max({-v, v - 1.0, 0.0});
        s += d * d;
      }
      return std::sqrt(s);
    }
    case SetKind::self_similar_1d: {
      const std::size_t i = detail::nearest_cell(set, x[0]);
      const double lo = set.cells()[i], hi = lo + set.cell_length();
      return std::max({lo - x[0], x[0] - hi, 0.0});
    }
  }
  throw std::logic_error("distance_to_set: unreachable");
}

namespace detail {

inline Point sample_one(const CompactSet& set, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  switch (set.kind()) {
    case SetKind::interval:
      return {set.a() + (set.b() - set.a()) * unif(rng)};
    case SetKind::circle: {
      const double th = 2.0 * kPi * unif(rng);
      return {set.radius() * std::cos(th), set.radius() * std::sin(th)};
    }
    case SetKind::sphere2: {
      // normalized ambient Gaussian triple; redraw the (measure-zero) origin
      std::normal_distribution<double> gauss(0.0, 1.0);
      Point y(3);
      double r = 0.0;
      do {
        for (int i = 0; i < 3; ++i) y[i] = gauss(rng);
        r = norm(y);
      } while (r == 0.0);
      for (int i = 0; i < 3; ++i) y[i] *= set.radius() / r;
      return y;
    }
    case SetKind::cube: {
      Point y(set.ambient_dim());
      for (double& v : y) v = unif(rng);
      return y;
    }
    case SetKind::self_similar_1d: {
      // uniform address of depth m = natural self-similar measure on cells
      const auto& ifs = set.ifs();
      std::uniform_int_distribution<int> digit(0, ifs.p - 1);
      double x = 0.0;
      for (int j = 0; j < set.depth(); ++j) x = ifs.translations_d[digit(rng)] + ifs.sigma_d * x;
      return {x};
    }
  }
  throw std::logic_error("sample_one: unreachable");
}

}  // namespace detail

inline std::vector<Point> sample(const CompactSet& set, std::uint64_t seed, int count) {
  if (count < 1) throw std::invalid_argument("sample: count must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Point> pts;
  pts.reserve(count);
  for (int n = 0; n < count; ++n) pts.push_back(detail::sample_one(set, rng));
  return pts;
}

}  // namespace rieszpack
