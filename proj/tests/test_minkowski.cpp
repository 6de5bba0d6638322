#include <catch2/catch.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "rieszpack/minkowski.hpp"

using namespace rieszpack;

namespace {

// independent oracle for the Cantor neighborhood length: inflate the depth-j
// cells by rho and merge the intervals; exact once sigma^j/6 <= rho
double cantor_union_length(double rho, int depth) {
  const auto set = CompactSet::self_similar_1d(IfsSpec::cantor(), depth);
  const double len = set.cell_length();
  std::vector<std::pair<double, double>> iv;
  for (double lo : set.cells()) iv.emplace_back(lo - rho, lo + len + rho);
  double total = 0.0, right = iv.front().first;
  for (const auto& [a, b] : iv) {
    const double lo = std::max(a, right);
    if (b > lo) total += b - lo;
    right = std::max(right, b);
  }
  return total;
}

}  // namespace

TEST_CASE("closed-form neighborhood volumes") {
  REQUIRE(neighborhood_volume_exact(CompactSet::interval(0.0, 1.0), 0.25) == Approx(1.5));
  REQUIRE(neighborhood_volume_exact(CompactSet::circle(1.0), 0.1) == Approx(0.4 * kPi));
  const double shell = 4.0 * kPi / 3.0 * (std::pow(1.1, 3) - std::pow(0.9, 3));
  REQUIRE(neighborhood_volume_exact(CompactSet::sphere2(1.0), 0.1) == Approx(shell));
  REQUIRE(neighborhood_volume_exact(CompactSet::cube(2), 0.1) ==
          Approx(1.0 + 0.4 + kPi * 0.01));
  REQUIRE(neighborhood_volume_exact(CompactSet::cube(3), 0.1) ==
          Approx(1.0 + 0.6 + 3.0 * kPi * 0.01 + 4.0 * kPi / 3.0 * 0.001));
}

TEST_CASE("Cantor neighborhood length matches interval merging") {
  const auto set = CompactSet::self_similar_1d(IfsSpec::cantor(), 12);
  for (int m = 1; m <= 8; ++m) {
    const double rho = 0.5 * std::pow(3.0, -m);
    REQUIRE(neighborhood_volume_exact(set, rho) ==
            Approx(cantor_union_length(rho, m + 3)).epsilon(1e-12));
  }
  // large rho: a single interval
  REQUIRE(neighborhood_volume_exact(set, 0.5) == Approx(2.0));
}

TEST_CASE("Monte-Carlo volumes agree with closed forms within 3 standard errors") {
  struct Case {
    CompactSet set;
    double rho;
    long samples;
  };
  const Case cases[] = {{CompactSet::interval(0.0, 1.0), 0.25, 200000},
                        {CompactSet::circle(1.0), 0.1, 400000},
                        {CompactSet::sphere2(1.0), 0.1, 1000000},
                        {CompactSet::cube(2), 0.1, 200000}};
  for (const auto& c : cases) {
    const auto est = neighborhood_volume_mc(c.set, c.rho, c.samples, 21);
    const double exact = neighborhood_volume_exact(c.set, c.rho);
    REQUIRE(std::abs(est.value - exact) <= 3.0 * est.std_error);
  }
  REQUIRE_THROWS_AS(
      neighborhood_volume_mc(CompactSet::self_similar_1d(IfsSpec::cantor()), 0.1, 100, 1),
      std::invalid_argument);
}

TEST_CASE("contents converge to the Hausdorff measure on rectifiable sets") {
  const auto grid = geometric_rho_grid(0.25, 0.5, 15);
  struct Case {
    CompactSet set;
    double alpha;
    double h;
  };
  const Case cases[] = {{CompactSet::interval(0.0, 1.0), 1.0, 1.0},
                        {CompactSet::circle(1.0), 1.0, 2.0 * kPi},
                        {CompactSet::sphere2(1.0), 2.0, 4.0 * kPi},
                        {CompactSet::cube(2), 2.0, 1.0}};
  for (const auto& c : cases) {
    const auto est = content_estimate(c.set, c.alpha, grid);
    REQUIRE(est.normalized.back() == Approx(c.h).epsilon(0.02));
    REQUIRE(est.lower_content <= est.upper_content);
    REQUIRE(est.upper_content == Approx(c.h).epsilon(0.02));
  }
}

TEST_CASE("Cantor content oscillates at alpha = lambda") {
  const auto set = CompactSet::self_similar_1d(IfsSpec::cantor(), 12);
  // two interleaved rho sequences expose distinct liminf and limsup
  std::vector<double> grid;
  for (int m = 0; m <= 10; ++m) {
    grid.push_back(0.5 * std::pow(3.0, -m));
    grid.push_back(0.28 * std::pow(3.0, -m));
  }
  std::sort(grid.rbegin(), grid.rend());
  const auto est = content_estimate(set, set.intrinsic_dim(), grid);
  REQUIRE(est.lower_content < est.upper_content);
  REQUIRE(est.upper_content / est.lower_content > 1.01);
}

TEST_CASE("content estimate validates alpha") {
  REQUIRE_THROWS_AS(content_estimate(CompactSet::cube(2), 2.5, geometric_rho_grid()),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(content_estimate(CompactSet::cube(2), 0.0, geometric_rho_grid()),
                    std::invalid_argument);
}

TEST_CASE("sandwich bounds hold with the explicit constants on the interval") {
  const auto set = CompactSet::interval(0.0, 1.0);
  const auto content = content_estimate(set, 1.0, geometric_rho_grid(0.25, 0.5, 13),
                                        ContentNormalization::raw);
  // raw content of the interval is exactly 1 in the limit
  REQUIRE(content.lower_content == Approx(1.0).epsilon(0.01));

  std::vector<std::pair<long long, double>> packing, energy;
  for (long long n : {8, 16, 32, 64}) {
    packing.emplace_back(n, 1.0 / static_cast<double>(n - 1));
    // equally spaced energy at s = 2 as the measured minimum
    double e = 0.0;
    for (long long i = 0; i < n; ++i)
      for (long long j = 0; j < n; ++j)
        if (i != j) e += std::pow(static_cast<double>(n - 1) / std::abs(double(i - j)), 2.0);
    energy.emplace_back(n, e);
  }
  const auto report = check_sandwich(set, 1.0, 2.0, packing, energy, content);
  REQUIRE(!report.insufficient_data);
  for (const auto& check : report.checks) {
    INFO(check.name << " lhs=" << check.lhs << " rhs=" << check.rhs);
    REQUIRE(check.pass);
  }
  // the explicit-constant bracket for the liminf: [1/4, 1]
  REQUIRE(report.checks[0].rhs == Approx(0.25).epsilon(1e-3));
  REQUIRE(report.checks[1].rhs == Approx(1.0).epsilon(1e-3));
}

TEST_CASE("sandwich reports insufficient data on an empty sweep") {
  const auto set = CompactSet::circle(1.0);
  const auto content =
      content_estimate(set, 1.0, geometric_rho_grid(0.25, 0.5, 10), ContentNormalization::raw);
  const auto report = check_sandwich(set, 1.0, 3.0, {}, {}, content);
  REQUIRE(report.insufficient_data);
}

TEST_CASE("circle packing trend falls inside the explicit-constant bracket") {
  const auto set = CompactSet::circle(1.0);
  const auto content =
      content_estimate(set, 1.0, geometric_rho_grid(0.25, 0.5, 13), ContentNormalization::raw);
  // raw content -> 4 pi, so the bracket is [pi, 4 pi]
  REQUIRE(content.upper_content == Approx(4.0 * kPi).epsilon(0.01));
  std::vector<std::pair<long long, double>> packing;
  for (long long n : {8, 16, 32, 64}) packing.emplace_back(n, 2.0 * std::sin(kPi / n));
  const auto report = check_sandwich(set, 1.0, 0.0, packing, {}, content);
  for (const auto& check : report.checks) {
    INFO(check.name);
    REQUIRE(check.pass);
  }
  const double measured = 2.0 * 64.0 * std::sin(kPi / 64.0);
  REQUIRE(measured > kPi);
  REQUIRE(measured < 4.0 * kPi);
}

TEST_CASE("dimension estimates bracket the intrinsic dimension") {
  DimensionEstimateOptions opts;
  opts.packing.optimizer.restarts = 2;
  opts.packing.optimizer.seed = 7;
  opts.n_list = {16, 32, 64, 128};
  const auto [ilo, ihi] = minkowski_dimension_estimate(CompactSet::interval(0.0, 1.0), opts);
  REQUIRE(ilo == Approx(1.0).margin(0.03));
  REQUIRE(ihi == Approx(1.0).margin(0.03));

  const auto [clo, chi] = minkowski_dimension_estimate(
      CompactSet::self_similar_1d(IfsSpec::cantor(), 10), DimensionEstimateOptions{});
  const double lambda = std::log(2.0) / std::log(3.0);
  REQUIRE(clo == Approx(lambda).margin(0.05));
  REQUIRE(chi == Approx(lambda).margin(0.05));
}

TEST_CASE("sphere dimension estimate from packing decay") {
  DimensionEstimateOptions opts;
  opts.packing.optimizer.restarts = 2;
  opts.packing.optimizer.seed = 17;
  const auto [lo, hi] = minkowski_dimension_estimate(CompactSet::sphere2(1.0), opts);
  REQUIRE(lo == Approx(2.0).margin(0.1));
  REQUIRE(hi == Approx(2.0).margin(0.1));
}
