#include <catch2/catch.hpp>

#include <cmath>

#include "rieszpack/asymptotics.hpp"

using namespace rieszpack;

TEST_CASE("zeta against closed forms") {
  REQUIRE(zeta(2.0) == Approx(kPi * kPi / 6.0).margin(1e-12));
  REQUIRE(zeta(4.0) == Approx(std::pow(kPi, 4) / 90.0).margin(1e-12));
  REQUIRE(zeta(50.0) == Approx(1.0 + std::pow(2.0, -50.0)).margin(1e-15));
  REQUIRE_THROWS_AS(zeta(1.0), std::invalid_argument);
}

TEST_CASE("packing constants") {
  REQUIRE(packing_limit_constant(1) == Approx(1.0));
  REQUIRE(packing_limit_constant(2) == Approx(2.0 * std::pow(12.0, -0.25)));
  REQUIRE(packing_limit_constant(3) == Approx(std::pow(2.0, 1.0 / 6.0)));
  REQUIRE(beta_alpha(1) == Approx(2.0));
  REQUIRE(beta_alpha(2) == Approx(kPi));
  REQUIRE(beta_alpha(3) == Approx(4.0 * kPi / 3.0));
  // the sphere packing limit equals (8 pi / sqrt(3))^(1/2)
  REQUIRE(packing_limit_constant(2) * std::sqrt(4.0 * kPi) ==
          Approx(std::sqrt(8.0 * kPi / std::sqrt(3.0))));
}

TEST_CASE("pair-sum tail bound") {
  REQUIRE(pair_sum_tail_bound(2.0, 1) == Approx(4.0 * zeta(2.0)).epsilon(1e-9));
  REQUIRE(pair_sum_tail_bound(8.0, 3) > 0.0);
  REQUIRE(pair_sum_tail_bound(16.0, 3) < pair_sum_tail_bound(8.0, 3));
  REQUIRE_THROWS_AS(pair_sum_tail_bound(2.0, 3), std::invalid_argument);
}

TEST_CASE("csd root limit decreases to 1") {
  const auto rows = csd_root_limit({2.0, 10.0, 40.0, 100.0});
  REQUIRE(rows[1].second == Approx(std::pow(2.0 * zeta(10.0), 0.1)).margin(1e-12));
  REQUIRE(rows[1].second == Approx(1.0720).margin(5e-4));
  REQUIRE(rows[2].second == Approx(std::pow(2.0, 1.0 / 40.0)).margin(1e-6));
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) REQUIRE(rows[i].second > rows[i + 1].second);
  REQUIRE(std::abs(rows.back().second - 1.0) < 0.02);
}

TEST_CASE("energy sweep on the interval tends to 2 zeta(s)") {
  OptimizerOptions opts;
  opts.restarts = 3;
  opts.seed = 13;
  const auto table =
      energy_sweep(CompactSet::interval(0.0, 1.0), 2.0, {8, 16, 32}, opts);
  REQUIRE(table.rows.size() == 3);
  const double theory = 2.0 * zeta(2.0);
  for (const auto& row : table.rows) {
    REQUIRE(row.theory);
    REQUIRE(*row.theory == Approx(theory));
  }
  // the boundary deficit makes the normalized values approach from below
  REQUIRE(table.rows[0].normalized < table.rows[1].normalized);
  REQUIRE(table.rows[1].normalized < table.rows[2].normalized);
  REQUIRE(table.rows[2].normalized < theory);
  // Richardson extrapolation sharpens the tail estimate
  const double extrap =
      richardson_extrapolate(table.rows[1].normalized, table.rows[2].normalized);
  REQUIRE(std::abs(extrap - theory) < std::abs(table.rows[2].normalized - theory));
}

TEST_CASE("energy sweep rejects s <= d") {
  REQUIRE_THROWS_AS(energy_sweep(CompactSet::interval(0.0, 1.0), 0.5, {8, 16}, {}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(energy_sweep(CompactSet::sphere2(1.0), 2.0, {8, 16}, {}),
                    std::invalid_argument);
}

TEST_CASE("circle energy row matches the equal-spacing closed form") {
  OptimizerOptions opts;
  opts.restarts = 4;
  opts.seed = 19;
  const auto table = energy_sweep(CompactSet::circle(1.0), 3.0, {16}, opts);
  double closed = 0.0;
  for (int k = 1; k < 16; ++k) closed += 16.0 / std::pow(2.0 * std::sin(kPi * k / 16.0), 3.0);
  REQUIRE(table.rows[0].raw == Approx(closed).epsilon(1e-6));
  REQUIRE(*table.rows[0].theory ==
          Approx(2.0 * zeta(3.0) / std::pow(2.0 * kPi, 3.0)));
}

TEST_CASE("packing sweeps agree with closed forms to 1e-9 for N >= 8") {
  PackingOptions opts;
  opts.optimizer.restarts = 2;
  opts.optimizer.seed = 23;
  const auto ti = packing_sweep(CompactSet::interval(0.0, 1.0), {8, 16, 32}, opts);
  for (const auto& row : ti.rows) {
    const double closed = static_cast<double>(row.n) / (row.n - 1);
    REQUIRE(row.normalized == Approx(closed).margin(1e-9));
    REQUIRE(*row.theory == Approx(1.0));
  }
  const auto tc = packing_sweep(CompactSet::circle(1.0), {8, 16, 32}, opts);
  for (const auto& row : tc.rows) {
    const double closed = 2.0 * row.n * std::sin(kPi / row.n);
    REQUIRE(row.normalized == Approx(closed).margin(1e-9));
    REQUIRE(*row.theory == Approx(2.0 * kPi));
  }
  // interval approaches from above, circle from below, both monotonically
  for (std::size_t i = 0; i + 1 < ti.rows.size(); ++i) {
    REQUIRE(ti.rows[i].normalized > ti.rows[i + 1].normalized);
    REQUIRE(tc.rows[i].normalized < tc.rows[i + 1].normalized);
  }
}

TEST_CASE("Cantor packing sweep uses the exact solver") {
  const auto set = CompactSet::self_similar_1d(IfsSpec::cantor(), 10);
  const auto table = packing_sweep(set, {5, 10, 20}, {});
  REQUIRE(table.rows[0].raw == Approx(1.0 / 9.0));
  REQUIRE(table.rows[1].raw == Approx(1.0 / 27.0));
  REQUIRE(table.rows[2].raw == Approx(1.0 / 81.0));
  REQUIRE(!table.rows[0].theory);
}

TEST_CASE("energy-packing consistency bounds on measured sweeps") {
  OptimizerOptions opts;
  opts.restarts = 3;
  opts.seed = 29;
  const auto set = CompactSet::interval(0.0, 1.0);
  for (long long n : {8, 16}) {
    const double s = 2.0;
    const double energy = minimize_energy(set, static_cast<int>(n), s, opts).energy;
    const double delta = 1.0 / static_cast<double>(n - 1);
    // upper: E <= eta_s N / delta^s with the explicit tail bound
    REQUIRE(energy <=
            pair_sum_tail_bound(s, 1) * static_cast<double>(n) * std::pow(delta, -s));
    // lower with epsilon = 1/2: E >= (N/2) delta_{floor(N/2)}^{-s}
    const double dhalf = 1.0 / static_cast<double>(n / 2 - 1);
    REQUIRE(energy >= 0.5 * static_cast<double>(n) * std::pow(dhalf, -s));
  }
}

TEST_CASE("fixed-N root limit on the square") {
  PackingOptions opts;
  opts.optimizer.restarts = 6;
  opts.optimizer.seed = 31;
  const auto rows = root_limit_fixed_n(CompactSet::cube(2), 5, {4.0, 8.0, 16.0, 32.0, 64.0}, opts);
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) REQUIRE(rows[i].second > rows[i + 1].second);
  REQUIRE(rows.back().second <= 1.05);
  REQUIRE(rows.back().second >= 1.0);
  REQUIRE_THROWS_AS(root_limit_fixed_n(CompactSet::cube(2), 5, {1.0, 4.0}, opts),
                    std::invalid_argument);
}

TEST_CASE("two-point Richardson step is exact for a 1/N correction") {
  const double g = 3.29;
  const double v_half = g + 2.0 / 16.0, v_full = g + 1.0 / 16.0;
  REQUIRE(richardson_extrapolate(v_half, v_full) == Approx(g));
}

TEST_CASE("interval root limit closed form at N = 3") {
  // points {0, 1/2, 1}: E_s = 2 (2^{s+1} + 1), delta_3 = 1/2
  const double s = 64.0;
  const double e = 2.0 * (2.0 * std::pow(2.0, s) + 1.0);
  const double product = std::exp(std::log(e) / s) * 0.5;
  REQUIRE(product == Approx(1.022).margin(5e-3));
}

TEST_CASE("two-point root limit decays like 2^{1/s}") {
  PackingOptions opts;
  opts.optimizer.restarts = 2;
  opts.optimizer.seed = 41;
  const auto rows = root_limit_fixed_n(CompactSet::circle(1.0), 2, {4.0, 8.0, 16.0}, opts);
  // a single pair at the diameter: E_s = 2 (2R)^{-s}, so the product is 2^{1/s}
  for (const auto& [s, v] : rows) REQUIRE(v == Approx(std::pow(2.0, 1.0 / s)).epsilon(1e-6));
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) REQUIRE(rows[i].second > rows[i + 1].second);
}
