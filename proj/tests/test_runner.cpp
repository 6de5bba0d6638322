#include <catch2/catch.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rieszpack/runner.hpp"

using namespace rieszpack;
using nlohmann::json;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::filesystem::path temp_dir(const std::string& tag) {
  const auto dir = std::filesystem::temp_directory_path() / ("rieszpack_test_" + tag);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("best-pack run writes a packing report hitting the icosahedron") {
  const auto dir = temp_dir("bestpack");
  json config = {{"command", "best-pack"},
                 {"set", {{"kind", "sphere2"}, {"radius", 1.0}}},
                 {"N", 12},
                 {"seed", 7},
                 {"restarts", 12},
                 {"output_dir", dir.string()}};
  const auto files = run(config);
  REQUIRE(std::filesystem::exists(dir / "packing_report.json"));
  REQUIRE(std::filesystem::exists(dir / "resolved_config.json"));
  const auto text = slurp(dir / "packing_report.json");
  const auto parsed = json::parse(text);
  const double icosa = 4.0 / std::sqrt(10.0 + 2.0 * std::sqrt(5.0));
  REQUIRE(parsed.at("delta").get<double>() == Approx(icosa).margin(1e-4));
  REQUIRE(parsed.at("N").get<int>() == 12);
  std::filesystem::remove_all(dir);
}

TEST_CASE("oscillation run emits subsequence columns ending at the two limits") {
  const auto dir = temp_dir("oscillation");
  json config = {{"command", "oscillation"},
                 {"set", {{"kind", "cantor"}}},
                 {"k", 5},
                 {"m_max", 6},
                 {"seed", 1},
                 {"output_dir", dir.string()}};
  run(config);
  const auto csv = slurp(dir / "oscillation.csv");
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  double last_kpm = 0.0, last_cm = 0.0;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::string cell;
    std::vector<std::string> row;
    while (std::getline(cells, cell, ',')) row.push_back(cell);
    REQUIRE(row.size() == 7);
    if (row[6] == "kpm") last_kpm = std::stod(row[4]);
    if (row[6] == "cm") last_cm = std::stod(row[4]);
  }
  const double inv_lambda = std::log(3.0) / std::log(2.0);
  REQUIRE(last_kpm == Approx(std::pow(5.0, inv_lambda) / 9.0).margin(1e-6));
  REQUIRE(last_cm == Approx(1.0).margin(1e-6));
  std::filesystem::remove_all(dir);
}

TEST_CASE("missing parameters are reported with the key name") {
  json config = {{"command", "best-pack"},
                 {"set", {{"kind", "sphere2"}, {"radius", 1.0}}},
                 {"seed", 7}};
  try {
    run(config);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    REQUIRE(e.kind == ConfigError::Kind::missing_parameter);
    REQUIRE(std::string(e.what()).find("'N'") != std::string::npos);
  }
}

TEST_CASE("unknown set kinds and commands are distinct errors") {
  json bad_set = {{"command", "best-pack"},
                  {"set", {{"kind", "torus"}}},
                  {"N", 4},
                  {"seed", 7}};
  try {
    run(bad_set);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    REQUIRE(e.kind == ConfigError::Kind::unknown_set_kind);
  }
  json bad_cmd = {{"command", "fly"}, {"set", {{"kind", "cube"}, {"dim", 2}}}, {"seed", 7}};
  try {
    run(bad_cmd);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    REQUIRE(e.kind == ConfigError::Kind::unknown_command);
  }
}

TEST_CASE("deterministic reruns produce byte-identical outputs") {
  const auto dir1 = temp_dir("det1");
  const auto dir2 = temp_dir("det2");
  json config = {{"command", "sweep-packing"},
                 {"set", {{"kind", "circle"}, {"radius", 1.0}}},
                 {"N_list", {4, 8, 16}},
                 {"seed", 33},
                 {"restarts", 2}};
  config["output_dir"] = dir1.string();
  run(config);
  config["output_dir"] = dir2.string();
  run(config);
  REQUIRE(slurp(dir1 / "sweep_packing.csv") == slurp(dir2 / "sweep_packing.csv"));
  REQUIRE(slurp(dir1 / "sweep_packing_plot.csv") == slurp(dir2 / "sweep_packing_plot.csv"));
  std::filesystem::remove_all(dir1);
  std::filesystem::remove_all(dir2);
}

TEST_CASE("rerunning from the echoed config reproduces the outputs") {
  const auto dir1 = temp_dir("echo1");
  const auto dir2 = temp_dir("echo2");
  json config = {{"command", "sweep-energy"},
                 {"set", {{"kind", "interval"}, {"a", 0.0}, {"b", 1.0}}},
                 {"N_list", {4, 8}},
                 {"s", 2.0},
                 {"seed", 11},
                 {"restarts", 2},
                 {"output_dir", dir1.string()}};
  run(config);
  auto echoed = load_config_file(dir1 / "resolved_config.json");
  echoed["output_dir"] = dir2.string();
  run(echoed);
  REQUIRE(slurp(dir1 / "sweep_energy.csv") == slurp(dir2 / "sweep_energy.csv"));
  std::filesystem::remove_all(dir1);
  std::filesystem::remove_all(dir2);
}

TEST_CASE("minimize-energy run reports the endpoint pair on the interval") {
  const auto dir = temp_dir("minen");
  json config = {{"command", "minimize-energy"},
                 {"set", {{"kind", "interval"}, {"a", 0.0}, {"b", 1.0}}},
                 {"N", 2},
                 {"s", 3.0},
                 {"seed", 4},
                 {"restarts", 3},
                 {"output_dir", dir.string()}};
  run(config);
  const auto parsed = json::parse(slurp(dir / "energy_report.json"));
  REQUIRE(parsed.at("energy").get<double>() == Approx(2.0).epsilon(1e-9));
  REQUIRE(parsed.at("restarts_used").get<int>() == 3);
  std::filesystem::remove_all(dir);
}

TEST_CASE("report floats round-trip through the 17-digit formatter") {
  for (double v : {1.0 / 3.0, kPi, 2.0 * std::sin(kPi / 7.0), 1e-300, 6.5797362674206559}) {
    const std::string s = format_double(v);
    REQUIRE(std::stod(s) == v);
  }
}

TEST_CASE("cantor-exact run serializes the rational value and witness") {
  const auto dir = temp_dir("cantorexact");
  json config = {{"command", "cantor-exact"},
                 {"set", {{"kind", "cantor"}, {"depth", 8}}},
                 {"N", 5},
                 {"seed", 1},
                 {"output_dir", dir.string()}};
  run(config);
  const auto parsed = json::parse(slurp(dir / "exact_packing.json"));
  REQUIRE(parsed.at("delta").get<std::string>() == "1/9");
  REQUIRE(parsed.at("witness").size() == 5);
  std::filesystem::remove_all(dir);
}

TEST_CASE("root-limits run emits the product table and the constants curve") {
  const auto dir = temp_dir("rootlimits");
  json config = {{"command", "root-limits"},
                 {"set", {{"kind", "interval"}, {"a", 0.0}, {"b", 1.0}}},
                 {"N", 3},
                 {"s_list", {4.0, 8.0, 16.0}},
                 {"include_csd", true},
                 {"seed", 5},
                 {"restarts", 2},
                 {"output_dir", dir.string()}};
  run(config);
  REQUIRE(std::filesystem::exists(dir / "root_limit.csv"));
  REQUIRE(std::filesystem::exists(dir / "csd_root_limit.csv"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("equidist run writes one row per (N, region)") {
  const auto dir = temp_dir("equidist");
  json config = {{"command", "equidist"},
                 {"set", {{"kind", "interval"}, {"a", 0.0}, {"b", 1.0}}},
                 {"mode", "packing"},
                 {"N_list", {16, 32}},
                 {"seed", 2},
                 {"restarts", 2},
                 {"output_dir", dir.string()}};
  run(config);
  const auto csv = slurp(dir / "equidist.csv");
  REQUIRE(csv.find("N,region,fraction,measure_fraction,deviation") == 0);
  // 2 N values x 4 quartile regions
  REQUIRE(std::count(csv.begin(), csv.end(), '\n') == 1 + 8);
  std::filesystem::remove_all(dir);
}

TEST_CASE("the environment variable supplies the default output directory") {
  const auto dir = temp_dir("envdir");
  setenv("RIESZPACK_OUTPUT_DIR", dir.string().c_str(), 1);
  json config = {{"command", "cantor-exact"},
                 {"set", {{"kind", "cantor"}, {"depth", 6}}},
                 {"N", 4},
                 {"seed", 3}};
  run(config);
  unsetenv("RIESZPACK_OUTPUT_DIR");
  REQUIRE(std::filesystem::exists(dir / "exact_packing.json"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("unwritable output directories are a distinct error") {
  json config = {{"command", "best-pack"},
                 {"set", {{"kind", "interval"}, {"a", 0.0}, {"b", 1.0}}},
                 {"N", 3},
                 {"seed", 7},
                 {"restarts", 1},
                 {"output_dir", "/proc/rieszpack_forbidden/out"}};
  try {
    run(config);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    REQUIRE(e.kind == ConfigError::Kind::output_dir);
  }
}

TEST_CASE("minkowski run writes the content table") {
  const auto dir = temp_dir("mink");
  json config = {{"command", "minkowski"},
                 {"set", {{"kind", "circle"}, {"radius", 1.0}}},
                 {"alpha", 1.0},
                 {"seed", 3},
                 {"rho_count", 10},
                 {"output_dir", dir.string()}};
  run(config);
  const auto csv = slurp(dir / "content.csv");
  REQUIRE(csv.find("rho,volume,volume_stderr,normalized_value") == 0);
  const auto summary = json::parse(slurp(dir / "content_summary.json"));
  REQUIRE(summary.at("upper_content").get<double>() == Approx(2.0 * kPi).epsilon(0.01));
  std::filesystem::remove_all(dir);
}
