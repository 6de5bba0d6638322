#pragma once
// Run-config dispatch shared by the CLI binary and the integration tests.
// A run is described by one JSON config (command, set, numeric parameters,
// explicit seed, output directory); outputs are CSV tables, JSON report
// records and plot-data files, plus an echo of the fully resolved config so
// a run can be reproduced from its own output directory.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rieszpack/report_io.hpp"

namespace rieszpack {

struct ConfigError : std::runtime_error {
  enum class Kind {
    missing_parameter,
    unknown_set_kind,
    unknown_command,
    bad_value,
    output_dir
  };
  Kind kind;
  ConfigError(Kind k, const std::string& message) : std::runtime_error(message), kind(k) {}
};

namespace runcfg {

using nlohmann::json;

inline const json& require(const json& config, const std::string& key) {
  if (!config.contains(key))
    throw ConfigError(ConfigError::Kind::missing_parameter,
                      "config is missing required key '" + key + "'");
  return config.at(key);
}

template <typename T>
inline T get_or(const json& config, const std::string& key, T fallback) {
  if (!config.contains(key)) return fallback;
  try {
    return config.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(ConfigError::Kind::bad_value, "config key '" + key + "' has the wrong type");
  }
}

template <typename T>
inline T get_required(const json& config, const std::string& key) {
  const json& v = require(config, key);
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    throw ConfigError(ConfigError::Kind::bad_value, "config key '" + key + "' has the wrong type");
  }
}

inline Rational rational_from_json(const json& v, const std::string& key) {
  try {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
  } catch (const std::exception&) {
  }
  throw ConfigError(ConfigError::Kind::bad_value,
                    "config key '" + key + "' must be an integer or a rational string like \"1/3\"");
}

inline CompactSet set_from_json(const json& config) {
  const json& set_json = require(config, "set");
  const std::string kind = get_required<std::string>(set_json, "kind");
  if (kind == "interval")
    return CompactSet::interval(get_required<double>(set_json, "a"),
                                get_required<double>(set_json, "b"));
  if (kind == "circle") return CompactSet::circle(get_required<double>(set_json, "radius"));
  if (kind == "sphere2") return CompactSet::sphere2(get_required<double>(set_json, "radius"));
  if (kind == "cube") return CompactSet::cube(get_required<int>(set_json, "dim"));
  if (kind == "cantor")
    return CompactSet::self_similar_1d(IfsSpec::cantor(), get_or<int>(set_json, "depth", 12));
  if (kind == "selfsimilar1d") {
    const Rational sigma = rational_from_json(require(set_json, "sigma"), "sigma");
    std::vector<Rational> ts;
    for (const auto& t : require(set_json, "translations"))
      ts.push_back(rational_from_json(t, "translations"));
    return CompactSet::self_similar_1d(IfsSpec(sigma, std::move(ts)),
                                       get_or<int>(set_json, "depth", 12));
  }
  throw ConfigError(ConfigError::Kind::unknown_set_kind, "unknown set kind '" + kind + "'");
}

inline std::vector<long long> n_list_from_json(const json& config) {
  std::vector<long long> ns;
  for (const auto& v : require(config, "N_list")) ns.push_back(v.get<long long>());
  if (ns.empty())
    throw ConfigError(ConfigError::Kind::bad_value, "config key 'N_list' must be nonempty");
  return ns;
}

inline std::vector<double> s_list_from_json(const json& config) {
  std::vector<double> ss;
  for (const auto& v : require(config, "s_list")) ss.push_back(v.get<double>());
  if (ss.empty())
    throw ConfigError(ConfigError::Kind::bad_value, "config key 's_list' must be nonempty");
  return ss;
}

inline OptimizerOptions optimizer_from_json(const json& config) {
  OptimizerOptions opts;
  opts.seed = get_required<std::uint64_t>(config, "seed");
  opts.restarts = get_or<int>(config, "restarts", opts.restarts);
  opts.max_iterations = get_or<int>(config, "max_iterations", 0);
  return opts;
}

inline PackingOptions packing_from_json(const json& config) {
  PackingOptions opts;
  opts.optimizer = optimizer_from_json(config);
  return opts;
}

inline std::filesystem::path resolve_output_dir(const json& config,
                                                const std::string& command) {
  std::string dir = get_or<std::string>(config, "output_dir", "");
  if (dir.empty()) {
    if (const char* env = std::getenv("RIESZPACK_OUTPUT_DIR")) dir = env;
  }
  if (dir.empty()) dir = "rieszpack-" + command;
  std::filesystem::path path(dir);
  std::error_code ec;
  std::filesystem::create_directories(path, ec);
  if (ec || !std::filesystem::is_directory(path))
    throw ConfigError(ConfigError::Kind::output_dir,
                      "cannot create output directory '" + path.string() + "'");
  // probe writability early so the failure mode is a clean diagnostic
  const auto probe = path / ".write_probe";
  {
    std::ofstream out(probe);
    if (!out)
      throw ConfigError(ConfigError::Kind::output_dir,
                        "output directory '" + path.string() + "' is not writable");
  }
  std::filesystem::remove(probe, ec);
  return path;
}

}  // namespace runcfg

// Executes one run config; returns the list of files written (echo included).
inline std::vector<std::filesystem::path> run(const nlohmann::json& config_in) {
  using runcfg::get_or;
  using runcfg::get_required;
  using runcfg::require;
  nlohmann::json config = config_in;

  const std::string command = get_required<std::string>(config, "command");
  require(config, "seed");  // runs are reproducible by construction: no wall-clock seeding
  const auto out_dir = runcfg::resolve_output_dir(config, command);
  config["deterministic"] = get_or<bool>(config, "deterministic", true);

  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::string& name, const std::string& content) {
    const auto path = out_dir / name;
    write_text_file(path, content);
    written.push_back(path);
  };

  if (command == "minimize-energy") {
    const auto set = runcfg::set_from_json(config);
    const int n = get_required<int>(config, "N");
    const double s = get_required<double>(config, "s");
    const auto report = minimize_energy(set, n, s, runcfg::optimizer_from_json(config));
    emit("energy_report.json", energy_report_to_json(report));
  } else if (command == "best-pack") {
    const auto set = runcfg::set_from_json(config);
    const int n = get_required<int>(config, "N");
    const auto report = best_packing(set, n, runcfg::packing_from_json(config));
    emit("packing_report.json", packing_report_to_json(report));
  } else if (command == "cantor-exact") {
    const auto set = runcfg::set_from_json(config);
    if (set.kind() != SetKind::self_similar_1d)
      throw ConfigError(ConfigError::Kind::bad_value, "cantor-exact needs a self-similar set");
    const int n = get_required<int>(config, "N");
    const auto exact = exact_delta(set.ifs(), n, get_or<int>(config, "depth", set.depth()));
    emit("exact_packing.json", exact_packing_to_json(exact));
  } else if (command == "oscillation") {
    const auto set = runcfg::set_from_json(config);
    if (set.kind() != SetKind::self_similar_1d)
      throw ConfigError(ConfigError::Kind::bad_value, "oscillation needs a self-similar set");
    const auto report = subsequence_oscillation(set.ifs(), get_required<int>(config, "k"),
                                                get_required<int>(config, "m_max"));
    emit("oscillation.csv", oscillation_to_csv(report));
  } else if (command == "sweep-energy") {
    const auto set = runcfg::set_from_json(config);
    const double s = get_required<double>(config, "s");
    const auto table = energy_sweep(set, s, runcfg::n_list_from_json(config),
                                    runcfg::optimizer_from_json(config));
    emit("sweep_energy.csv", sweep_to_csv(table));
    emit("sweep_energy_plot.csv", sweep_to_plotdata(table));
  } else if (command == "sweep-packing") {
    const auto set = runcfg::set_from_json(config);
    const auto table = packing_sweep(set, runcfg::n_list_from_json(config),
                                     runcfg::packing_from_json(config));
    emit("sweep_packing.csv", sweep_to_csv(table));
    emit("sweep_packing_plot.csv", sweep_to_plotdata(table));
  } else if (command == "minkowski") {
    const auto set = runcfg::set_from_json(config);
    const double alpha = get_required<double>(config, "alpha");
    const auto grid = geometric_rho_grid(get_or<double>(config, "rho0", 0.25),
                                         get_or<double>(config, "rho_factor", 0.5),
                                         get_or<int>(config, "rho_count", 15));
    const std::string norm_name = get_or<std::string>(config, "normalization", "ball");
    if (norm_name != "ball" && norm_name != "raw")
      throw ConfigError(ConfigError::Kind::bad_value,
                        "normalization must be 'ball' or 'raw'");
    const auto est = content_estimate(set, alpha, grid,
                                      norm_name == "raw" ? ContentNormalization::raw
                                                         : ContentNormalization::ball_volume);
    emit("content.csv", content_to_csv(est));
    std::ostringstream os;
    os << "{\n  \"alpha\": " << format_double(alpha) << ",\n  \"normalization\": \""
       << norm_name << "\",\n  \"lower_content\": " << format_double(est.lower_content)
       << ",\n  \"upper_content\": " << format_double(est.upper_content) << "\n}\n";
    emit("content_summary.json", os.str());
  } else if (command == "equidist") {
    const auto set = runcfg::set_from_json(config);
    const std::string mode = get_or<std::string>(config, "mode", "packing");
    const auto n_list = runcfg::n_list_from_json(config);
    std::vector<Region> regions;
    switch (set.kind()) {
      case SetKind::interval:
        for (int q = 0; q < 4; ++q)
          regions.push_back(Region::subinterval(
              set, set.a() + 0.25 * q * (set.b() - set.a()),
              set.a() + 0.25 * (q + 1) * (set.b() - set.a())));
        break;
      case SetKind::circle:
        for (int q = 0; q < 4; ++q)
          regions.push_back(Region::arc(set, 0.5 * kPi * q, 0.5 * kPi * (q + 1)));
        break;
      case SetKind::sphere2:
        regions.push_back(Region::spherical_cap(set, {0.0, 0.0, 1.0}, 0.0));
        regions.push_back(Region::spherical_cap(set, {0.0, 0.0, 1.0}, 0.5));
        regions.push_back(Region::spherical_cap(set, {1.0, 0.0, 0.0}, -0.5));
        break;
      case SetKind::cube: {
        if (set.cube_dim() < 2)
          throw ConfigError(ConfigError::Kind::bad_value, "equidist cube regions need dim >= 2");
        const int d = set.cube_dim();
        for (int qx = 0; qx < 2; ++qx)
          for (int qy = 0; qy < 2; ++qy) {
            Point lo(d, 0.0), hi(d, 1.0);
            lo[0] = 0.5 * qx;
            hi[0] = 0.5 * (qx + 1);
            lo[1] = 0.5 * qy;
            hi[1] = 0.5 * (qy + 1);
            regions.push_back(Region::subcube(set, lo, hi));
          }
        break;
      }
      case SetKind::self_similar_1d:
        throw ConfigError(ConfigError::Kind::bad_value,
                          "equidist has no region family for self-similar sets");
    }
    std::vector<EquidistRecord> records;
    for (long long n : n_list) {
      Configuration cfg = [&] {
        if (mode == "energy") {
          const double s = get_required<double>(config, "s");
          return minimize_energy(set, static_cast<int>(n), s,
                                 runcfg::optimizer_from_json(config))
              .config;
        }
        if (mode == "packing")
          return best_packing(set, static_cast<int>(n), runcfg::packing_from_json(config)).config;
        throw ConfigError(ConfigError::Kind::bad_value, "mode must be 'energy' or 'packing'");
      }();
      for (const auto& region : regions)
        records.push_back(
            {n, region.id, region_fraction(cfg, region), region.measure_fraction});
    }
    emit("equidist.csv", equidist_to_csv(records));
  } else if (command == "root-limits") {
    const auto set = runcfg::set_from_json(config);
    const int n = get_required<int>(config, "N");
    const auto rows =
        root_limit_fixed_n(set, n, runcfg::s_list_from_json(config),
                           runcfg::packing_from_json(config));
    emit("root_limit.csv", root_limit_to_csv(rows, "E_root_times_delta"));
    if (get_or<bool>(config, "include_csd", false))
      emit("csd_root_limit.csv",
           root_limit_to_csv(csd_root_limit(runcfg::s_list_from_json(config)),
                             "two_zeta_root"));
  } else {
    throw ConfigError(ConfigError::Kind::unknown_command, "unknown command '" + command + "'");
  }

  // echo the resolved config so the run reproduces from its own outputs
  const auto echo_path = out_dir / "resolved_config.json";
  write_text_file(echo_path, config.dump(2) + "\n");
  written.push_back(echo_path);
  return written;
}

inline nlohmann::json load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError(ConfigError::Kind::bad_value, "cannot open config file: " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(ConfigError::Kind::missing_parameter,
                      "malformed config " + path.string() + ": " + e.what());
  }
}

}  // namespace rieszpack
