// Command-line front end: one JSON config per run, flags override config
// keys, every command writes its reports plus an echo of the resolved config.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rieszpack/runner.hpp"

namespace {

constexpr const char* kCommands[] = {"minimize-energy", "best-pack",  "cantor-exact",
                                     "oscillation",     "sweep-energy", "sweep-packing",
                                     "minkowski",       "equidist",   "root-limits"};

struct Overrides {
  std::string config_file;
  std::string output_dir;
  long long n = -1;
  double s = std::numeric_limits<double>::quiet_NaN();
  long long seed = -1;
  int restarts = -1;
  int depth = -1;
  long long k = -1;
  int m_max = -1;
  double alpha = std::numeric_limits<double>::quiet_NaN();
  std::vector<long long> n_list;
  std::vector<double> s_list;
  std::string mode;
};

void apply_overrides(nlohmann::json& config, const Overrides& ov, const std::string& command) {
  config["command"] = command;
  if (!ov.output_dir.empty()) config["output_dir"] = ov.output_dir;
  if (ov.n >= 0) config["N"] = ov.n;
  if (!std::isnan(ov.s)) config["s"] = ov.s;
  if (ov.seed >= 0) config["seed"] = ov.seed;
  if (ov.restarts >= 0) config["restarts"] = ov.restarts;
  if (ov.depth >= 0) {
    if (!config.contains("set")) config["set"] = nlohmann::json::object();
    config["set"]["depth"] = ov.depth;
  }
  if (ov.k >= 0) config["k"] = ov.k;
  if (ov.m_max >= 0) config["m_max"] = ov.m_max;
  if (!std::isnan(ov.alpha)) config["alpha"] = ov.alpha;
  if (!ov.n_list.empty()) config["N_list"] = ov.n_list;
  if (!ov.s_list.empty()) config["s_list"] = ov.s_list;
  if (!ov.mode.empty()) config["mode"] = ov.mode;
}

int exit_code(const rieszpack::ConfigError& e) {
  using Kind = rieszpack::ConfigError::Kind;
  switch (e.kind) {
    case Kind::missing_parameter: return 2;
    case Kind::unknown_set_kind: return 3;
    case Kind::output_dir: return 4;
    case Kind::unknown_command: return 5;
    case Kind::bad_value: return 6;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"riesz energy minimization, best packing and their asymptotics on compact sets"};
  app.require_subcommand(1);

  Overrides ov;
  std::string run_command;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-c,--config", ov.config_file, "JSON run config (keys overridable by flags)");
    sub->add_option("-o,--out", ov.output_dir, "output directory");
    sub->add_option("--seed", ov.seed, "RNG seed (required by every run)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--restarts", ov.restarts, "multistart count")->check(CLI::PositiveNumber);
    sub->add_option("-N", ov.n, "configuration size N")->check(CLI::PositiveNumber);
    sub->add_option("-s", ov.s, "Riesz exponent s")->check(CLI::PositiveNumber);
    sub->add_option("--depth", ov.depth, "IFS truncation depth")->check(CLI::PositiveNumber);
    sub->add_option("-k", ov.k, "oscillation base k")->check(CLI::PositiveNumber);
    sub->add_option("--m-max", ov.m_max, "oscillation levels")->check(CLI::PositiveNumber);
    sub->add_option("--alpha", ov.alpha, "content dimension parameter")
        ->check(CLI::PositiveNumber);
    sub->add_option("--n-list", ov.n_list, "sweep N values")->delimiter(',');
    sub->add_option("--s-list", ov.s_list, "sweep s values")->delimiter(',');
    sub->add_option("--mode", ov.mode, "equidist mode: energy or packing");
  };

  for (const char* name : kCommands) {
    auto* sub = app.add_subcommand(name);
    add_common(sub);
    sub->callback([&run_command, name] { run_command = name; });
  }
  auto* run_sub = app.add_subcommand("run", "take the command from the config file");
  add_common(run_sub);

  CLI11_PARSE(app, argc, argv);

  try {
    nlohmann::json config = nlohmann::json::object();
    if (!ov.config_file.empty()) config = rieszpack::load_config_file(ov.config_file);
    if (run_command.empty()) {
      if (!config.contains("command")) {
        std::cerr << "error: config is missing required key 'command'\n";
        return 2;
      }
      run_command = config["command"].get<std::string>();
    }
    apply_overrides(config, ov, run_command);
    const auto files = rieszpack::run(config);
    for (const auto& f : files) std::cout << f.string() << "\n";
    return 0;
  } catch (const rieszpack::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
