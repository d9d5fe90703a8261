// Command line front end: loads a JSON run configuration, applies overrides,
// and executes one experiment.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "config.hpp"
#include "runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"damped string models with certified decay estimates"};
  std::string config_path, experiment, out_dir;
  std::vector<std::string> overrides;
  app.add_option("--config", config_path, "JSON run configuration file");
  app.add_option("--experiment", experiment,
                 "simulate | certify | check-iss | converge | sweep-sigma | thermoacoustic-equiv");
  app.add_option("--out", out_dir, "output directory for artifacts");
  app.add_option("--override", overrides,
                 "dotted-path override, e.g. --override params.sigma=0.5 (repeatable)");
  CLI11_PARSE(app, argc, argv);

  namespace cli = wavelab::cli;
  cli::json j = cli::json::object();
  std::string base_dir;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot open config file '" << config_path << "'\n";
      return 2;
    }
    try {
      j = cli::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      std::cerr << "error: config is not valid JSON: " << e.what() << "\n";
      return 2;
    }
    base_dir = std::filesystem::path(config_path).parent_path().string();
  }

  auto override_errors = cli::apply_overrides(j, overrides);
  if (!experiment.empty()) j["experiment"] = experiment;
  if (!out_dir.empty()) j["out_dir"] = out_dir;

  auto parsed = cli::parse_config(j, base_dir);
  for (const auto& e : override_errors) parsed.errors.insert(parsed.errors.begin(), e);
  for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
  if (!parsed.ok()) {
    std::cerr << "configuration rejected (" << parsed.errors.size() << " problem(s)):\n";
    for (const auto& e : parsed.errors) std::cerr << "  - " << e << "\n";
    return 2;
  }

  auto result = cli::execute(parsed.config);
  for (const auto& n : result.notes) std::cout << n << "\n";
  for (const auto& f : result.files)
    std::cout << "wrote " << (std::filesystem::path(parsed.config.out_dir) / f).string() << "\n";
  std::cout << (result.exit_code == 0 ? "all checks passed" : "run did not pass") << "\n";
  return result.exit_code;
}
