#pragma once
// Strict JSON run configuration for the command line tool. Parsing collects
// every problem (unknown keys, type mismatches, missing files, model
// violations) into one report instead of stopping at the first.

#include <json.hpp>
#include <string>
#include <vector>

#include "wavelab/certificates.hpp"
#include "wavelab/model.hpp"

namespace wavelab::cli {

using json = nlohmann::ordered_json;

struct RunConfig {
  std::string experiment;  // simulate | certify | check-iss | converge |
                           // sweep-sigma | thermoacoustic-equiv
  ModelVariant variant = ModelVariant::A;
  PhysicalParams params;
  ThermoacousticParams ta;

  int N = 256;
  double courant = 1.0;
  double dt = 0.0;  // 0 means courant * h / c
  double T = 10.0;

  InitialSpec init;

  // declarative disturbances, sampled per grid
  TimeSignal d;
  enum class FKind { Zero, Separable, Tabulated };
  FKind f_kind = FKind::Zero;
  TimeSignal f_time;
  ProfileSpec f_profile;
  std::vector<double> f_times;
  std::vector<std::vector<double>> f_frames;

  double r = 1.0;
  bool optimize = false;
  double r_lo = 0.1, r_hi = 3.0;
  RObjective objective = RObjective::MaximizeOmega;

  std::vector<int> N_list = {32, 64, 128, 256};
  std::vector<double> sigmas = {1.0, 0.3, 0.1, 0.03, 0.01};

  std::string out_dir = "out";
};

struct ParseResult {
  RunConfig config;
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool ok() const { return errors.empty(); }
};

// base_dir resolves relative file references inside the config
ParseResult parse_config(const json& j, const std::string& base_dir = "");

// canonical echo: parsing it again reproduces the same configuration
json canonical_config(const RunConfig& c);

// dotted-path assignments like "params.sigma=0.5" or "grid.N=128"; values
// are parsed as JSON scalars/arrays with plain-string fallback
std::vector<std::string> apply_overrides(json& j, const std::vector<std::string>& overrides);

DisturbanceSpec build_disturbance(const RunConfig& c, const Grid& g);

}  // namespace wavelab::cli
