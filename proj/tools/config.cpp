#include "config.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace wavelab::cli {

namespace {

struct Ctx {
  std::vector<std::string>& errors;
  std::vector<std::string>& warnings;
  std::string base_dir;

  void error(const std::string& m) { errors.push_back(m); }
};

void check_keys(const json& j, const std::string& where,
                std::initializer_list<const char*> allowed, Ctx& ctx) {
  for (const auto& item : j.items()) {
    bool known = std::any_of(allowed.begin(), allowed.end(),
                             [&](const char* k) { return item.key() == k; });
    if (!known) ctx.error(where + ": unknown key '" + item.key() + "'");
  }
}

bool expect_object(const json& j, const std::string& where, Ctx& ctx) {
  if (!j.is_object()) {
    ctx.error(where + ": expected an object");
    return false;
  }
  return true;
}

void get_num(const json& j, const char* key, double& out, const std::string& where, Ctx& ctx) {
  if (!j.contains(key)) return;
  if (!j[key].is_number()) {
    ctx.error(where + "." + key + ": expected a number");
    return;
  }
  out = j[key].get<double>();
}

bool require_num(const json& j, const char* key, double& out, const std::string& where,
                 Ctx& ctx) {
  if (!j.contains(key)) {
    ctx.error(where + ": missing required key '" + key + "'");
    return false;
  }
  if (!j[key].is_number()) {
    ctx.error(where + "." + key + ": expected a number");
    return false;
  }
  out = j[key].get<double>();
  return true;
}

void get_int(const json& j, const char* key, int& out, const std::string& where, Ctx& ctx) {
  if (!j.contains(key)) return;
  if (!j[key].is_number_integer()) {
    ctx.error(where + "." + key + ": expected an integer");
    return;
  }
  out = j[key].get<int>();
}

void get_bool(const json& j, const char* key, bool& out, const std::string& where, Ctx& ctx) {
  if (!j.contains(key)) return;
  if (!j[key].is_boolean()) {
    ctx.error(where + "." + key + ": expected a boolean");
    return;
  }
  out = j[key].get<bool>();
}

void get_str(const json& j, const char* key, std::string& out, const std::string& where,
             Ctx& ctx) {
  if (!j.contains(key)) return;
  if (!j[key].is_string()) {
    ctx.error(where + "." + key + ": expected a string");
    return;
  }
  out = j[key].get<std::string>();
}

bool num_array(const json& a, std::vector<double>& out, const std::string& where, Ctx& ctx) {
  if (!a.is_array()) {
    ctx.error(where + ": expected an array of numbers");
    return false;
  }
  out.clear();
  for (const auto& v : a) {
    if (!v.is_number()) {
      ctx.error(where + ": expected an array of numbers");
      return false;
    }
    out.push_back(v.get<double>());
  }
  return true;
}

void get_num_array(const json& j, const char* key, std::vector<double>& out,
                   const std::string& where, Ctx& ctx) {
  if (!j.contains(key)) return;
  num_array(j[key], out, where + "." + key, ctx);
}

// ---------------------------------------------------------------------------
// section parsers

void parse_params(const json& j, PhysicalParams& p, Ctx& ctx) {
  if (!expect_object(j, "params", ctx)) return;
  check_keys(j, "params", {"a", "c", "mu", "b", "k", "lambda", "sigma"}, ctx);
  get_num(j, "a", p.a, "params", ctx);
  get_num(j, "c", p.c, "params", ctx);
  get_num(j, "mu", p.mu, "params", ctx);
  get_num(j, "b", p.b, "params", ctx);
  get_num(j, "k", p.k, "params", ctx);
  get_num(j, "lambda", p.lambda, "params", ctx);
  get_num(j, "sigma", p.sigma, "params", ctx);
}

void parse_ta_params(const json& j, ThermoacousticParams& p, Ctx& ctx) {
  if (!expect_object(j, "thermo_params", ctx)) return;
  check_keys(j, "thermo_params", {"a", "c", "gamma", "b", "k", "lambda", "sigma"}, ctx);
  get_num(j, "a", p.a, "thermo_params", ctx);
  get_num(j, "c", p.c, "thermo_params", ctx);
  get_num(j, "gamma", p.gamma_fluid, "thermo_params", ctx);
  get_num(j, "b", p.b, "thermo_params", ctx);
  get_num(j, "k", p.k, "thermo_params", ctx);
  get_num(j, "lambda", p.lambda, "thermo_params", ctx);
  get_num(j, "sigma", p.sigma, "thermo_params", ctx);
}

ProfileSpec parse_profile(const json& j, const std::string& where, Ctx& ctx) {
  ProfileSpec p;
  if (!expect_object(j, where, ctx)) return p;
  check_keys(j, where, {"kind", "amplitude", "mode", "center", "width", "coefficients", "values"},
             ctx);
  std::string kind;
  if (!j.contains("kind")) {
    ctx.error(where + ": missing required key 'kind'");
    return p;
  }
  get_str(j, "kind", kind, where, ctx);
  if (kind == "zero") {
    p.kind = ProfileSpec::Kind::Zero;
  } else if (kind == "sine") {
    p.kind = ProfileSpec::Kind::Sine;
  } else if (kind == "quarter-sine") {
    p.kind = ProfileSpec::Kind::QuarterSine;
  } else if (kind == "gaussian") {
    p.kind = ProfileSpec::Kind::Gaussian;
  } else if (kind == "polynomial") {
    p.kind = ProfileSpec::Kind::Polynomial;
    if (!j.contains("coefficients"))
      ctx.error(where + ": polynomial profile needs 'coefficients'");
  } else if (kind == "samples") {
    p.kind = ProfileSpec::Kind::Samples;
    if (!j.contains("values")) ctx.error(where + ": samples profile needs 'values'");
  } else if (!kind.empty()) {
    ctx.error(where + ": unknown profile kind '" + kind + "'");
  }
  get_num(j, "amplitude", p.amplitude, where, ctx);
  get_int(j, "mode", p.mode, where, ctx);
  get_num(j, "center", p.center, where, ctx);
  get_num(j, "width", p.width, where, ctx);
  get_num_array(j, "coefficients", p.coefficients, where, ctx);
  get_num_array(j, "values", p.samples, where, ctx);
  return p;
}

void load_initial_csv(const std::string& file, InitialSpec& init, Ctx& ctx) {
  namespace fs = std::filesystem;
  fs::path path = file;
  if (path.is_relative() && !ctx.base_dir.empty()) path = fs::path(ctx.base_dir) / path;
  std::ifstream in(path);
  if (!in) {
    ctx.error("initial: file '" + path.string() + "' not found");
    return;
  }
  std::string header;
  if (!std::getline(in, header)) {
    ctx.error("initial: file '" + path.string() + "' is empty");
    return;
  }
  std::vector<std::string> cols;
  {
    std::stringstream ss(header);
    std::string c;
    while (std::getline(ss, c, ',')) cols.push_back(c);
  }
  std::vector<std::vector<double>> data(cols.size());
  std::string line;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::size_t c = 0;
    while (std::getline(ss, cell, ',')) {
      if (c >= cols.size()) break;
      try {
        data[c].push_back(std::stod(cell));
      } catch (const std::exception&) {
        ctx.error("initial: file '" + path.string() + "' line " + std::to_string(lineno) +
                  ": bad number '" + cell + "'");
        return;
      }
      ++c;
    }
    if (c != cols.size()) {
      ctx.error("initial: file '" + path.string() + "' line " + std::to_string(lineno) +
                ": expected " + std::to_string(cols.size()) + " columns");
      return;
    }
  }
  for (std::size_t c = 0; c < cols.size(); ++c) {
    ProfileSpec p;
    p.kind = ProfileSpec::Kind::Samples;
    p.samples = data[c];
    if (cols[c] == "u0") {
      init.u0 = p;
    } else if (cols[c] == "w0") {
      init.w0 = p;
    } else if (cols[c] == "theta0") {
      init.theta0 = p;
    } else {
      ctx.error("initial: file '" + path.string() + "': unknown column '" + cols[c] + "'");
    }
  }
}

void parse_initial(const json& j, InitialSpec& init, Ctx& ctx) {
  if (!expect_object(j, "initial", ctx)) return;
  const bool has_preset = j.contains("preset");
  const bool has_profiles = j.contains("u0") || j.contains("w0") || j.contains("theta0");
  if (has_preset && has_profiles) {
    ctx.error("initial: give either 'preset' or explicit profiles, not both");
    return;
  }
  if (has_preset) {
    check_keys(j, "initial",
               {"preset", "amplitude", "mode", "center", "width", "coefficients", "file"}, ctx);
    std::string preset;
    get_str(j, "preset", preset, "initial", ctx);
    if (preset == "sine") {
      init.u0.kind = ProfileSpec::Kind::QuarterSine;
      get_num(j, "amplitude", init.u0.amplitude, "initial", ctx);
      get_int(j, "mode", init.u0.mode, "initial", ctx);
    } else if (preset == "gaussian-pulse") {
      init.u0.kind = ProfileSpec::Kind::Gaussian;
      get_num(j, "amplitude", init.u0.amplitude, "initial", ctx);
      get_num(j, "center", init.u0.center, "initial", ctx);
      get_num(j, "width", init.u0.width, "initial", ctx);
    } else if (preset == "polynomial") {
      init.u0.kind = ProfileSpec::Kind::Polynomial;
      if (!j.contains("coefficients"))
        ctx.error("initial: polynomial preset needs 'coefficients'");
      get_num_array(j, "coefficients", init.u0.coefficients, "initial", ctx);
      get_num(j, "amplitude", init.u0.amplitude, "initial", ctx);
    } else if (preset == "tabulated") {
      std::string file;
      if (!j.contains("file")) {
        ctx.error("initial: tabulated preset needs 'file'");
      } else {
        get_str(j, "file", file, "initial", ctx);
        if (!file.empty()) load_initial_csv(file, init, ctx);
      }
    } else {
      ctx.error("initial: unknown preset '" + preset + "'");
    }
    return;
  }
  check_keys(j, "initial", {"u0", "w0", "theta0"}, ctx);
  if (j.contains("u0")) init.u0 = parse_profile(j["u0"], "initial.u0", ctx);
  if (j.contains("w0")) init.w0 = parse_profile(j["w0"], "initial.w0", ctx);
  if (j.contains("theta0")) init.theta0 = parse_profile(j["theta0"], "initial.theta0", ctx);
}

TimeSignal parse_signal(const json& j, const std::string& where, Ctx& ctx) {
  TimeSignal s;
  if (!expect_object(j, where, ctx)) return s;
  check_keys(j, where,
             {"kind", "amplitude", "frequency", "phase", "rate", "support", "times", "values"},
             ctx);
  std::string kind = "zero";
  if (j.contains("kind")) get_str(j, "kind", kind, where, ctx);
  else ctx.error(where + ": missing required key 'kind'");

  if (kind == "zero") {
    s.kind = TimeSignalKind::Zero;
  } else if (kind == "constant") {
    s.kind = TimeSignalKind::Constant;
    require_num(j, "amplitude", s.amplitude, where, ctx);
  } else if (kind == "sinusoid") {
    s.kind = TimeSignalKind::Sinusoid;
    require_num(j, "amplitude", s.amplitude, where, ctx);
    require_num(j, "frequency", s.frequency, where, ctx);
    get_num(j, "phase", s.phase, where, ctx);
  } else if (kind == "pulse") {
    s.kind = TimeSignalKind::Pulse;
    require_num(j, "amplitude", s.amplitude, where, ctx);
    if (!j.contains("support")) ctx.error(where + ": pulse needs 'support'");
  } else if (kind == "exp-decay") {
    s.kind = TimeSignalKind::ExpDecay;
    require_num(j, "amplitude", s.amplitude, where, ctx);
    require_num(j, "rate", s.rate, where, ctx);
  } else if (kind == "tabulated") {
    s.kind = TimeSignalKind::Tabulated;
    if (!j.contains("times") || !j.contains("values"))
      ctx.error(where + ": tabulated signal needs 'times' and 'values'");
    get_num_array(j, "times", s.times, where, ctx);
    get_num_array(j, "values", s.values, where, ctx);
  } else {
    ctx.error(where + ": unknown signal kind '" + kind + "'");
  }

  if (j.contains("support")) {
    if (kind == "tabulated") {
      ctx.error(where + ": tabulated signals take no support window");
    } else {
      std::vector<double> sup;
      if (num_array(j["support"], sup, where + ".support", ctx)) {
        if (sup.size() != 2) {
          ctx.error(where + ".support: expected [begin, end]");
        } else {
          s.windowed = true;
          s.support_begin = sup[0];
          s.support_end = sup[1];
        }
      }
    }
  }
  return s;
}

void parse_disturbance(const json& j, RunConfig& c, Ctx& ctx) {
  if (!expect_object(j, "disturbance", ctx)) return;
  check_keys(j, "disturbance", {"f", "d"}, ctx);
  if (j.contains("d")) c.d = parse_signal(j["d"], "disturbance.d", ctx);
  if (!j.contains("f")) return;
  const json& f = j["f"];
  if (!expect_object(f, "disturbance.f", ctx)) return;
  check_keys(f, "disturbance.f", {"kind", "time", "profile", "times", "frames"}, ctx);
  std::string kind;
  if (!f.contains("kind")) {
    ctx.error("disturbance.f: missing required key 'kind'");
    return;
  }
  get_str(f, "kind", kind, "disturbance.f", ctx);
  if (kind == "zero") {
    c.f_kind = RunConfig::FKind::Zero;
  } else if (kind == "separable") {
    c.f_kind = RunConfig::FKind::Separable;
    if (!f.contains("time") || !f.contains("profile")) {
      ctx.error("disturbance.f: separable force needs 'time' and 'profile'");
      return;
    }
    c.f_time = parse_signal(f["time"], "disturbance.f.time", ctx);
    c.f_profile = parse_profile(f["profile"], "disturbance.f.profile", ctx);
  } else if (kind == "tabulated") {
    c.f_kind = RunConfig::FKind::Tabulated;
    if (!f.contains("times") || !f.contains("frames")) {
      ctx.error("disturbance.f: tabulated force needs 'times' and 'frames'");
      return;
    }
    get_num_array(f, "times", c.f_times, "disturbance.f", ctx);
    if (!f["frames"].is_array()) {
      ctx.error("disturbance.f.frames: expected an array of arrays");
      return;
    }
    for (const auto& fr : f["frames"]) {
      std::vector<double> frame;
      if (!num_array(fr, frame, "disturbance.f.frames", ctx)) return;
      c.f_frames.push_back(std::move(frame));
    }
  } else {
    ctx.error("disturbance.f: unknown force kind '" + kind + "'");
  }
}

void parse_certificate(const json& j, RunConfig& c, Ctx& ctx) {
  if (!expect_object(j, "certificate", ctx)) return;
  check_keys(j, "certificate", {"r", "optimize", "r_range", "objective"}, ctx);
  get_num(j, "r", c.r, "certificate", ctx);
  get_bool(j, "optimize", c.optimize, "certificate", ctx);
  if (j.contains("r_range")) {
    std::vector<double> range;
    if (num_array(j["r_range"], range, "certificate.r_range", ctx)) {
      if (range.size() != 2) {
        ctx.error("certificate.r_range: expected [lo, hi]");
      } else {
        c.r_lo = range[0];
        c.r_hi = range[1];
      }
    }
  }
  std::string obj;
  get_str(j, "objective", obj, "certificate", ctx);
  if (obj == "maximize-omega" || obj.empty()) {
    c.objective = RObjective::MaximizeOmega;
  } else if (obj == "minimize-gamma1") {
    c.objective = RObjective::MinimizeGamma1;
  } else {
    ctx.error("certificate.objective: unknown objective '" + obj + "'");
  }
}

const char* kExperiments[] = {"simulate", "certify",     "check-iss",
                              "converge", "sweep-sigma", "thermoacoustic-equiv"};

}  // namespace

ParseResult parse_config(const json& j, const std::string& base_dir) {
  ParseResult out;
  Ctx ctx{out.errors, out.warnings, base_dir};

  if (!j.is_object()) {
    ctx.error("config: expected a JSON object");
    return out;
  }
  check_keys(j, "config",
             {"experiment", "variant", "out_dir", "params", "thermo_params", "grid", "time",
              "initial", "disturbance", "certificate", "convergence", "sigma_sweep"},
             ctx);

  RunConfig& c = out.config;
  get_str(j, "experiment", c.experiment, "config", ctx);
  get_str(j, "out_dir", c.out_dir, "config", ctx);

  std::string variant;
  get_str(j, "variant", variant, "config", ctx);
  if (variant == "A" || variant.empty()) {
    c.variant = ModelVariant::A;
  } else if (variant == "B") {
    c.variant = ModelVariant::B;
  } else if (variant == "C") {
    c.variant = ModelVariant::C;
  } else if (variant == "D") {
    c.variant = ModelVariant::D;
  } else if (variant == "thermoacoustic") {
    c.variant = ModelVariant::Thermoacoustic;
  } else {
    ctx.error("config.variant: unknown variant '" + variant + "'");
  }

  if (j.contains("params")) parse_params(j["params"], c.params, ctx);
  if (j.contains("thermo_params")) parse_ta_params(j["thermo_params"], c.ta, ctx);
  if (j.contains("grid")) {
    if (expect_object(j["grid"], "grid", ctx)) {
      check_keys(j["grid"], "grid", {"N"}, ctx);
      get_int(j["grid"], "N", c.N, "grid", ctx);
    }
  }
  if (j.contains("time")) {
    if (expect_object(j["time"], "time", ctx)) {
      check_keys(j["time"], "time", {"T", "courant", "dt"}, ctx);
      get_num(j["time"], "T", c.T, "time", ctx);
      get_num(j["time"], "courant", c.courant, "time", ctx);
      get_num(j["time"], "dt", c.dt, "time", ctx);
    }
  }
  if (j.contains("initial")) parse_initial(j["initial"], c.init, ctx);
  if (j.contains("disturbance")) parse_disturbance(j["disturbance"], c, ctx);
  if (j.contains("certificate")) parse_certificate(j["certificate"], c, ctx);
  if (j.contains("convergence")) {
    if (expect_object(j["convergence"], "convergence", ctx)) {
      check_keys(j["convergence"], "convergence", {"N_list"}, ctx);
      if (j["convergence"].contains("N_list")) {
        std::vector<double> ns;
        if (num_array(j["convergence"]["N_list"], ns, "convergence.N_list", ctx)) {
          c.N_list.clear();
          for (double v : ns) c.N_list.push_back(static_cast<int>(v));
        }
      }
    }
  }
  if (j.contains("sigma_sweep")) {
    if (expect_object(j["sigma_sweep"], "sigma_sweep", ctx)) {
      check_keys(j["sigma_sweep"], "sigma_sweep", {"sigmas"}, ctx);
      get_num_array(j["sigma_sweep"], "sigmas", c.sigmas, "sigma_sweep", ctx);
    }
  }

  // cross-field rules hold regardless of later semantic checks
  if (c.experiment.empty()) {
    ctx.error("config: an experiment must be chosen (config key or --experiment)");
  } else if (std::none_of(std::begin(kExperiments), std::end(kExperiments),
                          [&](const char* e) { return c.experiment == e; })) {
    ctx.error("config.experiment: unknown experiment '" + c.experiment + "'");
  } else {
    const bool is_ta = c.variant == ModelVariant::Thermoacoustic;
    const bool wants_ta = c.experiment == "thermoacoustic-equiv";
    if (is_ta && !wants_ta)
      ctx.error("config: the thermoacoustic variant only supports the thermoacoustic-equiv experiment");
    if (wants_ta && !is_ta)
      ctx.error("config: thermoacoustic-equiv needs variant 'thermoacoustic'");
    if (c.experiment == "sweep-sigma" && c.variant != ModelVariant::D)
      ctx.error("config: sweep-sigma needs variant 'D'");
  }

  if (!out.errors.empty()) return out;

  // semantic phase: build everything once and collect model violations
  try {
    Grid g(c.N);
    if (!(c.courant > 0.0)) ctx.error("time.courant must be positive");
    if (c.dt < 0.0) ctx.error("time.dt must be non-negative");
    if (!(c.T >= 0.0)) ctx.error("time.T must be non-negative");
    if (c.optimize) {
      if (!(c.r_lo > 0.0) || !(c.r_hi >= c.r_lo))
        ctx.error("certificate.r_range must satisfy 0 < lo <= hi");
    } else if (!(c.r > 0.0)) {
      ctx.error("certificate.r must be positive");
    }

    if (c.variant == ModelVariant::Thermoacoustic) {
      InitialData sinit = make_initial_data(c.init, ModelVariant::D, g);
      ThermoInitialData tinit = thermo_initial_from_string(sinit, c.ta, g);
      auto rep = validate(c.ta, tinit, g);
      for (const auto& v : rep.violations) ctx.error("model: " + v);
      for (const auto& w : rep.warnings) out.warnings.push_back("model: " + w);
    } else {
      InitialData init = make_initial_data(c.init, c.variant, g);
      DisturbanceSpec dist = build_disturbance(c, g);
      auto rep = validate(c.variant, c.params, dist, init, g);
      for (const auto& v : rep.violations) ctx.error("model: " + v);
      for (const auto& w : rep.warnings) out.warnings.push_back("model: " + w);
      if (out.errors.empty() && !c.optimize &&
          (c.experiment == "simulate" || c.experiment == "certify" ||
           c.experiment == "check-iss")) {
        try {
          make_certificate(c.variant, c.params, c.r);
        } catch (const std::exception& e) {
          ctx.error(std::string("certificate: ") + e.what());
        }
      }
    }
  } catch (const std::exception& e) {
    ctx.error(e.what());
  }
  return out;
}

DisturbanceSpec build_disturbance(const RunConfig& c, const Grid& g) {
  DisturbanceSpec out;
  out.d = c.d;
  switch (c.f_kind) {
    case RunConfig::FKind::Zero: break;
    case RunConfig::FKind::Separable:
      out.f.kind = SpaceTimeSignal::Kind::Separable;
      out.f.g = c.f_time;
      out.f.profile = sample_profile(c.f_profile, g);
      break;
    case RunConfig::FKind::Tabulated:
      out.f.kind = SpaceTimeSignal::Kind::Tabulated;
      out.f.times = c.f_times;
      out.f.frames = c.f_frames;
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// canonical form

namespace {

json profile_json(const ProfileSpec& p) {
  json j;
  switch (p.kind) {
    case ProfileSpec::Kind::Zero: j["kind"] = "zero"; break;
    case ProfileSpec::Kind::Sine:
      j["kind"] = "sine";
      j["amplitude"] = p.amplitude;
      j["mode"] = p.mode;
      break;
    case ProfileSpec::Kind::QuarterSine:
      j["kind"] = "quarter-sine";
      j["amplitude"] = p.amplitude;
      j["mode"] = p.mode;
      break;
    case ProfileSpec::Kind::Gaussian:
      j["kind"] = "gaussian";
      j["amplitude"] = p.amplitude;
      j["center"] = p.center;
      j["width"] = p.width;
      break;
    case ProfileSpec::Kind::Polynomial:
      j["kind"] = "polynomial";
      j["amplitude"] = p.amplitude;
      j["coefficients"] = p.coefficients;
      break;
    case ProfileSpec::Kind::Samples:
      j["kind"] = "samples";
      j["values"] = p.samples;
      break;
  }
  return j;
}

json signal_json(const TimeSignal& s) {
  json j;
  switch (s.kind) {
    case TimeSignalKind::Zero: j["kind"] = "zero"; break;
    case TimeSignalKind::Constant:
      j["kind"] = "constant";
      j["amplitude"] = s.amplitude;
      break;
    case TimeSignalKind::Sinusoid:
      j["kind"] = "sinusoid";
      j["amplitude"] = s.amplitude;
      j["frequency"] = s.frequency;
      j["phase"] = s.phase;
      break;
    case TimeSignalKind::Pulse:
      j["kind"] = "pulse";
      j["amplitude"] = s.amplitude;
      break;
    case TimeSignalKind::ExpDecay:
      j["kind"] = "exp-decay";
      j["amplitude"] = s.amplitude;
      j["rate"] = s.rate;
      break;
    case TimeSignalKind::Tabulated:
      j["kind"] = "tabulated";
      j["times"] = s.times;
      j["values"] = s.values;
      break;
  }
  if (s.windowed) j["support"] = {s.support_begin, s.support_end};
  return j;
}

}  // namespace

json canonical_config(const RunConfig& c) {
  json j;
  j["experiment"] = c.experiment;
  j["variant"] = variant_name(c.variant);
  j["out_dir"] = c.out_dir;
  j["params"] = {{"a", c.params.a},           {"c", c.params.c},   {"mu", c.params.mu},
                 {"b", c.params.b},           {"k", c.params.k},   {"lambda", c.params.lambda},
                 {"sigma", c.params.sigma}};
  j["thermo_params"] = {{"a", c.ta.a},         {"c", c.ta.c},
                        {"gamma", c.ta.gamma_fluid}, {"b", c.ta.b},
                        {"k", c.ta.k},         {"lambda", c.ta.lambda},
                        {"sigma", c.ta.sigma}};
  j["grid"] = {{"N", c.N}};
  j["time"] = {{"T", c.T}, {"courant", c.courant}, {"dt", c.dt}};
  j["initial"] = {{"u0", profile_json(c.init.u0)},
                  {"w0", profile_json(c.init.w0)},
                  {"theta0", profile_json(c.init.theta0)}};
  json f;
  switch (c.f_kind) {
    case RunConfig::FKind::Zero: f["kind"] = "zero"; break;
    case RunConfig::FKind::Separable:
      f["kind"] = "separable";
      f["time"] = signal_json(c.f_time);
      f["profile"] = profile_json(c.f_profile);
      break;
    case RunConfig::FKind::Tabulated:
      f["kind"] = "tabulated";
      f["times"] = c.f_times;
      f["frames"] = c.f_frames;
      break;
  }
  j["disturbance"] = {{"f", f}, {"d", signal_json(c.d)}};
  j["certificate"] = {{"r", c.r},
                      {"optimize", c.optimize},
                      {"r_range", {c.r_lo, c.r_hi}},
                      {"objective", c.objective == RObjective::MaximizeOmega
                                        ? "maximize-omega"
                                        : "minimize-gamma1"}};
  j["convergence"] = {{"N_list", c.N_list}};
  j["sigma_sweep"] = {{"sigmas", c.sigmas}};
  return j;
}

std::vector<std::string> apply_overrides(json& j, const std::vector<std::string>& overrides) {
  std::vector<std::string> errors;
  for (const auto& kv : overrides) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      errors.push_back("override '" + kv + "': expected key=value");
      continue;
    }
    std::string path = kv.substr(0, eq);
    std::string value = kv.substr(eq + 1);

    json parsed;
    try {
      parsed = json::parse(value);
    } catch (const nlohmann::json::parse_error&) {
      parsed = value;  // plain string
    }

    json* cur = &j;
    std::size_t begin = 0;
    bool bad = false;
    while (true) {
      auto dot = path.find('.', begin);
      std::string part = path.substr(begin, dot == std::string::npos ? dot : dot - begin);
      if (part.empty()) {
        errors.push_back("override '" + kv + "': empty path component");
        bad = true;
        break;
      }
      if (dot == std::string::npos) {
        (*cur)[part] = parsed;
        break;
      }
      if (!cur->contains(part)) (*cur)[part] = json::object();
      if (!(*cur)[part].is_object()) {
        errors.push_back("override '" + kv + "': '" + part + "' is not an object");
        bad = true;
        break;
      }
      cur = &(*cur)[part];
      begin = dot + 1;
    }
    (void)bad;
  }
  return errors;
}

}  // namespace wavelab::cli
