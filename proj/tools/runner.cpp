#include "runner.hpp"

#include <cstdint>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "wavelab/harness.hpp"
#include "wavelab/solver.hpp"

namespace wavelab::cli {

namespace fs = std::filesystem;

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char ch : bytes) {
    hash ^= ch;
    hash *= 0x100000001b3ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

namespace {

constexpr const char* kToolVersion = "0.1.0";

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string series_csv(const IssCheckReport& rep) {
  std::string out = "t,LHS,RHS,V,E,Phi,W,margin\n";
  for (std::size_t i = 0; i < rep.t.size(); ++i) {
    out += g17(rep.t[i]) + "," + g17(rep.lhs[i]) + "," + g17(rep.rhs[i]) + "," +
           g17(rep.V[i]) + "," + g17(rep.E[i]) + "," + g17(rep.Phi[i]) + "," + g17(rep.W[i]) +
           "," + g17(rep.margin[i]) + "\n";
  }
  return out;
}

std::string sweep_csv(const SigmaSweepReport& rep) {
  std::string out = "sigma,omega,gamma,M,C1\n";
  for (const auto& row : rep.rows)
    out += g17(row.sigma) + "," + g17(row.omega) + "," + g17(row.gamma) + "," + g17(row.M) +
           "," + g17(row.C1) + "\n";
  return out;
}

std::string utc_now() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int theorem_for(ModelVariant v) {
  switch (v) {
    case ModelVariant::A:
    case ModelVariant::B: return 1;
    case ModelVariant::C: return 2;
    case ModelVariant::D: return 3;
    default: throw std::invalid_argument("no certificate theorem for this variant");
  }
}

struct Session {
  const RunConfig& cfg;
  std::vector<std::pair<std::string, std::string>> artifacts;
  std::vector<std::string> notes;
  bool all_passed = true;
  bool truncated = false;

  void add(const std::string& name, const std::string& content) {
    artifacts.emplace_back(name, content);
  }
  void note(const std::string& n) { notes.push_back(n); }

  IssCertificate certificate() {
    if (cfg.optimize) {
      auto opt = optimize_r(theorem_for(cfg.variant), cfg.params, cfg.r_lo, cfg.r_hi,
                            cfg.objective);
      note("optimized r = " + g17(opt.r) +
           (opt.at_boundary ? " (at the range boundary)" : ""));
      return opt.best;
    }
    return make_certificate(cfg.variant, cfg.params, cfg.r);
  }

  Trajectory simulate(const Grid& g, double dt) {
    InitialData init = make_initial_data(cfg.init, cfg.variant, g);
    DisturbanceSpec dist = build_disturbance(cfg, g);
    Trajectory traj = run(cfg.variant, cfg.params, g, init, dist, dt, cfg.T);
    if (traj.aborted) {
      truncated = true;
      all_passed = false;
      note("run aborted: " + traj.abort_reason);
    }
    return traj;
  }
};

json summary_json(const Session& s, const Grid& g, double dt, const Trajectory& traj,
                  const IssCheckReport& rep) {
  json j;
  j["experiment"] = s.cfg.experiment;
  j["variant"] = variant_name(s.cfg.variant);
  j["N"] = g.N;
  j["dt"] = dt;
  j["T"] = s.cfg.T;
  j["samples"] = traj.states.size();
  j["time_remainder"] = traj.time_remainder;
  j["aborted"] = traj.aborted;
  if (traj.aborted) j["abort_reason"] = traj.abort_reason;
  if (!rep.t.empty()) {
    j["final"] = {{"t", rep.t.back()},
                  {"LHS", rep.lhs.back()},
                  {"V", rep.V.back()},
                  {"E", rep.E.back()}};
  }
  return j;
}

void dispatch(Session& s) {
  const RunConfig& cfg = s.cfg;

  if (cfg.experiment == "certify") {
    IssCertificate cert = s.certificate();
    s.add("certificate.json", to_json(cert));
    s.note("certificate: omega = " + g17(cert.omega) +
           (cert.theorem == 3 ? ", gamma = " + g17(cert.gamma)
                              : ", gamma1 = " + g17(cert.gamma1) +
                                    ", gamma2 = " + g17(cert.gamma2)));
    return;
  }

  if (cfg.experiment == "sweep-sigma") {
    SigmaSweepReport rep = sigma_sweep(cfg.params, cfg.sigmas, cfg.r);
    s.add("sigma_sweep.json", to_json(rep));
    s.add("sigma_sweep.csv", sweep_csv(rep));
    s.all_passed = rep.gamma_increasing && rep.omega_decreasing;
    s.note("gamma ratio over the sweep: " + g17(rep.gamma_ratio));
    return;
  }

  if (cfg.experiment == "converge") {
    ConvergenceCase cc;
    cc.variant = cfg.variant;
    cc.params = cfg.params;
    cc.init = cfg.init;
    cc.disturbance = [&cfg](const Grid& gg) { return build_disturbance(cfg, gg); };
    cc.courant = cfg.courant;
    cc.T = cfg.T;
    OrderTable table = convergence_study(cc, cfg.N_list);
    s.add("convergence.json", to_json(table));
    s.all_passed = table.exact || table.observed_order >= 1.7;
    s.note(table.exact ? "solutions agree to rounding on every grid"
                       : "observed order " + g17(table.observed_order));
    return;
  }

  if (cfg.experiment == "thermoacoustic-equiv") {
    EquivalenceReport rep =
        thermoacoustic_equivalence(cfg.ta, cfg.init, cfg.N_list, cfg.courant, cfg.T);
    s.add("equivalence.json", to_json(rep));
    bool ok = true;
    for (std::size_t i = 0; i < rep.ratios.size(); ++i) {
      if (rep.ratios[i] < 0.75 * rep.expected_factors[i] ||
          rep.ratios[i] > 1.25 * rep.expected_factors[i])
        ok = false;
    }
    s.all_passed = ok;
    for (std::size_t i = 0; i < rep.ratios.size(); ++i)
      s.note("discrepancy drop " + std::to_string(rep.rows[i].N) + " -> " +
             std::to_string(rep.rows[i + 1].N) + ": " + g17(rep.ratios[i]) + " (expected about " +
             g17(rep.expected_factors[i]) + ")");
    return;
  }

  // simulate and check-iss share the trajectory pipeline
  Grid g(cfg.N);
  const double dt = cfg.dt > 0.0 ? cfg.dt : default_dt(g, cfg.params.c, cfg.courant);
  IssCertificate cert = s.certificate();
  Trajectory traj = s.simulate(g, dt);
  IssCheckReport rep = check_iss(cfg.variant, cfg.params, traj, cert);
  s.add("series.csv", series_csv(rep));

  if (cfg.experiment == "simulate") {
    s.add("summary.json", summary_json(s, g, dt, traj, rep).dump(1) + "\n");
    return;
  }

  // check-iss
  s.add("certificate.json", to_json(cert));
  s.add("iss_report.json", to_json(rep, cert));
  DecayFit fit = fit_decay(rep.t, rep.V, 2.0 * cert.omega);
  s.add("decay_fit.json", to_json(fit));
  if (!rep.pass) s.all_passed = false;
  s.note(std::string("certified estimate ") + (rep.pass ? "holds" : "FAILS") +
         ", min margin " + g17(rep.margin_min));
}

}  // namespace

ExecResult execute(const RunConfig& cfg) {
  ExecResult out;
  Session s{cfg, {}, {}, true, false};
  std::string status = "ok";

  try {
    dispatch(s);
  } catch (const std::invalid_argument& e) {
    s.note(std::string("error: ") + e.what());
    status = "error";
    out.exit_code = 2;
  } catch (const std::out_of_range& e) {
    s.note(std::string("error: ") + e.what());
    status = "error";
    out.exit_code = 2;
  } catch (const std::exception& e) {
    s.note(std::string("error: ") + e.what());
    status = "error";
    out.exit_code = 3;
  }

  if (out.exit_code == 0) {
    if (s.truncated) {
      status = "truncated";
      out.exit_code = 3;
    } else if (!s.all_passed) {
      status = "failed";
      out.exit_code = 1;
    }
  }

  fs::create_directories(cfg.out_dir);
  json files = json::array();
  for (const auto& [name, content] : s.artifacts) {
    std::ofstream f(fs::path(cfg.out_dir) / name, std::ios::binary);
    f << content;
    files.push_back({{"path", name}, {"bytes", content.size()}, {"fnv1a64", fnv1a64_hex(content)}});
    out.files.push_back(name);
  }

  json manifest;
  manifest["tool"] = "wavelab";
  manifest["version"] = kToolVersion;
  manifest["experiment"] = cfg.experiment;
  manifest["variant"] = variant_name(cfg.variant);
  manifest["generated_at"] = utc_now();
  manifest["status"] = status;
  manifest["all_passed"] = s.all_passed && status == "ok";
  manifest["truncated"] = s.truncated;
  manifest["notes"] = s.notes;
  manifest["config"] = canonical_config(cfg);
  manifest["files"] = files;
  {
    std::ofstream f(fs::path(cfg.out_dir) / "manifest.json", std::ios::binary);
    f << manifest.dump(1) << "\n";
  }
  out.files.push_back("manifest.json");

  out.all_passed = s.all_passed && status == "ok";
  out.truncated = s.truncated;
  out.notes = s.notes;
  return out;
}

}  // namespace wavelab::cli
