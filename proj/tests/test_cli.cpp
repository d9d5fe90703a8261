#include <doctest.h>

#include "config.hpp"
#include "runner.hpp"

#include <wavelab/grid.hpp>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

using namespace wavelab;
using wavelab::cli::RunConfig;
using json = nlohmann::ordered_json;

namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
  static int counter = 0;
  fs::path p = fs::temp_directory_path() /
               ("wavelab_cli_" + std::to_string(::getpid()) + "_" + tag + "_" +
                std::to_string(counter++));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  CliResult res;
  const std::string cmd = std::string(WAVELAB_CLI_BIN) + " " + args + " 2>&1";
  FILE* p = ::popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) res.output.append(buf, n);
  const int rc = ::pclose(p);
  if (WIFEXITED(rc)) res.exit_code = WEXITSTATUS(rc);
  return res;
}

fs::path write_config(const fs::path& dir, const json& j) {
  fs::path file = dir / "config.json";
  std::ofstream out(file);
  out << j.dump(1) << "\n";
  return file;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json viscous_config(const char* experiment) {
  return json{{"experiment", experiment},
              {"variant", "B"},
              {"params", {{"mu", 0.5}}},
              {"grid", {{"N", 64}}},
              {"time", {{"T", 5.0}}},
              {"initial", {{"preset", "sine"}}},
              {"disturbance",
               {{"f",
                 {{"kind", "separable"},
                  {"time", {{"kind", "sinusoid"}, {"amplitude", 1.0}, {"frequency", 3.0}}},
                  {"profile", {{"kind", "sine"}}}}},
                {"d", {{"kind", "sinusoid"}, {"amplitude", 1.0}, {"frequency", 3.0}}}}}};
}

}  // namespace

TEST_CASE("minimal config fills in defaults") {
  json j = {{"experiment", "certify"}, {"variant", "B"}, {"params", {{"mu", 0.5}}}};
  auto res = cli::parse_config(j);
  REQUIRE(res.ok());
  REQUIRE(res.config.N == 256);
  REQUIRE(res.config.T == 10.0);
  REQUIRE(res.config.courant == 1.0);
  REQUIRE(res.config.r == 1.0);
  REQUIRE_FALSE(res.config.optimize);
  REQUIRE(res.config.out_dir == "out");
}

TEST_CASE("schema problems are reported together") {
  json j = {{"experiment", "simulate"},
            {"variant", "B"},
            {"grid", {{"M", 12}}},
            {"bogus", 1},
            {"time", {{"T", "soon"}}}};
  auto res = cli::parse_config(j);
  REQUIRE_FALSE(res.ok());
  REQUIRE(res.errors.size() >= 3);
}

TEST_CASE("semantic problems are reported together") {
  json j = {{"experiment", "simulate"},
            {"variant", "D"},
            {"params", {{"sigma", 0.0}}},
            {"time", {{"courant", -1.0}}}};
  auto res = cli::parse_config(j);
  REQUIRE_FALSE(res.ok());
  REQUIRE(res.errors.size() >= 2);
}

TEST_CASE("experiment and variant cross rules") {
  SUBCASE("unknown experiment") {
    json j = {{"experiment", "frobnicate"}, {"variant", "B"}};
    auto res = cli::parse_config(j);
    REQUIRE_FALSE(res.ok());
  }
  SUBCASE("fluid variant needs the equivalence experiment") {
    json j = {{"experiment", "simulate"}, {"variant", "thermoacoustic"}};
    REQUIRE_FALSE(cli::parse_config(j).ok());
  }
  SUBCASE("equivalence experiment needs the fluid variant") {
    json j = {{"experiment", "thermoacoustic-equiv"}, {"variant", "D"},
              {"params", {{"sigma", 0.5}}}};
    REQUIRE_FALSE(cli::parse_config(j).ok());
  }
  SUBCASE("viscosity sweep needs the interior damped variant") {
    json j = {{"experiment", "sweep-sigma"}, {"variant", "B"}};
    REQUIRE_FALSE(cli::parse_config(j).ok());
  }
}

TEST_CASE("canonical config echo is a fixed point") {
  json j = viscous_config("check-iss");
  auto first = cli::parse_config(j);
  REQUIRE(first.ok());
  json canon = cli::canonical_config(first.config);
  auto second = cli::parse_config(canon);
  REQUIRE(second.ok());
  REQUIRE(cli::canonical_config(second.config) == canon);
}

TEST_CASE("overrides rewrite nested keys") {
  json j = {{"experiment", "certify"}, {"variant", "B"}, {"params", {{"mu", 0.5}}}};
  auto errs = cli::apply_overrides(
      j, {"variant=D", "params.sigma=0.25", "grid.N=128", "certificate.r=2.0"});
  REQUIRE(errs.empty());
  auto res = cli::parse_config(j);
  REQUIRE(res.ok());
  REQUIRE(res.config.variant == ModelVariant::D);
  REQUIRE(res.config.params.sigma == 0.25);
  REQUIRE(res.config.N == 128);
  REQUIRE(res.config.r == 2.0);

  auto bad = cli::apply_overrides(j, {"no_equals_sign"});
  REQUIRE_FALSE(bad.empty());
}

TEST_CASE("initial data can come from a csv file") {
  auto dir = fresh_dir("csv");
  {
    std::ofstream csv(dir / "init.csv");
    csv << "u0,w0\n";
    for (int i = 0; i <= 16; ++i) csv << 0.0 << "," << 0.0 << "\n";
  }
  json j = {{"experiment", "simulate"},
            {"variant", "B"},
            {"params", {{"mu", 0.5}}},
            {"grid", {{"N", 16}}},
            {"initial", {{"preset", "tabulated"}, {"file", "init.csv"}}}};
  auto res = cli::parse_config(j, dir.string());
  REQUIRE(res.ok());

  json missing = j;
  missing["initial"]["file"] = "nope.csv";
  REQUIRE_FALSE(cli::parse_config(missing, dir.string()).ok());
}

TEST_CASE("separable force is sampled on the run grid") {
  json j = viscous_config("simulate");
  auto res = cli::parse_config(j);
  REQUIRE(res.ok());
  Grid g(16);
  auto dist = cli::build_disturbance(res.config, g);
  REQUIRE(dist.f.kind == SpaceTimeSignal::Kind::Separable);
  REQUIRE(dist.f.profile.size() == static_cast<std::size_t>(g.nodes()));
}

TEST_CASE("cli certify writes a certificate and a manifest") {
  auto dir = fresh_dir("certify");
  json j = {{"experiment", "certify"},
            {"variant", "D"},
            {"params", {{"mu", 0.5}, {"sigma", 0.5}}}};
  auto cfg = write_config(dir, j);
  auto out = (dir / "out").string();
  auto res = run_cli("--config " + cfg.string() + " --out " + out);
  INFO(res.output);
  REQUIRE(res.exit_code == 0);
  REQUIRE(fs::exists(dir / "out" / "certificate.json"));
  REQUIRE(fs::exists(dir / "out" / "manifest.json"));

  auto manifest = json::parse(slurp(dir / "out" / "manifest.json"));
  REQUIRE(manifest.at("status").get<std::string>() == "ok");
  REQUIRE(manifest.at("all_passed").get<bool>());
  REQUIRE(manifest.at("experiment").get<std::string>() == "certify");

  // recorded hashes match the bytes on disk
  for (const auto& f : manifest.at("files")) {
    const auto path = dir / "out" / f.at("path").get<std::string>();
    const auto bytes = slurp(path);
    REQUIRE(bytes.size() == f.at("bytes").get<std::size_t>());
    REQUIRE(cli::fnv1a64_hex(bytes) == f.at("fnv1a64").get<std::string>());
  }

  auto cert = json::parse(slurp(dir / "out" / "certificate.json"));
  REQUIRE(cert.at("theorem").get<int>() == 3);
  REQUIRE(cert.at("constants").at("omega").get<double>() > 0.0);
}

TEST_CASE("cli runs are reproducible apart from the timestamp") {
  auto dir = fresh_dir("repro");
  json j = {{"experiment", "certify"},
            {"variant", "C"},
            {"params", {{"mu", 0.5}}},
            {"certificate", {{"r", 1.5}}}};
  auto cfg = write_config(dir, j);
  auto r1 = run_cli("--config " + cfg.string() + " --out " + (dir / "a").string());
  auto r2 = run_cli("--config " + cfg.string() + " --out " + (dir / "b").string());
  REQUIRE(r1.exit_code == 0);
  REQUIRE(r2.exit_code == 0);
  REQUIRE(slurp(dir / "a" / "certificate.json") == slurp(dir / "b" / "certificate.json"));
  auto m1 = json::parse(slurp(dir / "a" / "manifest.json"));
  auto m2 = json::parse(slurp(dir / "b" / "manifest.json"));
  m1.erase("generated_at");
  m2.erase("generated_at");
  m1.at("config").erase("out_dir");
  m2.at("config").erase("out_dir");
  REQUIRE(m1 == m2);
}

TEST_CASE("cli check-iss passes on a disturbed viscous run") {
  auto dir = fresh_dir("checkiss");
  auto cfg = write_config(dir, viscous_config("check-iss"));
  auto out = (dir / "out").string();
  auto res = run_cli("--config " + cfg.string() + " --out " + out);
  INFO(res.output);
  REQUIRE(res.exit_code == 0);
  auto rep = json::parse(slurp(dir / "out" / "iss_report.json"));
  REQUIRE(rep.at("pass").get<bool>());
  REQUIRE(fs::exists(dir / "out" / "decay_fit.json"));

  const auto series = slurp(dir / "out" / "series.csv");
  REQUIRE(series.rfind("t,LHS,RHS,V,E,Phi,W,margin\n", 0) == 0);
}

TEST_CASE("cli rejects a broken configuration with exit code 2") {
  auto dir = fresh_dir("badcfg");
  json j = {{"experiment", "frobnicate"}, {"variant", "B"}};
  auto cfg = write_config(dir, j);
  auto res = run_cli("--config " + cfg.string() + " --out " + (dir / "out").string());
  REQUIRE(res.exit_code == 2);
  REQUIRE(res.output.find("configuration rejected") != std::string::npos);
}

TEST_CASE("cli reports an aborted run with exit code 3") {
  auto dir = fresh_dir("abort");
  json j = {{"experiment", "simulate"},
            {"variant", "B"},
            {"params", {{"mu", 0.5}}},
            {"grid", {{"N", 32}}},
            {"time", {{"T", 1.0}}},
            {"disturbance",
             {{"d",
               {{"kind", "tabulated"},
                {"times", {0.0, 10.0}},
                {"values", {1.7e308, 1.7e308}}}}}}};
  auto cfg = write_config(dir, j);
  auto res = run_cli("--config " + cfg.string() + " --out " + (dir / "out").string());
  INFO(res.output);
  REQUIRE(res.exit_code == 3);
  auto manifest = json::parse(slurp(dir / "out" / "manifest.json"));
  REQUIRE(manifest.at("status").get<std::string>() == "truncated");
  REQUIRE(manifest.at("truncated").get<bool>());
}
