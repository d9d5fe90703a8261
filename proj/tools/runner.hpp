#pragma once
// Executes a parsed run configuration and writes the artifact set: CSV
// series, JSON reports, and a manifest with content hashes.

#include <string>
#include <vector>

#include "config.hpp"

namespace wavelab::cli {

// 0 all checks passed; 1 a check failed; 2 bad configuration; 3 run aborted
struct ExecResult {
  int exit_code = 0;
  bool all_passed = false;
  bool truncated = false;
  std::vector<std::string> files;  // relative to out_dir, manifest last
  std::vector<std::string> notes;
};

ExecResult execute(const RunConfig& cfg);

std::string fnv1a64_hex(const std::string& bytes);

}  // namespace wavelab::cli
