#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "abflux/config.hpp"
#include "abflux/verify.hpp"

namespace abflux::cli {

enum ExitCode { ok = 0, verification_failed = 1, usage_error = 2, io_error = 3 };

struct RunOutcome {
  int exit_code = ok;
  std::vector<std::filesystem::path> files;
  std::vector<verify::OracleReport> reports;
};

// Execute the requested outputs (cfg.outputs) and write one file per output.
RunOutcome run(const RunConfig& cfg, const std::filesystem::path& out_dir, unsigned threads = 1);

// Single output; returns the document text without touching the file system.
std::string render(const RunConfig& cfg, const std::string& output, unsigned threads, bool& all_passed,
                   std::vector<verify::OracleReport>* reports = nullptr);

// Verification suite for a configuration (oracles plus invariant probes), sorted by name.
std::vector<verify::OracleReport> verification_suite(const RunConfig& cfg, unsigned threads);

nlohmann::json config_json(const RunConfig& cfg);
nlohmann::json report_json(const verify::OracleReport& r);

// Run fn(i) for i in [0, n) on up to `threads` workers.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace abflux::cli
