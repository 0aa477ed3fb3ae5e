#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "report.hpp"

namespace qinv::cli {

struct RunConfig {
  std::string command;
  std::optional<std::string> family;
  std::optional<int> rank;
  int copies = 1;
  std::optional<int> k, l, m, n;
  std::optional<int> max_degree;
  std::optional<unsigned long long> fuel;
  bool strict_paper = false;
  bool sigma = false;
  std::string format = "json";
  std::string output;
  bool verbose = false;
};

// A malformed or unsupported parameter combination; `field` names the flag.
struct ConfigError : std::runtime_error {
  ConfigError(std::string f, const std::string& msg) : std::runtime_error(msg), field(std::move(f)) {}
  std::string field;
};

std::vector<std::string> command_names();
Report execute(const RunConfig& cfg);
// The full acceptance matrix in one report.
Report run_grid(const RunConfig& cfg);

// Parses argv, runs, writes the report. Exit code 0 = pass, 1 = a check
// failed, 2 = usage or configuration error.
int run(int argc, const char* const* argv);

}  // namespace qinv::cli
