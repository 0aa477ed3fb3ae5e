#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace qinv::cli {

struct Entry {
  std::string citation;
  std::string instance;
  std::string residual;  // rendered; empty when zero
  bool pass = false;
};

struct Suite {
  std::string name;
  std::vector<Entry> entries;
  // printed readings that disagree with the gated ones; they gate only
  // under --strict-paper
  std::vector<Entry> variants;
  std::vector<std::string> notes;
};

struct Report {
  nlohmann::ordered_json config;
  std::vector<Suite> suites;
  bool strict_paper = false;
  bool verbose = false;

  bool pass() const;
  nlohmann::ordered_json to_json() const;
  void write_text(std::ostream& os) const;
};

}  // namespace qinv::cli
