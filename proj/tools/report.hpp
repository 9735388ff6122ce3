#pragma once

#include <string>
#include <utility>
#include <vector>

#include "homalg/check_report.hpp"

namespace homalg::cli {

inline constexpr const char* tool_name = "homalg";
inline constexpr const char* tool_version = HOMALG_VERSION;

std::string sha256_hex(const std::string& bytes);

struct Report {
  std::string verb, kind;
  std::vector<std::pair<std::string, std::string>> params;
  // (path, sha256 of the file contents)
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::string> outputs;
  // (label, checks)
  std::vector<std::pair<std::string, CheckReport>> sections;

  void add_input(const std::string& path);
  bool passed() const;
  std::string text() const;
  std::string jsonl() const;
};

// Checks over the built-in examples; every section should pass.
Report example_suite();

}  // namespace homalg::cli
