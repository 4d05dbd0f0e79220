#pragma once

#include <string>
#include <vector>

namespace nlsa {

struct CliResult {
  int exit = 0;  // 0 pass, 1 input error, 2 property failure
  std::string out;
  std::string err;
};

/// Runs one command; args exclude the program name.
[[nodiscard]] CliResult run_cli(const std::vector<std::string>& args);

}  // namespace nlsa
