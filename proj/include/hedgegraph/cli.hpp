#ifndef HEDGEGRAPH_CLI_HPP
#define HEDGEGRAPH_CLI_HPP

#include <string>
#include <string_view>
#include <vector>

namespace hedge::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
  kSuccess = 0,
  kInfeasible = 1,  // a certificate of infeasibility was emitted
  kInputError = 2,
  kOracleLimit = 3,
};

struct Outcome {
  int exit_code = kSuccess;
  std::string out;  // one JSON document
  std::string err;  // diagnostics and --certificate text
};

/// Runs one command. `args` excludes the program name.
Outcome run(const std::vector<std::string>& args);

/// "fnv1a64:" followed by 16 lowercase hex digits.
std::string fnv1a_digest(std::string_view bytes);

}  // namespace hedge::cli

#endif  // HEDGEGRAPH_CLI_HPP
