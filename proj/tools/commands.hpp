#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "superholonomy/json_io.hpp"

namespace superholonomy::cli {

constexpr std::uint64_t kDefaultSeed = 20240611;

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2 };

struct RunConfig {
  std::string command;
  int m = 1;
  int n = 1;
  int N = 2;
  double tol = 1e-10;
  /// 0 selects the command's default.
  int samples = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "text";
  std::string out;
  /// Debug: perturb one structure constant before checking closure.
  bool tamper = false;
};

struct CommandResult {
  int exit_code = kPass;
  std::string summary;
  Json json;
};

/// Thrown for invalid sizes or unsupported groups.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CommandResult cmd_jacobi(const RunConfig& cfg);
CommandResult cmd_membership(const RunConfig& cfg);
CommandResult cmd_sectors(const RunConfig& cfg);
CommandResult cmd_moduli(const RunConfig& cfg);
CommandResult cmd_closure(const RunConfig& cfg);
CommandResult cmd_report(const RunConfig& cfg);

CommandResult dispatch(const RunConfig& cfg);

/// summary line followed by key=value lines, or the JSON document.
std::string render(const CommandResult& r, const std::string& format);

/// Full command-line entry point; returns the process exit code.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace superholonomy::cli
