#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "normalcone/ring.hpp"

namespace normalcone {

inline constexpr const char* kReportSchema = "normalcone.report/1";

/// Process exit codes of `normalcone run`.
enum class ExitCode : int { Ok = 0, CheckFailed = 1, ScriptError = 2, ResourceError = 3 };

enum class ReportFormat { Text, Json };

struct RunOptions {
  /// Override the seed / trial count of every randomized command.
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  /// Replaces the ring's trunc cap.
  std::optional<int> trunc_override;
  ReportFormat format = ReportFormat::Json;
  /// Stop after the first command that does not succeed.
  bool fail_fast = false;
};

struct RunResult {
  ExitCode exit_code = ExitCode::Ok;
  std::string report;  ///< rendered in the requested format
  std::size_t commands = 0;
  std::size_t ok = 0;
  std::size_t check_failed = 0;
  std::size_t errors = 0;
};

/// Parses, checks and executes a script. Never throws for script or
/// computation errors: they become report entries and exit codes.
RunResult run_script(std::string_view text, const RunOptions& options = {});

/// Parses a comma-separated polynomial list in the script syntax over R,
/// e.g. "x^2 - y^3, 2/3*x*y". Throws script::ScriptError.
std::vector<Polynomial> parse_polynomials(const Ring& R, std::string_view text);

/// Library version string.
const char* version();

}  // namespace normalcone
