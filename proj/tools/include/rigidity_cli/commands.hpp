#pragma once

#include <filesystem>
#include <optional>
#include <ostream>

namespace rigidity::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kToleranceViolation = 2,
  kOracleDisagreement = 3,
};

struct IntersectionConfig {
  std::filesystem::path origami;
  int samples = 360;
  double length_bound = 10.0;
  double tolerance = 1e-9;
  std::optional<std::filesystem::path> out;  // CSV profile
};

struct HorocycleConfig {
  double tolerance = 1e-9;
  double theta_twist = 0.0;
  std::optional<std::filesystem::path> out;
};

struct SmoothnessConfig {
  std::filesystem::path input;
  double epsilon = 0.05;
  int degree = 8;
  int samples = 201;
  std::optional<double> radius;  // monodromy circle; chosen from branch points if unset
  std::optional<std::filesystem::path> out;
};

// Each command writes its JSON report to `out` and diagnostics to `err`,
// and returns an ExitCode.
int cmd_intersection(const IntersectionConfig& config, std::ostream& out, std::ostream& err);
int cmd_horocycle(const HorocycleConfig& config, std::ostream& out, std::ostream& err);
int cmd_smoothness(const SmoothnessConfig& config, std::ostream& out, std::ostream& err);

// Parses argv and dispatches to a command.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rigidity::cli
