// Command-line front end. Problems are described by flags or by a JSON file
// (flags win); results go to report.json, samples.csv and, with the viscous
// oracle enabled, viscous.csv.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "elasto/numerics.hpp"

namespace elasto::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitVerification = 3;
inline constexpr int kReportSchema = 1;

enum class Mode { Exact, ExactViscous };

struct ViscousOptions {
  double epsilon = 0.005;
  int nx = 2000;
  double cfl = 0.9;
};

struct ProblemConfig {
  double k = 1.0;
  double u_b = 0.0;
  double sigma_b = 0.0;
  double u_0 = 0.0;
  double sigma_0 = 0.0;
  double t = 1.0;
  double x_max = 1.0;
  int nx = 100;
  Mode mode = Mode::Exact;
  ViscousOptions viscous;
  std::filesystem::path out = ".";
};

/// Throws config_error whose message starts with the offending field name.
void validate(const ProblemConfig& cfg);

/// Reads the JSON form of a config on top of base. Unknown keys are errors.
ProblemConfig load_config(const std::filesystem::path& path, ProblemConfig base = {});

/// Solves, verifies and writes the artifacts. Returns an exit code.
int run(const ProblemConfig& cfg, std::ostream& diag);

/// Entry point used by the elasto executable.
int main(int argc, char** argv);

}  // namespace elasto::cli
