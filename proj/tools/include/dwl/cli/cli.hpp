#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dwl/landau.hpp"

namespace dwl::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;

  int n = 1;
  int n_max = 5;
  int r = 1;
  std::string spin = "+";

  // physics: either dimensionless lists or one physical point
  std::vector<double> eps{1.0};
  std::vector<double> kappa{1.0};
  std::optional<double> m, eB, kz, ky;

  int grid_points = 512;
  double grid_pad = 6.0;
  bool with_quadrature = false;

  std::string quantity = "purity";
  std::string concurrence_route = "closed";
  std::string format;  // empty: command default
  std::string out;     // empty: stdout

  int probe_points = 21;
  double probe_extent = 4.0;

  double tolerance_scale = 1.0;

  bool physical() const { return m || eB || kz || ky; }
  /// One parameter set per (eps, kappa) pair, or the single physical point.
  std::vector<landau::PhysParams> param_sets() const;
  landau::Spin spin_value() const;
  landau::Parity parity_value() const;
};

/// Parses argv into a RunConfig (flags > config file > defaults). Throws
/// UsageError on invalid input. Returns nullopt when help was printed.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Range checks shared by all commands. Throws UsageError.
void validate(const RunConfig& cfg);

int cmd_sweep(const RunConfig& cfg, std::ostream& out);
int cmd_field(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_wigner_dump(const RunConfig& cfg, std::ostream& out);

/// Full entry point: parse, dispatch, route output to --out or out, map
/// errors to exit codes with a message on err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dwl::cli
