#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qosc/cyclic.hpp"
#include "qosc/report.hpp"

namespace qosc::cli {

enum ExitCode : int { kPass = 0, kRelationFailure = 1, kUsage = 2, kResource = 3 };

struct RunConfig {
  std::string subcommand;
  int n_modes = 1;
  std::optional<int> order;
  std::optional<double> q_real;
  std::string realization = "fock";
  std::optional<int> cutoff;
  /// Unset: 200 terms, raised for Jackson sums until the tail is below 1e-14.
  std::optional<int> truncation;
  double tolerance = kDefaultTolerance;
  ExponentMode exponent_mode = ExponentMode::Linear;
  std::string output_path;
  std::size_t cap = kDefaultDimensionCap;

  // virasoro
  std::optional<int> window;
  std::optional<int> extra_m;
  bool classical_limit = false;

  // qcalc
  std::string qcalc_op;
  std::optional<long long> x;
  std::optional<int> n;
  std::optional<int> moment;
  std::optional<long long> half_m;
};

/// Applies the values of a JSON config document onto `config`.
/// Keys: n, N, q_real, realization, cutoff, truncation, tolerance,
/// exponent_mode, out, cap, window.
void apply_config_file(const nlohmann::json& doc, RunConfig& config);

/// Enforces realization/parameter compatibility; throws Usage.
void validate(const RunConfig& config);

struct CommandResult {
  int exit_code = kPass;
  ConformanceReport report;
};

CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_virasoro(const RunConfig& config);
int cmd_qcalc(const RunConfig& config, std::ostream& out);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Timestamp override for reproducible output (tests); empty means now.
void set_fixed_timestamp(std::string timestamp);

}  // namespace qosc::cli
