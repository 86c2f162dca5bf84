#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace ncqm::cfg {

/// Run configuration shared by the CLI, the C API and the suite engine.
/// theta, when supplied, overrides lambda via lambda = theta m^2.
struct RunConfig {
  double m = 1.0;
  double lambda = 0.5;
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
  int grid_n = 128;
  double grid_l = 10.0;
  int phase_n = 24;
  double phase_l = 6.0;
  std::uint64_t seed = 1;
  bool fast = false;
  std::string out;       // report file; empty = stdout
  std::string dump_dir;  // when set, suites dump probe states here

  std::optional<double> theta_override;
  bool lambda_explicit = false;

  double theta() const { return lambda / (m * m); }

  /// Resolves theta/lambda and validates ranges; throws std::invalid_argument.
  void finalize();
};

/// Applies a single "key = value" assignment. Unknown keys are rejected.
void apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value);

/// Plain-text config: one key = value per line, '#' starts a comment.
RunConfig parse_config_file(const std::string& path, RunConfig base = {});

}  // namespace ncqm::cfg
