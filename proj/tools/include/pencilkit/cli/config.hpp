#pragma once

// Problem configuration: where the pencil comes from, which tasks to run and
// the tolerance overrides. Read from JSON or assembled from command-line flags.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pencilkit/errors.hpp"
#include "pencilkit/tolerances.hpp"

namespace pencilkit::cli {

/// Invalid configuration; reported with exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class SourceKind { none, matrix_files, generator };

struct ProblemConfig {
  SourceKind source = SourceKind::none;
  std::string a_path;
  std::string b_path;
  std::string generator;
  nlohmann::json parameters = nlohmann::json::object();

  std::vector<std::string> tasks;
  Tolerances tolerances;
  nlohmann::json tolerance_overrides = nlohmann::json::object();
  std::optional<std::uint64_t> seed;

  // Per-task options.
  int verify_cases = 200;
  int verify_max_dim = 6;
  int bounds_trials = 8;
  int bounds_trial_dim = 0;  // 0: half the dimension, at least 1
  std::vector<std::vector<std::vector<double>>> trial_subspaces;  // lists of columns
  std::vector<int> residual_sizes{32, 64, 128};

  /// Checks task names, tolerance signs and that a source is present when a
  /// task needs one. Throws ConfigError.
  void validate() const;
  nlohmann::json to_json() const;
};

const std::vector<std::string>& known_tasks();

/// Relative matrix paths are resolved against `base_dir`.
ProblemConfig parse_config(const nlohmann::json& j, const std::string& base_dir = "");
ProblemConfig load_config(const std::string& path);

/// Applies one tolerance override by name ("zero", "rank", ...).
void set_tolerance(Tolerances& tol, const std::string& name, double value);
nlohmann::json tolerances_to_json(const Tolerances& tol);

}  // namespace pencilkit::cli
