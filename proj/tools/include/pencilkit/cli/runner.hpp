#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "pencilkit/cli/config.hpp"
#include "pencilkit/pencil.hpp"

namespace pencilkit::cli {

inline constexpr const char* kToolVersion = "0.3.0";

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitInputError = 2 };

struct RunOptions {
  bool timings = false;  // wall-clock fields make reports run-dependent
};

struct RunOutcome {
  nlohmann::json report;
  int exit_code = kExitOk;
};

/// Builds the pencil named by the config source. Throws ConfigError for an
/// unknown generator or bad parameters, and the Matrix Market errors for
/// unreadable files.
SymmetricPencil make_pencil(const ProblemConfig& config);

/// Executes the tasks in order. A task error is recorded in its entry and the
/// remaining tasks still run. Input errors (config, Matrix Market) end the
/// run with exit code 2.
RunOutcome run(const ProblemConfig& config, const RunOptions& options = {});

/// Human-readable rendering of a report.
std::string render_pretty(const nlohmann::json& report);

}  // namespace pencilkit::cli
