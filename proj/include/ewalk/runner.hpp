#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ewalk/runconfig.hpp"

namespace ewalk {

struct RunResult {
    int exit_code = 0;
    std::vector<std::string> errors;
};

/// Executes the configured experiment and writes into out_dir:
///   config.resolved       resolved config in canonical key=value form
///   *.csv                 plot-ready long-form tables (see README)
///   manifest.txt          status, wall time, result scalars, any errors
/// jobs > 0 caps the parallel sweep width; 0 keeps the ambient default.
/// CSV and config.resolved contents depend only on the config, not on jobs.
RunResult run_experiment(const ExperimentConfig& config,
                         const std::filesystem::path& out_dir, int jobs = 0);

}  // namespace ewalk
