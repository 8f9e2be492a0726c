#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ewalk {

enum class ExperimentKind {
    bloch,
    sbo,
    resonant_drift,
    velocity_curve,
    velocity_map,
    crossover_scan,
    density,
};

const char* to_string(ExperimentKind kind);
std::vector<std::string> experiment_names();

/// Flat key=value experiment description with per-experiment defaults
/// applied. Only keys meaningful for the chosen experiment are accepted.
struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::bloch;
    double m = 100.0;
    double theta = M_PI / 4;
    double phi = 0.0;
    double delta_omega = 0.01;
    std::size_t n_sites = 1000;
    std::size_t steps = 1000;
    std::size_t stride = 1;
    std::size_t phi_points = 64;
    std::size_t theta_points = 48;
    bool fit_offset = false;
    double detuning_min = 0.0;  // 0 resolves to 0.10 * omega_B
    double detuning_max = 0.0;  // 0 resolves to 0.65 * omega_B
    std::size_t detuning_points = 30;

    bool operator==(const ExperimentConfig&) const = default;
};

class ConfigError : public std::runtime_error {
public:
    ConfigError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error(line ? "line " + std::to_string(line) + ", col " +
                                        std::to_string(column) + ": " + message
                                  : message),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Parses `key = value` lines ('#' starts a comment). The `experiment` key
/// is required; everything else falls back to the experiment's defaults.
/// Unknown keys, out-of-domain values and malformed lines throw ConfigError
/// naming the offending key or location.
ExperimentConfig parse_config(std::string_view text);

/// Canonical form: one key=value per line, 17 significant digits, fixed key
/// order. parse_config(serialize_config(c)) == c for every valid config.
std::string serialize_config(const ExperimentConfig& config);

}  // namespace ewalk
