#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ewalk/types.hpp"

namespace ewalk {

/// One-sided magnitude spectrum of a real time series of length L:
/// freqs[k] = 2*pi*k/L for k = 0..L/2 (radians/step, 0 to pi),
/// mags[k] = |X_k| of the mean-subtracted series, resolution = 2*pi/L.
struct Spectrum {
    std::vector<double> freqs;
    std::vector<double> mags;
    double resolution = 0.0;
};

/// DFT magnitude of the mean-subtracted samples (rectangular window).
/// Callers analyzing an evolve() trace of steps+1 samples conventionally
/// pass the first `steps` of them so the resolution is exactly 2*pi/steps
/// and period-matched records stay leakage-free.
Spectrum spectrum(std::span<const double> samples);

/// Frequency of the largest-magnitude bin with freq >= min_freq.
/// min_freq must be at least the resolution (the DC bin is never eligible);
/// throws if the admissible range is empty.
double dominant_frequency(const Spectrum& spec, double min_freq);

enum class Branch { sbo, bloch, unclassified };

/// Within-2-bins test of the dominant frequency against the two branch
/// candidates: the detuning (super-Bloch branch) and the Bloch frequency.
Branch classify_dominant(double dominant, double detuning,
                         double bloch_frequency, double resolution,
                         double tol_bins = 2.0);

struct ScanPoint {
    double detuning = 0.0;
    double dominant = 0.0;
    Branch branch = Branch::unclassified;
    std::string error;  // non-empty if the run failed (e.g. edge leak)
};

struct CrossoverResult {
    double m = 0.0;
    std::vector<ScanPoint> points;
    /// Midpoint between the last SBO-branch and first Bloch-branch grid
    /// detunings; NaN when either branch is absent.
    double crossover = 0.0;
};

struct CrossoverOptions {
    /// Floor for the dominant-frequency search; 0 picks
    /// max(2*resolution, detunings.front()/2), which keeps slow centroid
    /// wander in strong-field runs from shadowing both branch peaks.
    double min_freq = 0.0;
    double tol_bins = 2.0;
};

/// Runs the detuned drive on every grid point (omega = omega_B + detuning,
/// with base.field.delta_phi == phi0 required) and classifies the dominant
/// centroid frequency per point. Grid points run as independent parallel
/// simulations; point order in the result follows the input grid.
/// Failed or unclassifiable points are recorded in place, never dropped.
CrossoverResult crossover_scan(const SimulationConfig& base,
                               std::span<const double> detunings,
                               const CrossoverOptions& options = {});

}  // namespace ewalk
