#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ewalk/observables.hpp"
#include "ewalk/spectral.hpp"
#include "ewalk/types.hpp"

namespace ewalk {

/// Continuous-time drift law cos(delta_phi_ratio * cos(phi) - phi); the
/// resonant drift velocity follows v0 times this shape.
double velocity_law(double phi, double delta_phi_ratio);

struct VelocityFit {
    double v0 = 0.0;
    double offset = 0.0;        // global phase offset, 0 unless fitted
    double max_residual = 0.0;  // max |v_i - v0 * law(phi_i + offset)|
};

/// One-amplitude least-squares fit of v(phi) = v0 * law(phi + offset);
/// the offset is scanned and refined only when with_offset is set.
VelocityFit fit_velocity_curve(std::span<const double> phis,
                               std::span<const double> velocities,
                               double delta_phi_ratio, bool with_offset);

// ---------------------------------------------------------------------------
// Experiment drivers. All are pure functions of their parameters; sweep
// drivers run their grid points as independent parallel jobs writing into
// pre-indexed slots, so results do not depend on scheduling.

struct BlochParams {
    double m = 100.0;
    double theta = M_PI / 4;
    std::size_t n_sites = 1000;
    std::size_t steps = 1000;
    std::size_t density_stride = 1;
};

struct BlochRun {
    CentroidTrace trace;
    Spectrum spec;
    DensityMap density;
};

/// Static drive only (delta_phi = 0): centroid oscillates about the origin
/// with period m and dominant frequency 2*pi/m.
BlochRun run_bloch(const BlochParams& params);

struct SboParams {
    double m = 100.0;
    double delta_omega = 0.01;
    double theta = M_PI / 4;
    double phi = 0.0;
    std::size_t n_sites = 1000;
    std::size_t steps = 20000;
};

struct SboRun {
    CentroidTrace trace;
    Spectrum spec;
};

/// Harmonic drive detuned by delta_omega from the Bloch frequency
/// (delta_phi = phi0, omega = omega_B + delta_omega): slow large-amplitude
/// oscillation at the detuning, with a secondary spectral peak at omega_B.
SboRun run_sbo(const SboParams& params);

struct DriftParams {
    double m = 100.0;
    double theta = M_PI / 4;
    double phi = 0.0;
    std::size_t n_sites = 2000;
    /// 0 resolves to 30 Bloch periods, leaving room for the default
    /// whole-period fit window [5*T_B, 25*T_B].
    std::size_t steps = 0;
};

struct DriftRun {
    CentroidTrace trace;
    double velocity = 0.0;
    StepWindow window;
};

/// Resonant drive (omega = omega_B exactly): unidirectional modulated
/// motion; velocity is the least-squares slope over whole Bloch periods.
DriftRun run_resonant_drift(const DriftParams& params);

struct CurveParams {
    double m = 100.0;
    double theta = M_PI / 4;
    std::vector<double> phis;  // empty resolves to 64 points over [0, 2*pi)
    std::size_t n_sites = 2000;
    std::size_t steps = 0;
    bool fit_offset = false;
};

struct VelocityCurve {
    std::vector<double> phis;
    std::vector<double> velocities;
    double delta_phi_ratio = 1.0;
    double fitted_v0 = 0.0;
    double fitted_offset = 0.0;
    double fit_residual = 0.0;
};

VelocityCurve velocity_curve(const CurveParams& params);

struct MapParams {
    double m = 100.0;
    std::vector<double> thetas;  // empty: 48 points over (0, pi), open ends
    std::vector<double> phis;    // empty: 64 points over [0, 2*pi)
    std::size_t n_sites = 2000;
    std::size_t steps = 0;
};

struct VelocityMap {
    std::vector<double> thetas;
    std::vector<double> phis;
    /// Row-major theta x phi; NaN where the corresponding error is set.
    std::vector<double> v;
    std::vector<std::string> errors;

    double& at(std::size_t ti, std::size_t pi) { return v[ti * phis.size() + pi]; }
    double at(std::size_t ti, std::size_t pi) const { return v[ti * phis.size() + pi]; }
};

/// Resonant drift velocity over a theta x phi grid; per-point failures are
/// recorded in place and never abort the sweep.
VelocityMap velocity_map(const MapParams& params);

struct DensityParams {
    double m = 100.0;
    double theta = M_PI / 4;
    double delta_omega = 0.01;  // detuning of the slow-oscillation variant
    std::size_t n_sites = 1000;
    std::size_t steps = 1000;
    std::size_t stride = 1;
};

struct DensityRun {
    std::string label;
    DensityMap map;
    std::vector<std::uint64_t> checksums;  // one per row, for regression
};

/// The three canonical drive settings: static only, slightly detuned
/// harmonic, and exactly resonant harmonic.
std::vector<DensityRun> density_experiment(const DensityParams& params);

/// Sign alternations along values, skipping entries with |v| < dead_band
/// (measured velocities wobble around the curve's zeros).
int count_sign_changes(std::span<const double> values, double dead_band);

std::vector<double> default_phi_grid(std::size_t count = 64);
std::vector<double> default_theta_grid(std::size_t count = 48);

}  // namespace ewalk
