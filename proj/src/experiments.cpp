#include "ewalk/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ewalk/walk.hpp"

namespace ewalk {

double velocity_law(double phi, double delta_phi_ratio) {
    return std::cos(delta_phi_ratio * std::cos(phi) - phi);
}

namespace {

double fit_v0_for_offset(std::span<const double> phis,
                         std::span<const double> velocities,
                         double delta_phi_ratio, double offset,
                         double* sse_out) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < phis.size(); ++i) {
        const double c = velocity_law(phis[i] + offset, delta_phi_ratio);
        num += velocities[i] * c;
        den += c * c;
    }
    const double v0 = den > 0.0 ? num / den : 0.0;
    if (sse_out) {
        double sse = 0.0;
        for (std::size_t i = 0; i < phis.size(); ++i) {
            const double r =
                velocities[i] - v0 * velocity_law(phis[i] + offset, delta_phi_ratio);
            sse += r * r;
        }
        *sse_out = sse;
    }
    return v0;
}

}  // namespace

VelocityFit fit_velocity_curve(std::span<const double> phis,
                               std::span<const double> velocities,
                               double delta_phi_ratio, bool with_offset) {
    if (phis.size() != velocities.size() || phis.size() < 2)
        throw std::invalid_argument("fit: need matching grids of >= 2 points");

    VelocityFit fit;
    if (with_offset) {
        // SSE(offset) is smooth with period 2*pi; dense scan then a
        // three-point parabolic refinement is plenty at these noise levels.
        const int scan = 4096;
        double best_sse = 0.0;
        int best_i = 0;
        for (int i = 0; i < scan; ++i) {
            const double off = -M_PI + 2.0 * M_PI * i / scan;
            double sse;
            fit_v0_for_offset(phis, velocities, delta_phi_ratio, off, &sse);
            if (i == 0 || sse < best_sse) {
                best_sse = sse;
                best_i = i;
            }
        }
        const double h = 2.0 * M_PI / scan;
        const double off0 = -M_PI + h * best_i;
        double sl, sc, sr;
        fit_v0_for_offset(phis, velocities, delta_phi_ratio, off0 - h, &sl);
        fit_v0_for_offset(phis, velocities, delta_phi_ratio, off0, &sc);
        fit_v0_for_offset(phis, velocities, delta_phi_ratio, off0 + h, &sr);
        const double denom = sl - 2.0 * sc + sr;
        fit.offset = denom > 0.0 ? off0 + 0.5 * h * (sl - sr) / denom : off0;
    }
    fit.v0 = fit_v0_for_offset(phis, velocities, delta_phi_ratio, fit.offset,
                               nullptr);
    for (std::size_t i = 0; i < phis.size(); ++i) {
        const double r = std::abs(
            velocities[i] -
            fit.v0 * velocity_law(phis[i] + fit.offset, delta_phi_ratio));
        fit.max_residual = std::max(fit.max_residual, r);
    }
    return fit;
}

namespace {

void require_finite_period(double m, const char* who) {
    if (!std::isfinite(m))
        throw std::invalid_argument(std::string(who) +
                                    ": needs a finite Bloch period (finite m)");
}

std::size_t resolve_drift_steps(const DriftParams& params) {
    if (params.steps != 0) return params.steps;
    return std::size_t(std::llround(30.0 * params.m));
}

}  // namespace

std::vector<double> default_phi_grid(std::size_t count) {
    std::vector<double> phis(count);
    for (std::size_t i = 0; i < count; ++i)
        phis[i] = 2.0 * M_PI * double(i) / double(count);
    return phis;
}

std::vector<double> default_theta_grid(std::size_t count) {
    std::vector<double> thetas(count);
    for (std::size_t i = 0; i < count; ++i)
        thetas[i] = M_PI * double(i + 1) / double(count + 1);
    return thetas;
}

BlochRun run_bloch(const BlochParams& params) {
    require_finite_period(params.m, "bloch");
    SimulationConfig config(params.n_sites, params.steps, {params.theta},
                            {params.m, 0.0, 0.0, 0.0});
    CentroidRecorder centroids;
    DensityRecorder density(params.density_stride);
    StateObserver* obs[] = {&centroids, &density};
    evolve(config, obs);

    BlochRun run;
    run.trace = centroids.take();
    run.spec = spectrum(std::span(run.trace.samples).first(params.steps));
    run.density = density.take();
    return run;
}

SboRun run_sbo(const SboParams& params) {
    require_finite_period(params.m, "sbo");
    FieldConfig field{params.m, 0.0, 0.0, params.phi};
    field.delta_phi = field.phi0();
    field.omega = field.bloch_frequency() + params.delta_omega;
    SimulationConfig config(params.n_sites, params.steps, {params.theta}, field);
    CentroidRecorder centroids;
    StateObserver* obs[] = {&centroids};
    evolve(config, obs);

    SboRun run;
    run.trace = centroids.take();
    run.spec = spectrum(std::span(run.trace.samples).first(params.steps));
    return run;
}

DriftRun run_resonant_drift(const DriftParams& params) {
    require_finite_period(params.m, "resonant_drift");
    const std::size_t steps = resolve_drift_steps(params);
    FieldConfig field{params.m, 0.0, 0.0, params.phi};
    field.delta_phi = field.phi0();
    field.omega = field.bloch_frequency();
    SimulationConfig config(params.n_sites, steps, {params.theta}, field);

    DriftRun run;
    run.window.first = std::size_t(std::llround(5.0 * params.m));
    run.window.last = run.window.first + std::size_t(std::llround(20.0 * params.m));
    if (run.window.last > steps)
        throw std::invalid_argument(
            "steps: too few for the fit window [5*T_B, 25*T_B]; need " +
            std::to_string(run.window.last));

    CentroidRecorder centroids;
    StateObserver* obs[] = {&centroids};
    evolve(config, obs);
    run.trace = centroids.take();
    run.velocity = drift_velocity(run.trace, run.window, params.m);
    return run;
}

VelocityCurve velocity_curve(const CurveParams& params) {
    require_finite_period(params.m, "velocity_curve");
    VelocityCurve curve;
    curve.phis = params.phis.empty() ? default_phi_grid() : params.phis;
    curve.velocities.assign(curve.phis.size(), 0.0);
    curve.delta_phi_ratio = 1.0;  // drivers pin delta_phi = phi0

    std::vector<std::string> errors(curve.phis.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(curve.phis.size()); ++i) {
        try {
            DriftParams point{params.m, params.theta, curve.phis[i],
                              params.n_sites, params.steps};
            curve.velocities[i] = run_resonant_drift(point).velocity;
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    for (std::size_t i = 0; i < errors.size(); ++i)
        if (!errors[i].empty())
            throw std::runtime_error("velocity_curve point phi=" +
                                     std::to_string(curve.phis[i]) + ": " +
                                     errors[i]);

    const VelocityFit fit = fit_velocity_curve(
        curve.phis, curve.velocities, curve.delta_phi_ratio, params.fit_offset);
    curve.fitted_v0 = fit.v0;
    curve.fitted_offset = fit.offset;
    curve.fit_residual = fit.max_residual;
    return curve;
}

VelocityMap velocity_map(const MapParams& params) {
    require_finite_period(params.m, "velocity_map");
    VelocityMap map;
    map.thetas = params.thetas.empty() ? default_theta_grid() : params.thetas;
    map.phis = params.phis.empty() ? default_phi_grid() : params.phis;
    map.v.assign(map.thetas.size() * map.phis.size(),
                 std::numeric_limits<double>::quiet_NaN());
    map.errors.assign(map.v.size(), {});

#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t idx = 0; idx < std::ptrdiff_t(map.v.size()); ++idx) {
        const std::size_t ti = std::size_t(idx) / map.phis.size();
        const std::size_t pi = std::size_t(idx) % map.phis.size();
        try {
            DriftParams point{params.m, map.thetas[ti], map.phis[pi],
                              params.n_sites, params.steps};
            map.v[idx] = run_resonant_drift(point).velocity;
        } catch (const std::exception& e) {
            map.errors[idx] = e.what();
        }
    }
    return map;
}

int count_sign_changes(std::span<const double> values, double dead_band) {
    int changes = 0;
    int last = 0;
    for (double v : values) {
        if (std::abs(v) < dead_band) continue;
        const int sign = v > 0.0 ? 1 : -1;
        if (last != 0 && sign != last) ++changes;
        last = sign;
    }
    return changes;
}

std::vector<DensityRun> density_experiment(const DensityParams& params) {
    require_finite_period(params.m, "density");
    FieldConfig bloch{params.m, 0.0, 0.0, 0.0};
    FieldConfig sbo = bloch;
    sbo.delta_phi = sbo.phi0();
    sbo.omega = sbo.bloch_frequency() + params.delta_omega;
    FieldConfig resonant = bloch;
    resonant.delta_phi = resonant.phi0();
    resonant.omega = resonant.bloch_frequency();

    const std::pair<const char*, FieldConfig> variants[] = {
        {"static", bloch}, {"detuned", sbo}, {"resonant", resonant}};

    std::vector<DensityRun> runs;
    for (const auto& [label, field] : variants) {
        SimulationConfig config(params.n_sites, params.steps, {params.theta},
                                field);
        DensityRecorder density(params.stride);
        StateObserver* obs[] = {&density};
        evolve(config, obs);

        DensityRun run;
        run.label = label;
        run.map = density.take();
        run.checksums.reserve(run.map.rows.size());
        for (const auto& row : run.map.rows)
            run.checksums.push_back(row_checksum(row));
        runs.push_back(std::move(run));
    }
    return runs;
}

}  // namespace ewalk
