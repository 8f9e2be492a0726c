#include "ewalk/runner.hpp"

#include <omp.h>

#include <chrono>
#include <fstream>
#include <stdexcept>

#include "ewalk/csv.hpp"
#include "ewalk/experiments.hpp"
#include "ewalk/spectral.hpp"

namespace ewalk {

namespace {

namespace fs = std::filesystem;

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

void write_centroid(const fs::path& dir, const CentroidTrace& trace) {
    auto out = open_out(dir / "centroid.csv");
    out << "t,centroid\n";
    for (std::size_t t = 0; t < trace.samples.size(); ++t)
        out << t << ',' << format_double(trace.samples[t]) << '\n';
}

void write_spectrum(const fs::path& dir, const Spectrum& spec) {
    auto out = open_out(dir / "spectrum.csv");
    out << "omega,magnitude\n";
    for (std::size_t k = 0; k < spec.freqs.size(); ++k)
        out << format_double(spec.freqs[k]) << ','
            << format_double(spec.mags[k]) << '\n';
}

void write_density(const fs::path& path, const DensityMap& map) {
    auto out = open_out(path);
    out << "t,n,p\n";
    for (std::size_t r = 0; r < map.rows.size(); ++r)
        for (std::size_t n = 0; n < map.rows[r].size(); ++n)
            out << map.times[r] << ',' << n << ','
                << format_double(map.rows[r][n]) << '\n';
}

struct Manifest {
    std::vector<std::pair<std::string, std::string>> fields;
    std::vector<std::string> errors;

    void add(const std::string& key, const std::string& value) {
        fields.emplace_back(key, value);
    }
    void write(const fs::path& dir, double wall_seconds) const {
        auto out = open_out(dir / "manifest.txt");
        out << "status = " << (errors.empty() ? "ok" : "error") << '\n';
        for (const auto& [k, v] : fields) out << k << " = " << v << '\n';
        for (std::size_t i = 0; i < errors.size(); ++i)
            out << "error_" << i << " = " << errors[i] << '\n';
        out << "wall_time_s = " << format_double(wall_seconds) << '\n';
    }
};

void run_dispatch(const ExperimentConfig& config, const fs::path& dir,
                  Manifest& manifest) {
    switch (config.kind) {
        case ExperimentKind::bloch: {
            BlochRun run = run_bloch({config.m, config.theta, config.n_sites,
                                      config.steps, config.stride});
            write_centroid(dir, run.trace);
            write_spectrum(dir, run.spec);
            write_density(dir / "density.csv", run.density);
            break;
        }
        case ExperimentKind::sbo: {
            SboRun run = run_sbo({config.m, config.delta_omega, config.theta,
                                  config.phi, config.n_sites, config.steps});
            write_centroid(dir, run.trace);
            write_spectrum(dir, run.spec);
            break;
        }
        case ExperimentKind::resonant_drift: {
            DriftRun run = run_resonant_drift({config.m, config.theta,
                                               config.phi, config.n_sites,
                                               config.steps});
            write_centroid(dir, run.trace);
            auto out = open_out(dir / "velocity.csv");
            out << "phi,v\n"
                << format_double(config.phi) << ','
                << format_double(run.velocity) << '\n';
            manifest.add("velocity", format_double(run.velocity));
            break;
        }
        case ExperimentKind::velocity_curve: {
            VelocityCurve curve = velocity_curve(
                {config.m, config.theta, default_phi_grid(config.phi_points),
                 config.n_sites, config.steps, config.fit_offset});
            auto out = open_out(dir / "curve.csv");
            out << "phi,v\n";
            for (std::size_t i = 0; i < curve.phis.size(); ++i)
                out << format_double(curve.phis[i]) << ','
                    << format_double(curve.velocities[i]) << '\n';
            manifest.add("fitted_v0", format_double(curve.fitted_v0));
            manifest.add("fitted_offset", format_double(curve.fitted_offset));
            manifest.add("fit_residual", format_double(curve.fit_residual));
            break;
        }
        case ExperimentKind::velocity_map: {
            VelocityMap map = velocity_map(
                {config.m, default_theta_grid(config.theta_points),
                 default_phi_grid(config.phi_points), config.n_sites,
                 config.steps});
            auto out = open_out(dir / "map.csv");
            out << "theta,phi,v\n";
            for (std::size_t ti = 0; ti < map.thetas.size(); ++ti)
                for (std::size_t pi = 0; pi < map.phis.size(); ++pi)
                    out << format_double(map.thetas[ti]) << ','
                        << format_double(map.phis[pi]) << ','
                        << format_double(map.at(ti, pi)) << '\n';
            for (std::size_t idx = 0; idx < map.errors.size(); ++idx)
                if (!map.errors[idx].empty())
                    manifest.errors.push_back(
                        "theta=" +
                        format_double(map.thetas[idx / map.phis.size()]) +
                        " phi=" +
                        format_double(map.phis[idx % map.phis.size()]) + ": " +
                        map.errors[idx]);
            break;
        }
        case ExperimentKind::crossover_scan: {
            FieldConfig field{config.m, 0.0, 0.0, config.phi};
            field.delta_phi = field.phi0();
            SimulationConfig base(config.n_sites, config.steps, {config.theta},
                                  field);
            std::vector<double> grid(config.detuning_points);
            for (std::size_t i = 0; i < grid.size(); ++i)
                grid[i] = config.detuning_min +
                          (config.detuning_max - config.detuning_min) *
                              double(i) / double(grid.size() - 1);
            CrossoverResult scan = crossover_scan(base, grid);
            auto out = open_out(dir / "scan.csv");
            out << "detuning,dominant,branch\n";
            for (const ScanPoint& pt : scan.points) {
                const char* branch = pt.branch == Branch::sbo      ? "sbo"
                                     : pt.branch == Branch::bloch  ? "bloch"
                                                                   : "unclassified";
                out << format_double(pt.detuning) << ','
                    << format_double(pt.dominant) << ',' << branch << '\n';
                if (!pt.error.empty())
                    manifest.errors.push_back(
                        "detuning=" + format_double(pt.detuning) + ": " +
                        pt.error);
            }
            manifest.add("crossover", format_double(scan.crossover));
            manifest.add("crossover_over_omega_b",
                         format_double(scan.crossover / (2.0 * M_PI / config.m)));
            break;
        }
        case ExperimentKind::density: {
            auto runs = density_experiment({config.m, config.theta,
                                            config.delta_omega, config.n_sites,
                                            config.steps, config.stride});
            for (const DensityRun& run : runs) {
                write_density(dir / ("density_" + run.label + ".csv"), run.map);
                std::uint64_t combined = 1469598103934665603ull;
                for (std::uint64_t c : run.checksums)
                    combined = (combined ^ c) * 1099511628211ull;
                manifest.add("checksum_" + run.label, std::to_string(combined));
            }
            break;
        }
    }
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& config,
                         const fs::path& out_dir, int jobs) {
    if (jobs > 0) omp_set_num_threads(jobs);
    fs::create_directories(out_dir);

    {
        auto out = open_out(out_dir / "config.resolved");
        out << serialize_config(config);
    }

    Manifest manifest;
    manifest.add("experiment", to_string(config.kind));
    const auto start = std::chrono::steady_clock::now();
    try {
        run_dispatch(config, out_dir, manifest);
    } catch (const std::exception& e) {
        manifest.errors.push_back(e.what());
    }
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    manifest.write(out_dir, wall);

    RunResult result;
    result.errors = manifest.errors;
    result.exit_code = manifest.errors.empty() ? 0 : 1;
    return result;
}

}  // namespace ewalk
