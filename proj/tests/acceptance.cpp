// Acceptance suite: runs every criterion at its stated tolerance and
// prints one pass/fail line per criterion (plus invariant lines).
// Exit code is the number of failed lines.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ewalk/experiments.hpp"
#include "ewalk/observables.hpp"
#include "ewalk/oracle.hpp"
#include "ewalk/runconfig.hpp"
#include "ewalk/runner.hpp"
#include "ewalk/spectral.hpp"
#include "ewalk/walk.hpp"

using namespace ewalk;
namespace fs = std::filesystem;

namespace {

struct Harness {
    int failures = 0;
    std::chrono::steady_clock::time_point block_start;

    void begin() { block_start = std::chrono::steady_clock::now(); }
    void line(const std::string& id, bool pass, const std::string& detail) {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          block_start)
                .count();
        std::printf("[%s] %s :: %s (%.1fs)\n", pass ? "PASS" : "FAIL",
                    id.c_str(), detail.c_str(), secs);
        std::fflush(stdout);
        if (!pass) ++failures;
    }
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

// --------------------------------------------------------------------------
// criterion 1: unitarity across randomized configs

void criterion_1(Harness& h) {
    h.begin();
    std::mt19937 rng(20240811u);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    std::vector<SimulationConfig> configs;
    for (int i = 0; i < 70; ++i) {
        // Any drive is safe while the light cone stays in the bulk.
        const std::size_t n = 64 + std::size_t(uni(rng) * 1936);
        const std::size_t steps =
            std::min<std::size_t>(50 + std::size_t(uni(rng) * 4950), n / 2 - 4);
        FieldConfig field{2.0 * std::pow(100.0, uni(rng)), 0.0,
                          uni(rng) * 0.5, uni(rng) * 2 * M_PI};
        field.delta_phi = field.phi0() * uni(rng);
        configs.emplace_back(n, steps, CoinParams{uni(rng) * M_PI}, field);
    }
    for (int i = 0; i < 30; ++i) {
        // Long confined runs: static drive only, gate away from the
        // ballistic limits, chain sized to the Bloch excursion.
        const std::size_t n = 600 + std::size_t(uni(rng) * 1400);
        const std::size_t steps = 2000 + std::size_t(uni(rng) * 3000);
        const double m_max = std::min(100.0, double(n - 64) / 4.0);
        FieldConfig field{20.0 + uni(rng) * (m_max - 20.0), 0.0, 0.0, 0.0};
        configs.emplace_back(n, steps,
                             CoinParams{M_PI / 8 + uni(rng) * 0.75 * M_PI},
                             field);
    }

    double worst = 0.0;
    std::string first_error;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(configs.size()); ++i) {
        try {
            NormRecorder norms;
            StateObserver* obs[] = {&norms};
            evolve(configs[i], obs, {EdgeGuard::on, StepBackend::serial});
            double local = 0.0;
            for (double p : norms.samples())
                local = std::max(local, std::abs(p - 1.0));
#pragma omp critical
            worst = std::max(worst, local);
        } catch (const std::exception& e) {
#pragma omp critical
            if (first_error.empty()) first_error = e.what();
        }
    }
    const bool pass = first_error.empty() && worst < 1e-12;
    h.line("criterion 1 (unitarity, 100 random configs)", pass,
           first_error.empty()
               ? "max |norm-1| = " + fmt(worst) + ", tolerance 1e-12"
               : "run failed: " + first_error);
}

// --------------------------------------------------------------------------
// criterion 2: dense oracle equivalence

void criterion_2(Harness& h) {
    h.begin();
    std::mt19937 rng(77u);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double worst = 0.0;
    for (int rep = 0; rep < 25; ++rep) {
        FieldConfig field{1.0 + uni(rng) * 49.0, 0.0, uni(rng) * M_PI,
                          uni(rng) * 2 * M_PI};
        field.delta_phi = 2.0 * field.phi0() * uni(rng);
        SimulationConfig config(16, 50, {uni(rng) * M_PI}, field);
        const WalkerState fast =
            evolve(config, {}, {EdgeGuard::off, StepBackend::serial});
        const WalkerState slow = dense_unitary_oracle(config, 50);
        for (std::size_t k = 0; k < 16; ++k) {
            worst = std::max(worst, std::abs(fast.up[k] - slow.up[k]));
            worst = std::max(worst, std::abs(fast.down[k] - slow.down[k]));
        }
    }
    h.line("criterion 2 (oracle equivalence, N=16, 50 steps, 25 configs)",
           worst < 1e-10, "max amplitude diff = " + fmt(worst) +
                              ", tolerance 1e-10");
}

// --------------------------------------------------------------------------
// criterion 3: Bloch period and frequency

void criterion_3(Harness& h) {
    h.begin();
    const BlochRun run = run_bloch({100.0, M_PI / 4, 1000, 40000, 40000});
    const double back = run.trace.samples[100];
    const double dom = dominant_frequency(run.spec, run.spec.resolution);
    const double wb = 2 * M_PI / 100;
    const bool pass =
        std::abs(back - 500.0) < 1.0 && std::abs(dom - wb) <= run.spec.resolution;
    h.line("criterion 3 (Bloch period, m=100)", pass,
           "centroid(t=100) = " + fmt(back) + " (origin 500), dominant = " +
               fmt(dom) + " vs omega_B = " + fmt(wb) + " (one bin = " +
               fmt(run.spec.resolution) + ")");
}

// --------------------------------------------------------------------------
// criterion 4: SBO spectrum and amplitude

void criterion_4(Harness& h) {
    h.begin();
    const std::size_t steps = 20000;
    const SboRun sbo = run_sbo({100.0, 0.01, M_PI / 4, 0.0, 1000, steps});
    const double res = sbo.spec.resolution;
    const double primary = dominant_frequency(sbo.spec, 2.0 * res);

    // Secondary peak: global maximum away from the primary's skirt.
    double secondary = 0.0, best = -1.0;
    for (std::size_t k = 0; k < sbo.spec.freqs.size(); ++k) {
        if (std::abs(sbo.spec.freqs[k] - primary) <= 32.0 * res) continue;
        if (sbo.spec.freqs[k] < 2.0 * res) continue;
        if (sbo.spec.mags[k] > best) {
            best = sbo.spec.mags[k];
            secondary = sbo.spec.freqs[k];
        }
    }

    const BlochRun bloch = run_bloch({100.0, M_PI / 4, 1000, 2000, 2000});
    auto ptp = [](const std::vector<double>& xs) {
        const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
        return *hi - *lo;
    };
    const double ratio = ptp(sbo.trace.samples) / ptp(bloch.trace.samples);

    const double wb = 2 * M_PI / 100;
    const bool pass = std::abs(primary - 0.01) <= res &&
                      std::abs(secondary - wb) <= res && ratio > 3.0;
    h.line("criterion 4 (SBO spectrum, detuning 0.01)", pass,
           "primary = " + fmt(primary) + " (0.01 +- " + fmt(res) +
               "), secondary = " + fmt(secondary) + " (omega_B +- bin), " +
               "amplitude ratio = " + fmt(ratio) + " (> 3)");
}

// --------------------------------------------------------------------------
// criterion 5: crossover constant across m and theta

struct ScanSpec {
    double m;
    std::size_t n_sites;
    std::size_t steps;
    int denom;
    std::vector<int> js;
};

// Odd grid numerators coprime to the denominator keep the drive frequency
// away from low-order rational multiples of omega_B, whose secondary
// resonances disrupt both the packet and the spectrum. With t_max a
// multiple of denom * m every grid point is also leakage-free.
const std::vector<int> kGrid400 = {41,  49,  57,  67,  73,  81,  89,  97,
                                   103, 111, 117, 123, 129, 137, 141, 147,
                                   153, 159, 163, 169, 177, 181, 187, 193,
                                   199, 207, 213, 219, 227, 233};
const std::vector<int> kGrid200 = {21, 27, 33, 39, 47, 53, 59, 63, 67,
                                   71, 73, 77, 79, 81, 83, 87, 89, 91,
                                   93, 97, 99, 103, 107, 111, 117};

double scan_crossover_ratio(const ScanSpec& spec, double theta,
                            std::string* err) {
    FieldConfig field{spec.m, 0.0, 0.0, 0.0};
    field.delta_phi = field.phi0();
    SimulationConfig base(spec.n_sites, spec.steps, {theta}, field);
    const double wb = field.bloch_frequency();
    std::vector<double> grid;
    for (int j : spec.js) grid.push_back(wb * double(j) / double(spec.denom));

    const CrossoverResult result = crossover_scan(base, grid);
    int unclassified = 0;
    for (const ScanPoint& pt : result.points)
        if (pt.branch == Branch::unclassified) ++unclassified;
    if (err && std::isnan(result.crossover))
        *err = "no crossover bracket (" + std::to_string(unclassified) +
               " unclassified points)";
    return result.crossover / wb;
}

// Ratios at theta = pi/4 are shared with the universality invariant.
struct ScanOutcome {
    double ratio_m50_quarter = 0.0;
    double ratio_m100_quarter = 0.0;
    bool usable = false;
};

ScanOutcome criterion_5(Harness& h) {
    h.begin();
    const ScanSpec m100{100.0, 2500, 40000, 400, kGrid400};
    const ScanSpec m50{50.0, 6000, 40000, 400, kGrid400};
    const double thetas[] = {M_PI / 6, M_PI / 4, M_PI / 3};

    ScanOutcome outcome;
    std::string detail;
    bool pass = true;
    std::vector<double> ratios_by_m[2];
    int mi = 0;
    for (const ScanSpec& spec : {m50, m100}) {
        for (double theta : thetas) {
            std::string err;
            const double ratio = scan_crossover_ratio(spec, theta, &err);
            if (!err.empty()) {
                pass = false;
                detail += "m=" + fmt(spec.m) + " theta=" + fmt(theta) + ": " +
                          err + "; ";
                continue;
            }
            if (theta == M_PI / 4) {
                (spec.m == 50.0 ? outcome.ratio_m50_quarter
                                : outcome.ratio_m100_quarter) = ratio;
                outcome.usable = true;
            }
            ratios_by_m[mi].push_back(ratio);
            detail += "m=" + fmt(spec.m) + " theta=" + fmt(theta) + ": " +
                      fmt(ratio) + "; ";
            if (std::abs(ratio - 0.3979) > 0.05 * 0.3979) pass = false;
        }
        ++mi;
    }
    for (const auto& ratios : ratios_by_m) {
        if (ratios.size() < 2) continue;
        const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
        const double mean =
            std::accumulate(ratios.begin(), ratios.end(), 0.0) /
            double(ratios.size());
        if ((*hi - *lo) / mean >= 0.05) pass = false;
    }
    h.line("criterion 5 (crossover constant 0.3979 +- 5%, theta spread < 5%)",
           pass, detail);
    return outcome;
}

void invariant_universality(Harness& h, const ScanOutcome& shared) {
    h.begin();
    // Slope of ln(crossover) vs ln(m) at theta = pi/4; the ratio to
    // omega_B is m-free, so the detuning itself must scale as 1/m.
    if (!shared.usable || shared.ratio_m50_quarter == 0.0 ||
        shared.ratio_m100_quarter == 0.0) {
        h.line("invariant (crossover scales as 1/m)", false,
               "missing theta=pi/4 scan results");
        return;
    }
    std::string err;
    const double ratio_m200 = scan_crossover_ratio(
        {200.0, 4000, 40000, 200, kGrid200}, M_PI / 4, &err);
    if (!err.empty()) {
        h.line("invariant (crossover scales as 1/m)", false, "m=200: " + err);
        return;
    }
    const double ms[] = {50.0, 100.0, 200.0};
    const double ratios[] = {shared.ratio_m50_quarter,
                             shared.ratio_m100_quarter, ratio_m200};
    std::vector<double> lm, lc;
    std::string detail;
    for (int i = 0; i < 3; ++i) {
        const double crossover = ratios[i] * 2 * M_PI / ms[i];
        lm.push_back(std::log(ms[i]));
        lc.push_back(std::log(crossover));
        detail += "m=" + fmt(ms[i]) + ": dwc=" + fmt(crossover) + "; ";
    }
    const double mean_x = (lm[0] + lm[1] + lm[2]) / 3.0;
    const double mean_y = (lc[0] + lc[1] + lc[2]) / 3.0;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < 3; ++i) {
        num += (lm[i] - mean_x) * (lc[i] - mean_y);
        den += (lm[i] - mean_x) * (lm[i] - mean_x);
    }
    const double slope = num / den;
    h.line("invariant (crossover scales as 1/m)",
           std::abs(slope + 1.0) <= 0.1,
           detail + "log-log slope = " + fmt(slope) + " (want -1 +- 0.1)");
}

// --------------------------------------------------------------------------
// criterion 6: drift directions at phi = 0 and pi

void criterion_6(Harness& h) {
    h.begin();
    const DriftRun at0 = run_resonant_drift({100.0, M_PI / 4, 0.0, 2000, 0});
    const DriftRun atpi = run_resonant_drift({100.0, M_PI / 4, M_PI, 2000, 0});
    const bool pass = at0.velocity < 0.0 && atpi.velocity > 0.0;
    h.line("criterion 6 (drift directions: v(0) < 0, v(pi) > 0)", pass,
           "v(phi=0) = " + fmt(at0.velocity) + ", v(phi=pi) = " +
               fmt(atpi.velocity));
}

// --------------------------------------------------------------------------
// criterion 7: velocity-curve shape (shared with criterion 8)

VelocityCurve acceptance_curve() {
    CurveParams params;
    params.m = 100.0;
    params.theta = M_PI / 4;
    params.phis = default_phi_grid(64);
    params.n_sites = 6400;
    params.steps = 3000;
    params.fit_offset = true;
    return velocity_curve(params);
}

void criterion_7(Harness& h, const VelocityCurve& curve) {
    const std::size_t imax =
        std::max_element(curve.velocities.begin(), curve.velocities.end()) -
        curve.velocities.begin();
    const std::size_t imin =
        std::min_element(curve.velocities.begin(), curve.velocities.end()) -
        curve.velocities.begin();
    const double phi_max = curve.phis[imax];
    const double phi_min = curve.phis[imin];
    const double rel_residual = curve.fit_residual / std::abs(curve.fitted_v0);

    const bool pass = std::abs(phi_max - 0.739) <= 0.1 &&
                      std::abs(phi_min - 2.402) <= 0.1 &&
                      rel_residual <= 0.15 && curve.fitted_v0 > 0.0;
    h.line("criterion 7 (velocity curve shape)", pass,
           "argmax = " + fmt(phi_max) + " (0.739 +- 0.1), argmin = " +
               fmt(phi_min) + " (2.402 +- 0.1), residual/|v0| = " +
               fmt(rel_residual) + " (<= 0.15), v0 = " + fmt(curve.fitted_v0) +
               " (> 0), offset = " + fmt(curve.fitted_offset));
}

void invariant_drift_zero(Harness& h, const VelocityCurve& curve) {
    // Bisect the law itself for its first zero (delta_phi_ratio = 1 puts it
    // at pi/2 exactly); the measured curve carries the fitted global phase
    // offset, so evaluate at the shifted grid point.
    double lo = 0.1, hi = M_PI;  // law(0.1) > 0 > law(pi)
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (velocity_law(mid, 1.0) > 0.0 ? lo : hi) = mid;
    }
    const double phi_zero = 0.5 * (lo + hi) - curve.fitted_offset;
    std::size_t nearest = 0;
    for (std::size_t i = 1; i < curve.phis.size(); ++i)
        if (std::abs(curve.phis[i] - phi_zero) <
            std::abs(curve.phis[nearest] - phi_zero))
            nearest = i;
    double peak = 0.0;
    for (double v : curve.velocities) peak = std::max(peak, std::abs(v));
    const double at_zero = std::abs(curve.velocities[nearest]);
    h.line("invariant (drift vanishes at the law's zero)",
           at_zero < 0.1 * peak,
           "|v| at phi = " + fmt(curve.phis[nearest]) + " is " + fmt(at_zero) +
               ", peak |v| = " + fmt(peak));
}

void invariant_zero_structure(Harness& h, const VelocityCurve& curve) {
    double peak = 0.0;
    for (double v : curve.velocities) peak = std::max(peak, std::abs(v));
    std::vector<double> law(curve.phis.size());
    for (std::size_t i = 0; i < curve.phis.size(); ++i)
        law[i] = velocity_law(curve.phis[i] + curve.fitted_offset, 1.0);
    const int measured = count_sign_changes(curve.velocities, 0.02 * peak);
    const int analytic = count_sign_changes(law, 0.02);
    h.line("invariant (zero structure of v(phi))", measured == analytic,
           "sign changes: measured = " + std::to_string(measured) +
               ", analytic law = " + std::to_string(analytic));
}

// --------------------------------------------------------------------------
// criterion 8: velocity-map structure

void criterion_8(Harness& h, const VelocityCurve& curve) {
    h.begin();
    MapParams params;
    params.m = 100.0;
    params.thetas = {M_PI / 128};
    for (int k = 1; k <= 14; ++k) params.thetas.push_back(k * M_PI / 16);
    params.thetas.push_back(M_PI - M_PI / 128);
    params.phis = default_phi_grid(16);
    params.n_sites = 6400;
    params.steps = 3000;
    const VelocityMap map = velocity_map(params);

    auto row_max_abs = [&](std::size_t ti, bool* ok) {
        double worst = 0.0;
        for (std::size_t pi = 0; pi < map.phis.size(); ++pi) {
            if (!map.errors[ti * map.phis.size() + pi].empty()) *ok = false;
            worst = std::max(worst, std::abs(map.at(ti, pi)));
        }
        return worst;
    };
    bool ok = true;
    // theta -> 0+ and theta -> pi- boundary rows, and the Pauli-X gate row.
    const double edge = std::max(row_max_abs(0, &ok), row_max_abs(15, &ok));
    const double paulix = row_max_abs(8, &ok);

    // theta = pi/4 sits at index 4; its phi grid is every 4th curve point.
    double row_vs_curve = 0.0;
    for (std::size_t pi = 0; pi < 16; ++pi) {
        if (!map.errors[4 * 16 + pi].empty()) ok = false;
        row_vs_curve = std::max(
            row_vs_curve, std::abs(map.at(4, pi) - curve.velocities[4 * pi]));
    }

    const bool pass =
        ok && edge < 0.01 && paulix < 0.01 && row_vs_curve < 1e-9;
    h.line("criterion 8 (velocity map structure, 16x16)", pass,
           "max|v| at the theta boundary rows: " + fmt(edge) + ", at pi/2: " +
               fmt(paulix) + " (< 0.01), row(pi/4) vs curve: " +
               fmt(row_vs_curve) + " (< 1e-9)" +
               (ok ? "" : ", grid errors present"));

    // The phi positions of each row's extrema inherit the law's structure,
    // which is theta-free; rows with measurable drift must agree within one
    // phi grid step. The sign of the row's drift amplitude flips across
    // theta = pi/2 (the gate at pi - theta negates the effective hopping),
    // so max and min may trade places.
    h.begin();
    const double spacing = 2 * M_PI / double(map.phis.size());
    bool stable = true;
    std::string worst_row;
    for (std::size_t ti = 0; ti < map.thetas.size(); ++ti) {
        bool errored = false;
        double vmax = 0.0, vmin = 0.0, argmax = 0.0, argmin = 0.0;
        for (std::size_t pi = 0; pi < map.phis.size(); ++pi) {
            if (!map.errors[ti * map.phis.size() + pi].empty()) errored = true;
            const double v = map.at(ti, pi);
            if (v > vmax) vmax = v, argmax = map.phis[pi];
            if (v < vmin) vmin = v, argmin = map.phis[pi];
        }
        if (errored || std::max(vmax, -vmin) < 0.02) continue;
        auto near = [&](double phi, double target) {
            return std::abs(phi - target) <= spacing + 1e-9;
        };
        const bool upright = near(argmax, 0.785) && near(argmin, 2.454);
        const bool flipped = near(argmax, 2.454) && near(argmin, 0.785);
        if (!upright && !flipped) {
            stable = false;
            worst_row = "theta = " + fmt(map.thetas[ti]) + ": argmax " +
                        fmt(argmax) + ", argmin " + fmt(argmin);
        }
    }
    h.line("invariant (row extrema positions are theta-free)", stable,
           stable ? "every measurable row peaks within one grid step of "
                    "phi = 0.785 / 2.454 (up to an overall sign)"
                  : worst_row);
}

void invariant_extrema_displacement(Harness& h) {
    h.begin();
    // With a weaker static field the largest drift speeds move toward the
    // theta boundaries. Compare argmax over theta of |v| at the near-optimal
    // phase for m = 100 vs m = 200.
    auto theta_star = [](double m, std::size_t n_sites) {
        double best = -1.0, arg = 0.0;
        std::vector<double> thetas;
        for (int k = 1; k <= 15; ++k) thetas.push_back(k * M_PI / 16);
        MapParams params;
        params.m = m;
        params.thetas = thetas;
        params.phis = {0.785398163397448279};
        params.n_sites = n_sites;
        const VelocityMap map = velocity_map(params);
        for (std::size_t ti = 0; ti < thetas.size(); ++ti) {
            if (!map.errors[ti].empty()) continue;
            if (std::abs(map.at(ti, 0)) > best)
                best = std::abs(map.at(ti, 0)), arg = thetas[ti];
        }
        return arg;
    };
    const double t100 = theta_star(100.0, 6400);
    const double t200 = theta_star(200.0, 12000);
    auto boundary_distance = [](double theta) {
        return std::min(theta, M_PI - theta);
    };
    h.line("invariant (extrema displace toward the theta boundary as m grows)",
           boundary_distance(t200) <= boundary_distance(t100) + 1e-9,
           "argmax theta of |v|: m=100 at " + fmt(t100) + ", m=200 at " +
               fmt(t200));
}

// --------------------------------------------------------------------------
// criterion 9: determinism across jobs

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void criterion_9(Harness& h) {
    h.begin();
    const ExperimentConfig config = parse_config(
        "experiment = velocity_curve\nm = 50\nn = 2000\nsteps = 1500\n"
        "phi_points = 8\n");
    const fs::path base = fs::temp_directory_path() / "ewalk_acceptance";
    fs::remove_all(base);
    const fs::path d1 = base / "jobs1", d2 = base / "jobs2";

    bool pass = run_experiment(config, d1, 1).exit_code == 0;
    pass = run_experiment(config, d2, 2).exit_code == 0 && pass;
    const std::string curve1 = slurp(d1 / "curve.csv");
    pass = pass && !curve1.empty() && curve1 == slurp(d2 / "curve.csv") &&
           slurp(d1 / "config.resolved") == slurp(d2 / "config.resolved");

    // Re-running in place overwrites with identical bytes.
    pass = run_experiment(config, d1, 2).exit_code == 0 && pass;
    pass = pass && slurp(d1 / "curve.csv") == curve1;
    fs::remove_all(base);
    h.line("criterion 9 (bit-identical CSVs across --jobs)", pass,
           pass ? "curve.csv identical for jobs=1, jobs=2 and rerun"
                : "outputs differ");
}

void criterion_10(Harness& h) {
    h.begin();
    h.line("criterion 10 (no absolute speeds asserted)", true,
           "shape, sign, extrema and zero structure carry the acceptance "
           "load; absolute drift speeds are not asserted");
}

}  // namespace

int main() {
    std::printf("acceptance suite, %d OpenMP threads\n", omp_get_max_threads());
    Harness h;
    criterion_1(h);
    criterion_2(h);
    criterion_3(h);
    criterion_4(h);
    const ScanOutcome scans = criterion_5(h);
    invariant_universality(h, scans);
    criterion_6(h);

    h.begin();
    const VelocityCurve curve = acceptance_curve();
    criterion_7(h, curve);
    invariant_zero_structure(h, curve);
    invariant_drift_zero(h, curve);

    criterion_8(h, curve);
    invariant_extrema_displacement(h);
    criterion_9(h);
    criterion_10(h);

    std::printf("%d failure(s)\n", h.failures);
    return h.failures;
}
