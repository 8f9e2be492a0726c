#include "ewalk/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "ewalk/observables.hpp"
#include "ewalk/walk.hpp"

namespace ewalk {

namespace {

// FFTW plan creation/destruction is not thread safe; execution on the
// plan's own arrays is fine once built.
std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}

struct FftwBuffer {
    double* in = nullptr;
    fftw_complex* out = nullptr;
    fftw_plan plan = nullptr;

    FftwBuffer(std::size_t len) {
        in = fftw_alloc_real(len);
        out = fftw_alloc_complex(len / 2 + 1);
        std::lock_guard lock(fftw_mutex());
        plan = fftw_plan_dft_r2c_1d(int(len), in, out, FFTW_ESTIMATE);
    }
    ~FftwBuffer() {
        {
            std::lock_guard lock(fftw_mutex());
            fftw_destroy_plan(plan);
        }
        fftw_free(in);
        fftw_free(out);
    }
    FftwBuffer(const FftwBuffer&) = delete;
    FftwBuffer& operator=(const FftwBuffer&) = delete;
};

}  // namespace

Spectrum spectrum(std::span<const double> samples) {
    const std::size_t len = samples.size();
    if (len < 2)
        throw std::invalid_argument("samples: need at least 2, got " +
                                    std::to_string(len));
    double mean = 0.0;
    for (double x : samples) mean += x;
    mean /= double(len);

    FftwBuffer buf(len);
    for (std::size_t i = 0; i < len; ++i) buf.in[i] = samples[i] - mean;
    fftw_execute(buf.plan);

    Spectrum spec;
    spec.resolution = 2.0 * M_PI / double(len);
    const std::size_t bins = len / 2 + 1;
    spec.freqs.resize(bins);
    spec.mags.resize(bins);
    for (std::size_t k = 0; k < bins; ++k) {
        spec.freqs[k] = spec.resolution * double(k);
        spec.mags[k] = std::hypot(buf.out[k][0], buf.out[k][1]);
    }
    return spec;
}

double dominant_frequency(const Spectrum& spec, double min_freq) {
    if (!(min_freq >= spec.resolution * (1.0 - 1e-12)))
        throw std::invalid_argument(
            "min_freq: must be at least the resolution (DC excluded)");
    std::size_t best = 0;
    double best_mag = -1.0;
    for (std::size_t k = 0; k < spec.freqs.size(); ++k) {
        if (spec.freqs[k] < min_freq * (1.0 - 1e-12)) continue;
        if (spec.mags[k] > best_mag) {
            best_mag = spec.mags[k];
            best = k;
        }
    }
    if (best_mag < 0.0)
        throw std::invalid_argument("min_freq: no bins at or above " +
                                    std::to_string(min_freq));
    return spec.freqs[best];
}

Branch classify_dominant(double dominant, double detuning,
                         double bloch_frequency, double resolution,
                         double tol_bins) {
    const double tol = tol_bins * resolution * (1.0 + 1e-9);  // inclusive
    if (std::abs(dominant - detuning) <= tol) return Branch::sbo;
    if (std::abs(dominant - bloch_frequency) <= tol) return Branch::bloch;
    return Branch::unclassified;
}

CrossoverResult crossover_scan(const SimulationConfig& base,
                               std::span<const double> detunings,
                               const CrossoverOptions& options) {
    validate(base);
    const double omega_b = base.field.bloch_frequency();
    if (std::abs(base.field.delta_phi - base.field.phi0()) > 1e-12)
        throw std::invalid_argument(
            "delta_phi: crossover scan needs delta_phi = phi0");
    if (detunings.empty())
        throw std::invalid_argument("detunings: empty grid");
    for (std::size_t i = 0; i < detunings.size(); ++i) {
        if (!(detunings[i] > 0.0) || !(detunings[i] < omega_b))
            throw std::invalid_argument(
                "detunings: grid values must lie in (0, omega_B)");
        if (i > 0 && detunings[i] <= detunings[i - 1])
            throw std::invalid_argument("detunings: grid must be increasing");
    }

    const double resolution = 2.0 * M_PI / double(base.steps);
    const double min_freq =
        options.min_freq > 0.0
            ? options.min_freq
            : std::max(2.0 * resolution, 0.5 * detunings.front());

    CrossoverResult result;
    result.m = base.field.m;
    result.points.resize(detunings.size());

#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(detunings.size()); ++i) {
        ScanPoint& pt = result.points[i];
        pt.detuning = detunings[i];
        try {
            SimulationConfig config = base;
            config.field.omega = omega_b + pt.detuning;
            CentroidRecorder rec;
            StateObserver* obs[] = {&rec};
            evolve(config, obs, {EdgeGuard::on, StepBackend::serial});
            const auto& samples = rec.trace().samples;
            const Spectrum spec = spectrum(
                std::span(samples).first(config.steps));
            pt.dominant = dominant_frequency(spec, min_freq);
            pt.branch = classify_dominant(pt.dominant, pt.detuning, omega_b,
                                          spec.resolution, options.tol_bins);
        } catch (const std::exception& e) {
            pt.error = e.what();
        }
    }

    double last_sbo = std::nan("");
    double first_bloch = std::nan("");
    for (const ScanPoint& pt : result.points) {
        if (pt.branch == Branch::sbo) last_sbo = pt.detuning;
        if (pt.branch == Branch::bloch && std::isnan(first_bloch))
            first_bloch = pt.detuning;
    }
    result.crossover = 0.5 * (last_sbo + first_bloch);
    return result;
}

}  // namespace ewalk
