#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ewalk/walk.hpp"

namespace ewalk {

/// Spin-summed site probabilities P(n) = |up_n|^2 + |down_n|^2.
std::vector<double> probability_distribution(const WalkerState& state);

/// Mean position sum_n n * P(n), in absolute site units.
double centroid(const WalkerState& state);

/// Centroid samples, one per step; samples[0] is the initial state.
struct CentroidTrace {
    std::vector<double> samples;
};

/// Row t: P_t(n) for recorded steps t = 0, stride, 2*stride, ...
struct DensityMap {
    std::size_t stride = 1;
    std::vector<std::size_t> times;
    std::vector<std::vector<double>> rows;
};

/// Inclusive step range [first, last] into a CentroidTrace.
struct StepWindow {
    std::size_t first = 0;
    std::size_t last = 0;

    std::size_t length() const { return last - first; }
};

/// Least-squares slope of the centroid over the window, in sites/step.
/// The window must span at least 2 Bloch periods and a whole number of
/// them (within half a step), so the intra-period oscillation cancels.
double drift_velocity(const CentroidTrace& trace, StepWindow window,
                      double bloch_period);

class CentroidRecorder final : public StateObserver {
public:
    void observe(std::size_t, const WalkerState& state) override {
        trace_.samples.push_back(centroid(state));
    }
    const CentroidTrace& trace() const { return trace_; }
    CentroidTrace take() { return std::move(trace_); }

private:
    CentroidTrace trace_;
};

class NormRecorder final : public StateObserver {
public:
    void observe(std::size_t, const WalkerState& state) override {
        samples_.push_back(state.total_probability());
    }
    const std::vector<double>& samples() const { return samples_; }

private:
    std::vector<double> samples_;
};

class DensityRecorder final : public StateObserver {
public:
    explicit DensityRecorder(std::size_t stride = 1)
        : stride_(stride == 0 ? 1 : stride) {
        map_.stride = stride_;
    }
    void observe(std::size_t t, const WalkerState& state) override {
        if (t % stride_ != 0) return;
        map_.times.push_back(t);
        map_.rows.push_back(probability_distribution(state));
    }
    const DensityMap& map() const { return map_; }
    DensityMap take() { return std::move(map_); }

private:
    std::size_t stride_;
    DensityMap map_;
};

/// FNV-1a over the raw bytes of a row; used for density-map regression.
std::uint64_t row_checksum(std::span<const double> row);

}  // namespace ewalk
