#include "ewalk/observables.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>
#include <string>

namespace ewalk {

std::vector<double> probability_distribution(const WalkerState& state) {
    std::vector<double> p(state.n_sites());
    for (std::size_t n = 0; n < p.size(); ++n)
        p[n] = std::norm(state.up[n]) + std::norm(state.down[n]);
    return p;
}

double centroid(const WalkerState& state) {
    double x = 0.0;
    for (std::size_t n = 0; n < state.n_sites(); ++n)
        x += double(n) * (std::norm(state.up[n]) + std::norm(state.down[n]));
    return x;
}

double drift_velocity(const CentroidTrace& trace, StepWindow window,
                      double bloch_period) {
    if (window.last <= window.first)
        throw std::invalid_argument("window: empty step range");
    if (window.last >= trace.samples.size())
        throw std::invalid_argument(
            "window: last step " + std::to_string(window.last) +
            " exceeds trace of " + std::to_string(trace.samples.size()) +
            " samples");
    if (!(bloch_period > 0.0) || !std::isfinite(bloch_period))
        throw std::invalid_argument("bloch_period: must be positive and finite");
    const double periods = double(window.length()) / bloch_period;
    if (periods < 2.0)
        throw std::invalid_argument("window: spans " + std::to_string(periods) +
                                    " Bloch periods, need at least 2");
    if (std::abs(periods - std::round(periods)) * bloch_period > 0.5)
        throw std::invalid_argument(
            "window: length " + std::to_string(window.length()) +
            " is not a whole number of Bloch periods");

    // Plain least squares of x(t) on t over the window.
    const std::size_t count = window.length() + 1;
    double t_mean = 0.0, x_mean = 0.0;
    for (std::size_t t = window.first; t <= window.last; ++t) {
        t_mean += double(t);
        x_mean += trace.samples[t];
    }
    t_mean /= double(count);
    x_mean /= double(count);
    double cov = 0.0, var = 0.0;
    for (std::size_t t = window.first; t <= window.last; ++t) {
        const double dt = double(t) - t_mean;
        cov += dt * (trace.samples[t] - x_mean);
        var += dt * dt;
    }
    return cov / var;
}

std::uint64_t row_checksum(std::span<const double> row) {
    std::uint64_t h = 1469598103934665603ull;
    for (double x : row) {
        unsigned char bytes[sizeof(double)];
        std::memcpy(bytes, &x, sizeof(double));
        for (unsigned char b : bytes) {
            h ^= b;
            h *= 1099511628211ull;
        }
    }
    return h;
}

}  // namespace ewalk
