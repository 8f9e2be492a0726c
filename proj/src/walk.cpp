#include "ewalk/walk.hpp"

#include <cmath>
#include <omp.h>

namespace ewalk {

namespace {

constexpr std::size_t kParallelThreshold = 16384;

bool finite_or_inf(double x) { return !std::isnan(x); }

}  // namespace

void validate(const CoinParams& coin) {
    if (!(coin.theta >= 0.0 && coin.theta <= M_PI))
        throw std::invalid_argument("theta: must lie in [0, pi], got " +
                                    std::to_string(coin.theta));
}

void validate(const FieldConfig& field) {
    if (!(field.m > 0.0) || !finite_or_inf(field.m))
        throw std::invalid_argument("m: must be positive, got " +
                                    std::to_string(field.m));
    if (!(field.omega >= 0.0) || !std::isfinite(field.omega))
        throw std::invalid_argument("omega: must be >= 0, got " +
                                    std::to_string(field.omega));
    if (!std::isfinite(field.delta_phi))
        throw std::invalid_argument("delta_phi: must be finite");
    if (!std::isfinite(field.phi))
        throw std::invalid_argument("phi: must be finite");
}

void validate(const SimulationConfig& config) {
    validate(config.coin);
    validate(config.field);
    if (config.n_sites < 3)
        throw std::invalid_argument("n_sites: need at least 3 sites, got " +
                                    std::to_string(config.n_sites));
    if (config.origin >= config.n_sites)
        throw std::invalid_argument("origin: site index " +
                                    std::to_string(config.origin) +
                                    " outside chain of " +
                                    std::to_string(config.n_sites));
    const double norm =
        std::norm(config.spinor_up) + std::norm(config.spinor_down);
    if (std::abs(norm - 1.0) > kUnitarityTol)
        throw std::invalid_argument("spinor: |c_up|^2 + |c_down|^2 = " +
                                    std::to_string(norm) + ", must be 1");
}

std::array<std::array<cplx, 2>, 2> build_coin(const CoinParams& coin) {
    const double c = std::cos(coin.theta);
    const double s = std::sin(coin.theta);
    return {{{cplx{c, 0.0}, cplx{s, 0.0}}, {cplx{s, 0.0}, cplx{-c, 0.0}}}};
}

double phase_at(const FieldConfig& field, std::size_t t) {
    return field.phi0() +
           field.delta_phi * std::sin(field.omega * double(t) + field.phi);
}

WalkerState initial_state(const SimulationConfig& config) {
    validate(config);
    WalkerState state(config.n_sites);
    state.up[config.origin] = config.spinor_up;
    state.down[config.origin] = config.spinor_down;
    return state;
}

namespace {

// Coin + shift + site-dependent phase fused into one pass:
//   out_up[n]   = e^{i g (n-ctr)} (c*up[n-1] + s*down[n-1])
//   out_down[n] = e^{i g (n-ctr)} (s*up[n+1] - c*down[n+1])
void kernel_serial(const cplx* in_up, const cplx* in_dn, cplx* out_up,
                   cplx* out_dn, std::ptrdiff_t n_sites, double c, double s,
                   double g, std::ptrdiff_t ctr) {
    out_up[0] = 0.0;
    out_dn[n_sites - 1] = 0.0;
    for (std::ptrdiff_t n = 0; n < n_sites; ++n) {
        const cplx ph = std::polar(1.0, g * double(n - ctr));
        if (n >= 1) out_up[n] = ph * (c * in_up[n - 1] + s * in_dn[n - 1]);
        if (n <= n_sites - 2)
            out_dn[n] = ph * (s * in_up[n + 1] - c * in_dn[n + 1]);
    }
}

void kernel_parallel(const cplx* in_up, const cplx* in_dn, cplx* out_up,
                     cplx* out_dn, std::ptrdiff_t n_sites, double c, double s,
                     double g, std::ptrdiff_t ctr) {
    out_up[0] = 0.0;
    out_dn[n_sites - 1] = 0.0;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t n = 0; n < n_sites; ++n) {
        const cplx ph = std::polar(1.0, g * double(n - ctr));
        if (n >= 1) out_up[n] = ph * (c * in_up[n - 1] + s * in_dn[n - 1]);
        if (n <= n_sites - 2)
            out_dn[n] = ph * (s * in_up[n + 1] - c * in_dn[n + 1]);
    }
}

double edge_probability(const WalkerState& state) {
    const std::size_t n = state.n_sites();
    double p = 0.0;
    for (std::size_t k : {std::size_t{0}, std::size_t{1}, n - 2, n - 1})
        p += std::norm(state.up[k]) + std::norm(state.down[k]);
    return p;
}

bool use_parallel(StepBackend backend, std::size_t n_sites) {
    switch (backend) {
        case StepBackend::serial: return false;
        case StepBackend::parallel: return true;
        case StepBackend::automatic:
        default:
            return n_sites >= kParallelThreshold && omp_get_max_threads() > 1;
    }
}

}  // namespace

void step_into(const WalkerState& in, WalkerState& out, const CoinParams& coin,
               const FieldConfig& field, std::size_t t, EdgeGuard guard,
               StepBackend backend) {
    const std::size_t n = in.n_sites();
    if (n < 3) throw std::invalid_argument("n_sites: need at least 3 sites");
    if (guard == EdgeGuard::on) {
        const double p = edge_probability(in);
        if (p > kEdgeLeakThreshold) throw EdgeLeakError(t, p);
    }
    out.up.resize(n);
    out.down.resize(n);
    const double c = std::cos(coin.theta);
    const double s = std::sin(coin.theta);
    const double g = phase_at(field, t);
    const auto ctr = std::ptrdiff_t(n / 2);
    if (use_parallel(backend, n))
        kernel_parallel(in.up.data(), in.down.data(), out.up.data(),
                        out.down.data(), std::ptrdiff_t(n), c, s, g, ctr);
    else
        kernel_serial(in.up.data(), in.down.data(), out.up.data(),
                      out.down.data(), std::ptrdiff_t(n), c, s, g, ctr);
}

WalkerState step(const WalkerState& in, const CoinParams& coin,
                 const FieldConfig& field, std::size_t t, EdgeGuard guard) {
    WalkerState out(in.n_sites());
    step_into(in, out, coin, field, t, guard);
    return out;
}

WalkerState evolve(const SimulationConfig& config,
                   std::span<StateObserver* const> observers,
                   const EvolveOptions& options) {
    WalkerState state = initial_state(config);
    WalkerState scratch(config.n_sites);
    for (StateObserver* obs : observers) obs->observe(0, state);
    for (std::size_t t = 0; t < config.steps; ++t) {
        step_into(state, scratch, config.coin, config.field, t, options.guard,
                  options.backend);
        std::swap(state, scratch);
        for (StateObserver* obs : observers) obs->observe(t + 1, state);
    }
    return state;
}

}  // namespace ewalk
