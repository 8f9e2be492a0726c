#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "ewalk/types.hpp"

namespace ewalk {

enum class EdgeGuard { on, off };

/// Which step kernel evolve() uses. Both produce bit-identical states;
/// `serial` is the reference, `parallel` threads the site loop with
/// OpenMP, `automatic` picks by chain size.
enum class StepBackend { automatic, serial, parallel };

struct EvolveOptions {
    EdgeGuard guard = EdgeGuard::on;
    StepBackend backend = StepBackend::automatic;
};

/// [[cos t, sin t], [sin t, -cos t]]; Hermitian and unitary, its own inverse.
std::array<std::array<cplx, 2>, 2> build_coin(const CoinParams& coin);

/// G(t) = phi0 + delta_phi * sin(omega*t + phi).
double phase_at(const FieldConfig& field, std::size_t t);

/// All amplitude at config.origin with the configured spinor.
WalkerState initial_state(const SimulationConfig& config);

/// One update of the walk, reading `in` at step t and writing the state at
/// t+1 into `out`. The drive phase is evaluated at the pre-update index t
/// and applied with position argument (n - N/2), N/2 in integer division.
/// Amplitudes shifted past either end of the open chain are discarded;
/// with the guard on, probability above kEdgeLeakThreshold within 2 sites
/// of a boundary raises EdgeLeakError before that can happen.
void step_into(const WalkerState& in, WalkerState& out, const CoinParams& coin,
               const FieldConfig& field, std::size_t t,
               EdgeGuard guard = EdgeGuard::on,
               StepBackend backend = StepBackend::automatic);

WalkerState step(const WalkerState& in, const CoinParams& coin,
                 const FieldConfig& field, std::size_t t,
                 EdgeGuard guard = EdgeGuard::on);

/// Hook invoked with the state at t = 0 and after every step.
struct StateObserver {
    virtual ~StateObserver() = default;
    virtual void observe(std::size_t t, const WalkerState& state) = 0;
};

/// Runs config.steps updates from initial_state(config), invoking every
/// observer at t = 0 and after each step. Returns the final state.
/// evolve is a pure function of its config: two runs produce identical
/// amplitudes regardless of backend or thread count.
WalkerState evolve(const SimulationConfig& config,
                   std::span<StateObserver* const> observers,
                   const EvolveOptions& options = {});

}  // namespace ewalk
