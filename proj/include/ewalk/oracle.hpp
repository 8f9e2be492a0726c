#pragma once

#include <cstddef>

#include "ewalk/types.hpp"

namespace ewalk {

/// Max chain size the dense oracle accepts (O(N^2) per step).
inline constexpr std::size_t kOracleMaxSites = 64;

/// Test oracle: evolves the initial state of `config` for t steps by
/// explicit construction of the per-step operator  F(t') * S * (C (x) I)
/// as dense 2N x 2N matrices, independently of the fused update used by
/// step()/evolve(). The coin and phase factors are verified unitary to
/// 1e-12; the open-chain shift is verified to be an exact isometry on
/// every column except the two whose amplitude leaves the chain.
/// Rejects n_sites > kOracleMaxSites.
WalkerState dense_unitary_oracle(const SimulationConfig& config, std::size_t t);

/// Same, but starting from an arbitrary state instead of
/// initial_state(config).
WalkerState dense_unitary_oracle_from(const WalkerState& start,
                                      const SimulationConfig& config,
                                      std::size_t t);

}  // namespace ewalk
