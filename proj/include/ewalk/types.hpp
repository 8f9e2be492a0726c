#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ewalk {

using cplx = std::complex<double>;

inline constexpr double kUnitarityTol = 1e-12;
inline constexpr double kEdgeLeakThreshold = 1e-8;

/// Two-component amplitudes over an open chain of n_sites() sites.
/// Total probability stays 1 (within kUnitarityTol) as long as nothing
/// reaches the chain edges.
struct WalkerState {
    std::vector<cplx> up;
    std::vector<cplx> down;

    WalkerState() = default;
    explicit WalkerState(std::size_t n) : up(n), down(n) {}

    std::size_t n_sites() const { return up.size(); }

    double total_probability() const {
        double p = 0.0;
        for (std::size_t n = 0; n < up.size(); ++n)
            p += std::norm(up[n]) + std::norm(down[n]);
        return p;
    }
};

/// Gate angle of the coin matrix [[cos t, sin t], [sin t, -cos t]].
/// theta = pi/4 is the Hadamard gate, pi/2 the Pauli-X gate.
struct CoinParams {
    double theta = 0.0;
};

/// Phase drive G(t) = phi0 + delta_phi * sin(omega*t + phi), with the
/// static part phi0 = 2*pi/m. m = +infinity switches the drive off
/// entirely (free walk). m may be any positive real.
struct FieldConfig {
    double m = 100.0;
    double delta_phi = 0.0;
    double omega = 0.0;
    double phi = 0.0;

    double phi0() const { return 2.0 * M_PI / m; }
    double bloch_frequency() const { return phi0(); }
    double bloch_period() const { return m; }
};

struct SimulationConfig {
    std::size_t n_sites = 0;
    std::size_t origin = 0;
    std::size_t steps = 0;
    CoinParams coin;
    FieldConfig field;
    cplx spinor_up{M_SQRT1_2, 0.0};
    cplx spinor_down{0.0, M_SQRT1_2};

    SimulationConfig() = default;
    SimulationConfig(std::size_t n, std::size_t t, CoinParams c, FieldConfig f)
        : n_sites(n), origin(n / 2), steps(t), coin(c), field(f) {}
};

/// Probability reached the chain boundary: the open-chain discard would
/// silently destroy norm, so the step refuses to proceed.
class EdgeLeakError : public std::runtime_error {
public:
    EdgeLeakError(std::size_t step, double edge_probability)
        : std::runtime_error("edge leak at step " + std::to_string(step) +
                             ": probability " + std::to_string(edge_probability) +
                             " within 2 sites of a boundary"),
          step_(step),
          edge_probability_(edge_probability) {}

    std::size_t step() const { return step_; }
    double edge_probability() const { return edge_probability_; }

private:
    std::size_t step_;
    double edge_probability_;
};

/// Throws std::invalid_argument naming the offending field.
void validate(const CoinParams& coin);
void validate(const FieldConfig& field);
void validate(const SimulationConfig& config);

}  // namespace ewalk
