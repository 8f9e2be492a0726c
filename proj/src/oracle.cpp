#include "ewalk/oracle.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "ewalk/walk.hpp"

namespace ewalk {

namespace {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

void require_unitary(const Mat& u, const char* what) {
    const std::size_t n = u.rows();
    const double dev =
        (u.adjoint() * u - Mat::Identity(n, n)).cwiseAbs().maxCoeff();
    if (dev > 1e-12)
        throw std::logic_error(std::string(what) +
                               ": unitarity deviation " + std::to_string(dev));
}

// Layout: index n = spin-up at site n, index N+n = spin-down at site n.
Mat coin_matrix(const CoinParams& coin, std::size_t n) {
    const auto c = build_coin(coin);
    Mat m = Mat::Zero(2 * n, 2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        m(k, k) = c[0][0];
        m(k, n + k) = c[0][1];
        m(n + k, k) = c[1][0];
        m(n + k, n + k) = c[1][1];
    }
    return m;
}

Mat shift_matrix(std::size_t n) {
    Mat m = Mat::Zero(2 * n, 2 * n);
    for (std::size_t k = 0; k + 1 < n; ++k) m(k + 1, k) = 1.0;      // up right
    for (std::size_t k = 1; k < n; ++k) m(n + k - 1, n + k) = 1.0;  // down left
    // Open chain: the columns for up at n-1 and down at 0 are discarded, so
    // S^dagger S is the identity minus those two diagonal entries.
    Mat gram = m.adjoint() * m;
    gram(n - 1, n - 1) += 1.0;
    gram(n, n) += 1.0;
    const double dev = (gram - Mat::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff();
    if (dev > 1e-12)
        throw std::logic_error("shift: isometry deviation " + std::to_string(dev));
    return m;
}

Mat field_matrix(const FieldConfig& field, std::size_t t, std::size_t n) {
    const double g = phase_at(field, t);
    const auto ctr = std::ptrdiff_t(n / 2);
    Mat m = Mat::Zero(2 * n, 2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        const cplx ph = std::polar(1.0, g * double(std::ptrdiff_t(k) - ctr));
        m(k, k) = ph;
        m(n + k, n + k) = ph;
    }
    require_unitary(m, "field phase");
    return m;
}

Vec to_vector(const WalkerState& state) {
    const std::size_t n = state.n_sites();
    Vec v(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        v(k) = state.up[k];
        v(n + k) = state.down[k];
    }
    return v;
}

WalkerState to_state(const Vec& v) {
    const std::size_t n = std::size_t(v.size()) / 2;
    WalkerState state(n);
    for (std::size_t k = 0; k < n; ++k) {
        state.up[k] = v(k);
        state.down[k] = v(n + k);
    }
    return state;
}

}  // namespace

WalkerState dense_unitary_oracle_from(const WalkerState& start,
                                      const SimulationConfig& config,
                                      std::size_t t) {
    const std::size_t n = start.n_sites();
    if (n > kOracleMaxSites)
        throw std::invalid_argument(
            "n_sites: dense oracle limited to " +
            std::to_string(kOracleMaxSites) + " sites, got " + std::to_string(n));
    validate(config.coin);
    validate(config.field);

    const Mat coin = coin_matrix(config.coin, n);
    require_unitary(coin, "coin");
    const Mat shift = shift_matrix(n);

    Vec v = to_vector(start);
    for (std::size_t step = 0; step < t; ++step)
        v = field_matrix(config.field, step, n) * (shift * (coin * v));
    return to_state(v);
}

WalkerState dense_unitary_oracle(const SimulationConfig& config, std::size_t t) {
    return dense_unitary_oracle_from(initial_state(config), config, t);
}

}  // namespace ewalk
