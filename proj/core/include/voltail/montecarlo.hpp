#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "voltail/models.hpp"

namespace voltail {

// Euler-Maruyama configuration for the coupled (x, v) system
//   dx = -a(v) dt + sqrt(v) dW1
//   dv = -gamma (v - theta) dt + b(v) dW2,   W2 = rho W1 + sqrt(1-rho^2) Wp.
struct SimConfig {
    ModelParams params;
    ModelKind kind = ModelKind::Heston;
    DriftScheme scheme = DriftScheme::Ito;
    double dt = 0.01;
    double horizon = 1.0;
    std::size_t paths = 1;
    double rho = 0.0;
    std::uint64_t seed = 0;
    // Initial variance; empty = draw from the stationary law per path.
    std::optional<double> v0;
    // Times (<= horizon) at which to record (x, v) across all paths; snapped
    // to the nearest step boundary. Sorted ascending.
    std::vector<double> record_times;
    // 0 = one worker per hardware thread. Results are identical for any value.
    unsigned threads = 0;

    void validate() const;
    std::size_t steps() const;
};

struct PathSet {
    std::size_t paths = 0;
    std::vector<double> terminal_x;    // size paths
    std::vector<double> terminal_v;    // size paths (Heston: truncated, >= 0)
    std::vector<double> record_times;  // size R (snapped)
    std::vector<double> recorded_x;    // size R*paths, row-major [r*paths + p]
    std::vector<double> recorded_v;

    std::span<const double> x_at(std::size_t r) const;
    std::span<const double> v_at(std::size_t r) const;
};

// Raised when a path produces a non-finite state.
class SimulationError : public std::runtime_error {
public:
    SimulationError(std::size_t path, std::size_t step)
        : std::runtime_error("simulation produced a non-finite value at path " +
                             std::to_string(path) + ", step " + std::to_string(step)),
          path_(path), step_(step) {}
    std::size_t path() const { return path_; }
    std::size_t step() const { return step_; }

private:
    std::size_t path_, step_;
};

// Joint Euler-Maruyama simulation. Heston uses full-truncation updates
// (max(v,0) inside drift and diffusion); Hull-White steps ln v, which keeps
// v strictly positive. Deterministic given cfg.seed, independent of thread
// count: path p uses a generator seeded with derive_seed(seed, p).
PathSet simulate_joint(const SimConfig& cfg);

// One stationary draw of v per path, then the exact conditional Gaussian
//   x ~ Normal(-a(v) * horizon, v * horizon).
// cfg.v0 is ignored; the output law does not depend on it.
PathSet simulate_bo(const SimConfig& cfg);

struct LagDiscrepancy {
    double lag = 0.0;
    double ks = 0.0;
};

// Kolmogorov-Smirnov distance between the joint simulation at each lag and
// the BO prediction at that lag. Requires cfg.paths >= 1000, rho == 0 (the
// BO analytics average over the marginal stationary law) and
// cfg.horizon >= max(lags).
std::vector<LagDiscrepancy> bo_discrepancy(const SimConfig& cfg_joint,
                                           std::span<const double> lags);

}  // namespace voltail
