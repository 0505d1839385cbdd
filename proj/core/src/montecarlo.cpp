#include "voltail/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>
#include <thread>

#include "voltail/bo_pdf.hpp"
#include "voltail/stationary.hpp"
#include "voltail/stats.hpp"

namespace voltail {

void SimConfig::validate() const {
    params.validate();
    if (!(dt > 0.0)) throw std::invalid_argument("SimConfig: dt must be positive");
    if (!(horizon >= dt)) throw std::invalid_argument("SimConfig: horizon must be >= dt");
    if (paths < 1) throw std::invalid_argument("SimConfig: need at least one path");
    if (!(rho >= -1.0 && rho <= 1.0)) throw std::invalid_argument("SimConfig: |rho| must be <= 1");
    if (v0 && !(*v0 > 0.0)) throw std::invalid_argument("SimConfig: v0 must be positive");
    for (std::size_t i = 0; i < record_times.size(); ++i) {
        if (!(record_times[i] > 0.0) || record_times[i] > horizon * (1.0 + 1e-12))
            throw std::invalid_argument("SimConfig: record times must lie in (0, horizon]");
        if (i > 0 && !(record_times[i] > record_times[i - 1]))
            throw std::invalid_argument("SimConfig: record times must be sorted ascending");
    }
}

std::size_t SimConfig::steps() const {
    return static_cast<std::size_t>(std::llround(horizon / dt));
}

std::span<const double> PathSet::x_at(std::size_t r) const {
    return {recorded_x.data() + r * paths, paths};
}

std::span<const double> PathSet::v_at(std::size_t r) const {
    return {recorded_v.data() + r * paths, paths};
}

namespace {

unsigned worker_count(const SimConfig& cfg) {
    unsigned n = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    return static_cast<unsigned>(std::min<std::size_t>(n, cfg.paths));
}

// Step indices (1-based) at which to record, snapped to the grid.
std::vector<std::size_t> record_steps(const SimConfig& cfg) {
    std::vector<std::size_t> steps;
    steps.reserve(cfg.record_times.size());
    const std::size_t total = cfg.steps();
    for (double t : cfg.record_times) {
        auto s = static_cast<std::size_t>(std::llround(t / cfg.dt));
        steps.push_back(std::clamp<std::size_t>(s, 1, total));
    }
    return steps;
}

template <class PathFn>
void run_paths(const SimConfig& cfg, const PathFn& path_fn) {
    const unsigned workers = worker_count(cfg);
    if (workers == 1) {
        for (std::size_t p = 0; p < cfg.paths; ++p) path_fn(p);
        return;
    }
    std::mutex err_mutex;
    std::size_t err_path = std::numeric_limits<std::size_t>::max();
    std::exception_ptr err;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t p = w; p < cfg.paths; p += workers) {
                try {
                    path_fn(p);
                } catch (...) {
                    std::lock_guard lock(err_mutex);
                    // keep the failure with the smallest path index so the
                    // reported error does not depend on scheduling
                    if (p < err_path) {
                        err_path = p;
                        err = std::current_exception();
                    }
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace

PathSet simulate_joint(const SimConfig& cfg) {
    cfg.validate();
    const std::size_t n_steps = cfg.steps();
    const auto rec_steps = record_steps(cfg);

    PathSet out;
    out.paths = cfg.paths;
    out.terminal_x.resize(cfg.paths);
    out.terminal_v.resize(cfg.paths);
    out.record_times.resize(rec_steps.size());
    for (std::size_t r = 0; r < rec_steps.size(); ++r)
        out.record_times[r] = static_cast<double>(rec_steps[r]) * cfg.dt;
    out.recorded_x.resize(rec_steps.size() * cfg.paths);
    out.recorded_v.resize(rec_steps.size() * cfg.paths);

    const bool stationary_init = !cfg.v0.has_value();
    StationaryDist stat;
    if (stationary_init)
        stat = StationaryDist::from_params(cfg.params, cfg.kind);

    const double gamma = cfg.params.gamma;
    const double theta = cfg.params.theta;
    const double kappa = cfg.params.kappa;
    const double dt = cfg.dt;
    const double sqrt_dt = std::sqrt(dt);
    const double rho = cfg.rho;
    const double rho_c = std::sqrt(std::max(0.0, 1.0 - rho * rho));
    const bool hull_white = cfg.kind == ModelKind::HullWhite;
    const bool ito = cfg.scheme == DriftScheme::Ito;

    run_paths(cfg, [&](std::size_t p) {
        std::mt19937_64 rng(derive_seed(cfg.seed, p));
        std::normal_distribution<double> normal(0.0, 1.0);

        double v = stationary_init ? stat.draw_v(rng) : *cfg.v0;
        double x = 0.0;
        double lnv = hull_white ? std::log(v) : 0.0;
        std::size_t next_rec = 0;

        for (std::size_t s = 1; s <= n_steps; ++s) {
            const double z1 = normal(rng);
            const double z2 = rho * z1 + rho_c * normal(rng);

            const double vp = hull_white ? v : std::max(v, 0.0);
            x += -(ito ? 0.5 * vp : 0.0) * dt + std::sqrt(vp) * sqrt_dt * z1;

            if (hull_white) {
                // exact Ito transform of dv = -gamma(v-theta)dt + kappa v dW:
                // d(ln v) = (-gamma(v-theta)/v - kappa^2/2)dt + kappa dW
                lnv += (-gamma * (v - theta) / v - 0.5 * kappa * kappa) * dt +
                       kappa * sqrt_dt * z2;
                v = std::exp(lnv);
            } else {
                // full truncation: max(v,0) inside drift and diffusion
                v += -gamma * (vp - theta) * dt + kappa * std::sqrt(vp) * sqrt_dt * z2;
            }

            if (!std::isfinite(x) || !std::isfinite(v))
                throw SimulationError(p, s);

            if (next_rec < rec_steps.size() && rec_steps[next_rec] == s) {
                // the same step may be requested more than once
                do {
                    out.recorded_x[next_rec * cfg.paths + p] = x;
                    out.recorded_v[next_rec * cfg.paths + p] = hull_white ? v : std::max(v, 0.0);
                    ++next_rec;
                } while (next_rec < rec_steps.size() && rec_steps[next_rec] == s);
            }
        }
        out.terminal_x[p] = x;
        out.terminal_v[p] = hull_white ? v : std::max(v, 0.0);
    });
    return out;
}

PathSet simulate_bo(const SimConfig& cfg) {
    cfg.validate();
    PathSet out;
    out.paths = cfg.paths;
    out.terminal_x.resize(cfg.paths);
    out.terminal_v.resize(cfg.paths);

    const double horizon = cfg.horizon;
    const bool ito = cfg.scheme == DriftScheme::Ito;
    const bool deterministic = cfg.params.deterministic_volatility();
    StationaryDist stat;
    if (!deterministic)
        stat = StationaryDist::from_params(cfg.params, cfg.kind);

    run_paths(cfg, [&](std::size_t p) {
        std::mt19937_64 rng(derive_seed(cfg.seed, p));
        std::normal_distribution<double> normal(0.0, 1.0);
        const double v = deterministic ? cfg.params.theta : stat.draw_v(rng);
        const double x = -(ito ? 0.5 * v : 0.0) * horizon +
                         std::sqrt(v * horizon) * normal(rng);
        if (!std::isfinite(x)) throw SimulationError(p, 1);
        out.terminal_x[p] = x;
        out.terminal_v[p] = v;
    });
    return out;
}

std::vector<LagDiscrepancy> bo_discrepancy(const SimConfig& cfg_joint,
                                           std::span<const double> lags) {
    if (cfg_joint.paths < 1000)
        throw std::invalid_argument("bo_discrepancy: need at least 1000 paths");
    if (lags.empty())
        throw std::invalid_argument("bo_discrepancy: need at least one lag");
    std::vector<double> sorted_lags(lags.begin(), lags.end());
    std::sort(sorted_lags.begin(), sorted_lags.end());
    if (!(sorted_lags.front() > 0.0))
        throw std::invalid_argument("bo_discrepancy: lags must be positive");
    if (sorted_lags.back() > cfg_joint.horizon * (1.0 + 1e-12))
        throw std::invalid_argument("bo_discrepancy: horizon must cover the largest lag");

    SimConfig cfg = cfg_joint;
    cfg.record_times = sorted_lags;
    const PathSet ps = simulate_joint(cfg);

    std::vector<LagDiscrepancy> out;
    out.reserve(sorted_lags.size());
    for (std::size_t r = 0; r < ps.record_times.size(); ++r) {
        const double lag = ps.record_times[r];
        const BoPdf bo(cfg.params, cfg.kind, cfg.scheme, lag);
        auto samples = ps.x_at(r);
        std::vector<double> sorted(samples.begin(), samples.end());
        std::sort(sorted.begin(), sorted.end());
        const double d = ks_statistic_sorted(sorted, [&](double x) { return bo.cdf(x); });
        out.push_back({lag, d});
    }
    return out;
}

}  // namespace voltail
