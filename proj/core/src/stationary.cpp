#include "voltail/stationary.hpp"

#include <cmath>
#include <stdexcept>

#include "voltail/special_fn.hpp"

namespace voltail {

StationaryDist StationaryDist::from_params(const ModelParams& params, ModelKind kind) {
    params.validate();
    if (params.deterministic_volatility())
        throw std::domain_error(
            "StationaryDist: kappa=0 is the deterministic-volatility limit; "
            "the stationary law is a point mass at theta");
    StationaryDist d;
    d.kind = kind;
    d.shape = kind == ModelKind::Heston ? params.alpha() : params.beta();
    d.theta = params.theta;
    d.validate();
    return d;
}

void StationaryDist::validate() const {
    if (!(shape > 0.0)) throw std::invalid_argument("StationaryDist: shape must be positive");
    if (!(theta > 0.0)) throw std::invalid_argument("StationaryDist: theta must be positive");
}

double StationaryDist::log_pdf_v(double v) const {
    if (!(v > 0.0)) throw std::domain_error("StationaryDist: v must be positive");
    if (kind == ModelKind::Heston) {
        // Gamma(alpha, rate alpha/theta) in v
        const double a = shape;
        const double rate = a / theta;
        return a * std::log(rate) + (a - 1.0) * std::log(v) - rate * v - ln_gamma(a);
    }
    // Inverse of Gamma(beta+1, rate beta*theta): density in v is
    // (beta*theta)^(beta+1) v^(-beta-2) exp(-beta*theta/v) / Gamma(beta+1)
    const double b = shape;
    const double rate = b * theta;
    return (b + 1.0) * std::log(rate) - (b + 2.0) * std::log(v) - rate / v - ln_gamma(b + 1.0);
}

double StationaryDist::pdf_v(double v) const {
    return std::exp(log_pdf_v(v));
}

double StationaryDist::cdf_v(double v) const {
    if (v <= 0.0) return 0.0;
    if (kind == ModelKind::Heston)
        return gamma_p(shape, v * shape / theta);
    // P(V <= v) = P(Y >= 1/v) for Y = 1/V ~ Gamma(beta+1, rate beta*theta)
    return gamma_q(shape + 1.0, shape * theta / v);
}

double sample_gamma(std::mt19937_64& rng, double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0))
        throw std::invalid_argument("sample_gamma: shape and scale must be positive");
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    // shape < 1: draw Gamma(shape+1) and apply the U^(1/shape) boost
    double boost = 1.0;
    double a = shape;
    if (a < 1.0) {
        double u = uniform(rng);
        while (u == 0.0) u = uniform(rng);
        boost = std::pow(u, 1.0 / a);
        a += 1.0;
    }

    const double d = a - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, t;
        do {
            x = normal(rng);
            t = 1.0 + c * x;
        } while (t <= 0.0);
        const double t3 = t * t * t;
        const double u = uniform(rng);
        if (u < 1.0 - 0.0331 * x * x * x * x) return boost * scale * d * t3;
        if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - t3 + std::log(t3)))
            return boost * scale * d * t3;
    }
}

double StationaryDist::draw_v(std::mt19937_64& rng) const {
    if (kind == ModelKind::Heston)
        return sample_gamma(rng, shape, theta / shape);
    const double y = sample_gamma(rng, shape + 1.0, 1.0 / (shape * theta));
    return 1.0 / y;
}

std::vector<double> StationaryDist::sample_v(std::mt19937_64& rng, std::size_t n) const {
    if (n < 1) throw std::invalid_argument("sample_v: need n >= 1");
    validate();
    std::vector<double> out(n);
    for (auto& v : out) v = draw_v(rng);
    return out;
}

double balance_residual(const std::function<double(double)>& bsq,
                        const std::function<double(double)>& pi,
                        double gamma, double theta,
                        std::span<const double> grid) {
    if (grid.size() < 3)
        throw std::invalid_argument("balance_residual: grid needs at least 3 points");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0))
            throw std::invalid_argument("balance_residual: grid must be strictly positive");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw std::invalid_argument("balance_residual: grid must be strictly increasing");
    }

    std::vector<double> flux(grid.size());      // b^2(v) * pi(v)
    std::vector<double> sink(grid.size());      // 2*gamma*(v - theta)*pi(v)
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = grid[i];
        const double p = pi(v);
        flux[i] = bsq(v) * p;
        sink[i] = 2.0 * gamma * (v - theta) * p;
    }

    double max_resid = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        scale = std::max(scale, std::fabs(sink[i]));
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        const double dflux = (flux[i + 1] - flux[i - 1]) / (grid[i + 1] - grid[i - 1]);
        max_resid = std::max(max_resid, std::fabs(dflux + sink[i]));
    }
    if (scale == 0.0) return max_resid == 0.0 ? 0.0 : max_resid;
    return max_resid / scale;
}

double balance_residual(const ModelParams& params, ModelKind kind,
                        std::span<const double> grid) {
    const StationaryDist dist = StationaryDist::from_params(params, kind);
    auto bsq = [&](double v) {
        const double b = diffusion_b(v, kind, params);
        return b * b;
    };
    auto pi = [&](double v) { return dist.pdf_v(v); };
    return balance_residual(bsq, pi, params.gamma, params.theta, grid);
}

}  // namespace voltail
