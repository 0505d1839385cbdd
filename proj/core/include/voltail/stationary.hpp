#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "voltail/models.hpp"

namespace voltail {

// Stationary (detailed-balance) distribution of the variance v.
//   Heston:     v ~ Gamma(shape = alpha, scale = theta/alpha), mean theta.
//   Hull-White: y = 1/v ~ Gamma(shape = beta+1, rate = beta*theta);
//               v is inverse-Gamma with mean theta.
struct StationaryDist {
    ModelKind kind = ModelKind::Heston;
    double shape = 1.0;   // alpha (Heston) or beta (Hull-White)
    double theta = 1.0;

    static StationaryDist from_params(const ModelParams& params, ModelKind kind);

    void validate() const;

    // Density of v (> 0). Evaluated through the log form.
    double pdf_v(double v) const;
    double log_pdf_v(double v) const;

    // CDF of v; used for goodness-of-fit checks.
    double cdf_v(double v) const;

    double mean_v() const { return theta; }

    // i.i.d. draws of v. Deterministic for a given engine state.
    std::vector<double> sample_v(std::mt19937_64& rng, std::size_t n) const;

    // One draw of v.
    double draw_v(std::mt19937_64& rng) const;
};

// Gamma(shape, scale) sampler (Marsaglia-Tsang squeeze, with the shape<1
// boost), valid for any shape > 0.
double sample_gamma(std::mt19937_64& rng, double shape, double scale);

// Residual of the stationary balance relation
//   d/dv [bsq(v) * pi(v)] + 2*gamma*(v - theta)*pi(v) = 0
// evaluated by central differences on a strictly increasing grid (>= 3
// points). Returns max |residual| / max |2*gamma*(v-theta)*pi(v)|.
double balance_residual(const std::function<double(double)>& bsq,
                        const std::function<double(double)>& pi,
                        double gamma, double theta,
                        std::span<const double> grid);

// Same, with bsq and pi taken from the model's own stationary law.
double balance_residual(const ModelParams& params, ModelKind kind,
                        std::span<const double> grid);

}  // namespace voltail
