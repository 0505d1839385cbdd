#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "voltail/detrend.hpp"

namespace voltail {

// Binned empirical distribution. Edges are X_k = x_min + k*(x_max-x_min)/B,
// k = 0..B; intervals are left-closed and the maximum falls in the last bin.
struct EmpiricalHist {
    std::size_t bins = 0;
    double x_min = 0.0;
    double x_max = 0.0;
    std::vector<std::uint64_t> counts;   // size bins, sums to total
    std::uint64_t total = 0;

    double bin_width() const { return (x_max - x_min) / static_cast<double>(bins); }
    double edge(std::size_t k) const;
    double midpoint(std::size_t k) const;
    // Density P_k/(N*width); integrates to 1 on the midpoint rule.
    double density(std::size_t k) const;
    // Poisson standard error of density(k): sqrt(P_k)/(N*width).
    double density_error(std::size_t k) const;
    // sum_k k*P_k (reported as a diagnostic; no target value).
    double index_weighted_sum() const;
};

// Bins over [min(data), max(data)].
EmpiricalHist bin_data(std::span<const double> data, std::size_t bins);

// Bins over a fixed [lo, hi] range (values outside are dropped); used for
// cross-dataset comparison with a symmetric clip.
EmpiricalHist bin_data_range(std::span<const double> data, std::size_t bins,
                             double lo, double hi);

EmpiricalHist bin(const DetrendedReturns& data, std::size_t bins);

// Maximum pairwise sup-distance between midpoint densities after evaluating
// every histogram's piecewise-constant density on a common grid over the
// intersection of their supports. Zero means the distributions collapse.
double collapse_metric(std::span<const EmpiricalHist> hists);

struct WidthScaling {
    std::vector<int> lags;
    std::vector<double> widths;
    double slope = 0.0;       // of ln(width) vs ln(lag)
    double intercept = 0.0;
    double slope_stderr = 0.0;
};

// Pre-normalization widths per lag and the fitted log-log slope (0.5 for
// independent-increment data). Needs >= 3 lags and strictly positive widths.
WidthScaling width_vs_lag(const PriceSeries& prices, std::span<const int> lags);

}  // namespace voltail
