#pragma once

#include <optional>
#include <span>
#include <utility>

#include "voltail/histogram.hpp"

namespace voltail {

// Result of fitting ln P(x) = a - c*ln(1 + b*x^2/2) to a histogram's
// log-density over nonempty bins, with weights w_k = P_k. The mapped
// microscopic parameters are beta = c - 3/2 and theta = 1/(b*beta*t);
// they are present only when c > 3/2 (finite-variance regime).
struct FitReport {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double se_a = 0.0;
    double se_b = 0.0;
    double se_c = 0.0;
    std::optional<double> beta;
    std::optional<double> theta;
    std::optional<double> se_beta;
    std::optional<double> se_theta;
    double rss_tsallis = 0.0;
    double rss_gaussian = 0.0;   // NaN when the Gaussian baseline fit failed
    std::size_t n_bins_used = 0;
    int lag = 1;

    bool finite_variance() const { return beta.has_value(); }
};

// Coarse (b, c) grid with the intercept a profiled out, then Nelder-Mead
// refinement in (ln b, ln c). Needs >= 8 nonempty bins.
FitReport fit_tsallis(const EmpiricalHist& hist, int lag);

struct GaussianFit {
    double mean = 0.0;
    double variance = 0.0;
    double rss = 0.0;
    std::size_t n_bins_used = 0;
};

// Weighted parabola through the log-density; errors out when the fitted
// parabola is not concave. Needs >= 3 nonempty bins.
GaussianFit fit_gaussian(const EmpiricalHist& hist);

struct LoglogFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
};

// Ordinary least squares of ln(w) on ln(t); all entries must be positive.
LoglogFit loglog_slope(std::span<const std::pair<double, double>> pairs);

}  // namespace voltail
