#pragma once

#include <span>
#include <string>
#include <vector>

namespace voltail {

// Ordered positive prices, optionally labelled (e.g. with dates).
struct PriceSeries {
    std::vector<double> values;
    std::vector<std::string> labels;   // empty or same length as values

    void validate() const;
    std::size_t size() const { return values.size(); }
};

enum class LagWindows { Overlapping, NonOverlapping };

// Lag-t log-returns xi_i = ln(s_{i+t}/s_i).
struct LagReturns {
    int lag = 1;
    std::vector<double> xi;
};

// Returns after removing the best-fit linear trend a + b*i (index i = 1..N)
// and, once normalize() has run, scaling to unit second moment.
struct DetrendedReturns {
    int lag = 1;
    std::vector<double> x;
    double a = 0.0;        // fitted intercept
    double b = 0.0;        // fitted slope per index
    double width = 0.0;    // pre-normalization width sqrt(sum y^2 / N)
    bool normalized = false;
};

// One value per start index (stride 1) by default; stride t in
// non-overlapping mode. Requires 1 <= t <= size-2.
LagReturns lag_returns(const PriceSeries& prices, int t,
                       LagWindows windows = LagWindows::Overlapping);

// Least-squares line through (i, xi_i), i = 1..N, removed from the data:
//   b = 6/(N-1) * (mean_w[i*xi] - mean[xi]),  a = mean[xi] - b (N+1)/2
// where mean_w[i*xi] = sum(i*xi)/sum(i). The output x holds the residuals y.
DetrendedReturns linear_detrend(const LagReturns& returns);

// Scales to unit second moment: x_i = y_i * sqrt(N) / sqrt(sum y^2).
// Errors out when the residuals are identically zero.
DetrendedReturns normalize(const DetrendedReturns& detrended);

struct LagTrend {
    int lag = 0;
    double a = 0.0;
    double b = 0.0;
    double mean_xi = 0.0;
    double width = 0.0;
    std::size_t count = 0;
};

// Per-lag trend parameters and pre-normalization widths. The mean return
// follows mean_xi(t) = mu*t for drifting data.
std::vector<LagTrend> trend_summary(const PriceSeries& prices, std::span<const int> lags);

// Drift-per-lag estimate from a summary: least squares of mean_xi(t) on t
// through the origin.
double estimate_mu(std::span<const LagTrend> trends);

}  // namespace voltail
