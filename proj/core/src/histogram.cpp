#include "voltail/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "voltail/fit.hpp"

namespace voltail {

double EmpiricalHist::edge(std::size_t k) const {
    return x_min + static_cast<double>(k) * (x_max - x_min) / static_cast<double>(bins);
}

double EmpiricalHist::midpoint(std::size_t k) const {
    return x_min + (static_cast<double>(k) + 0.5) * (x_max - x_min) / static_cast<double>(bins);
}

double EmpiricalHist::density(std::size_t k) const {
    return static_cast<double>(counts.at(k)) / (static_cast<double>(total) * bin_width());
}

double EmpiricalHist::density_error(std::size_t k) const {
    return std::sqrt(static_cast<double>(counts.at(k))) /
           (static_cast<double>(total) * bin_width());
}

double EmpiricalHist::index_weighted_sum() const {
    double s = 0.0;
    for (std::size_t k = 0; k < counts.size(); ++k)
        s += static_cast<double>(k) * static_cast<double>(counts[k]);
    return s;
}

namespace {

EmpiricalHist bin_impl(std::span<const double> data, std::size_t bins,
                       double lo, double hi, bool drop_outside) {
    if (bins < 2) throw std::invalid_argument("bin: need at least 2 bins");
    if (data.empty()) throw std::invalid_argument("bin: empty data");
    if (!(hi > lo))
        throw std::invalid_argument("bin: zero-width range (all data identical?)");

    EmpiricalHist h;
    h.bins = bins;
    h.x_min = lo;
    h.x_max = hi;
    h.counts.assign(bins, 0);
    const double inv_width = static_cast<double>(bins) / (hi - lo);
    for (double x : data) {
        if (x < lo || x > hi) {
            if (drop_outside) continue;
            throw std::invalid_argument("bin: datum outside range");
        }
        auto k = static_cast<std::size_t>((x - lo) * inv_width);
        if (k >= bins) k = bins - 1;   // x == hi goes to the last bin
        ++h.counts[k];
        ++h.total;
    }
    return h;
}

}  // namespace

EmpiricalHist bin_data(std::span<const double> data, std::size_t bins) {
    if (data.empty()) throw std::invalid_argument("bin: empty data");
    auto [lo_it, hi_it] = std::minmax_element(data.begin(), data.end());
    return bin_impl(data, bins, *lo_it, *hi_it, false);
}

EmpiricalHist bin_data_range(std::span<const double> data, std::size_t bins,
                             double lo, double hi) {
    return bin_impl(data, bins, lo, hi, true);
}

EmpiricalHist bin(const DetrendedReturns& data, std::size_t bins) {
    return bin_data(data.x, bins);
}

double collapse_metric(std::span<const EmpiricalHist> hists) {
    if (hists.size() < 2)
        throw std::invalid_argument("collapse_metric: need at least 2 histograms");
    double lo = hists[0].x_min, hi = hists[0].x_max;
    std::size_t bins = hists[0].bins;
    for (const auto& h : hists) {
        lo = std::max(lo, h.x_min);
        hi = std::min(hi, h.x_max);
        bins = std::min(bins, h.bins);
    }
    if (!(hi > lo))
        throw std::invalid_argument("collapse_metric: supports do not intersect");

    // piecewise-constant density of h at x
    auto density_at = [](const EmpiricalHist& h, double x) {
        auto k = static_cast<std::size_t>((x - h.x_min) / (h.x_max - h.x_min) *
                                          static_cast<double>(h.bins));
        if (k >= h.bins) k = h.bins - 1;
        return h.density(k);
    };

    std::vector<std::vector<double>> on_grid(hists.size(), std::vector<double>(bins));
    for (std::size_t i = 0; i < hists.size(); ++i)
        for (std::size_t k = 0; k < bins; ++k) {
            const double x = lo + (static_cast<double>(k) + 0.5) * (hi - lo) /
                                      static_cast<double>(bins);
            on_grid[i][k] = density_at(hists[i], x);
        }

    double metric = 0.0;
    for (std::size_t i = 0; i < hists.size(); ++i)
        for (std::size_t j = i + 1; j < hists.size(); ++j) {
            double d = 0.0;
            for (std::size_t k = 0; k < bins; ++k)
                d = std::max(d, std::fabs(on_grid[i][k] - on_grid[j][k]));
            metric = std::max(metric, d);
        }
    return metric;
}

WidthScaling width_vs_lag(const PriceSeries& prices, std::span<const int> lags) {
    if (lags.size() < 3)
        throw std::invalid_argument("width_vs_lag: need at least 3 lags");
    const auto trends = trend_summary(prices, lags);

    WidthScaling out;
    std::vector<std::pair<double, double>> pairs;
    for (const auto& lt : trends) {
        out.lags.push_back(lt.lag);
        out.widths.push_back(lt.width);
        if (!(lt.width > 0.0))
            throw std::invalid_argument("width_vs_lag: zero width at lag " +
                                        std::to_string(lt.lag) +
                                        " (series has no stochastic component)");
        pairs.emplace_back(static_cast<double>(lt.lag), lt.width);
    }
    const LoglogFit fit = loglog_slope(pairs);
    out.slope = fit.slope;
    out.intercept = fit.intercept;
    out.slope_stderr = fit.slope_stderr;
    return out;
}

}  // namespace voltail
