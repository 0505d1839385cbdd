#include "voltail/detrend.hpp"

#include <cmath>
#include <stdexcept>

namespace voltail {

void PriceSeries::validate() const {
    if (values.size() < 3)
        throw std::invalid_argument("PriceSeries: need at least 3 prices");
    if (!labels.empty() && labels.size() != values.size())
        throw std::invalid_argument("PriceSeries: labels must be empty or match values");
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!(values[i] > 0.0) || !std::isfinite(values[i]))
            throw std::invalid_argument("PriceSeries: non-positive price at index " +
                                        std::to_string(i));
}

LagReturns lag_returns(const PriceSeries& prices, int t, LagWindows windows) {
    prices.validate();
    const std::size_t n = prices.size();
    if (t < 1 || static_cast<std::size_t>(t) > n - 2)
        throw std::invalid_argument("lag_returns: lag must be in [1, size-2]");

    std::vector<double> logs(n);
    for (std::size_t i = 0; i < n; ++i) logs[i] = std::log(prices.values[i]);

    LagReturns out;
    out.lag = t;
    const std::size_t stride = windows == LagWindows::Overlapping ? 1 : static_cast<std::size_t>(t);
    for (std::size_t i = 0; i + static_cast<std::size_t>(t) < n; i += stride)
        out.xi.push_back(logs[i + static_cast<std::size_t>(t)] - logs[i]);
    return out;
}

DetrendedReturns linear_detrend(const LagReturns& returns) {
    const std::size_t n = returns.xi.size();
    if (n < 3) throw std::invalid_argument("linear_detrend: need at least 3 returns");
    const double nn = static_cast<double>(n);

    // index i runs 1..N; sum(i) = N(N+1)/2
    double sum_xi = 0.0, sum_ixi = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        sum_xi += returns.xi[k];
        sum_ixi += static_cast<double>(k + 1) * returns.xi[k];
    }
    const double mean_xi = sum_xi / nn;
    const double mean_ixi = 2.0 * sum_ixi / (nn * (nn + 1.0));
    const double b = 6.0 / (nn - 1.0) * (mean_ixi - mean_xi);
    const double a = mean_xi - b * (nn + 1.0) / 2.0;

    DetrendedReturns out;
    out.lag = returns.lag;
    out.a = a;
    out.b = b;
    out.x.resize(n);
    double sum_y2 = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double y = returns.xi[k] - a - b * static_cast<double>(k + 1);
        out.x[k] = y;
        sum_y2 += y * y;
    }
    out.width = std::sqrt(sum_y2 / nn);
    out.normalized = false;
    return out;
}

DetrendedReturns normalize(const DetrendedReturns& detrended) {
    if (detrended.x.empty())
        throw std::invalid_argument("normalize: empty series");
    double sum_x2 = 0.0;
    for (double y : detrended.x) sum_x2 += y * y;
    if (!(sum_x2 > 0.0))
        throw std::invalid_argument("normalize: residuals are identically zero "
                                    "(constant or purely linear series)");
    const double scale = std::sqrt(static_cast<double>(detrended.x.size()) / sum_x2);
    DetrendedReturns out = detrended;
    for (double& y : out.x) y *= scale;
    out.normalized = true;
    return out;
}

std::vector<LagTrend> trend_summary(const PriceSeries& prices, std::span<const int> lags) {
    std::vector<LagTrend> out;
    out.reserve(lags.size());
    for (int t : lags) {
        const LagReturns lr = lag_returns(prices, t);
        const DetrendedReturns d = linear_detrend(lr);
        LagTrend lt;
        lt.lag = t;
        lt.a = d.a;
        lt.b = d.b;
        double s = 0.0;
        for (double xi : lr.xi) s += xi;
        lt.mean_xi = s / static_cast<double>(lr.xi.size());
        lt.width = d.width;
        lt.count = lr.xi.size();
        out.push_back(lt);
    }
    return out;
}

double estimate_mu(std::span<const LagTrend> trends) {
    if (trends.empty()) throw std::invalid_argument("estimate_mu: empty summary");
    double num = 0.0, den = 0.0;
    for (const auto& lt : trends) {
        num += static_cast<double>(lt.lag) * lt.mean_xi;
        den += static_cast<double>(lt.lag) * static_cast<double>(lt.lag);
    }
    return num / den;
}

}  // namespace voltail
