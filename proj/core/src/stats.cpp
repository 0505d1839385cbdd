#include "voltail/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace voltail {

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x * 0.70710678118654752440);
}

double normal_log_pdf(double x) {
    return -0.5 * x * x - 0.91893853320467274178;  // ln sqrt(2 pi)
}

Moments sample_moments(std::span<const double> data) {
    const std::size_t n = data.size();
    if (n < 2) throw std::invalid_argument("sample_moments: need at least 2 samples");
    double mean = 0.0;
    for (double x : data) mean += x;
    mean /= static_cast<double>(n);
    double m2 = 0.0, m3 = 0.0;
    for (double x : data) {
        const double d = x - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    const double nn = static_cast<double>(n);
    Moments m;
    m.n = n;
    m.mean = mean;
    m.variance = m2 / (nn - 1.0);
    const double sigma = std::sqrt(m2 / nn);
    m.skewness = sigma > 0.0 ? (m3 / nn) / (sigma * sigma * sigma) : 0.0;
    return m;
}

double ks_statistic_sorted(std::span<const double> sorted,
                           const std::function<double(double)>& cdf) {
    const std::size_t n = sorted.size();
    if (n == 0) throw std::invalid_argument("ks_statistic_sorted: empty sample");
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = cdf(sorted[i]);
        const double lo = static_cast<double>(i) / static_cast<double>(n);
        const double hi = static_cast<double>(i + 1) / static_cast<double>(n);
        d = std::max(d, std::max(std::fabs(f - lo), std::fabs(f - hi)));
    }
    return d;
}

double ks_pvalue(double d, std::size_t n) {
    if (d <= 0.0) return 1.0;
    const double lambda = d * std::sqrt(static_cast<double>(n));
    // Kolmogorov tail series; converges rapidly for lambda > 0.3
    double sum = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = 2.0 * ((k % 2 == 1) ? 1.0 : -1.0) *
                            std::exp(-2.0 * k * k * lambda * lambda);
        sum += term;
        if (std::fabs(term) < 1e-16) break;
    }
    return std::clamp(sum, 0.0, 1.0);
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed;
    (void)splitmix64(state);
    state ^= 0x9E3779B97F4A7C15ULL * (index + 1);
    std::uint64_t out = splitmix64(state);
    (void)out;
    return splitmix64(state);
}

}  // namespace voltail
