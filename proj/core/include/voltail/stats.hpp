#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace voltail {

// Standard normal CDF.
double normal_cdf(double x);

// Standard normal log-density.
double normal_log_pdf(double x);

struct Moments {
    double mean = 0.0;
    double variance = 0.0;   // unbiased (n-1)
    double skewness = 0.0;   // standardized third moment
    std::size_t n = 0;
};
Moments sample_moments(std::span<const double> data);

// Two-sided Kolmogorov-Smirnov statistic of `sorted` against a CDF.
// `sorted` must be ascending.
double ks_statistic_sorted(std::span<const double> sorted,
                           const std::function<double(double)>& cdf);

// Asymptotic Kolmogorov p-value Q(d*sqrt(n)) for sample size n.
double ks_pvalue(double d, std::size_t n);

// SplitMix64 step; used to derive per-path/per-thread seeds from a root seed
// so results do not depend on thread count or schedule.
std::uint64_t splitmix64(std::uint64_t& state);

// Deterministic stream seed for substream `index` of root `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace voltail
