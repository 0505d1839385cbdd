#include "voltail/fit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace voltail {

namespace {

struct BinData {
    std::vector<double> x;      // midpoints
    std::vector<double> ln_rho;
    std::vector<double> w;      // Poisson count weights
    double sum_w = 0.0;
};

BinData collect_nonempty(const EmpiricalHist& hist) {
    BinData d;
    for (std::size_t k = 0; k < hist.bins; ++k) {
        if (hist.counts[k] == 0) continue;   // log-density undefined there
        d.x.push_back(hist.midpoint(k));
        d.ln_rho.push_back(std::log(hist.density(k)));
        d.w.push_back(static_cast<double>(hist.counts[k]));
        d.sum_w += static_cast<double>(hist.counts[k]);
    }
    return d;
}

// Objective with the intercept profiled out: for fixed (b, c) the optimal
// a is the weighted mean of ln_rho + c*u.
double profiled_rss(const BinData& d, double b, double c, double* a_out = nullptr) {
    const std::size_t n = d.x.size();
    double mean = 0.0;
    std::vector<double> u(n);
    for (std::size_t k = 0; k < n; ++k) {
        u[k] = std::log1p(0.5 * b * d.x[k] * d.x[k]);
        mean += d.w[k] * (d.ln_rho[k] + c * u[k]);
    }
    mean /= d.sum_w;
    double rss = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double r = d.ln_rho[k] - mean + c * u[k];
        rss += d.w[k] * r * r;
    }
    if (a_out) *a_out = mean;
    return rss;
}

// Solves the symmetric 3x3 system M s = rhs in place (partial pivoting).
std::array<double, 3> solve3(std::array<std::array<double, 3>, 3> m,
                             std::array<double, 3> rhs) {
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
        std::swap(m[col], m[piv]);
        std::swap(rhs[col], rhs[piv]);
        if (m[col][col] == 0.0) throw std::runtime_error("singular normal equations");
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double f = m[r][col] / m[col][col];
            for (int cc = col; cc < 3; ++cc) m[r][cc] -= f * m[col][cc];
            rhs[r] -= f * rhs[col];
        }
    }
    return {rhs[0] / m[0][0], rhs[1] / m[1][1], rhs[2] / m[2][2]};
}

std::array<std::array<double, 3>, 3> invert3(std::array<std::array<double, 3>, 3> m) {
    std::array<std::array<double, 3>, 3> inv{};
    for (int col = 0; col < 3; ++col) {
        std::array<double, 3> e{};
        e[col] = 1.0;
        const auto s = solve3(m, e);
        for (int r = 0; r < 3; ++r) inv[r][col] = s[r];
    }
    return inv;
}

struct NmPoint {
    double lb, lc, rss;
};

// Nelder-Mead in (ln b, ln c); returns the best vertex reached.
NmPoint nelder_mead(const BinData& d, double lb0, double lc0) {
    auto eval = [&](double lb, double lc) {
        return NmPoint{lb, lc, profiled_rss(d, std::exp(lb), std::exp(lc))};
    };
    std::array<NmPoint, 3> s = {eval(lb0, lc0), eval(lb0 + 0.4, lc0), eval(lb0, lc0 + 0.4)};
    auto order = [&]() { std::sort(s.begin(), s.end(), [](auto& a, auto& b) { return a.rss < b.rss; }); };
    order();
    for (int it = 0; it < 500; ++it) {
        const double size = std::fabs(s[0].lb - s[2].lb) + std::fabs(s[0].lc - s[2].lc) +
                            std::fabs(s[0].lb - s[1].lb) + std::fabs(s[0].lc - s[1].lc);
        if (size < 1e-11) break;
        const double cb = 0.5 * (s[0].lb + s[1].lb);
        const double cc = 0.5 * (s[0].lc + s[1].lc);
        NmPoint refl = eval(cb + (cb - s[2].lb), cc + (cc - s[2].lc));
        if (refl.rss < s[0].rss) {
            NmPoint exp_pt = eval(cb + 2.0 * (cb - s[2].lb), cc + 2.0 * (cc - s[2].lc));
            s[2] = exp_pt.rss < refl.rss ? exp_pt : refl;
        } else if (refl.rss < s[1].rss) {
            s[2] = refl;
        } else {
            NmPoint con = eval(cb + 0.5 * (s[2].lb - cb), cc + 0.5 * (s[2].lc - cc));
            if (con.rss < s[2].rss) {
                s[2] = con;
            } else {
                // shrink toward the best vertex
                s[1] = eval(s[0].lb + 0.5 * (s[1].lb - s[0].lb), s[0].lc + 0.5 * (s[1].lc - s[0].lc));
                s[2] = eval(s[0].lb + 0.5 * (s[2].lb - s[0].lb), s[0].lc + 0.5 * (s[2].lc - s[0].lc));
            }
        }
        order();
    }
    return s[0];
}

}  // namespace

FitReport fit_tsallis(const EmpiricalHist& hist, int lag) {
    if (lag < 1) throw std::invalid_argument("fit_tsallis: lag must be >= 1");
    const BinData d = collect_nonempty(hist);
    const std::size_t n = d.x.size();
    if (n < 8) throw std::invalid_argument("fit_tsallis: need at least 8 nonempty bins");

    // coarse grid in (b, c)
    double best_rss = std::numeric_limits<double>::infinity();
    double best_lb = 0.0, best_lc = 0.0;
    for (int ib = 0; ib <= 40; ++ib) {
        const double lb = -4.0 * std::log(10.0) + ib * (8.0 * std::log(10.0) / 40.0);
        for (int ic = 0; ic <= 40; ++ic) {
            const double lc = std::log(0.1) + ic * ((std::log(1000.0) - std::log(0.1)) / 40.0);
            const double rss = profiled_rss(d, std::exp(lb), std::exp(lc));
            if (rss < best_rss) {
                best_rss = rss;
                best_lb = lb;
                best_lc = lc;
            }
        }
    }

    const NmPoint opt = nelder_mead(d, best_lb, best_lc);
    if (!std::isfinite(opt.rss))
        throw std::runtime_error("fit_tsallis: objective not finite at best point (b=" +
                                 std::to_string(std::exp(opt.lb)) + ", c=" +
                                 std::to_string(std::exp(opt.lc)) + ")");

    FitReport rep;
    rep.lag = lag;
    rep.n_bins_used = n;
    rep.b = std::exp(opt.lb);
    rep.c = std::exp(opt.lc);
    rep.rss_tsallis = profiled_rss(d, rep.b, rep.c, &rep.a);

    // local quadratic approximation: Cov = s^2 (J^T W J)^-1 with
    // J_k = [1, -c (x^2/2)/(1 + b x^2/2), -ln(1 + b x^2/2)]
    std::array<std::array<double, 3>, 3> jtj{};
    for (std::size_t k = 0; k < n; ++k) {
        const double half_x2 = 0.5 * d.x[k] * d.x[k];
        const double denom = 1.0 + rep.b * half_x2;
        const std::array<double, 3> row = {1.0, -rep.c * half_x2 / denom, -std::log(denom)};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) jtj[i][j] += d.w[k] * row[i] * row[j];
    }
    const double s2 = rep.rss_tsallis / static_cast<double>(n - 3);
    double cov_bc = 0.0;
    try {
        const auto inv = invert3(jtj);
        rep.se_a = std::sqrt(std::max(0.0, s2 * inv[0][0]));
        rep.se_b = std::sqrt(std::max(0.0, s2 * inv[1][1]));
        rep.se_c = std::sqrt(std::max(0.0, s2 * inv[2][2]));
        cov_bc = s2 * inv[1][2];
    } catch (const std::runtime_error&) {
        rep.se_a = rep.se_b = rep.se_c = std::numeric_limits<double>::quiet_NaN();
        cov_bc = std::numeric_limits<double>::quiet_NaN();
    }

    // map to (beta, theta); only c > 3/2 admits a finite-variance reading
    if (rep.c > 1.5) {
        const double beta = rep.c - 1.5;
        const double theta = 1.0 / (rep.b * beta * static_cast<double>(lag));
        rep.beta = beta;
        rep.theta = theta;
        rep.se_beta = rep.se_c;
        const double dtheta_db = -theta / rep.b;
        const double dtheta_dc = -theta / beta;
        const double var_theta = dtheta_db * dtheta_db * rep.se_b * rep.se_b +
                                 dtheta_dc * dtheta_dc * rep.se_c * rep.se_c +
                                 2.0 * dtheta_db * dtheta_dc * cov_bc;
        rep.se_theta = std::sqrt(std::max(0.0, var_theta));
    }

    try {
        rep.rss_gaussian = fit_gaussian(hist).rss;
    } catch (const std::exception&) {
        rep.rss_gaussian = std::numeric_limits<double>::quiet_NaN();
    }
    return rep;
}

GaussianFit fit_gaussian(const EmpiricalHist& hist) {
    const BinData d = collect_nonempty(hist);
    const std::size_t n = d.x.size();
    if (n < 3) throw std::invalid_argument("fit_gaussian: need at least 3 nonempty bins");

    // weighted parabola ln rho = c0 + c1 x + c2 x^2
    std::array<std::array<double, 3>, 3> m{};
    std::array<double, 3> rhs{};
    for (std::size_t k = 0; k < n; ++k) {
        const std::array<double, 3> basis = {1.0, d.x[k], d.x[k] * d.x[k]};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) m[i][j] += d.w[k] * basis[i] * basis[j];
            rhs[i] += d.w[k] * basis[i] * d.ln_rho[k];
        }
    }
    const auto c = solve3(m, rhs);
    if (!(c[2] < 0.0))
        throw std::runtime_error("fit_gaussian: log-density parabola is not concave");

    GaussianFit g;
    g.n_bins_used = n;
    g.variance = -0.5 / c[2];
    g.mean = c[1] * g.variance;
    g.rss = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double model = c[0] + c[1] * d.x[k] + c[2] * d.x[k] * d.x[k];
        const double r = d.ln_rho[k] - model;
        g.rss += d.w[k] * r * r;
    }
    return g;
}

LoglogFit loglog_slope(std::span<const std::pair<double, double>> pairs) {
    if (pairs.size() < 3)
        throw std::invalid_argument("loglog_slope: need at least 3 points");
    std::vector<double> lt, lw;
    for (const auto& [t, w] : pairs) {
        if (!(t > 0.0) || !(w > 0.0))
            throw std::invalid_argument("loglog_slope: entries must be positive");
        lt.push_back(std::log(t));
        lw.push_back(std::log(w));
    }
    const double n = static_cast<double>(pairs.size());
    double mt = 0.0, mw = 0.0;
    for (std::size_t i = 0; i < lt.size(); ++i) {
        mt += lt[i];
        mw += lw[i];
    }
    mt /= n;
    mw /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < lt.size(); ++i) {
        sxx += (lt[i] - mt) * (lt[i] - mt);
        sxy += (lt[i] - mt) * (lw[i] - mw);
    }
    if (sxx == 0.0) throw std::invalid_argument("loglog_slope: all lags identical");

    LoglogFit f;
    f.slope = sxy / sxx;
    f.intercept = mw - f.slope * mt;
    double rss = 0.0;
    for (std::size_t i = 0; i < lt.size(); ++i) {
        const double r = lw[i] - (f.intercept + f.slope * lt[i]);
        rss += r * r;
    }
    f.slope_stderr = pairs.size() > 2 ? std::sqrt(rss / (n - 2.0) / sxx) : 0.0;
    return f;
}

}  // namespace voltail
