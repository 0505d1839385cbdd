#include "voltail/special_fn.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace voltail {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxIter = 20000;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Taylor coefficients of 1/Gamma(1+x) around x=0.
constexpr double kInvGammaC1 = 0.57721566490153286;    // Euler-Mascheroni
constexpr double kInvGammaC2 = -0.65587807152025388;
constexpr double kInvGammaC3 = -0.04200263503409524;
constexpr double kInvGammaC4 = 0.16653861138229149;

// Temme's auxiliary functions for |mu| <= 1/2:
//   gam1 = [1/Gamma(1-mu) - 1/Gamma(1+mu)]/(2 mu)
//   gam2 = [1/Gamma(1-mu) + 1/Gamma(1+mu)]/2
// with the mu -> 0 limits taken by series to avoid cancellation.
void temme_gammas(double mu, double& gam1, double& gam2, double& gampl, double& gammi) {
    const double mu2 = mu * mu;
    if (std::fabs(mu) < 1e-3) {
        gam1 = -(kInvGammaC1 + kInvGammaC3 * mu2);
        gam2 = 1.0 + kInvGammaC2 * mu2 + kInvGammaC4 * mu2 * mu2;
        gampl = 1.0 + mu * (kInvGammaC1 + mu * (kInvGammaC2 + mu * (kInvGammaC3 + mu * kInvGammaC4)));
        gammi = 1.0 - mu * (kInvGammaC1 - mu * (kInvGammaC2 - mu * (kInvGammaC3 - mu * kInvGammaC4)));
    } else {
        gampl = 1.0 / std::tgamma(1.0 + mu);
        gammi = 1.0 / std::tgamma(1.0 - mu);
        gam1 = (gammi - gampl) / (2.0 * mu);
        gam2 = (gammi + gampl) / 2.0;
    }
}

// Temme series for K_mu(x), K_{mu+1}(x), x <= 2, |mu| <= 1/2.
void bessel_k_small(double x, double mu, double& kmu, double& kmu1) {
    const double x2 = 0.5 * x;
    const double mu2 = mu * mu;
    const double pimu = kPi * mu;
    const double fact = (std::fabs(pimu) < 1e-15) ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    const double fact2 = (std::fabs(e) < 1e-15) ? 1.0 : std::sinh(e) / e;
    double gam1, gam2, gampl, gammi;
    temme_gammas(mu, gam1, gam2, gampl, gammi);
    double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / gampl;
    double q = 0.5 / (e * gammi);
    double c = 1.0;
    d = x2 * x2;
    double sum1 = p;
    int i = 1;
    for (; i <= kMaxIter; ++i) {
        ff = (i * ff + p + q) / (i * i - mu2);
        c *= d / i;
        p /= (i - mu);
        q /= (i + mu);
        const double del = c * ff;
        sum += del;
        const double del1 = c * (p - i * ff);
        sum1 += del1;
        if (std::fabs(del) < std::fabs(sum) * kEps) break;
    }
    if (i > kMaxIter) throw std::runtime_error("bessel_k: series failed to converge");
    kmu = sum;
    kmu1 = sum1 * (2.0 / x);
}

// Steed continued fraction (CF2) for e^x * K_mu(x), x > 2, |mu| <= 1/2.
void bessel_k_large_scaled(double x, double mu, double& kmu_scaled, double& kmu1_scaled) {
    const double mu2 = mu * mu;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25 - mu2;
    double q = a1, c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    int i = 2;
    for (; i <= kMaxIter; ++i) {
        a -= 2 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::fabs(dels / s) < kEps) break;
    }
    if (i > kMaxIter) throw std::runtime_error("bessel_k: continued fraction failed to converge");
    h = a1 * h;
    kmu_scaled = std::sqrt(kPi / (2.0 * x)) / s;
    kmu1_scaled = kmu_scaled * (mu + x + 0.5 - h) / x;
}

// Computes ln K_nu(x) via the order decomposition nu = n + mu, |mu| <= 1/2,
// and the upward recurrence K_{m+1} = K_{m-1} + (2m/x) K_m carried with a
// running exponent so intermediates never overflow.
double ln_bessel_k_impl(double nu, double x) {
    const int n = static_cast<int>(nu + 0.5);
    const double mu = nu - n;

    double kmu, kmu1;     // values scaled by exp(-ln_scale)
    double ln_scale;
    if (x <= 2.0) {
        bessel_k_small(x, mu, kmu, kmu1);
        ln_scale = 0.0;
    } else {
        bessel_k_large_scaled(x, mu, kmu, kmu1);
        ln_scale = -x;
    }

    for (int i = 1; i <= n; ++i) {
        const double knext = kmu + (2.0 * (mu + i) / x) * kmu1;
        kmu = kmu1;
        kmu1 = knext;
        if (kmu1 > 1e250) {
            kmu *= 1e-250;
            kmu1 *= 1e-250;
            ln_scale += 250.0 * 2.302585092994045684;  // ln(10^250)
        }
    }
    // after the loop kmu = K_{mu+n} = K_nu (scaled)
    return std::log(kmu) + ln_scale;
}

}  // namespace

double ln_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("ln_gamma: argument must be positive");
    return std::lgamma(x);
}

double ln_bessel_k(double nu, double z) {
    if (!(z > 0.0)) throw std::domain_error("bessel_k: argument must be positive");
    if (nu < 0.0) throw std::domain_error("bessel_k: order must be nonnegative");
    return ln_bessel_k_impl(nu, z);
}

double bessel_k(double nu, double z) {
    return std::exp(ln_bessel_k(nu, z));
}

namespace {

// Series expansion of P(a, x), best for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 1; i <= kMaxIter; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * kEps)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("gamma_p: series failed to converge");
}

// Continued fraction for Q(a, x), best for x >= a + 1.
double gamma_q_cf(double a, double x) {
    constexpr double kFpMin = std::numeric_limits<double>::min() / kEps;
    double b = x + 1.0 - a;
    double c = 1.0 / kFpMin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = b + an / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps)
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("gamma_p: continued fraction failed to converge");
}

}  // namespace

double gamma_p(double a, double x) {
    if (!(a > 0.0)) throw std::domain_error("gamma_p: shape must be positive");
    if (x < 0.0) throw std::domain_error("gamma_p: argument must be nonnegative");
    if (x == 0.0) return 0.0;
    return (x < a + 1.0) ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
    if (!(a > 0.0)) throw std::domain_error("gamma_q: shape must be positive");
    if (x < 0.0) throw std::domain_error("gamma_q: argument must be nonnegative");
    if (x == 0.0) return 1.0;
    return (x < a + 1.0) ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

}  // namespace voltail
