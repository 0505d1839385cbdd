#include "voltail/bo_pdf.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "voltail/quadrature.hpp"
#include "voltail/special_fn.hpp"
#include "voltail/stats.hpp"

namespace voltail {

namespace {
constexpr double kLnSqrt2Pi = 0.91893853320467274178;
constexpr double kLnSqrtPi = 0.57236494292470008707;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

void TsallisParams::validate() const {
    if (!(beta > 0.0)) throw std::invalid_argument("TsallisParams: beta must be positive");
    if (!(theta > 0.0)) throw std::invalid_argument("TsallisParams: theta must be positive");
    if (!(t > 0.0)) throw std::invalid_argument("TsallisParams: t must be positive");
}

double tsallis_log_norm(double beta, double z) {
    if (!(beta > 0.0) || !(z > 0.0))
        throw std::invalid_argument("tsallis_log_norm: beta and z must be positive");
    return ln_gamma(beta + 1.5) - ln_gamma(beta + 1.0) - kLnSqrtPi - 0.5 * std::log(2.0 * z);
}

double log_pdf_tsallis(const TsallisParams& tp, double x) {
    tp.validate();
    const double z = tp.beta * tp.theta * tp.t;
    return tsallis_log_norm(tp.beta, z) - (tp.beta + 1.5) * std::log1p(x * x / (2.0 * z));
}

double pdf_tsallis(const TsallisParams& tp, double x) {
    return std::exp(log_pdf_tsallis(tp, x));
}

double heston_f(const ModelParams& params, DriftScheme scheme, double t) {
    params.validate();
    if (params.deterministic_volatility())
        throw std::domain_error("heston_f: undefined in the kappa=0 limit");
    if (!(t > 0.0)) throw std::invalid_argument("heston_f: t must be positive");
    const double g = params.gamma / (params.kappa * params.kappa * t);
    return scheme == DriftScheme::Ito ? std::sqrt(1.0 + 16.0 * g) : 4.0 * std::sqrt(g);
}

HestonPdf::HestonPdf(const ModelParams& params, DriftScheme scheme, double t)
    : params_(params), scheme_(scheme), t_(t) {
    params_.validate();
    if (params_.deterministic_volatility())
        throw std::domain_error("HestonPdf: kappa=0 limit is a pure Gaussian; use BoPdf");
    if (!(t > 0.0)) throw std::invalid_argument("HestonPdf: t must be positive");
    alpha_ = params_.alpha();
    f_ = heston_f(params_, scheme_, t_);
    log_c_ = normalize();
}

double HestonPdf::log_shape(double x) const {
    const double nu = alpha_ - 0.5;
    const double ax = std::fabs(x);
    if (ax == 0.0) {
        // z^nu K_nu(z) -> Gamma(nu) 2^(nu-1) as z -> 0; finite only for alpha > 1/2
        if (alpha_ <= 0.5) return kInf;
        return 0.5 * std::log(f_) - std::log(2.0) + ln_gamma(nu) +
               nu * (std::log(4.0) - std::log(f_));
    }
    double ls = nu * std::log(ax) + 0.5 * std::log(f_) +
                ln_bessel_k(std::fabs(nu), 0.5 * f_ * ax);
    if (scheme_ == DriftScheme::Ito) ls -= 0.5 * x;
    return ls;
}

double HestonPdf::normalize() {
    // Integrate the shape side by side on geometric panels. Decay rates:
    // win tail ~ exp(-(f+1)x/2) (Ito) or exp(-fx/2); loss tail analogous
    // with (f-1)/2.
    const double win_rate = scheme_ == DriftScheme::Ito ? 0.5 * (f_ + 1.0) : 0.5 * f_;
    const double loss_rate = scheme_ == DriftScheme::Ito ? 0.5 * (f_ - 1.0) : 0.5 * f_;

    auto side_integral = [&](double rate, int sign) {
        const double cut = std::min(1e9, (800.0 + 20.0 * alpha_) / std::max(rate, 1e-7));
        double a = 0.0, b = 0.25, sum = 0.0;
        auto g = [&](double x) { return std::exp(log_shape(sign * x)); };
        while (a < cut) {
            b = std::min(b, cut);
            const double abs_tol = sum > 0.0 ? sum * 1e-13 : 1e-300;
            sum += integrate_adaptive(g, a, b, abs_tol, 1e-11, 8).value;
            a = b;
            b *= 2.0;
        }
        return sum;
    };

    const double c_win = side_integral(win_rate, +1);
    const double c_loss = scheme_ == DriftScheme::Ito ? side_integral(loss_rate, -1) : c_win;
    return std::log(c_win + c_loss);
}

double HestonPdf::log_norm_analytic() const {
    // From Pi(v)=Gamma(alpha, theta/alpha) averaged over the conditional
    // Gaussian: P(x) = shape(x) * (alpha/theta)^alpha / Gamma(alpha)
    //                  * 2/sqrt(2 pi t) * (2/(t f))^(alpha-1/2) / sqrt(f).
    const double nu = alpha_ - 0.5;
    const double log_inv_c = alpha_ * std::log(alpha_ / params_.theta) - ln_gamma(alpha_) +
                             std::log(2.0) - kLnSqrt2Pi - 0.5 * std::log(t_) +
                             nu * (std::log(2.0) - std::log(t_ * f_)) - 0.5 * std::log(f_);
    return -log_inv_c;
}

double HestonPdf::log_pdf(double x) const {
    return log_shape(x) - log_c_;
}

double HestonPdf::pdf(double x) const {
    return std::exp(log_pdf(x));
}

double pdf_heston(const ModelParams& params, DriftScheme scheme, double t, double x) {
    return HestonPdf(params, scheme, t).pdf(x);
}

BoPdf::BoPdf(const ModelParams& params, ModelKind kind, DriftScheme scheme, double t)
    : params_(params), kind_(kind), scheme_(scheme), t_(t) {
    params_.validate();
    if (!(t > 0.0)) throw std::invalid_argument("BoPdf: t must be positive");
    if (params_.deterministic_volatility()) {
        deterministic_ = true;
        return;
    }
    if (kind_ == ModelKind::Heston) {
        shape_ = params_.alpha();
        log_pref_ = shape_ * std::log(shape_ / params_.theta) - ln_gamma(shape_);
    } else {
        shape_ = params_.beta();
        const double rate = shape_ * params_.theta;
        log_pref_ = (shape_ + 1.0) * std::log(rate) - ln_gamma(shape_ + 1.0);
    }
}

double BoPdf::log_pi_v(double v) const {
    if (kind_ == ModelKind::Heston)
        return log_pref_ + (shape_ - 1.0) * std::log(v) - v * shape_ / params_.theta;
    return log_pref_ - (shape_ + 2.0) * std::log(v) - shape_ * params_.theta / v;
}

double BoPdf::pdf(double x) const {
    const double theta = params_.theta;
    if (deterministic_) {
        const double var = theta * t_;
        const double mean = -drift_a(theta, scheme_) * t_;
        return std::exp(normal_log_pdf((x - mean) / std::sqrt(var))) / std::sqrt(var);
    }
    // v = theta * e^u; dv = v du
    auto integrand = [&](double u) {
        const double v = theta * std::exp(u);
        const double var = v * t_;
        const double mean = -drift_a(v, scheme_) * t_;
        const double d = x - mean;
        const double log_gauss = -0.5 * d * d / var - kLnSqrt2Pi - 0.5 * std::log(var);
        return std::exp(log_pi_v(v) + std::log(v) + log_gauss);
    };
    const double w = kLogVHalfWidth;
    return integrate_adaptive(integrand, -w, w, kAbsTol, kRelTol, 40).value;
}

double BoPdf::cdf(double x) const {
    const double theta = params_.theta;
    if (deterministic_) {
        const double var = theta * t_;
        const double mean = -drift_a(theta, scheme_) * t_;
        return normal_cdf((x - mean) / std::sqrt(var));
    }
    auto integrand = [&](double u) {
        const double v = theta * std::exp(u);
        const double var = v * t_;
        const double mean = -drift_a(v, scheme_) * t_;
        const double phi = normal_cdf((x - mean) / std::sqrt(var));
        return std::exp(log_pi_v(v) + std::log(v)) * phi;
    };
    const double w = kLogVHalfWidth;
    const double c = integrate_adaptive(integrand, -w, w, kAbsTol, kRelTol, 40).value;
    return std::clamp(c, 0.0, 1.0);
}

TailExponents tail_exponents(ModelKind kind, const ModelParams& params,
                             DriftScheme scheme, double t) {
    params.validate();
    if (params.deterministic_volatility())
        throw std::domain_error("tail_exponents: Gaussian kappa=0 limit has no "
                                "exponential/power tail classification");
    TailExponents te;
    if (kind == ModelKind::Heston) {
        const double f = heston_f(params, scheme, t);
        te.form = TailExponents::Form::ExponentialRates;
        if (scheme == DriftScheme::Ito) {
            te.win_rate = 0.5 * (f + 1.0);
            te.loss_rate = 0.5 * (f - 1.0);
        } else {
            te.win_rate = te.loss_rate = 0.5 * f;
        }
    } else {
        te.form = TailExponents::Form::PowerLaw;
        te.power = 2.0 * (params.beta() + 1.5);
    }
    return te;
}

}  // namespace voltail
