#pragma once

#include "voltail/models.hpp"

namespace voltail {

// Parameters of the cut power-law (t-Student) return density
//   P_t(x) = N(beta, beta*theta*t) * (1 + x^2/(2 beta theta t))^-(beta+3/2)
// with N(beta, z) = Gamma(beta+3/2) / (sqrt(2 z) Gamma(beta+1) Gamma(1/2)).
struct TsallisParams {
    double beta = 1.0;
    double theta = 1.0;
    double t = 1.0;
    void validate() const;
};

// ln N(beta, z).
double tsallis_log_norm(double beta, double z);
double pdf_tsallis(const TsallisParams& tp, double x);
double log_pdf_tsallis(const TsallisParams& tp, double x);

// Bessel-argument factor of the Heston closed form:
//   Ito:       f = sqrt(1 + 16 gamma / (kappa^2 t))   (f -> 1 for large t)
//   ZeroDrift: f = 4 sqrt(gamma / (kappa^2 t))
double heston_f(const ModelParams& params, DriftScheme scheme, double t);

// Closed-form return density of the Heston model with stationary variance:
//   P_t(x) proportional to |x|^(alpha-1/2) sqrt(f) e^(-x/2) K_(alpha-1/2)(f|x|/2)
// (the e^(-x/2) factor only under the Ito scheme). The overall constant is
// fixed by numerical renormalization; the exact closed-form constant is kept
// for cross-checking.
class HestonPdf {
public:
    HestonPdf(const ModelParams& params, DriftScheme scheme, double t);

    double pdf(double x) const;
    double log_pdf(double x) const;

    double alpha() const { return alpha_; }
    double f() const { return f_; }
    double t() const { return t_; }
    // ln of the normalization constant actually dividing the shape
    double log_norm_numeric() const { return log_c_; }
    // the same constant from the closed form (agreement is a consistency check)
    double log_norm_analytic() const;

private:
    ModelParams params_;
    DriftScheme scheme_;
    double t_;
    double alpha_;
    double f_;
    double log_c_;

    double log_shape(double x) const;
    double normalize();
};

// One-shot evaluation.
double pdf_heston(const ModelParams& params, DriftScheme scheme, double t, double x);

// The BO-averaged return density
//   P_t(x) = integral over v of Pi(v) * Normal(x; -a(v) t, v t)
// evaluated by adaptive quadrature after substituting v = theta*e^u,
// u in [-40, 40]. In the kappa=0 deterministic-volatility limit this
// degenerates to the single Gaussian at v = theta.
class BoPdf {
public:
    BoPdf(const ModelParams& params, ModelKind kind, DriftScheme scheme, double t);

    // Density at x; throws QuadratureError (with the achieved tolerance) if
    // the integral does not converge.
    double pdf(double x) const;

    // CDF at x, by averaging the conditional Gaussian CDF over Pi(v).
    double cdf(double x) const;

    const ModelParams& params() const { return params_; }
    ModelKind kind() const { return kind_; }
    DriftScheme scheme() const { return scheme_; }
    double t() const { return t_; }

    static constexpr double kAbsTol = 1e-10;
    static constexpr double kRelTol = 1e-8;
    static constexpr double kLogVHalfWidth = 40.0;   // u truncation

private:
    ModelParams params_;
    ModelKind kind_;
    DriftScheme scheme_;
    double t_;
    double shape_ = 0.0;      // alpha or beta; unused when deterministic
    double log_pref_ = 0.0;   // constant part of ln Pi(v)
    bool deterministic_ = false;

    double log_pi_v(double v) const;
};

// Asymptotic tail classification.
struct TailExponents {
    enum class Form { ExponentialRates, PowerLaw };
    Form form = Form::ExponentialRates;
    // Form::ExponentialRates (Heston): density ~ exp(-rate * |x|) per side;
    // the loss side is fatter whenever f > 1 (Ito scheme).
    double win_rate = 0.0;
    double loss_rate = 0.0;
    // Form::PowerLaw (Hull-White): density ~ |x|^-power, power = 2(beta+3/2).
    double power = 0.0;
};

TailExponents tail_exponents(ModelKind kind, const ModelParams& params,
                             DriftScheme scheme, double t);

}  // namespace voltail
