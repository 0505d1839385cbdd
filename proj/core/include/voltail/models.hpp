#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace voltail {

// Volatility diffusion term b(v): kappa*sqrt(v) (Heston) or kappa*v (Hull-White).
enum class ModelKind { Heston, HullWhite };

// Drift prescription a(v) of the log-return process: v/2 (Ito) or 0
// (the Stratonovich-type scheme in which it cancels).
enum class DriftScheme { Ito, ZeroDrift };

// Microscopic parameters of the volatility process
//   dv = -gamma*(v - theta)*dt + b(v)*dW2
// and the deterministic log-price drift mu. All rates are per lag unit
// (one lag unit = one sampling interval of the data, e.g. a trading day).
struct ModelParams {
    double gamma = 1.0;   // mean-reversion rate of v
    double theta = 1.0;   // stationary mean variance
    double kappa = 1.0;   // volatility-of-volatility; 0 = deterministic-volatility limit
    double mu = 0.0;      // log-price drift per lag unit

    void validate() const;

    bool deterministic_volatility() const { return kappa == 0.0; }

    // Heston stationary shape alpha = 2*gamma*theta/kappa^2.
    double alpha() const;
    // Hull-White stationary shape beta = 2*gamma/kappa^2.
    double beta() const;
};

// Full model selection: parameters plus which diffusion and which drift scheme.
struct ModelConfig {
    ModelParams params;
    ModelKind kind = ModelKind::Heston;
    DriftScheme scheme = DriftScheme::Ito;
};

// a(v) for the chosen scheme. v must be nonnegative.
double drift_a(double v, DriftScheme scheme);

// b(v) for the chosen model. v must be nonnegative.
double diffusion_b(double v, ModelKind kind, const ModelParams& params);

// The model's stationary shape parameter (alpha for Heston, beta for
// Hull-White). Empty in the kappa=0 deterministic-volatility limit, where
// the stationary law degenerates to a point mass at theta.
std::optional<double> shape_constant(const ModelParams& params, ModelKind kind);

std::string to_string(ModelKind kind);
std::string to_string(DriftScheme scheme);
ModelKind model_kind_from_string(std::string_view s);
DriftScheme drift_scheme_from_string(std::string_view s);

// Flat key-value serialization (keys: gamma, theta, kappa, mu, kind, scheme).
std::map<std::string, std::string> to_kv(const ModelConfig& cfg);
ModelConfig model_config_from_kv(const std::map<std::string, std::string>& kv);

// Text form: one "key=value" per line, keys in the fixed order above.
std::string to_kv_text(const ModelConfig& cfg);
ModelConfig model_config_from_kv_text(std::string_view text);

}  // namespace voltail
