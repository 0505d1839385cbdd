#include "voltail/models.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace voltail {

void ModelParams::validate() const {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::invalid_argument("ModelParams: gamma must be positive");
    if (!(theta > 0.0) || !std::isfinite(theta))
        throw std::invalid_argument("ModelParams: theta must be positive");
    if (kappa < 0.0 || !std::isfinite(kappa))
        throw std::invalid_argument("ModelParams: kappa must be >= 0 (0 = deterministic volatility)");
    if (!std::isfinite(mu))
        throw std::invalid_argument("ModelParams: mu must be finite");
}

double ModelParams::alpha() const {
    if (kappa == 0.0)
        throw std::domain_error("ModelParams::alpha: undefined in the kappa=0 deterministic limit");
    return 2.0 * gamma * theta / (kappa * kappa);
}

double ModelParams::beta() const {
    if (kappa == 0.0)
        throw std::domain_error("ModelParams::beta: undefined in the kappa=0 deterministic limit");
    return 2.0 * gamma / (kappa * kappa);
}

double drift_a(double v, DriftScheme scheme) {
    if (v < 0.0 || !std::isfinite(v))
        throw std::domain_error("drift_a: variance must be nonnegative");
    switch (scheme) {
        case DriftScheme::Ito: return 0.5 * v;
        case DriftScheme::ZeroDrift: return 0.0;
    }
    throw std::invalid_argument("drift_a: unknown scheme");
}

double diffusion_b(double v, ModelKind kind, const ModelParams& params) {
    if (v < 0.0 || !std::isfinite(v))
        throw std::domain_error("diffusion_b: variance must be nonnegative");
    switch (kind) {
        case ModelKind::Heston: return params.kappa * std::sqrt(v);
        case ModelKind::HullWhite: return params.kappa * v;
    }
    throw std::invalid_argument("diffusion_b: unknown kind");
}

std::optional<double> shape_constant(const ModelParams& params, ModelKind kind) {
    params.validate();
    if (params.deterministic_volatility()) return std::nullopt;
    return kind == ModelKind::Heston ? params.alpha() : params.beta();
}

std::string to_string(ModelKind kind) {
    return kind == ModelKind::Heston ? "heston" : "hullwhite";
}

std::string to_string(DriftScheme scheme) {
    return scheme == DriftScheme::Ito ? "ito" : "zerodrift";
}

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        double d = std::stod(value, &pos);
        if (pos != value.size())
            throw std::invalid_argument("trailing characters");
        return d;
    } catch (const std::exception&) {
        throw std::invalid_argument("model config: bad numeric value for '" + key + "': " + value);
    }
}

}  // namespace

ModelKind model_kind_from_string(std::string_view s) {
    const std::string v = lower(s);
    if (v == "heston") return ModelKind::Heston;
    if (v == "hullwhite" || v == "hull-white" || v == "hw") return ModelKind::HullWhite;
    throw std::invalid_argument("unknown model kind: " + std::string(s));
}

DriftScheme drift_scheme_from_string(std::string_view s) {
    const std::string v = lower(s);
    if (v == "ito") return DriftScheme::Ito;
    if (v == "zerodrift" || v == "zero-drift" || v == "zero") return DriftScheme::ZeroDrift;
    throw std::invalid_argument("unknown drift scheme: " + std::string(s));
}

std::map<std::string, std::string> to_kv(const ModelConfig& cfg) {
    auto fmt = [](double d) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", d);
        return std::string(buf);
    };
    return {
        {"gamma", fmt(cfg.params.gamma)},
        {"theta", fmt(cfg.params.theta)},
        {"kappa", fmt(cfg.params.kappa)},
        {"mu", fmt(cfg.params.mu)},
        {"kind", to_string(cfg.kind)},
        {"scheme", to_string(cfg.scheme)},
    };
}

ModelConfig model_config_from_kv(const std::map<std::string, std::string>& kv) {
    ModelConfig cfg;
    for (const auto& [key, value] : kv) {
        if (key == "gamma") cfg.params.gamma = parse_double(key, value);
        else if (key == "theta") cfg.params.theta = parse_double(key, value);
        else if (key == "kappa") cfg.params.kappa = parse_double(key, value);
        else if (key == "mu") cfg.params.mu = parse_double(key, value);
        else if (key == "kind") cfg.kind = model_kind_from_string(value);
        else if (key == "scheme") cfg.scheme = drift_scheme_from_string(value);
        else throw std::invalid_argument("model config: unknown key '" + key + "'");
    }
    cfg.params.validate();
    return cfg;
}

std::string to_kv_text(const ModelConfig& cfg) {
    auto kv = to_kv(cfg);
    std::ostringstream os;
    for (const char* key : {"gamma", "theta", "kappa", "mu", "kind", "scheme"})
        os << key << "=" << kv.at(key) << "\n";
    return os.str();
}

ModelConfig model_config_from_kv_text(std::string_view text) {
    std::map<std::string, std::string> kv;
    std::istringstream is{std::string(text)};
    std::string line;
    while (std::getline(is, line)) {
        // strip comments and whitespace-only lines
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto notspace = [](unsigned char c) { return !std::isspace(c); };
        line.erase(line.begin(), std::find_if(line.begin(), line.end(), notspace));
        line.erase(std::find_if(line.rbegin(), line.rend(), notspace).base(), line.end());
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("model config: expected key=value, got '" + line + "'");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        auto trim = [&](std::string& s) {
            s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
            s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
        };
        trim(key);
        trim(value);
        kv[key] = value;
    }
    return model_config_from_kv(kv);
}

}  // namespace voltail
