#include "minabm/params.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace minabm {

namespace {

void require(bool ok, const char* field, const std::string& what) {
    if (!ok) {
        throw std::invalid_argument(std::string(field) + ": " + what);
    }
}

}  // namespace

void HerdingParams::validate() const {
    require(std::isfinite(base_rate) && base_rate > 0.0, "herding.base_rate", "must be > 0");
    require(std::isfinite(epsilon) && epsilon >= 0.0, "herding.epsilon", "must be >= 0");
    require(std::isfinite(bias) && bias >= 1.0, "herding.bias", "must be >= 1");
    // Largest switching probability: chartist leaving with every other agent a fundamentalist.
    require(base_rate * bias * (epsilon + 1.0) <= 1.0, "herding.base_rate",
            "base_rate * bias * (epsilon + 1) must not exceed 1");
}

void SoiParams::validate() const {
    require(window >= 2, "soi.window", "must be >= 2");
    require(update_period >= 1, "soi.update_period", "must be >= 1");
    require(n_min >= 2, "soi.n_min", "must be >= 2");
    require(n_max >= n_min, "soi.n_max", "must be >= soi.n_min");
    if (enabled) {
        require(std::isfinite(theta_in) && theta_in > 0.0, "soi.theta_in", "must be > 0");
        require(std::isfinite(theta_out) && theta_out >= 0.0, "soi.theta_out", "must be >= 0");
        require(theta_out < theta_in, "soi.theta_out", "must be below soi.theta_in");
    }
}

void ModelParams::validate() const {
    require(std::isfinite(b) && b >= 0.0, "b", "must be >= 0");
    require(std::isfinite(gamma) && gamma > 0.0 && gamma < 1.0, "gamma", "must lie in (0,1)");
    require(std::isfinite(sigma) && sigma > 0.0, "sigma", "must be > 0");
    require(M >= 2, "M", "must be >= 2");
    require(N >= 1, "N", "must be >= 1");
    require(std::isfinite(p_f), "p_f", "must be finite");
    require(std::isfinite(sigma_pf) && sigma_pf >= 0.0, "sigma_pf", "must be >= 0");
    if (mode == DynamicsMode::multiplicative) {
        require(p_f > 0.0, "p_f", "must be > 0 in multiplicative mode");
    }
    herding.validate();
    soi.validate();
    if (soi.enabled) {
        require(N >= soi.n_min && N <= soi.n_max, "N", "must lie in [soi.n_min, soi.n_max]");
    }
}

ModelParams ModelParams::multiplicative_calibrated() {
    ModelParams p;
    p.mode = DynamicsMode::multiplicative;
    p.b = 1.7;
    p.gamma = 0.01;
    p.sigma = 0.00112;
    p.p_f = 1.0;
    return p;
}

ModelParams ModelParams::multiplicative_mild() {
    ModelParams p = multiplicative_calibrated();
    p.b = 1.0;
    p.gamma = 0.006;
    return p;
}

std::int64_t default_warmup(const ModelParams& params) {
    const double scale = std::max(1.0 / params.gamma, static_cast<double>(params.M));
    return static_cast<std::int64_t>(std::ceil(10.0 * scale));
}

std::string_view to_string(DynamicsMode mode) noexcept {
    return mode == DynamicsMode::linear ? "linear" : "multiplicative";
}

std::string_view to_string(EdNormalization mode) noexcept {
    return mode == EdNormalization::by_price ? "by_price" : "by_reference";
}

std::string_view to_string(HerdingUpdate mode) noexcept {
    return mode == HerdingUpdate::sweep ? "sweep" : "single_agent";
}

DynamicsMode parse_dynamics_mode(std::string_view text) {
    if (text == "linear") return DynamicsMode::linear;
    if (text == "multiplicative") return DynamicsMode::multiplicative;
    throw std::invalid_argument("mode: unknown dynamics mode '" + std::string(text) + "'");
}

EdNormalization parse_ed_normalization(std::string_view text) {
    if (text == "by_price") return EdNormalization::by_price;
    if (text == "by_reference") return EdNormalization::by_reference;
    throw std::invalid_argument("ed_normalization: unknown value '" + std::string(text) + "'");
}

HerdingUpdate parse_herding_update(std::string_view text) {
    if (text == "sweep") return HerdingUpdate::sweep;
    if (text == "single_agent") return HerdingUpdate::single_agent;
    throw std::invalid_argument("herding.update: unknown value '" + std::string(text) + "'");
}

}  // namespace minabm
