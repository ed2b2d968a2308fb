#include "minabm/multiplicative.hpp"

#include <cmath>
#include <utility>

namespace minabm {

double excess_demand(const MarketState& state, const ModelParams& params, EdNormalization mode) {
    const double x = state.x();
    const double p = state.p;
    const double p_m = state.history.mean();
    const double p_f = state.p_f_current;
    const double chartist = x * params.chartist_gain() * (p - p_m);
    const double fundamentalist = (1.0 - x) * params.gamma * (p_f - p);
    if (mode == EdNormalization::by_price) {
        if (p == 0.0) throw std::domain_error("excess_demand: zero price");
        return (chartist + fundamentalist) / p;
    }
    if (p_m == 0.0 || p_f == 0.0) throw std::domain_error("excess_demand: zero reference price");
    return chartist / p_m + fundamentalist / p_f;
}

double step_multiplicative_inplace(MarketState& state, const ModelParams& params, double xi) {
    const double ed = excess_demand(state, params, params.ed_normalization);
    state.history.push(state.p);
    state.log_p += ed + params.sigma * xi;
    state.p = std::exp(state.log_p);
    ++state.t;
    return ed;
}

MarketState step_multiplicative(const MarketState& state, const ModelParams& params, double xi) {
    MarketState next = state;
    step_multiplicative_inplace(next, params, xi);
    return next;
}

void linearized_step_inplace(MarketState& state, const ModelParams& params, double xi) {
    const double x = state.x();
    const double p = state.p;
    const double p_m = state.history.mean();
    const double next = p + params.sigma * p * xi + x * params.chartist_gain() * (p - p_m) +
                        (1.0 - x) * params.gamma * (state.p_f_current - p);
    state.history.push(p);
    state.p = next;
    state.log_p = next > 0.0 ? std::log(next) : -INFINITY;
    ++state.t;
}

MarketState linearized_step(const MarketState& state, const ModelParams& params, double xi) {
    MarketState next = state;
    linearized_step_inplace(next, params, xi);
    return next;
}

DivergenceError::DivergenceError(DivergenceReport report)
    : std::runtime_error("price diverged at t=" + std::to_string(report.t) + ": " + report.reason),
      report_(std::move(report)) {}

std::optional<DivergenceReport> divergence_guard(const MarketState& state, double ed, const GuardBounds& bounds) {
    const double ratio = state.p / state.p_f_current;
    const char* reason = nullptr;
    if (!std::isfinite(state.log_p) || !std::isfinite(state.p) || !std::isfinite(ratio)) {
        reason = "non-finite price";
    } else if (ratio < bounds.p_min_ratio) {
        reason = "price fell below p_min_ratio * p_f";
    } else if (ratio > bounds.p_max_ratio) {
        reason = "price rose above p_max_ratio * p_f";
    }
    if (reason == nullptr) return std::nullopt;
    return DivergenceReport{state.t, state.p, state.x(), ed, reason};
}

OmegaResult omega_diagnostic(std::span<const double> prices, double p_f) {
    if (prices.empty()) throw std::invalid_argument("omega_diagnostic: empty series");
    if (p_f == 0.0) throw std::invalid_argument("omega_diagnostic: p_f must be nonzero");
    double s = 0.0;
    for (double p : prices) {
        const double r = p / p_f;
        s += r * r;
    }
    OmegaResult out;
    out.second_moment_ratio = s / static_cast<double>(prices.size());
    out.below_reference = out.second_moment_ratio < 1.0;
    out.omega = std::sqrt(std::max(0.0, out.second_moment_ratio - 1.0));
    return out;
}

}  // namespace minabm
