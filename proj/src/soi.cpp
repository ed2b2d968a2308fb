#include "minabm/soi.hpp"

#include <stdexcept>

namespace minabm {

double volatility_indicator(std::span<const double> window) {
    if (window.size() < 2) throw std::invalid_argument("volatility_indicator: window too short");
    // Shift by the first element to limit cancellation on large price levels.
    const double shift = window.front();
    double s = 0.0;
    double s2 = 0.0;
    for (double p : window) {
        const double d = p - shift;
        s += d;
        s2 += d * d;
    }
    const double n = static_cast<double>(window.size());
    return (s2 - s * s / n) / (n - 1.0);
}

void update_agent_count_inplace(MarketState& state, const SoiParams& soi, double indicator, NoiseSource& rng) {
    const int n = state.n_active;
    if (indicator > soi.theta_in && n < soi.n_max) {
        const double p_chartist = static_cast<double>(state.n_chartists + 1) / static_cast<double>(n + 2);
        if (rng.uniform() < p_chartist) ++state.n_chartists;
        ++state.n_active;
    } else if (indicator < soi.theta_out && n > soi.n_min) {
        const double p_chartist = static_cast<double>(state.n_chartists) / static_cast<double>(n);
        if (rng.uniform() < p_chartist) --state.n_chartists;
        --state.n_active;
    }
    state.n_fundamentalists = state.n_active - state.n_chartists;
}

MarketState update_agent_count(const MarketState& state, const SoiParams& soi, double indicator, NoiseSource& rng) {
    MarketState next = state;
    update_agent_count_inplace(next, soi, indicator, rng);
    return next;
}

}  // namespace minabm
