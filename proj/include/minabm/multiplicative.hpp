#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "minabm/market.hpp"
#include "minabm/params.hpp"

namespace minabm {

/// Dimensionless excess demand. Throws std::domain_error on a zero denominator.
[[nodiscard]] double excess_demand(const MarketState& state, const ModelParams& params, EdNormalization mode);

/// ln p_{t+1} = ln p_t + ED + sigma xi. Returns the ED used.
double step_multiplicative_inplace(MarketState& state, const ModelParams& params, double xi);
[[nodiscard]] MarketState step_multiplicative(const MarketState& state, const ModelParams& params, double xi);

/// First-order expansion of the multiplicative step (by_price normalization):
/// p_{t+1} = p_t + sigma p_t xi + x b/(M-1) (p_t - p_M) + (1-x) gamma (p_f - p_t)
[[nodiscard]] MarketState linearized_step(const MarketState& state, const ModelParams& params, double xi);
void linearized_step_inplace(MarketState& state, const ModelParams& params, double xi);

struct GuardBounds {
    double p_min_ratio = 1e-6;
    double p_max_ratio = 1e6;
};

struct DivergenceReport {
    std::int64_t t = 0;
    double p = 0.0;
    double x = 0.0;
    double ed = 0.0;
    std::string reason;
};

class DivergenceError : public std::runtime_error {
public:
    explicit DivergenceError(DivergenceReport report);
    [[nodiscard]] const DivergenceReport& report() const noexcept { return report_; }

private:
    DivergenceReport report_;
};

/// Empty when p / p_f lies inside the bounds and the log-price is finite.
[[nodiscard]] std::optional<DivergenceReport> divergence_guard(const MarketState& state, double ed,
                                                                const GuardBounds& bounds = {});

struct OmegaResult {
    double omega = 0.0;               // sqrt(max(0, E[p^2]/p_f^2 - 1))
    double second_moment_ratio = 0.0;  // E[p^2]/p_f^2
    bool below_reference = false;      // E[p^2] < p_f^2: possibly non-stationary segment
};

/// Relative fluctuation of the effective noise scale sigma * p_t.
[[nodiscard]] OmegaResult omega_diagnostic(std::span<const double> prices, double p_f);

}  // namespace minabm
