#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "minabm/market.hpp"
#include "minabm/noise.hpp"
#include "minabm/params.hpp"
#include "minabm/simulation.hpp"

namespace minabm {

/// Sample variance (1/(T-1)) of a price window around its own mean.
[[nodiscard]] double volatility_indicator(std::span<const double> window);

/// One agent enters above theta_in and one leaves below theta_out, within
/// [n_min, n_max]. The entering agent is a chartist with probability
/// (n_c+1)/(N+2); the leaving agent is a chartist with probability n_c/N.
void update_agent_count_inplace(MarketState& state, const SoiParams& soi, double indicator, NoiseSource& rng);
[[nodiscard]] MarketState update_agent_count(const MarketState& state, const SoiParams& soi, double indicator,
                                             NoiseSource& rng);


struct SoiCalibrationOptions {
    int n_star = 500;
    std::vector<int> n_grid{50, 500, 5000};
    double quantile = 0.1;        // theta_out = q(quantile), theta_in = q(1 - quantile) at n_star
    std::int64_t steps = 4'000'000;
    int sample_every = 500;
    std::uint64_t seed = 99;
};

struct SoiCalibration {
    double theta_in = 0.0;
    double theta_out = 0.0;
    std::vector<int> n_grid;
    std::vector<double> median_indicator;
    /// P(indicator > theta_in) - P(indicator < theta_out) at each frozen N.
    std::vector<double> drift;
};

/// Sorted indicator samples from a run with N frozen (SOI disabled).
[[nodiscard]] std::vector<double> frozen_indicator_samples(const ModelParams& params, int n,
                                                           const SoiCalibrationOptions& options);

/// Thresholds from indicator quantiles at frozen n_star, with the implied
/// drift of N reported on the whole grid.
[[nodiscard]] SoiCalibration calibrate_soi(const ModelParams& params, const SoiCalibrationOptions& options = {});

struct SoiConvergence {
    std::int64_t time_to_band = -1;  // first recorded t with N in [band_lo, band_hi], -1 if never
    double final_median = 0.0;
    int final_min = 0;
    int final_max = 0;
    double final_in_band = 0.0;  // fraction of the final half inside the band
};

[[nodiscard]] SoiConvergence summarize_soi(const PriceSeries& series, int band_lo, int band_hi);

}  // namespace minabm
