#include <algorithm>
#include <stdexcept>

#include "minabm/soi.hpp"

namespace minabm {

std::vector<double> frozen_indicator_samples(const ModelParams& params, int n, const SoiCalibrationOptions& options) {
    RunSpec spec;
    spec.params = params;
    spec.params.N = n;
    spec.params.soi.enabled = false;
    spec.seed = options.seed;
    spec.t_max = options.steps;
    spec.warmup = 0;
    const auto window = static_cast<std::size_t>(params.soi.window);
    const std::int64_t burn = std::max<std::int64_t>(default_warmup(params), static_cast<std::int64_t>(window));
    const bool use_log = params.mode == DynamicsMode::multiplicative;

    std::vector<double> ring(window);
    std::vector<double> ordered(window);
    std::size_t head = 0;
    std::vector<double> samples;
    Simulator sim(spec);
    sim.run([&](const MarketState& s, double) {
        ring[head] = use_log ? s.log_p : s.p;
        head = (head + 1) % window;
        if (s.t > burn && s.t % options.sample_every == 0) {
            std::rotate_copy(ring.begin(), ring.begin() + static_cast<std::ptrdiff_t>(head), ring.end(),
                             ordered.begin());
            samples.push_back(volatility_indicator(ordered));
        }
    });
    if (samples.empty()) throw std::invalid_argument("calibrate_soi: run too short for the indicator window");
    std::sort(samples.begin(), samples.end());
    return samples;
}

namespace {

double quantile(const std::vector<double>& sorted, double q) {
    return sorted[static_cast<std::size_t>(q * static_cast<double>(sorted.size() - 1))];
}

}  // namespace

SoiCalibration calibrate_soi(const ModelParams& params, const SoiCalibrationOptions& options) {
    if (!(options.quantile > 0.0 && options.quantile < 0.5)) {
        throw std::invalid_argument("calibrate_soi: quantile must lie in (0, 0.5)");
    }
    SoiCalibration out;
    const std::vector<double> ref = frozen_indicator_samples(params, options.n_star, options);
    out.theta_in = quantile(ref, 1.0 - options.quantile);
    out.theta_out = quantile(ref, options.quantile);
    out.n_grid = options.n_grid;
    for (int n : options.n_grid) {
        const std::vector<double> v = n == options.n_star ? ref : frozen_indicator_samples(params, n, options);
        const double size = static_cast<double>(v.size());
        const double above = static_cast<double>(v.end() - std::upper_bound(v.begin(), v.end(), out.theta_in));
        const double below = static_cast<double>(std::lower_bound(v.begin(), v.end(), out.theta_out) - v.begin());
        out.median_indicator.push_back(quantile(v, 0.5));
        out.drift.push_back((above - below) / size);
    }
    return out;
}

SoiConvergence summarize_soi(const PriceSeries& series, int band_lo, int band_hi) {
    if (series.n.empty()) throw std::invalid_argument("summarize_soi: empty series");
    SoiConvergence out;
    auto in_band = [&](int n) { return n >= band_lo && n <= band_hi; };
    for (std::size_t i = 0; i < series.n.size(); ++i) {
        if (in_band(series.n[i])) {
            out.time_to_band = series.t0 + static_cast<std::int64_t>(i) * series.stride;
            break;
        }
    }
    std::vector<int> tail(series.n.begin() + static_cast<std::ptrdiff_t>(series.n.size() / 2), series.n.end());
    out.final_in_band = static_cast<double>(std::count_if(tail.begin(), tail.end(), in_band)) /
                        static_cast<double>(tail.size());
    std::sort(tail.begin(), tail.end());
    out.final_min = tail.front();
    out.final_max = tail.back();
    out.final_median = tail[tail.size() / 2];
    return out;
}

}  // namespace minabm
