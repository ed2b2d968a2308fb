#include "minabm/herding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace minabm {

SwitchRates switch_rates(int n_chartists, int n_active, const HerdingParams& h) noexcept {
    const int n_f = n_active - n_chartists;
    const double inv = n_active > 1 ? 1.0 / static_cast<double>(n_active - 1) : 0.0;
    return {h.base_rate * (h.epsilon + n_chartists * inv),
            h.base_rate * h.bias * (h.epsilon + n_f * inv)};
}

namespace {

double zero_successes(int n, double p) {
    return std::pow(1.0 - std::min(p, 1.0), n);
}

}  // namespace

void step_population_inplace(MarketState& state, const HerdingParams& h, NoiseSource& rng) {
    const SwitchRates r = switch_rates(state.n_chartists, state.n_active, h);
    if (h.update == HerdingUpdate::sweep) {
        const int up = rng.binomial(state.n_fundamentalists, r.to_chartist,
                                    zero_successes(state.n_fundamentalists, r.to_chartist));
        const int down = rng.binomial(state.n_chartists, r.to_fundamentalist,
                                      zero_successes(state.n_chartists, r.to_fundamentalist));
        state.n_chartists += up - down;
    } else {
        const bool pick_chartist =
            rng.uniform() * static_cast<double>(state.n_active) < static_cast<double>(state.n_chartists);
        const double u = rng.uniform();
        if (pick_chartist) {
            if (u < r.to_fundamentalist) --state.n_chartists;
        } else if (u < r.to_chartist) {
            ++state.n_chartists;
        }
    }
    state.n_fundamentalists = state.n_active - state.n_chartists;
}

void PopulationStepper::step(MarketState& state, NoiseSource& rng) {
    if (h_.update != HerdingUpdate::sweep) {
        step_population_inplace(state, h_, rng);
        return;
    }
    const int n = state.n_active;
    if (n != cached_n_) {
        // Invalidate every entry at once; the table is refilled lazily.
        cached_n_ = n;
        ++epoch_;
        if (cache_.size() < static_cast<std::size_t>(n) + 1) cache_.resize(static_cast<std::size_t>(n) + 1);
    }
    const int n_c = state.n_chartists;
    const SwitchRates r = switch_rates(n_c, n, h_);
    Entry& e = cache_[static_cast<std::size_t>(n_c)];
    if (e.epoch != epoch_) {
        e.epoch = epoch_;
        e.p0_up = zero_successes(n - n_c, r.to_chartist);
        e.p0_down = zero_successes(n_c, r.to_fundamentalist);
    }
    const int up = rng.binomial(n - n_c, r.to_chartist, e.p0_up);
    const int down = rng.binomial(n_c, r.to_fundamentalist, e.p0_down);
    state.n_chartists += up - down;
    state.n_fundamentalists = n - state.n_chartists;
}

MarketState step_population(const MarketState& state, const HerdingParams& h, NoiseSource& rng) {
    MarketState next = state;
    step_population_inplace(next, h, rng);
    return next;
}

double PopulationDistribution::mean() const noexcept {
    double m = 0.0;
    for (int i = 0; i < bins(); ++i) m += mass[i] * node(i);
    return m;
}

PopulationDistribution PopulationDistribution::point_mass(double x, int bins) {
    PopulationDistribution d;
    d.edges.resize(static_cast<std::size_t>(bins) + 1);
    for (int i = 0; i <= bins; ++i) d.edges[i] = static_cast<double>(i) / bins;
    d.mass.assign(static_cast<std::size_t>(bins), 0.0);
    d.nodes.resize(static_cast<std::size_t>(bins));
    for (int i = 0; i < bins; ++i) d.nodes[i] = d.center(i);
    const int k = std::min(bins - 1, static_cast<int>(x * bins));
    d.mass[k] = 1.0;
    d.nodes[k] = x;
    return d;
}

PopulationDistribution estimate_feq(std::span<const double> x_series, int bins) {
    if (bins < 1) throw std::invalid_argument("estimate_feq: bins must be >= 1");
    if (x_series.empty()) throw std::invalid_argument("estimate_feq: empty series");
    if (x_series.size() < static_cast<std::size_t>(10) * bins) {
        throw std::invalid_argument("estimate_feq: series shorter than 10 * bins");
    }
    PopulationDistribution d = PopulationDistribution::point_mass(0.0, bins);
    d.mass.assign(static_cast<std::size_t>(bins), 0.0);
    std::vector<long long> counts(static_cast<std::size_t>(bins), 0);
    std::vector<double> sums(static_cast<std::size_t>(bins), 0.0);
    for (double x : x_series) {
        if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("estimate_feq: value outside [0,1]");
        const int k = std::min(bins - 1, static_cast<int>(x * bins));
        ++counts[k];
        sums[k] += x;
    }
    const double n = static_cast<double>(x_series.size());
    for (int i = 0; i < bins; ++i) {
        d.mass[i] = static_cast<double>(counts[i]) / n;
        d.nodes[i] = counts[i] > 0 ? sums[i] / static_cast<double>(counts[i]) : d.center(i);
    }
    return d;
}

}  // namespace minabm
