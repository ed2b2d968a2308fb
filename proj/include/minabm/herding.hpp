#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "minabm/market.hpp"
#include "minabm/noise.hpp"
#include "minabm/params.hpp"

namespace minabm {

/// Per-agent switching probabilities given the current counts.
struct SwitchRates {
    double to_chartist;      // one fundamentalist becomes a chartist
    double to_fundamentalist;  // one chartist becomes a fundamentalist
};

[[nodiscard]] SwitchRates switch_rates(int n_chartists, int n_active, const HerdingParams& h) noexcept;

/// Population update for one time step (see HerdingUpdate for the two schemes).
void step_population_inplace(MarketState& state, const HerdingParams& h, NoiseSource& rng);
[[nodiscard]] MarketState step_population(const MarketState& state, const HerdingParams& h, NoiseSource& rng);

/// step_population with the per-count zero-success probabilities of the
/// sweep scheme memoized. Produces the same draws as step_population.
class PopulationStepper {
public:
    explicit PopulationStepper(HerdingParams h) : h_(h) {}

    void step(MarketState& state, NoiseSource& rng);

private:
    struct Entry {
        std::uint64_t epoch = 0;
        double p0_up = 0.0;
        double p0_down = 0.0;
    };

    HerdingParams h_;
    std::vector<Entry> cache_;
    int cached_n_ = -1;
    std::uint64_t epoch_ = 0;
};

/// Normalized histogram of the chartist fraction on [0,1].
struct PopulationDistribution {
    std::vector<double> edges;  // bins + 1 entries, edges.front() = 0, edges.back() = 1
    std::vector<double> mass;
    std::vector<double> nodes;  // quadrature abscissa per bin: mean of the samples it holds

    [[nodiscard]] int bins() const noexcept { return static_cast<int>(mass.size()); }
    [[nodiscard]] double center(int i) const noexcept { return 0.5 * (edges[i] + edges[i + 1]); }
    [[nodiscard]] double node(int i) const noexcept { return nodes.empty() ? center(i) : nodes[i]; }
    [[nodiscard]] double mean() const noexcept;

    /// Single-bin mass at x (used for degenerate mixtures).
    static PopulationDistribution point_mass(double x, int bins);
};

/// Histogram with equal-width bins; x = 1 falls in the last bin.
/// Throws std::invalid_argument if the series is shorter than 10 * bins or
/// contains values outside [0,1].
[[nodiscard]] PopulationDistribution estimate_feq(std::span<const double> x_series, int bins);

}  // namespace minabm
