#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "minabm/herding.hpp"
#include "minabm/market.hpp"
#include "minabm/multiplicative.hpp"
#include "minabm/noise.hpp"
#include "minabm/params.hpp"

namespace minabm {

struct RunSpec {
    ModelParams params{};
    std::uint64_t seed = 1;
    std::uint64_t stream = 0;
    std::int64_t t_max = 100000;
    std::int64_t warmup = -1;  // negative: default_warmup(params)
    std::optional<double> p0;  // default: params.p_f
    double x0 = 0.5;
    bool herding = true;       // false freezes the populations at x0
    GuardBounds guard{};
    int record_stride = 1;     // keep every k-th post-warmup sample

    [[nodiscard]] std::int64_t effective_warmup() const;
    void validate() const;
};

/// Post-warmup path. Sample i is taken at time t0 + i * stride.
struct PriceSeries {
    std::int64_t t0 = 0;
    int stride = 1;
    DynamicsMode mode = DynamicsMode::linear;
    std::vector<double> p;
    std::vector<double> x;
    std::vector<int> n;
    std::vector<double> p_f;
    std::vector<double> ed;  // multiplicative mode only; ED that produced p[i]

    [[nodiscard]] std::size_t size() const noexcept { return p.size(); }
};

/// Noise channels of a run; each has its own stream derived from RunSpec::stream.
enum class Channel : std::uint64_t { price = 0, herding = 1, fundamental = 2, soi = 3 };

/// Runs the composed dynamics. Per step: herding update, price step with the
/// updated x, fundamental-price step, then the agent-count update every
/// soi.update_period steps.
class Simulator {
public:
    explicit Simulator(RunSpec spec);

    /// Observer sees the state after every step, warmup included.
    using Observer = std::function<void(const MarketState&, double ed)>;

    /// Advances until t_max. Throws DivergenceError in multiplicative mode.
    PriceSeries run();
    void run(const Observer& observer);

    [[nodiscard]] const MarketState& state() const noexcept { return state_; }
    [[nodiscard]] const RunSpec& spec() const noexcept { return spec_; }

private:
    double advance();

    RunSpec spec_;
    MarketState state_;
    NoiseSource price_rng_;
    NoiseSource herding_rng_;
    NoiseSource fundamental_rng_;
    NoiseSource soi_rng_;
    PopulationStepper population_;
    std::vector<double> soi_window_;
    std::size_t soi_head_ = 0;
    std::size_t soi_fill_ = 0;
};

[[nodiscard]] PriceSeries simulate(const RunSpec& spec);

}  // namespace minabm
