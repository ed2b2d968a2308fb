#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace minabm {

enum class DynamicsMode { linear, multiplicative };

/// How the excess demand is made dimensionless in multiplicative mode.
/// `by_price` divides both terms by the current price; `by_reference` divides
/// the chartist term by the moving average and the fundamentalist term by p_f.
enum class EdNormalization { by_price, by_reference };

/// `single_agent`: one uniformly drawn agent may switch per step.
/// `sweep`: every agent may switch once per step (binomial counts).
enum class HerdingUpdate { single_agent, sweep };

struct HerdingParams {
    double base_rate = 0.1;
    double epsilon = 2e-4;
    double bias = 1.005;
    HerdingUpdate update = HerdingUpdate::sweep;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

struct SoiParams {
    bool enabled = false;
    int window = 100;
    double theta_in = 0.0;
    double theta_out = 0.0;
    int n_min = 10;
    int n_max = 10000;
    int update_period = 10;

    void validate() const;
};

struct ModelParams {
    double b = 1.0;
    double gamma = 0.006;
    double sigma = 1.0;
    int M = 50;
    int N = 500;
    double p_f = 0.0;
    double sigma_pf = 0.0;
    DynamicsMode mode = DynamicsMode::linear;
    EdNormalization ed_normalization = EdNormalization::by_price;
    HerdingParams herding{};
    SoiParams soi{};

    void validate() const;

    /// Chartist coefficient b/(M-1).
    [[nodiscard]] double chartist_gain() const noexcept { return b / static_cast<double>(M - 1); }

    /// Stylized-facts calibration of the multiplicative dynamics.
    static ModelParams multiplicative_calibrated();
    /// Near-Gaussian comparison set of the multiplicative dynamics.
    static ModelParams multiplicative_mild();
};

/// Default warmup length: 10 * max(1/gamma, M) steps.
[[nodiscard]] std::int64_t default_warmup(const ModelParams& params);

[[nodiscard]] std::string_view to_string(DynamicsMode mode) noexcept;
[[nodiscard]] std::string_view to_string(EdNormalization mode) noexcept;
[[nodiscard]] std::string_view to_string(HerdingUpdate mode) noexcept;
[[nodiscard]] DynamicsMode parse_dynamics_mode(std::string_view text);
[[nodiscard]] EdNormalization parse_ed_normalization(std::string_view text);
[[nodiscard]] HerdingUpdate parse_herding_update(std::string_view text);

}  // namespace minabm
