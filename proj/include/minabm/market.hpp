#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "minabm/params.hpp"

namespace minabm {

/// Fixed-capacity ring buffer of recent prices with an O(1) mean.
class PriceWindow {
public:
    explicit PriceWindow(int capacity);
    PriceWindow(int capacity, std::initializer_list<double> values);

    /// Appends a price, evicting the oldest one once the window is full.
    void push(double value);

    [[nodiscard]] int capacity() const noexcept { return static_cast<int>(buffer_.size()); }
    [[nodiscard]] int size() const noexcept { return size_; }
    [[nodiscard]] bool empty() const noexcept { return size_ == 0; }
    [[nodiscard]] double mean() const noexcept { return sum_ / static_cast<double>(size_); }
    /// Stored prices, oldest first.
    [[nodiscard]] std::vector<double> values() const;

private:
    void resum() noexcept;

    std::vector<double> buffer_;
    int head_ = 0;  // slot of the oldest entry when full
    int size_ = 0;
    int pushes_since_resum_ = 0;
    double sum_ = 0.0;
};

/// State of one run at time t. `history` holds the M prices that precede the
/// current price p, so the moving average at time t is the mean of
/// p_{t-M}, ..., p_{t-1}.
struct MarketState {
    std::int64_t t = 0;
    double p = 0.0;
    double log_p = 0.0;  // maintained in multiplicative mode only
    PriceWindow history{2};
    double p_f_current = 0.0;
    int n_chartists = 0;
    int n_fundamentalists = 0;
    int n_active = 1;

    /// Chartist fraction n_chartists / n_active.
    [[nodiscard]] double x() const noexcept {
        return static_cast<double>(n_chartists) / static_cast<double>(n_active);
    }
};

/// Fresh state at t = 0 with the history seeded by p0 repeated M times.
/// Throws std::invalid_argument for x0 outside [0,1] or p0 <= 0 in
/// multiplicative mode.
[[nodiscard]] MarketState make_state(const ModelParams& params, double p0, double x0);

[[nodiscard]] double moving_average(const MarketState& state);

/// p_{t+1} = p_t + x b/(M-1) (p_t - p_M) + (1-x) gamma (p_f - p_t) + sigma xi
[[nodiscard]] MarketState step_linear(const MarketState& state, const ModelParams& params, double xi);
void step_linear_inplace(MarketState& state, const ModelParams& params, double xi);

/// p_f += sigma_pf * xi
[[nodiscard]] MarketState step_fundamental_price(const MarketState& state, const ModelParams& params,
                                                 double xi);

}  // namespace minabm
