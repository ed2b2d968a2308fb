#include "minabm/market.hpp"

#include <cmath>
#include <stdexcept>

namespace minabm {

PriceWindow::PriceWindow(int capacity) {
    if (capacity < 1) {
        throw std::invalid_argument("PriceWindow: capacity must be >= 1");
    }
    buffer_.assign(static_cast<std::size_t>(capacity), 0.0);
}

PriceWindow::PriceWindow(int capacity, std::initializer_list<double> values) : PriceWindow(capacity) {
    for (double v : values) push(v);
}

void PriceWindow::push(double value) {
    const int cap = capacity();
    if (size_ < cap) {
        buffer_[static_cast<std::size_t>((head_ + size_) % cap)] = value;
        ++size_;
        sum_ += value;
    } else {
        sum_ += value - buffer_[static_cast<std::size_t>(head_)];
        buffer_[static_cast<std::size_t>(head_)] = value;
        if (++head_ == cap) head_ = 0;
    }
    // The running sum drifts by round-off; rebuild it once per window turnover.
    if (++pushes_since_resum_ >= cap) resum();
}

void PriceWindow::resum() noexcept {
    double s = 0.0;
    for (int i = 0; i < size_; ++i) {
        s += buffer_[static_cast<std::size_t>((head_ + i) % capacity())];
    }
    sum_ = s;
    pushes_since_resum_ = 0;
}

std::vector<double> PriceWindow::values() const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int i = 0; i < size_; ++i) {
        out.push_back(buffer_[static_cast<std::size_t>((head_ + i) % capacity())]);
    }
    return out;
}

MarketState make_state(const ModelParams& params, double p0, double x0) {
    if (!(x0 >= 0.0 && x0 <= 1.0)) {
        throw std::invalid_argument("x0: must lie in [0,1]");
    }
    if (!std::isfinite(p0)) {
        throw std::invalid_argument("p0: must be finite");
    }
    if (params.mode == DynamicsMode::multiplicative && !(p0 > 0.0)) {
        throw std::invalid_argument("p0: must be > 0 in multiplicative mode");
    }
    if (params.M < 2 || params.N < 1) {
        throw std::invalid_argument("params: M must be >= 2 and N >= 1");
    }
    MarketState s;
    s.t = 0;
    s.p = p0;
    s.log_p = p0 > 0.0 ? std::log(p0) : 0.0;
    s.history = PriceWindow(params.M);
    for (int i = 0; i < params.M; ++i) s.history.push(p0);
    s.p_f_current = params.p_f;
    s.n_active = params.N;
    s.n_chartists = static_cast<int>(std::lround(x0 * params.N));
    s.n_fundamentalists = params.N - s.n_chartists;
    return s;
}

double moving_average(const MarketState& state) {
    return state.history.mean();
}

void step_linear_inplace(MarketState& state, const ModelParams& params, double xi) {
    const double x = state.x();
    const double p = state.p;
    const double p_m = state.history.mean();
    const double next = p + x * params.chartist_gain() * (p - p_m) +
                        (1.0 - x) * params.gamma * (state.p_f_current - p) + params.sigma * xi;
    state.history.push(p);
    state.p = next;
    ++state.t;
}

MarketState step_linear(const MarketState& state, const ModelParams& params, double xi) {
    MarketState next = state;
    step_linear_inplace(next, params, xi);
    return next;
}

MarketState step_fundamental_price(const MarketState& state, const ModelParams& params, double xi) {
    MarketState next = state;
    if (params.sigma_pf > 0.0) next.p_f_current += params.sigma_pf * xi;
    return next;
}

}  // namespace minabm
