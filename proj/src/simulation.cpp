#include "minabm/simulation.hpp"

#include <cmath>
#include <stdexcept>

#include "minabm/herding.hpp"
#include "minabm/noise.hpp"
#include "minabm/soi.hpp"

namespace minabm {

std::int64_t RunSpec::effective_warmup() const {
    return warmup < 0 ? default_warmup(params) : warmup;
}

void RunSpec::validate() const {
    params.validate();
    if (!(t_max > effective_warmup())) throw std::invalid_argument("t_max: must exceed warmup");
    if (record_stride < 1) throw std::invalid_argument("record_stride: must be >= 1");
    if (!(x0 >= 0.0 && x0 <= 1.0)) throw std::invalid_argument("x0: must lie in [0,1]");
    if (!(guard.p_min_ratio > 0.0 && guard.p_min_ratio < guard.p_max_ratio)) {
        throw std::invalid_argument("guard: need 0 < p_min_ratio < p_max_ratio");
    }
}

namespace {

NoiseSource channel_source(const RunSpec& spec, Channel c) {
    return NoiseSource(spec.seed, derive_stream(spec.stream, static_cast<std::uint64_t>(c)));
}

}  // namespace

Simulator::Simulator(RunSpec spec)
    : spec_(std::move(spec)),
      price_rng_(channel_source(spec_, Channel::price)),
      herding_rng_(channel_source(spec_, Channel::herding)),
      fundamental_rng_(channel_source(spec_, Channel::fundamental)),
      soi_rng_(channel_source(spec_, Channel::soi)),
      population_(spec_.params.herding) {
    spec_.validate();
    state_ = make_state(spec_.params, spec_.p0.value_or(spec_.params.p_f), spec_.x0);
    if (spec_.params.soi.enabled) soi_window_.assign(static_cast<std::size_t>(spec_.params.soi.window), 0.0);
    if (spec_.params.mode == DynamicsMode::multiplicative) {
        if (auto report = divergence_guard(state_, 0.0, spec_.guard)) throw DivergenceError(*report);
    }
}

double Simulator::advance() {
    const ModelParams& par = spec_.params;
    if (spec_.herding) population_.step(state_, herding_rng_);

    double ed = 0.0;
    const double xi = price_rng_.normal();
    if (par.mode == DynamicsMode::linear) {
        step_linear_inplace(state_, par, xi);
    } else {
        ed = step_multiplicative_inplace(state_, par, xi);
        if (auto report = divergence_guard(state_, ed, spec_.guard)) throw DivergenceError(*report);
    }

    if (par.sigma_pf > 0.0) state_.p_f_current += par.sigma_pf * fundamental_rng_.normal();

    if (par.soi.enabled) {
        const double level = par.mode == DynamicsMode::multiplicative ? state_.log_p : state_.p;
        soi_window_[soi_head_] = level;
        soi_head_ = (soi_head_ + 1) % soi_window_.size();
        if (soi_fill_ < soi_window_.size()) ++soi_fill_;
        if (soi_fill_ == soi_window_.size() && state_.t % par.soi.update_period == 0) {
            update_agent_count_inplace(state_, par.soi, volatility_indicator(soi_window_), soi_rng_);
        }
    }
    return ed;
}

void Simulator::run(const Observer& observer) {
    while (state_.t < spec_.t_max) {
        const double ed = advance();
        if (observer) observer(state_, ed);
    }
}

PriceSeries Simulator::run() {
    const std::int64_t warmup = spec_.effective_warmup();
    PriceSeries out;
    out.t0 = warmup;
    out.stride = spec_.record_stride;
    out.mode = spec_.params.mode;
    const auto count = static_cast<std::size_t>((spec_.t_max - warmup) / spec_.record_stride + 1);
    out.p.reserve(count);
    out.x.reserve(count);
    out.n.reserve(count);
    out.p_f.reserve(count);
    const bool mult = spec_.params.mode == DynamicsMode::multiplicative;
    if (mult) out.ed.reserve(count);

    auto record = [&](double ed) {
        out.p.push_back(state_.p);
        out.x.push_back(state_.x());
        out.n.push_back(state_.n_active);
        out.p_f.push_back(state_.p_f_current);
        if (mult) out.ed.push_back(ed);
    };
    if (warmup == 0) record(0.0);
    while (state_.t < spec_.t_max) {
        const double ed = advance();
        if (state_.t >= warmup && (state_.t - warmup) % spec_.record_stride == 0) record(ed);
    }
    return out;
}

PriceSeries simulate(const RunSpec& spec) {
    return Simulator(spec).run();
}

}  // namespace minabm
