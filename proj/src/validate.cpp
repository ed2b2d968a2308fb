#include "minabm/validate.hpp"

#include <cmath>
#include <limits>
#include <thread>

#include "minabm/analytic.hpp"
#include "minabm/multiplicative.hpp"
#include "minabm/noise.hpp"
#include "minabm/stats.hpp"

namespace minabm {

bool ValidationReport::passed() const {
    if (rows.empty()) return false;
    for (const ValidationRow& r : rows) {
        if (!r.pass) return false;
    }
    return true;
}

namespace {

RunSpec frozen_run(const RunConfig& config, double x, std::int64_t samples) {
    RunSpec spec = config.run;
    spec.params.mode = DynamicsMode::linear;
    spec.params.sigma_pf = 0.0;
    spec.params.soi.enabled = false;
    spec.herding = false;
    spec.x0 = x;
    spec.p0.reset();
    spec.record_stride = 1;
    spec.t_max = spec.effective_warmup() + samples;
    return spec;
}

std::vector<double> squares(const std::vector<double>& v, double centre = 0.0) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = (v[i] - centre) * (v[i] - centre);
    return out;
}

ValidationRow compare(std::string quantity, double analytic, double simulated, double se, double k) {
    ValidationRow row;
    row.quantity = std::move(quantity);
    row.analytic = analytic;
    row.simulated = simulated;
    row.std_error = se;
    row.pass = std::abs(simulated - analytic) <= k * se;
    return row;
}

void x0_suite(const RunConfig& config, const ValidationOptions& opt, std::vector<ValidationRow>& rows) {
    const RunSpec spec = frozen_run(config, 0.0, opt.samples);
    const PriceSeries s = simulate(spec);
    const double gamma = spec.params.gamma * (1.0 + opt.gamma_corruption);
    const double sigma = spec.params.sigma;

    const std::vector<double> dev2 = squares(s.p, spec.params.p_f);
    rows.push_back(compare("x0.price_variance", ar1_price_second_moment_limit(gamma, sigma), mean(dev2),
                           batch_means_se(dev2), opt.tolerance_se));

    for (std::int64_t d : {1, 10, 100, 1000}) {
        const std::vector<double> r2 = squares(extract_returns(s.p, d).values);
        rows.push_back(compare("x0.return_variance.delta_" + std::to_string(d), ar1_return_variance(gamma, sigma, d),
                               mean(r2), batch_means_se(r2), opt.tolerance_se));
    }

    const std::int64_t d = 100;
    const ReturnSeries r = extract_returns(s.p, d);
    const int lag[] = {1};
    rows.push_back(compare("x0.return_autocorr.delta_100.tau_100", ar1_return_autocorr_exact(gamma, d, d),
                           autocov(r.values, lag)[0], 1.0 / std::sqrt(static_cast<double>(r.values.size())),
                           opt.tolerance_se));
}

void x1_suite(const RunConfig& config, const ValidationOptions& opt, std::vector<ValidationRow>& rows) {
    const CompanionModel model(config.run.params.b, config.run.params.M);
    if (!model.stationary()) {
        ValidationRow row;
        row.quantity = "x1.stationarity";
        row.analytic = model.max_real_eigenvalue();
        row.simulated = std::numeric_limits<double>::quiet_NaN();
        row.note = "asymptotic query rejected";
        rows.push_back(row);
        return;
    }
    const RunSpec spec = frozen_run(config, 1.0, opt.samples);
    const PriceSeries s = simulate(spec);
    const double sigma = spec.params.sigma;
    for (std::int64_t d : {1, 10, 100}) {
        const std::vector<double> r2 = squares(extract_returns(s.p, d).values);
        rows.push_back(compare("x1.return_variance.delta_" + std::to_string(d),
                               chartist_return_variance(model, sigma, d), mean(r2), batch_means_se(r2),
                               opt.tolerance_se));
    }
    const std::int64_t d = 10;
    const ReturnSeries r = extract_returns(s.p, d);
    const int lag[] = {1};
    rows.push_back(compare("x1.return_autocorr.delta_10.tau_10", chartist_return_autocov(model, sigma, d, d),
                           autocov(r.values, lag)[0], 1.0 / std::sqrt(static_cast<double>(r.values.size())),
                           opt.tolerance_se));
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

ValidationReport run_validation(const RunConfig& config, const ValidationOptions& options) {
    ValidationReport report;
    if (options.suite != ValidationSuite::x1) x0_suite(config, options, report.rows);
    if (options.suite != ValidationSuite::x0) x1_suite(config, options, report.rows);
    return report;
}

const std::vector<std::string>& sweep_metrics() {
    static const std::vector<std::string> names = {"mean_x",         "return_variance", "excess_kurtosis",
                                                   "mu",             "omega",           "final_N"};
    return names;
}

std::map<std::string, double> summarize_run(const PriceSeries& series, const RunConfig& config) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const bool mult = series.mode == DynamicsMode::multiplicative;
    const ReturnDefinition def = mult ? ReturnDefinition::log : ReturnDefinition::difference;
    const std::int64_t stride = series.stride;
    std::map<std::string, double> m;
    m["mean_x"] = mean(series.x);
    m["final_N"] = series.n.back();
    if (config.delta % stride == 0) {
        const ReturnSeries r = extract_returns(series.p, config.delta / stride, def);
        m["return_variance"] = r.values.size() > 1 ? variance(r.values) : nan;
        m["excess_kurtosis"] = r.values.size() > 3 ? excess_kurtosis(r.values) : nan;
    } else {
        m["return_variance"] = nan;
        m["excess_kurtosis"] = nan;
    }
    if (stride == 1) {
        const std::vector<std::int64_t> grid{10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
        m["mu"] = diffusion_exponent(series.p, grid, def).mu;
    } else {
        m["mu"] = nan;
    }
    m["omega"] = mult ? omega_diagnostic(series.p, config.run.params.p_f).omega : nan;
    return m;
}

std::vector<SweepRow> run_sweep(const RunConfig& base, const std::string& axis, const std::vector<std::string>& values,
                                const SweepOptions& options) {
    (void)get_config_value(base, axis);  // rejects unknown axes before any run starts
    std::vector<RunConfig> configs;
    for (const std::string& v : values) {
        RunConfig c = base;
        set_config_value(c, axis, v);
        if (!options.common_random_numbers) c.run.stream = derive_stream(base.run.stream, fnv1a(v));
        c.run.validate();
        configs.push_back(std::move(c));
    }
    std::vector<SweepRow> rows(values.size());
    auto work = [&](std::size_t i) {
        rows[i].value = values[i];
        try {
            rows[i].metrics = summarize_run(simulate(configs[i].run), configs[i]);
        } catch (const DivergenceError&) {
            for (const std::string& k : sweep_metrics()) rows[i].metrics[k] = std::numeric_limits<double>::quiet_NaN();
        }
    };
    const std::size_t jobs = static_cast<std::size_t>(std::max(1, options.jobs));
    if (jobs == 1) {
        for (std::size_t i = 0; i < rows.size(); ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t j = 0; j < jobs; ++j) {
            pool.emplace_back([&, j] {
                for (std::size_t i = j; i < rows.size(); i += jobs) work(i);
            });
        }
        for (std::thread& t : pool) t.join();
    }
    return rows;
}

}  // namespace minabm
