// Command-line driver: simulate, validate, sweep, soi, stats.
#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "minabm/analytic.hpp"
#include "minabm/herding.hpp"
#include "minabm/io.hpp"
#include "minabm/simulation.hpp"
#include "minabm/soi.hpp"
#include "minabm/stats.hpp"
#include "minabm/validate.hpp"

namespace fs = std::filesystem;
using namespace minabm;

namespace {

constexpr const char* kOutputRootEnv = "MINABM_OUTPUT_ROOT";

// Config file, then per-key flags.
struct ConfigSource {
    std::string path;
    std::map<std::string, std::string> overrides;

    void attach(CLI::App* app) {
        app->add_option("-c,--config", path, "key = value config file");
        for (const ConfigKey& k : config_keys()) {
            app->add_option("--" + k.name, overrides[k.name], k.doc);
        }
    }

    RunConfig load() const {
        RunConfig c = path.empty() ? RunConfig{} : load_config(path);
        for (const auto& [key, value] : overrides) {
            if (!value.empty()) set_config_value(c, key, value);
        }
        return c;
    }
};

fs::path output_dir(const RunConfig& c) {
    fs::path dir(c.output_dir);
    if (dir.is_relative()) {
        if (const char* root = std::getenv(kOutputRootEnv)) dir = fs::path(root) / dir;
    }
    fs::create_directories(dir);
    return dir;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::map<std::string, std::string> to_results(const std::map<std::string, double>& metrics) {
    std::map<std::string, std::string> out;
    for (const auto& [k, v] : metrics) out[k] = format_double(v);
    return out;
}

int cmd_simulate(const RunConfig& config) {
    config.run.validate();
    const fs::path dir = output_dir(config);
    try {
        const PriceSeries s = simulate(config.run);
        write_series_csv(dir / "series.csv", s);
        auto results = to_results(summarize_run(s, config));
        results["status"] = "ok";
        write_manifest(dir / "manifest.txt", config, results);
        if (s.x.size() >= static_cast<std::size_t>(10 * config.feq_bins)) {
            write_feq_csv(dir / "feq.csv", estimate_feq(s.x, config.feq_bins));
        }
        std::cout << "wrote " << (dir / "series.csv").string() << " (" << s.size() << " rows)\n";
        return 0;
    } catch (const DivergenceError& e) {
        write_manifest(dir / "manifest.txt", config, divergence_results(e.report()));
        std::cerr << "diverged: " << e.what() << "\n";
        return 2;
    }
}

int cmd_validate(const RunConfig& config, const ValidationOptions& options) {
    config.run.validate();
    const ValidationReport report = run_validation(config, options);
    write_validation_csv(output_dir(config) / "validation.csv", report.rows);
    for (const ValidationRow& r : report.rows) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.quantity << " analytic=" << format_double(r.analytic)
                  << " simulated=" << format_double(r.simulated) << " se=" << format_double(r.std_error);
        if (!r.note.empty()) std::cout << " (" << r.note << ")";
        std::cout << "\n";
    }
    return report.passed() ? 0 : 1;
}

int cmd_sweep(const RunConfig& config, const std::string& axis, const std::string& values, const SweepOptions& opt) {
    const std::vector<SweepRow> rows = run_sweep(config, axis, split(values, ','), opt);
    const fs::path path = output_dir(config) / "sweep.csv";
    std::ofstream out(path);
    out << axis;
    std::cout << axis;
    for (const std::string& m : sweep_metrics()) {
        out << ',' << m;
        std::cout << '\t' << m;
    }
    out << '\n';
    std::cout << '\n';
    for (const SweepRow& r : rows) {
        out << r.value;
        std::cout << r.value;
        for (const std::string& m : sweep_metrics()) {
            out << ',' << format_double(r.metrics.at(m));
            std::cout << '\t' << r.metrics.at(m);
        }
        out << '\n';
        std::cout << '\n';
    }
    return 0;
}

int cmd_soi(RunConfig config, bool calibrate, int band_lo, int band_hi) {
    if (calibrate) {
        const SoiCalibration cal = calibrate_soi(config.run.params);
        std::cout << "soi.theta_in = " << format_double(cal.theta_in) << "\n"
                  << "soi.theta_out = " << format_double(cal.theta_out) << "\n";
        for (std::size_t i = 0; i < cal.n_grid.size(); ++i) {
            std::cout << "# N=" << cal.n_grid[i] << " median indicator " << cal.median_indicator[i] << ", drift "
                      << cal.drift[i] << "\n";
        }
        config.run.params.soi.theta_in = cal.theta_in;
        config.run.params.soi.theta_out = cal.theta_out;
    }
    config.run.params.soi.enabled = true;
    config.run.validate();
    const fs::path dir = output_dir(config);
    const PriceSeries s = simulate(config.run);
    write_series_csv(dir / "series.csv", s);
    const SoiConvergence conv = summarize_soi(s, band_lo, band_hi);
    std::map<std::string, std::string> results{
        {"status", "ok"},
        {"soi.time_to_band", std::to_string(conv.time_to_band)},
        {"soi.final_median_N", format_double(conv.final_median)},
        {"soi.final_min_N", std::to_string(conv.final_min)},
        {"soi.final_max_N", std::to_string(conv.final_max)},
        {"soi.final_in_band", format_double(conv.final_in_band)},
    };
    write_manifest(dir / "manifest.txt", config, results);
    for (const auto& [k, v] : results) std::cout << k << " = " << v << "\n";
    return 0;
}

int cmd_stats(const std::string& input, const std::string& deltas, const std::string& phis, const std::string& out_dir) {
    const PriceSeries s = read_series_csv(input);
    const bool mult = s.mode == DynamicsMode::multiplicative;
    const ReturnDefinition def = mult ? ReturnDefinition::log : ReturnDefinition::difference;
    const fs::path dir = out_dir.empty() ? fs::path(input).parent_path() : fs::path(out_dir);
    std::vector<std::int64_t> grid;
    for (const std::string& d : split(deltas, ',')) grid.push_back(std::stoll(d));

    std::vector<std::vector<double>> summary;
    for (std::int64_t d : grid) {
        const ReturnSeries r = extract_returns(s.p, d / s.stride, def);
        if (r.values.size() < 4) continue;
        summary.push_back({static_cast<double>(d), static_cast<double>(r.values.size()), variance(r.values),
                           excess_kurtosis(r.values)});
        std::cout << "delta=" << d << " n=" << r.values.size() << " variance=" << variance(r.values)
                  << " excess_kurtosis=" << excess_kurtosis(r.values) << "\n";
    }
    write_table_csv(dir / "returns_summary.csv", {"delta", "n", "variance", "excess_kurtosis"}, summary);
    if (grid.size() >= 4 && s.stride == 1) {
        const DiffusionFit fit = diffusion_exponent(s.p, grid, def);
        std::cout << "mu = " << fit.mu << "\nsigma0 = " << fit.sigma0 << "\n";
    }

    if (!grid.empty()) {
        const ReturnSeries r = extract_returns(s.p, grid.front() / s.stride, def);
        std::vector<int> lags;
        for (int k = 0; k <= 20 && static_cast<std::size_t>(k) < r.values.size() / 2; ++k) lags.push_back(k);
        std::vector<std::string> header{"tau", "returns"};
        std::vector<std::vector<double>> curves(lags.size());
        const std::vector<double> signed_curve = autocov(r.values, lags);
        for (std::size_t i = 0; i < lags.size(); ++i) {
            curves[i] = {static_cast<double>(lags[i] * grid.front()), signed_curve[i]};
        }
        for (const std::string& p : split(phis, ',')) {
            header.push_back("abs_pow_" + p);
            const std::vector<double> c = autocov_power(r.values, std::stod(p), lags);
            for (std::size_t i = 0; i < lags.size(); ++i) curves[i].push_back(c[i]);
        }
        write_table_csv(dir / "autocov.csv", header, curves);
    }
    if (s.x.size() >= 500) write_feq_csv(dir / "feq.csv", estimate_feq(s.x, 50));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chartist-fundamentalist market simulator"};
    app.require_subcommand(1);

    ConfigSource sim_cfg, val_cfg, sweep_cfg, soi_cfg;
    CLI::App* sim = app.add_subcommand("simulate", "run one simulation and write series.csv + manifest.txt");
    sim_cfg.attach(sim);

    CLI::App* val = app.add_subcommand("validate", "compare the x=0 and x=1 limits with closed forms");
    val_cfg.attach(val);
    std::string suite = "all";
    ValidationOptions vopt;
    val->add_option("--suite", suite, "x0 | x1 | all")->check(CLI::IsMember({"x0", "x1", "all"}));
    val->add_option("--corrupt-gamma", vopt.gamma_corruption, "relative error injected into gamma (negative control)");
    val->add_option("--samples", vopt.samples, "post-warmup steps per run");

    CLI::App* sw = app.add_subcommand("sweep", "one run per value of a config key");
    sweep_cfg.attach(sw);
    std::string axis, values;
    SweepOptions sopt;
    sw->add_option("--axis", axis, "config key to vary")->required();
    sw->add_option("--values", values, "comma-separated values")->required();
    sw->add_flag("--crn", sopt.common_random_numbers, "same noise stream for every value");
    sw->add_option("--jobs", sopt.jobs, "parallel runs");

    CLI::App* so = app.add_subcommand("soi", "run with agents entering and leaving on volatility thresholds");
    soi_cfg.attach(so);
    bool calibrate = false;
    int band_lo = 250, band_hi = 1000;
    so->add_flag("--calibrate", calibrate, "set thresholds from indicator quantiles at frozen N");
    so->add_option("--band-lo", band_lo, "lower edge of the target band for N");
    so->add_option("--band-hi", band_hi, "upper edge of the target band for N");

    CLI::App* st = app.add_subcommand("stats", "estimators over an existing series.csv");
    std::string input, deltas = "1,10,100,1000", phis = "0.5,1,1.5,2", stats_out;
    st->add_option("--input", input, "series CSV")->required()->check(CLI::ExistingFile);
    st->add_option("--deltas", deltas, "comma-separated return lags");
    st->add_option("--phi", phis, "powers for |r|^phi autocovariances");
    st->add_option("--out", stats_out, "output directory (default: next to input)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) return cmd_simulate(sim_cfg.load());
        if (val->parsed()) {
            vopt.suite = suite == "x0" ? ValidationSuite::x0 : suite == "x1" ? ValidationSuite::x1 : ValidationSuite::all;
            return cmd_validate(val_cfg.load(), vopt);
        }
        if (sw->parsed()) return cmd_sweep(sweep_cfg.load(), axis, values, sopt);
        if (so->parsed()) return cmd_soi(soi_cfg.load(), calibrate, band_lo, band_hi);
        if (st->parsed()) return cmd_stats(input, deltas, phis, stats_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
