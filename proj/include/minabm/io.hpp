#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "minabm/herding.hpp"
#include "minabm/multiplicative.hpp"
#include "minabm/simulation.hpp"

namespace minabm {

/// Everything needed to reproduce a run plus estimator settings.
struct RunConfig {
    RunSpec run{};
    std::int64_t delta = 100;  // return lag for summaries
    int feq_bins = 50;
    std::string output_dir = ".";
};

struct ConfigKey {
    std::string name;
    std::string doc;
};

/// All recognized keys in file order.
[[nodiscard]] const std::vector<ConfigKey>& config_keys();

/// Sets one key from its text form. Throws std::invalid_argument naming the key.
void set_config_value(RunConfig& config, std::string_view key, std::string_view value);
[[nodiscard]] std::string get_config_value(const RunConfig& config, std::string_view key);

/// Flat `key = value` text with '#' comments. Keys prefixed "result." are
/// ignored on parse so that manifests read back as configs.
[[nodiscard]] std::string to_config_text(const RunConfig& config);
[[nodiscard]] RunConfig parse_config_text(std::string_view text);
[[nodiscard]] RunConfig load_config(const std::filesystem::path& path);

/// Shortest text that reads back to the same double.
[[nodiscard]] std::string format_double(double v);

/// Columns t, p, x, N, p_f (and ed in multiplicative mode).
void write_series_csv(const std::filesystem::path& path, const PriceSeries& series);
[[nodiscard]] PriceSeries read_series_csv(const std::filesystem::path& path);

/// Config text followed by result.* lines.
void write_manifest(const std::filesystem::path& path, const RunConfig& config,
                    const std::map<std::string, std::string>& results = {});
[[nodiscard]] std::map<std::string, std::string> divergence_results(const DivergenceReport& report);

void write_feq_csv(const std::filesystem::path& path, const PopulationDistribution& feq);

struct ValidationRow {
    std::string quantity;
    double analytic = 0.0;
    double simulated = 0.0;
    double std_error = 0.0;
    bool pass = false;
    std::string note;
};
void write_validation_csv(const std::filesystem::path& path, const std::vector<ValidationRow>& rows);

/// Generic table: header plus rows of numbers.
void write_table_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows);

}  // namespace minabm
