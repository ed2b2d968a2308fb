#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "minabm/io.hpp"

namespace minabm {

enum class ValidationSuite { x0, x1, all };

struct ValidationOptions {
    ValidationSuite suite = ValidationSuite::all;
    /// Relative error injected into gamma on the analytic side (negative control).
    double gamma_corruption = 0.0;
    std::int64_t samples = 1'000'000;
    double tolerance_se = 3.0;
};

struct ValidationReport {
    std::vector<ValidationRow> rows;

    [[nodiscard]] bool passed() const;
};

/// Analytic limit cases against simulation with the populations frozen.
[[nodiscard]] ValidationReport run_validation(const RunConfig& config, const ValidationOptions& options = {});

struct SweepOptions {
    /// Use the same noise stream for every value instead of one derived per value.
    bool common_random_numbers = false;
    int jobs = 1;
};

struct SweepRow {
    std::string value;
    std::map<std::string, double> metrics;  // NaN where a metric does not apply
};

/// Names of the metrics reported per sweep row.
[[nodiscard]] const std::vector<std::string>& sweep_metrics();

/// One run per value of `axis` (any config key). Each row depends only on its
/// value, not on the order or parallelism of execution.
[[nodiscard]] std::vector<SweepRow> run_sweep(const RunConfig& base, const std::string& axis,
                                              const std::vector<std::string>& values, const SweepOptions& options = {});

/// Metrics of one finished run.
[[nodiscard]] std::map<std::string, double> summarize_run(const PriceSeries& series, const RunConfig& config);

}  // namespace minabm
