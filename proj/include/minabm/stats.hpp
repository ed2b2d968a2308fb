#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace minabm {

enum class ReturnDefinition { difference, log };

struct ReturnSeries {
    std::vector<double> values;
    std::int64_t delta = 1;
    std::int64_t stride = 1;  // spacing of return start points; stride < delta means overlapping
    ReturnDefinition definition = ReturnDefinition::difference;

    [[nodiscard]] bool overlapping() const noexcept { return stride < delta; }
};

/// Lag-delta returns starting every `stride` samples (default: non-overlapping).
/// Throws std::invalid_argument for delta < 1 or non-positive prices under the
/// log definition.
[[nodiscard]] ReturnSeries extract_returns(std::span<const double> prices, std::int64_t delta,
                                           ReturnDefinition definition = ReturnDefinition::difference,
                                           std::int64_t stride = 0);

[[nodiscard]] double mean(std::span<const double> v);
/// Unbiased sample variance.
[[nodiscard]] double variance(std::span<const double> v);

/// Normalized autocovariance of the signed series at each lag (in samples).
/// Lag 0 is exactly 1. Throws std::domain_error for a constant series.
[[nodiscard]] std::vector<double> autocov(std::span<const double> v, std::span<const int> lags);
/// Same, applied to |v|^phi.
[[nodiscard]] std::vector<double> autocov_power(std::span<const double> v, double phi, std::span<const int> lags);

struct PowerLawFit {
    double exponent = 0.0;
    double prefactor = 0.0;
};

/// Least squares of log y on log x.
[[nodiscard]] PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y);

struct DiffusionFit {
    double mu = 0.0;
    double sigma0 = 0.0;
    std::vector<double> deltas;
    std::vector<double> stds;
};

/// Slope of log std(r_delta) against log delta. Throws with fewer than 4 lags.
[[nodiscard]] DiffusionFit diffusion_exponent(std::span<const double> prices, std::span<const std::int64_t> delta_grid,
                                              ReturnDefinition definition = ReturnDefinition::difference,
                                              bool overlapping = false);

/// Fit of v(tau) ~ A exp(-rate tau) on the points where v > 0.
struct DecayFit {
    double rate = 0.0;
    double amplitude = 0.0;
};
[[nodiscard]] DecayFit fit_exponential_decay(std::span<const double> tau, std::span<const double> v);

enum class PdfNormalization { none, own_variance, chartist_variance };

struct Histogram {
    std::vector<double> edges;
    std::vector<double> mass;     // sums to 1 over the in-range samples
    std::vector<double> density;  // mass / bin width
    double scale = 1.0;           // divisor applied to the returns
    double outside = 0.0;         // fraction of samples beyond the edges
};

/// Linear bins over +-10 standard deviations of the scaled returns.
/// `chartist_variance` is required for PdfNormalization::chartist_variance.
[[nodiscard]] Histogram return_pdf(std::span<const double> returns, int bins, PdfNormalization normalization,
                                   double chartist_variance = 0.0);
/// Density of |r| / sd on logarithmic bins from 10^lo to 10^hi.
[[nodiscard]] Histogram abs_return_pdf_log(std::span<const double> returns, int bins, double lo = -2.0,
                                           double hi = 2.0);

/// Fraction of samples with |v - mean| > k * sd.
[[nodiscard]] double tail_fraction(std::span<const double> v, double k);

/// Bias-corrected sample excess kurtosis (G2).
[[nodiscard]] double excess_kurtosis(std::span<const double> v);

struct RareEvent {
    double exact = 0.0;        // 1 - (1 - beta)^n
    double approx = 0.0;       // 1 - exp(-n beta)
    double min_samples = 0.0;  // 1 / beta
};
[[nodiscard]] RareEvent rare_event_probability(double beta, std::int64_t n);

/// Standard error of the mean from `batches` contiguous batch means.
[[nodiscard]] double batch_means_se(std::span<const double> v, int batches = 50);

/// Two-sample Kolmogorov-Smirnov statistic.
[[nodiscard]] double ks_distance(std::span<const double> a, std::span<const double> b);
/// KS statistic against a reference cdf.
[[nodiscard]] double ks_distance(std::span<const double> a, const std::function<double(double)>& cdf);

[[nodiscard]] double normal_cdf(double z);

}  // namespace minabm
