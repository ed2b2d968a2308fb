#include "minabm/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace minabm {

ReturnSeries extract_returns(std::span<const double> prices, std::int64_t delta, ReturnDefinition definition,
                             std::int64_t stride) {
    if (delta < 1) throw std::invalid_argument("extract_returns: delta must be >= 1");
    if (stride <= 0) stride = delta;
    ReturnSeries out;
    out.delta = delta;
    out.stride = stride;
    out.definition = definition;
    const auto n = static_cast<std::int64_t>(prices.size());
    if (n <= delta) return out;
    out.values.reserve(static_cast<std::size_t>((n - 1 - delta) / stride + 1));
    for (std::int64_t i = 0; i + delta < n; i += stride) {
        const double a = prices[i];
        const double b = prices[i + delta];
        if (definition == ReturnDefinition::difference) {
            out.values.push_back(b - a);
        } else {
            if (!(a > 0.0 && b > 0.0)) throw std::invalid_argument("extract_returns: non-positive price with log returns");
            out.values.push_back(std::log(b / a));
        }
    }
    return out;
}

double mean(std::span<const double> v) {
    if (v.empty()) throw std::invalid_argument("mean: empty series");
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

double variance(std::span<const double> v) {
    if (v.size() < 2) throw std::invalid_argument("variance: need at least 2 samples");
    const double m = mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size() - 1);
}

std::vector<double> autocov(std::span<const double> v, std::span<const int> lags) {
    const std::size_t n = v.size();
    if (n < 2) throw std::invalid_argument("autocov: need at least 2 samples");
    const double m = mean(v);
    std::vector<double> c(n);
    double var = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        c[i] = v[i] - m;
        var += c[i] * c[i];
    }
    var /= static_cast<double>(n);
    if (var == 0.0) throw std::domain_error("autocov: zero variance");
    std::vector<double> out;
    out.reserve(lags.size());
    for (int lag : lags) {
        if (lag < 0 || static_cast<std::size_t>(lag) >= n) throw std::invalid_argument("autocov: lag out of range");
        if (lag == 0) {
            out.push_back(1.0);
            continue;
        }
        double s = 0.0;
        for (std::size_t i = 0; i + lag < n; ++i) s += c[i] * c[i + lag];
        out.push_back(s / static_cast<double>(n - lag) / var);
    }
    return out;
}

std::vector<double> autocov_power(std::span<const double> v, double phi, std::span<const int> lags) {
    if (!(phi > 0.0)) throw std::invalid_argument("autocov_power: phi must be > 0");
    std::vector<double> w(v.size());
    std::transform(v.begin(), v.end(), w.begin(), [phi](double x) { return std::pow(std::abs(x), phi); });
    return autocov(w, lags);
}

PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_power_law: need matching inputs");
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0 && y[i] > 0.0)) throw std::invalid_argument("fit_power_law: values must be positive");
        sx += std::log(x[i]);
        sy += std::log(y[i]);
    }
    const double mx = sx / n;
    const double my = sy / n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_power_law: x values must differ");
    const double slope = sxy / sxx;
    return {slope, std::exp(my - slope * mx)};
}

DiffusionFit diffusion_exponent(std::span<const double> prices, std::span<const std::int64_t> delta_grid,
                                ReturnDefinition definition, bool overlapping) {
    if (delta_grid.size() < 4) throw std::invalid_argument("diffusion_exponent: need at least 4 lags");
    DiffusionFit fit;
    for (std::int64_t d : delta_grid) {
        const ReturnSeries r = extract_returns(prices, d, definition, overlapping ? 1 : d);
        fit.deltas.push_back(static_cast<double>(d));
        fit.stds.push_back(std::sqrt(variance(r.values)));
    }
    const PowerLawFit pl = fit_power_law(fit.deltas, fit.stds);
    fit.mu = pl.exponent;
    fit.sigma0 = pl.prefactor;
    return fit;
}

DecayFit fit_exponential_decay(std::span<const double> tau, std::span<const double> v) {
    if (tau.size() != v.size()) throw std::invalid_argument("fit_exponential_decay: size mismatch");
    double st = 0.0, sl = 0.0, stt = 0.0, stl = 0.0;
    double n = 0.0;
    for (std::size_t i = 0; i < tau.size(); ++i) {
        if (!(v[i] > 0.0)) continue;
        const double l = std::log(v[i]);
        st += tau[i];
        sl += l;
        stt += tau[i] * tau[i];
        stl += tau[i] * l;
        n += 1.0;
    }
    if (n < 2.0) throw std::invalid_argument("fit_exponential_decay: fewer than 2 positive points");
    const double slope = (n * stl - st * sl) / (n * stt - st * st);
    return {-slope, std::exp((sl - slope * st) / n)};
}

namespace {

double sample_sd(std::span<const double> v) {
    const double sd = std::sqrt(variance(v));
    if (!(sd > 0.0)) throw std::domain_error("zero variance");
    return sd;
}

}  // namespace

Histogram return_pdf(std::span<const double> returns, int bins, PdfNormalization normalization,
                     double chartist_variance) {
    if (returns.empty()) throw std::invalid_argument("return_pdf: empty series");
    if (bins < 1) throw std::invalid_argument("return_pdf: bins must be >= 1");
    Histogram h;
    switch (normalization) {
        case PdfNormalization::none: h.scale = 1.0; break;
        case PdfNormalization::own_variance: h.scale = sample_sd(returns); break;
        case PdfNormalization::chartist_variance:
            if (!(chartist_variance > 0.0)) throw std::invalid_argument("return_pdf: chartist variance must be > 0");
            h.scale = std::sqrt(chartist_variance);
            break;
    }
    const double half = 10.0 * (normalization == PdfNormalization::own_variance ? 1.0 : sample_sd(returns) / h.scale);
    const double width = 2.0 * half / bins;
    h.edges.resize(static_cast<std::size_t>(bins) + 1);
    for (int i = 0; i <= bins; ++i) h.edges[i] = -half + width * i;
    std::vector<double> counts(static_cast<std::size_t>(bins), 0.0);
    double inside = 0.0;
    for (double r : returns) {
        const double z = r / h.scale;
        const double pos = (z + half) / width;
        if (pos < 0.0 || pos >= bins) continue;
        counts[static_cast<std::size_t>(pos)] += 1.0;
        inside += 1.0;
    }
    h.outside = 1.0 - inside / static_cast<double>(returns.size());
    h.mass.resize(counts.size());
    h.density.resize(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        h.mass[i] = inside > 0.0 ? counts[i] / inside : 0.0;
        h.density[i] = h.mass[i] * (1.0 - h.outside) / width;
    }
    return h;
}

Histogram abs_return_pdf_log(std::span<const double> returns, int bins, double lo, double hi) {
    if (bins < 1 || !(hi > lo)) throw std::invalid_argument("abs_return_pdf_log: bad binning");
    Histogram h;
    h.scale = sample_sd(returns);
    h.edges.resize(static_cast<std::size_t>(bins) + 1);
    for (int i = 0; i <= bins; ++i) h.edges[i] = std::pow(10.0, lo + (hi - lo) * i / bins);
    std::vector<double> counts(static_cast<std::size_t>(bins), 0.0);
    double inside = 0.0;
    for (double r : returns) {
        const double z = std::abs(r) / h.scale;
        if (!(z > 0.0)) continue;
        const double pos = (std::log10(z) - lo) / (hi - lo) * bins;
        if (pos < 0.0 || pos >= bins) continue;
        counts[static_cast<std::size_t>(pos)] += 1.0;
        inside += 1.0;
    }
    const double n = static_cast<double>(returns.size());
    h.outside = 1.0 - inside / n;
    h.mass.resize(counts.size());
    h.density.resize(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        h.mass[i] = inside > 0.0 ? counts[i] / inside : 0.0;
        h.density[i] = counts[i] / n / (h.edges[i + 1] - h.edges[i]);
    }
    return h;
}

double tail_fraction(std::span<const double> v, double k) {
    const double m = mean(v);
    const double cut = k * sample_sd(v);
    const auto hits = std::count_if(v.begin(), v.end(), [&](double x) { return std::abs(x - m) > cut; });
    return static_cast<double>(hits) / static_cast<double>(v.size());
}

double excess_kurtosis(std::span<const double> v) {
    const std::size_t size = v.size();
    if (size < 4) throw std::invalid_argument("excess_kurtosis: need at least 4 samples");
    const double m = mean(v);
    double m2 = 0.0, m4 = 0.0;
    for (double x : v) {
        const double d = (x - m) * (x - m);
        m2 += d;
        m4 += d * d;
    }
    const double n = static_cast<double>(size);
    m2 /= n;
    m4 /= n;
    if (m2 == 0.0) throw std::domain_error("excess_kurtosis: zero variance");
    const double g2 = m4 / (m2 * m2) - 3.0;
    return ((n + 1.0) * g2 + 6.0) * (n - 1.0) / ((n - 2.0) * (n - 3.0));
}

RareEvent rare_event_probability(double beta, std::int64_t n) {
    if (!(beta > 0.0 && beta <= 1.0)) throw std::domain_error("rare_event_probability: beta must lie in (0,1]");
    if (n < 0) throw std::domain_error("rare_event_probability: n must be >= 0");
    const double nn = static_cast<double>(n);
    RareEvent out;
    out.exact = beta == 1.0 ? (n > 0 ? 1.0 : 0.0) : -std::expm1(nn * std::log1p(-beta));
    out.approx = -std::expm1(-nn * beta);
    out.min_samples = 1.0 / beta;
    return out;
}

double batch_means_se(std::span<const double> v, int batches) {
    if (batches < 2) throw std::invalid_argument("batch_means_se: need at least 2 batches");
    const std::size_t len = v.size() / static_cast<std::size_t>(batches);
    if (len == 0) throw std::invalid_argument("batch_means_se: series shorter than batch count");
    std::vector<double> means(static_cast<std::size_t>(batches));
    for (int b = 0; b < batches; ++b) means[b] = mean(v.subspan(b * len, len));
    return std::sqrt(variance(means) / batches);
}

double ks_distance(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_distance: empty sample");
    std::vector<double> x(a.begin(), a.end());
    std::vector<double> y(b.begin(), b.end());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    const double nx = static_cast<double>(x.size());
    const double ny = static_cast<double>(y.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < x.size() && j < y.size()) {
        const double t = std::min(x[i], y[j]);
        while (i < x.size() && x[i] <= t) ++i;
        while (j < y.size() && y[j] <= t) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
    }
    return d;
}

double ks_distance(std::span<const double> a, const std::function<double(double)>& cdf) {
    if (a.empty()) throw std::invalid_argument("ks_distance: empty sample");
    std::vector<double> x(a.begin(), a.end());
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double f = cdf(x[i]);
        d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
    }
    return d;
}

double normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

}  // namespace minabm
