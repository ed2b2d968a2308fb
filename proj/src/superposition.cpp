#include "minabm/superposition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "minabm/stats.hpp"

namespace minabm {

namespace {

void check_x(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("x must lie in [0,1]");
}

void check_variances(double sigma_f2, double sigma_c2) {
    if (!(sigma_f2 > 0.0 && sigma_c2 > 0.0)) throw std::domain_error("variances must be > 0");
}

void check_feq(const PopulationDistribution& feq) {
    double s = 0.0;
    for (double m : feq.mass) s += m;
    if (feq.mass.empty() || std::abs(s - 1.0) > 1e-9) {
        throw std::invalid_argument("feq: masses must sum to 1");
    }
}

double conditional_variance(double x, double sigma_f2, double sigma_c2) {
    return x * x * sigma_c2 + (1.0 - x) * (1.0 - x) * sigma_f2;
}

}  // namespace

double GaussianComponent::operator()(double r) const {
    return std::exp(-0.5 * r * r / variance) / std::sqrt(2.0 * std::numbers::pi * variance);
}

GaussianComponent conditional_return_pdf(double x, double sigma_f2, double sigma_c2) {
    check_x(x);
    check_variances(sigma_f2, sigma_c2);
    return {conditional_variance(x, sigma_f2, sigma_c2)};
}

MixtureMoments mixture_moments(const PopulationDistribution& feq, double sigma_f2, double sigma_c2) {
    check_feq(feq);
    check_variances(sigma_f2, sigma_c2);
    double m2 = 0.0;
    double m4 = 0.0;
    for (int i = 0; i < feq.bins(); ++i) {
        const double v = conditional_variance(feq.node(i), sigma_f2, sigma_c2);
        m2 += feq.mass[i] * v;
        m4 += feq.mass[i] * 3.0 * v * v;
    }
    return {m2, m4 / (m2 * m2) - 3.0};
}

std::vector<double> default_return_grid(const PopulationDistribution& feq, double sigma_f2, double sigma_c2,
                                        int points) {
    if (points < 2) throw std::invalid_argument("grid: need at least 2 points");
    // A rare wide component can lie far beyond 8 mixture sd; cover every populated one.
    double widest = mixture_moments(feq, sigma_f2, sigma_c2).variance;
    for (int i = 0; i < feq.bins(); ++i) {
        if (feq.mass[i] > 0.0) widest = std::max(widest, conditional_variance(feq.node(i), sigma_f2, sigma_c2));
    }
    const double half = 8.0 * std::sqrt(widest);
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) grid[i] = -half + 2.0 * half * i / (points - 1);
    return grid;
}

std::vector<double> mixture_return_pdf(const PopulationDistribution& feq, double sigma_f2, double sigma_c2,
                                       const std::vector<double>& grid) {
    check_feq(feq);
    check_variances(sigma_f2, sigma_c2);
    std::vector<double> pdf(grid.size(), 0.0);
    for (int i = 0; i < feq.bins(); ++i) {
        if (feq.mass[i] == 0.0) continue;
        const GaussianComponent g{conditional_variance(feq.node(i), sigma_f2, sigma_c2)};
        for (std::size_t j = 0; j < grid.size(); ++j) pdf[j] += feq.mass[i] * g(grid[j]);
    }
    return pdf;
}

double mixture_tail_probability(const PopulationDistribution& feq, double sigma_f2, double sigma_c2, double k) {
    const double cut = k * std::sqrt(mixture_moments(feq, sigma_f2, sigma_c2).variance);
    double p = 0.0;
    for (int i = 0; i < feq.bins(); ++i) {
        const double sd = std::sqrt(conditional_variance(feq.node(i), sigma_f2, sigma_c2));
        p += feq.mass[i] * 2.0 * (1.0 - normal_cdf(cut / sd));
    }
    return p;
}

ReturnWeights return_autocov_weights(double x, double sigma_f2, double sigma_c2) {
    check_x(x);
    check_variances(sigma_f2, sigma_c2);
    const double c = x * x * sigma_c2;
    const double f = (1.0 - x) * (1.0 - x) * sigma_f2;
    return {c / (c + f), f / (c + f)};
}

double approx_return_autocov(double x, double sigma_f2, double sigma_c2, double rho_f, double rho_c) {
    const ReturnWeights w = return_autocov_weights(x, sigma_f2, sigma_c2);
    return w.chartist * rho_c + w.fundamentalist * rho_f;
}

SqReturnWeights sqreturn_autocov_weights(double x, const ReturnMoments& m) {
    check_x(x);
    if (!(m.sigma_f2 > 0.0 && m.sigma_c2 > 0.0 && m.m4_f > 0.0 && m.m4_c > 0.0)) {
        throw std::domain_error("moments must be > 0");
    }
    const double x2 = x * x;
    const double y2 = (1.0 - x) * (1.0 - x);
    const double c = x2 * x2 * m.m4_c;
    const double f = y2 * y2 * m.m4_f;
    const double cross = 6.0 * x2 * y2 * m.sigma_c2 * m.sigma_f2;
    const double total = c + f + cross;
    return {c / total, f / total, 2.0 / 3.0 * cross / total};
}

double approx_sqreturn_autocov(double x, const ReturnMoments& m, const LimitAutocovs& rho) {
    const SqReturnWeights w = sqreturn_autocov_weights(x, m);
    return w.chartist * rho.rho_c2 + w.fundamentalist * rho.rho_f2 + w.cross * rho.rho_c * rho.rho_f;
}

AveragedAutocovs averaged_autocovs(const PopulationDistribution& feq, const ReturnMoments& m,
                                   const LimitAutocovs& rho) {
    check_feq(feq);
    AveragedAutocovs out{0.0, 0.0};
    for (int i = 0; i < feq.bins(); ++i) {
        if (feq.mass[i] == 0.0) continue;
        const double x = feq.node(i);
        out.returns += feq.mass[i] * approx_return_autocov(x, m.sigma_f2, m.sigma_c2, rho.rho_f, rho.rho_c);
        out.squared_returns += feq.mass[i] * approx_sqreturn_autocov(x, m, rho);
    }
    return out;
}

}  // namespace minabm
