#pragma once

#include <vector>

#include "minabm/herding.hpp"

namespace minabm {

/// Zero-mean Gaussian return density.
struct GaussianComponent {
    double variance = 1.0;

    [[nodiscard]] double operator()(double r) const;
};

/// p(r|x): Gaussian with variance x^2 sigma_c2 + (1-x)^2 sigma_f2.
[[nodiscard]] GaussianComponent conditional_return_pdf(double x, double sigma_f2, double sigma_c2);

/// Symmetric grid over +-8 standard deviations of the widest populated
/// component (at least +-8 mixture standard deviations).
[[nodiscard]] std::vector<double> default_return_grid(const PopulationDistribution& feq, double sigma_f2,
                                                      double sigma_c2, int points = 2048);

/// E_x[p(r|x)] by the midpoint rule over the feq bins.
/// Throws std::invalid_argument when feq masses do not sum to 1.
[[nodiscard]] std::vector<double> mixture_return_pdf(const PopulationDistribution& feq, double sigma_f2,
                                                     double sigma_c2, const std::vector<double>& grid);

struct MixtureMoments {
    double variance = 0.0;
    double excess_kurtosis = 0.0;
};
[[nodiscard]] MixtureMoments mixture_moments(const PopulationDistribution& feq, double sigma_f2, double sigma_c2);

/// P(|r| > k sd) of the mixture, with sd its own standard deviation.
[[nodiscard]] double mixture_tail_probability(const PopulationDistribution& feq, double sigma_f2, double sigma_c2,
                                              double k);

/// Weights (w_c, w_f) of the chartist and fundamentalist return
/// autocovariances; they sum to 1.
struct ReturnWeights {
    double chartist;
    double fundamentalist;
};
[[nodiscard]] ReturnWeights return_autocov_weights(double x, double sigma_f2, double sigma_c2);
[[nodiscard]] double approx_return_autocov(double x, double sigma_f2, double sigma_c2, double rho_f, double rho_c);

/// Second and fourth moments of the two limit-case returns.
struct ReturnMoments {
    double sigma_f2;
    double sigma_c2;
    double m4_f;
    double m4_c;

    static ReturnMoments gaussian(double sigma_f2, double sigma_c2) {
        return {sigma_f2, sigma_c2, 3.0 * sigma_f2 * sigma_f2, 3.0 * sigma_c2 * sigma_c2};
    }
};

/// Weights of rho_{c^2}, rho_{f^2} and rho_c rho_f. Each is the share of
/// the corresponding term in E[r^4], so they do not sum to 1.
struct SqReturnWeights {
    double chartist;
    double fundamentalist;
    double cross;
};
[[nodiscard]] SqReturnWeights sqreturn_autocov_weights(double x, const ReturnMoments& m);

struct LimitAutocovs {
    double rho_f;
    double rho_c;
    double rho_f2;
    double rho_c2;

    /// Gaussian limits: squared-return autocorrelation equals rho^2.
    static LimitAutocovs gaussian(double rho_f, double rho_c) {
        return {rho_f, rho_c, rho_f * rho_f, rho_c * rho_c};
    }
};
[[nodiscard]] double approx_sqreturn_autocov(double x, const ReturnMoments& m, const LimitAutocovs& rho);

struct AveragedAutocovs {
    double returns;
    double squared_returns;
};
/// Both approximations averaged over feq.
[[nodiscard]] AveragedAutocovs averaged_autocovs(const PopulationDistribution& feq, const ReturnMoments& m,
                                                 const LimitAutocovs& rho);

}  // namespace minabm
