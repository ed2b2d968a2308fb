#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace minabm {

// ---- x = 0: AR(1) with phi = 1 - gamma -------------------------------------

/// E[p_{t+1}^2] started from p_0 = 0 (one noise term at t = 0).
[[nodiscard]] double ar1_price_second_moment(double gamma, double sigma, std::int64_t t);
/// Stationary E[p^2] = sigma^2 / (1 - (1-gamma)^2).
[[nodiscard]] double ar1_price_second_moment_limit(double gamma, double sigma);
/// Stationary Var[p_{t+delta} - p_t].
[[nodiscard]] double ar1_return_variance(double gamma, double sigma, std::int64_t delta);
/// Small-gamma approximation -(gamma delta / 2) exp(-gamma tau) of the
/// normalized return autocovariance, for tau >= delta.
[[nodiscard]] double ar1_return_autocov(double gamma, std::int64_t delta, std::int64_t tau);
/// Exact normalized return autocovariance for any tau >= 0.
[[nodiscard]] double ar1_return_autocorr_exact(double gamma, std::int64_t delta, std::int64_t tau);
/// Decay rate 2 gamma of the squared-return autocovariance.
[[nodiscard]] double ar1_sqreturn_autocov_decay(double gamma);
/// Exact rate 2 |ln(1 - gamma)|: squared-return autocorrelation of a Gaussian
/// process is the square of the return autocorrelation.
[[nodiscard]] double ar1_sqreturn_autocov_decay_exact(double gamma);
/// (discrete return variance, Ornstein-Uhlenbeck value sigma^2 (1 - e^{-gamma delta}) / gamma).
[[nodiscard]] std::pair<double, double> ou_continuum_check(double gamma, double sigma, std::int64_t delta);

// ---- x = 1: companion matrix of the chartist recursion ---------------------

class NonStationaryError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// M x M matrix T with first row a*M, a*(M-1), ..., a and ones on the
/// subdiagonal, a = b / (M (M-1)). Immutable after construction.
class CompanionModel {
public:
    CompanionModel(double b, int M);

    [[nodiscard]] double b() const noexcept { return b_; }
    [[nodiscard]] int M() const noexcept { return M_; }
    [[nodiscard]] double a() const noexcept { return a_; }
    /// a_k for k = 1..M (index 0 holds a_1).
    [[nodiscard]] const std::vector<double>& first_row() const noexcept { return row_; }
    /// Dense row-major copy of T.
    [[nodiscard]] std::vector<double> matrix() const;
    [[nodiscard]] const std::vector<std::complex<double>>& eigenvalues() const noexcept { return eig_; }
    [[nodiscard]] double max_real_eigenvalue() const noexcept { return max_re_; }
    /// All eigenvalues have real part below 1 - 1e-9.
    [[nodiscard]] bool stationary() const noexcept { return stationary_; }

    /// T r for a vector of M increments, newest first.
    [[nodiscard]] std::vector<double> apply(const std::vector<double>& r) const;
    /// c_n = (T^n)_{11} for n = 0..n_max.
    [[nodiscard]] std::vector<double> impulse_response(std::int64_t n_max) const;

private:
    double b_;
    int M_;
    double a_;
    std::vector<double> row_;
    std::vector<std::complex<double>> eig_;
    double max_re_ = 0.0;
    bool stationary_ = true;
};

/// Var[p_{t+delta} - p_t] for the x = 1 recursion started from rest, with t
/// noise terms accumulated before the return window. Without t the
/// stationary limit is returned, which requires a stationary model.
[[nodiscard]] double chartist_return_variance(const CompanionModel& model, double sigma, std::int64_t delta,
                                              std::optional<std::int64_t> t = std::nullopt);

/// Stationary normalized autocovariance of delta-returns at lag tau.
[[nodiscard]] double chartist_return_autocov(const CompanionModel& model, double sigma, std::int64_t delta,
                                             std::int64_t tau);

}  // namespace minabm
