#include "minabm/analytic.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

namespace minabm {

namespace {

void check_gamma(double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0)) throw std::domain_error("gamma must lie in (0,1)");
}

void check_delta(std::int64_t delta) {
    if (delta < 1) throw std::domain_error("delta must be >= 1");
}

// 1 - (1-gamma)^n, accurate for small gamma.
double one_minus_phi_pow(double gamma, double n) {
    return -std::expm1(n * std::log1p(-gamma));
}

}  // namespace

double ar1_price_second_moment(double gamma, double sigma, std::int64_t t) {
    check_gamma(gamma);
    if (t < 0) throw std::domain_error("t must be >= 0");
    return sigma * sigma * one_minus_phi_pow(gamma, 2.0 * (static_cast<double>(t) + 1.0)) /
           one_minus_phi_pow(gamma, 2.0);
}

double ar1_price_second_moment_limit(double gamma, double sigma) {
    check_gamma(gamma);
    return sigma * sigma / one_minus_phi_pow(gamma, 2.0);
}

double ar1_return_variance(double gamma, double sigma, std::int64_t delta) {
    check_gamma(gamma);
    check_delta(delta);
    return 2.0 * sigma * sigma * one_minus_phi_pow(gamma, static_cast<double>(delta)) /
           one_minus_phi_pow(gamma, 2.0);
}

double ar1_return_autocov(double gamma, std::int64_t delta, std::int64_t tau) {
    check_gamma(gamma);
    check_delta(delta);
    if (tau < delta) throw std::domain_error("tau must be >= delta");
    return -0.5 * gamma * static_cast<double>(delta) * std::exp(-gamma * static_cast<double>(tau));
}

double ar1_return_autocorr_exact(double gamma, std::int64_t delta, std::int64_t tau) {
    check_gamma(gamma);
    check_delta(delta);
    if (tau < 0) throw std::domain_error("tau must be >= 0");
    const double phi = 1.0 - gamma;
    const double d = static_cast<double>(delta);
    const double s = static_cast<double>(tau);
    // Cov(p_D - p_0, p_{s+D} - p_s) in units of the stationary price variance.
    const double cov = 2.0 * std::pow(phi, s) - std::pow(phi, s + d) - std::pow(phi, std::abs(s - d));
    return cov / (2.0 * one_minus_phi_pow(gamma, d));
}

double ar1_sqreturn_autocov_decay(double gamma) {
    check_gamma(gamma);
    return 2.0 * gamma;
}

double ar1_sqreturn_autocov_decay_exact(double gamma) {
    check_gamma(gamma);
    return -2.0 * std::log1p(-gamma);
}

std::pair<double, double> ou_continuum_check(double gamma, double sigma, std::int64_t delta) {
    const double discrete = ar1_return_variance(gamma, sigma, delta);
    const double ou = sigma * sigma * -std::expm1(-gamma * static_cast<double>(delta)) / gamma;
    return {discrete, ou};
}

CompanionModel::CompanionModel(double b, int M) : b_(b), M_(M) {
    if (M < 2) throw std::invalid_argument("M: must be >= 2");
    if (!(std::isfinite(b) && b >= 0.0)) throw std::invalid_argument("b: must be >= 0");
    a_ = b / (static_cast<double>(M) * static_cast<double>(M - 1));
    row_.resize(static_cast<std::size_t>(M));
    for (int k = 1; k <= M; ++k) row_[k - 1] = a_ * static_cast<double>(M + 1 - k);

    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(M, M);
    for (int k = 0; k < M; ++k) t(0, k) = row_[k];
    for (int i = 1; i < M; ++i) t(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(t, false);
    if (solver.info() != Eigen::Success) throw std::runtime_error("CompanionModel: eigensolver failed");
    const auto& ev = solver.eigenvalues();
    eig_.assign(ev.data(), ev.data() + ev.size());
    max_re_ = -INFINITY;
    for (const auto& z : eig_) max_re_ = std::max(max_re_, z.real());
    stationary_ = max_re_ < 1.0 - 1e-9;
}

std::vector<double> CompanionModel::matrix() const {
    std::vector<double> t(static_cast<std::size_t>(M_) * M_, 0.0);
    for (int k = 0; k < M_; ++k) t[k] = row_[k];
    for (int i = 1; i < M_; ++i) t[static_cast<std::size_t>(i) * M_ + i - 1] = 1.0;
    return t;
}

std::vector<double> CompanionModel::apply(const std::vector<double>& r) const {
    if (static_cast<int>(r.size()) != M_) throw std::invalid_argument("apply: vector size must equal M");
    std::vector<double> out(r.size());
    double s = 0.0;
    for (int k = 0; k < M_; ++k) s += row_[k] * r[k];
    out[0] = s;
    for (int i = 1; i < M_; ++i) out[i] = r[i - 1];
    return out;
}

std::vector<double> CompanionModel::impulse_response(std::int64_t n_max) const {
    // (e1' T^n)_1 obeys the scalar recursion c_n = sum_k a_k c_{n-k}, c_0 = 1.
    std::vector<double> c(static_cast<std::size_t>(n_max) + 1, 0.0);
    c[0] = 1.0;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        double s = 0.0;
        const std::int64_t kmax = std::min<std::int64_t>(M_, n);
        for (std::int64_t k = 1; k <= kmax; ++k) s += row_[k - 1] * c[n - k];
        c[n] = s;
    }
    return c;
}

namespace {

// D(m) = C(m + delta) - C(m) with C(j) = sum_{i<j} c_i: the weight of one
// noise term on a delta-return that starts m steps after it.
class ReturnKernel {
public:
    ReturnKernel(const CompanionModel& model, std::int64_t delta) : model_(model), delta_(delta) {}

    // Kernel for m = -(delta-1) .. m_max, offset by delta-1.
    std::vector<double> up_to(std::int64_t m_max) const {
        const std::vector<double> c = model_.impulse_response(m_max + delta_);
        std::vector<double> cum(c.size() + 1, 0.0);  // cum[j] = C(j)
        for (std::size_t i = 0; i < c.size(); ++i) cum[i + 1] = cum[i] + c[i];
        auto big_c = [&](std::int64_t j) { return j <= 0 ? 0.0 : cum[static_cast<std::size_t>(j)]; };
        std::vector<double> d;
        d.reserve(static_cast<std::size_t>(m_max + delta_));
        for (std::int64_t m = -(delta_ - 1); m <= m_max; ++m) d.push_back(big_c(m + delta_) - big_c(m));
        return d;
    }

    // Kernel long enough that the omitted tail is below ~1e-15 relative.
    std::vector<double> stationary(std::int64_t extra = 0) const {
        if (!model_.stationary()) {
            throw NonStationaryError("asymptotic query rejected: max Re(eigenvalue) = " +
                                     std::to_string(model_.max_real_eigenvalue()));
        }
        // For nonnegative a_k the dominant root is real and equals the
        // spectral radius, so c_n ~ rho^n.
        const double rho = std::max(1e-3, model_.max_real_eigenvalue());
        const auto decay = static_cast<std::int64_t>(std::ceil(std::log(1e-17) / std::log(rho)));
        const std::int64_t m_max = decay + 2 * model_.M() + extra;
        if (m_max > 50'000'000) throw NonStationaryError("asymptotic query rejected: decay too slow");
        return up_to(m_max);
    }

private:
    const CompanionModel& model_;
    std::int64_t delta_;
};

}  // namespace

double chartist_return_variance(const CompanionModel& model, double sigma, std::int64_t delta,
                                std::optional<std::int64_t> t) {
    check_delta(delta);
    ReturnKernel kernel(model, delta);
    std::vector<double> d;
    if (t) {
        if (*t < 0) throw std::domain_error("t must be >= 0");
        d = kernel.up_to(*t);
    } else {
        d = kernel.stationary();
    }
    // Sum smallest terms first.
    double s = 0.0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) s += *it * *it;
    return sigma * sigma * s;
}

double chartist_return_autocov(const CompanionModel& model, double /*sigma*/, std::int64_t delta, std::int64_t tau) {
    check_delta(delta);
    if (tau < 0) throw std::domain_error("tau must be >= 0");
    const std::vector<double> d = ReturnKernel(model, delta).stationary(tau);
    const std::size_t lag = static_cast<std::size_t>(tau);
    double var = 0.0;
    double cov = 0.0;
    for (std::size_t i = d.size(); i-- > 0;) {
        var += d[i] * d[i];
        if (i + lag < d.size()) cov += d[i] * d[i + lag];
    }
    return cov / var;
}

}  // namespace minabm
