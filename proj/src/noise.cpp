#include "minabm/noise.hpp"

#include <cmath>

namespace minabm {

std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_stream(std::uint64_t run_stream, std::uint64_t channel) noexcept {
    return mix64(run_stream * 0x100000001b3ULL + channel + 1);
}

NoiseSource::NoiseSource(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream) {
    const std::uint64_t a = mix64(seed);
    const std::uint64_t b = mix64(a ^ mix64(stream + 0x632be59bd9b4e019ULL));
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    engine_.seed(seq);
}

double NoiseSource::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double NoiseSource::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u = 0.0;
    double v = 0.0;
    double s = 0.0;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double scale = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * scale;
    has_spare_ = true;
    return u * scale;
}

int NoiseSource::binomial(int n, double p) {
    if (n <= 0 || p <= 0.0) return 0;
    if (p >= 1.0) return n;
    if (static_cast<double>(n) * p < 16.0) return binomial(n, p, std::pow(1.0 - p, n));
    std::binomial_distribution<int> dist(n, p);
    return dist(engine_);
}

int NoiseSource::binomial(int n, double p, double p_zero) {
    if (n <= 0 || p <= 0.0) return 0;
    if (p >= 1.0) return n;
    // Small mean: sequential inversion is exact and cheap.
    if (static_cast<double>(n) * p < 16.0) {
        const double ratio = p / (1.0 - p);
        double prob = p_zero;
        double cdf = prob;
        const double u = uniform();
        int k = 0;
        while (u > cdf && k < n) {
            prob *= ratio * static_cast<double>(n - k) / static_cast<double>(k + 1);
            cdf += prob;
            ++k;
            // u fell into the round-off gap at the top of the cdf
            if (prob < 1e-18 * cdf) break;
        }
        return k;
    }
    std::binomial_distribution<int> dist(n, p);
    return dist(engine_);
}

}  // namespace minabm
