#pragma once

#include <cstdint>
#include <random>

namespace minabm {

/// Seeded deviate generator. The same (seed, stream) pair always yields the
/// same sequence; distinct stream ids give independently seeded engines.
class NoiseSource {
public:
    NoiseSource(std::uint64_t seed, std::uint64_t stream);

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
    [[nodiscard]] std::uint64_t stream() const noexcept { return stream_; }

    /// Standard normal deviate (Marsaglia polar method).
    double normal();
    /// Uniform deviate on [0, 1) with 53 random bits.
    double uniform();
    /// Number of successes among n trials of probability p.
    int binomial(int n, double p);
    /// Same, with p_zero = (1-p)^n supplied by the caller.
    int binomial(int n, double p, double p_zero);

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Stream id for a sub-channel of a run, so the price noise of a run does not
/// depend on whether herding or the fundamental-price walk consume deviates.
[[nodiscard]] std::uint64_t derive_stream(std::uint64_t run_stream, std::uint64_t channel) noexcept;

/// SplitMix64 finalizer.
[[nodiscard]] std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace minabm
