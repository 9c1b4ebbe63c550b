#pragma once

#include <cstdint>

namespace cosine {

/// SplitMix64 step. Fully specified, so streams are identical on every platform.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Mixes a seed with a stream index; used to derive independent per-walk seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    return splitmix64(s);
}

/// Small deterministic generator. std:: distributions are implementation-defined,
/// so all sampling goes through these fully specified helpers instead.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {
        // Warm up so that low-entropy seeds (0, 1, 2, ...) diverge immediately.
        next_u64();
        next_u64();
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    /// Uniform in [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1].
    double next_unit_pos() { return 1.0 - next_unit(); }

    /// Uniform integer in [0, bound). Rejection sampling, exactly uniform.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0ULL - bound) % bound;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    bool bernoulli(double p) { return next_unit() < p; }

private:
    std::uint64_t state_;
};

}  // namespace cosine
