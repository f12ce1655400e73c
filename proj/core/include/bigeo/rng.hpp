// rng.hpp — small deterministic generator (splitmix64) for reproducible sweeps

#pragma once

#include <cstdint>

namespace bigeo {

// Fully specified PRNG so that seeded runs are byte-identical across
// platforms and standard-library versions. std::uniform_real_distribution is
// implementation-defined, which would break the determinism contract.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Independent stream for task `index` of a seeded run.
    static Rng for_task(std::uint64_t seed, std::uint64_t index) {
        Rng mix(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
        mix.next_u64();
        return mix;
    }

private:
    std::uint64_t state_;
};

} // namespace bigeo
