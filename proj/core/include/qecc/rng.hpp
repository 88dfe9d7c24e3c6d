#pragma once

#include <bit>
#include <cstdint>

namespace qecc {

/// Deterministic 64-bit generator (splitmix64 core). Every stochastic result
/// in the library draws from one of these; streams are split hierarchically
/// from a single seed by (point, shot) so results never depend on how shots
/// are scheduled across workers.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    static Rng shot_stream(uint64_t seed, uint64_t point, uint64_t shot) {
        uint64_t h = mix(seed + 0x9e3779b97f4a7c15ull);
        h = mix(h ^ (point + 0xbf58476d1ce4e5b9ull));
        h = mix(h ^ (shot + 0x94d049bb133111ebull));
        return Rng(h);
    }

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    bool next_bit() { return next_u64() >> 63; }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n) by masked rejection.
    uint64_t next_below(uint64_t n) {
        if (n <= 1) return 0;
        uint64_t mask = ~uint64_t{0} >> std::countl_zero(n - 1);
        uint64_t v;
        do {
            v = next_u64() & mask;
        } while (v >= n);
        return v;
    }

private:
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t state_;
};

}  // namespace qecc
