#pragma once

#include <cstdint>
#include <random>

namespace rgroups {

/// SplitMix64 finalizer. Fixed published mixing step; all seed derivation in
/// this project goes through it so results are reproducible everywhere.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Per-trial seed derivation: chained SplitMix64 over (master, cell, trial).
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t cell,
                              std::uint64_t trial) {
    std::uint64_t h = splitmix64(master);
    h = splitmix64(h ^ cell);
    h = splitmix64(h ^ trial);
    return h;
}

/// Deterministic 64-bit random stream: std::mt19937_64 (whose output sequence
/// is fixed by the standard) plus bias-free bounded draws done by rejection,
/// so no implementation-defined distribution code enters the results.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, bound). bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    /// Exact Bernoulli(num/den); requires num <= den, den > 0.
    bool bernoulli(std::uint64_t num, std::uint64_t den) {
        if (num == 0) return false;
        if (num >= den) return true;
        return below(den) < num;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace rgroups
