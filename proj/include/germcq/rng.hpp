#pragma once

#include <cstdint>

namespace germcq {

/// splitmix64; self-contained so seeded runs reproduce across platforms.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, m).
    std::uint64_t below(std::uint64_t m) { return next() % m; }

    /// Uniform integer in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Uniform double in [0, 1).
    double uniform() { return (next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [-1, 1).
    double symmetric() { return 2.0 * uniform() - 1.0; }

    Rng fork(std::uint64_t stream) const {
        Rng child(state ^ (0xa0761d6478bd642fULL * (stream + 1)));
        child.next();
        return child;
    }
};

}  // namespace germcq
