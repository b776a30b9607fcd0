#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "accsim/errors.hpp"

namespace accsim {

// splitmix64, used to spread one base seed into independent substreams so that
// e.g. each (cache, file) pair draws from its own deterministic stream.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag,
                                    std::uint64_t a = 0, std::uint64_t b = 0) {
    return splitmix64(splitmix64(splitmix64(base ^ tag) ^ a) ^ b);
}

// Substream tags for derive_seed.
inline constexpr std::uint64_t kTagCache = 0x6361636865u;     // cache sampling
inline constexpr std::uint64_t kTagFile = 0x66696c65u;        // file contents
inline constexpr std::uint64_t kTagArrivals = 0x61727276u;    // arrival schedules
inline constexpr std::uint64_t kTagReplica = 0x7265706cu;     // sweep replicas

// Deterministic RNG. mt19937_64 produces the same stream everywhere; bounded()
// is hand-rolled because std::uniform_int_distribution's mapping is
// implementation-defined and would break cross-platform reproducibility.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform in [0, n), bias-free via rejection.
    std::uint64_t bounded(std::uint64_t n) {
        ACCSIM_CHECK(n > 0, "Rng::bounded: n must be positive");
        constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t rem = (kMax % n + 1) % n;  // 2^64 mod n
        for (;;) {
            const std::uint64_t v = next();
            if (v <= kMax - rem) return v % n;
        }
    }

    // Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        ACCSIM_CHECK(lo <= hi, "Rng::uniform_int: empty range");
        return lo + static_cast<int>(bounded(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace accsim
