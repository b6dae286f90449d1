#pragma once

#include <cstdint>

#include "polyalg/types.hpp"

namespace polyalg {

/// splitmix64 step; also used as the seed-mixing function.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Derives an independent sub-seed from (seed, stream, counter).
/// Candidate i of a parallel search uses derive_seed(seed, stream, i), so the
/// result stream does not depend on thread scheduling.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter = 0) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s ^= stream * 0xda942042e4dd58b5ull;
    std::uint64_t b = splitmix64(s);
    s ^= counter * 0xca01f9dd51b143dfull;
    std::uint64_t c = splitmix64(s);
    return a ^ (b << 1) ^ c;
}

/// Deterministic generator: all distributions are implemented on top of the
/// raw 64-bit stream, so output bytes do not depend on the standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return splitmix64(state_); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n).
    std::uint64_t uniform_int(std::uint64_t n) { return next_u64() % n; }

    /// Standard normal via Box-Muller.
    double normal();

    Cx complex_normal() { return Cx(normal(), normal()); }

    CVec complex_normal_vec(int n);

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace polyalg
