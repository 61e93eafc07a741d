#pragma once

/// Deterministic randomness. SplitMix64 with hand-rolled integer
/// sampling, so identical seeds give identical streams on every platform
/// (std::uniform_int_distribution makes no such promise). Per-task seeds
/// derive from (seed, label) so adding tasks never perturbs existing ones.

#include "matpoly/matrix.hpp"
#include "matpoly/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string_view>

namespace matpoly {

namespace rngdetail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

} // namespace rngdetail

/// Stable mix of a global seed with a task label.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
    std::uint64_t s = seed ^ rngdetail::fnv1a(label);
    return rngdetail::splitmix64(s);
}

/// Stable mix of a seed with a trial index.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed ^ (0x9E3779B97F4A7C15ULL * (index + 1));
    return rngdetail::splitmix64(s);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return rngdetail::splitmix64(state_); }

    /// Uniform in [lo, hi], inclusive; rejection sampling, unbiased.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(next_u64()); // full 64-bit range
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return lo + static_cast<std::int64_t>(v % span);
    }

    /// Uniform integer in [-box, box], as an exact rational.
    Rational integer_in_box(std::int64_t box) {
        return Rational(uniform_int(-box, box));
    }

    /// Uniform nonzero integer in [-box, box] \ {0}.
    Rational nonzero_integer_in_box(std::int64_t box) {
        std::int64_t v;
        do {
            v = uniform_int(-box, box);
        } while (v == 0);
        return Rational(v);
    }

private:
    std::uint64_t state_;
};

inline Matrix<Rational> random_integer_matrix(Rng& rng, std::size_t n, std::int64_t box) {
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = rng.integer_in_box(box);
    return m;
}

/// Random integer matrix resampled until invertible.
inline Matrix<Rational> random_invertible_matrix(Rng& rng, std::size_t n, std::int64_t box) {
    for (;;) {
        Matrix<Rational> m = random_integer_matrix(rng, n, box);
        if (rank(m) == n) return m;
    }
}

} // namespace matpoly
