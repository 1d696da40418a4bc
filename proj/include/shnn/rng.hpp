#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "shnn/errors.hpp"

namespace shnn {

/// splitmix64 step; used to derive independent substreams from one root seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Stream tags for the documented seed topology:
/// root seed -> {data, elm, uswim, swim} substreams via derive_stream.
enum class Stream : std::uint64_t {
    Data = 1,
    Elm = 2,
    Uswim = 3,
    Swim = 4,
};

inline std::uint64_t derive_stream(std::uint64_t seed, Stream tag) {
    std::uint64_t s = seed ^ (0xd1b54a32d192ed03ULL * static_cast<std::uint64_t>(tag));
    return splitmix64(s);
}

/// Deterministic random source. Distributions are hand-rolled on top of the
/// mt19937_64 bit stream so results do not depend on the standard library's
/// unspecified std::*_distribution algorithms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1).
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        if (!(lo < hi)) throw DimensionError("Rng::uniform: empty range");
        return lo + (hi - lo) * uniform01();
    }

    /// Standard normal via Box-Muller; caches the second variate.
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        cached_ = r * std::sin(theta);
        has_cached_ = true;
        return r * std::cos(theta);
    }

    /// Uniform integer in [0, n).
    std::size_t index(std::size_t n) {
        if (n == 0) throw DimensionError("Rng::index: n must be positive");
        // rejection sampling keeps the draw exactly uniform
        const std::uint64_t span = n;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x = engine_();
        while (x >= limit) x = engine_();
        return static_cast<std::size_t>(x % span);
    }

  private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace shnn
