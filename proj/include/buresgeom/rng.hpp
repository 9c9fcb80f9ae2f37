#pragma once

#include <cstdint>
#include <random>

namespace buresgeom {

/// Seedable, splittable random stream: a SplitMix64-keyed mt19937_64.
///
/// Every stochastic operation in this library takes an explicit stream.
/// Parallel workers each own RngStream::split(seed, worker_index); the
/// SplitMix64 finalizer decorrelates the derived engine seeds, so streams
/// for distinct indices are independent for all practical purposes.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(mix64(seed)) {}

    static RngStream split(std::uint64_t seed, std::uint64_t index) {
        return RngStream(mix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1)));
    }

    std::uint64_t seed() const { return seed_; }
    std::mt19937_64& engine() { return engine_; }

    /// Uniform on [0, 1).
    double uniform() { return uniform_(engine_); }
    /// Standard normal.
    double normal() { return normal_(engine_); }
    /// Gamma(shape, scale 1).
    double gamma(double shape) {
        std::gamma_distribution<double> g(shape, 1.0);
        return g(engine_);
    }
    /// Standard Cauchy.
    double cauchy() { return cauchy_(engine_); }

private:
    static std::uint64_t mix64(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::cauchy_distribution<double> cauchy_{0.0, 1.0};
};

} // namespace buresgeom
