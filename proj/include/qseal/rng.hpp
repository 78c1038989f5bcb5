#pragma once

#include <cstdint>
#include <random>

namespace qseal {

// splitmix64 finalizer; decorrelates (master seed, stream id) pairs
// before they seed the engine.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seedable random stream. Each (master_seed, stream_id) pair yields an
/// independent, reproducible sequence, so parallel trials can each derive
/// their own stream without sharing state.
class Rng {
public:
    explicit Rng(std::uint64_t master_seed, std::uint64_t stream_id = 0)
        : stream_id_(stream_id),
          engine_(splitmix64(splitmix64(master_seed) ^ splitmix64(~stream_id))) {}

    std::uint64_t stream_id() const { return stream_id_; }

    /// Uniform double in [lo, hi].
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }

    /// Uniform double in [0, 1).
    double canonical() {
        return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
    }

    bool bernoulli(double p) { return canonical() < p; }

    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
};

}  // namespace qseal
