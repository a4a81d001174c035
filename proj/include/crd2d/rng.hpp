#pragma once

#include <cstdint>
#include <random>

namespace crd2d {

// One splitmix64 step; used only to spread seed material, not as the
// simulation generator.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Substream labels. Every random quantity in a TTI is drawn from a stream
// derived from (master seed, tti index, label), so TTIs are independent and
// may be evaluated in any order or in parallel without changing results.
enum class Stream : std::uint64_t {
    Arrivals = 1,
    Deploy = 2,
    Fading = 3,
    Order = 4,
    Scheduler = 5,
};

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tti_index, Stream stream) {
    std::uint64_t s = splitmix64(master);
    s = splitmix64(s ^ tti_index);
    return splitmix64(s ^ static_cast<std::uint64_t>(stream));
}

// A self-contained generator for one logical stream. Not to be shared across
// concurrent callers; derive independent streams instead.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }

    double normal(double mean, double stddev) {
        if (stddev == 0.0) return mean;
        return std::normal_distribution<double>(mean, stddev)(engine_);
    }

    double gamma(double shape, double scale) {
        return std::gamma_distribution<double>(shape, scale)(engine_);
    }

    long poisson(double mean) { return std::poisson_distribution<long>(mean)(engine_); }

    std::uint64_t uniform_index(std::uint64_t n) {
        return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace crd2d
