#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace minicar {

inline std::uint64_t fnv1a_hash(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (const char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Counter-based random stream: the value sequence depends only on
/// (seed, stream, sample), never on evaluation order across streams.
class SampleRng {
public:
    SampleRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t sample) {
        state_ = seed;
        (void)splitmix64(state_);
        state_ ^= stream * 0x9e3779b97f4a7c15ull;
        (void)splitmix64(state_);
        state_ ^= sample * 0xbf58476d1ce4e5b9ull;
        (void)splitmix64(state_);
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    /// Uniform in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller.
    double gaussian() {
        double u1 = uniform01();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kRngPi * u2);
    }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    static constexpr double kRngPi = 3.14159265358979323846;
    std::uint64_t state_;
};

}  // namespace minicar
