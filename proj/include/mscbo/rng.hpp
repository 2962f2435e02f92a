#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>

namespace mscbo::rng {

// splitmix64 finalizer; bijective mixing of a 64-bit word.
constexpr std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Combine a key tuple into one word. Feeding each word through mix keeps
// nearby keys (adjacent steps, particle indices) statistically unrelated.
inline std::uint64_t combine(std::initializer_list<std::uint64_t> words) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t w : words) {
        h = mix(h ^ w);
    }
    return h;
}

// Map a word to a double in [0, 1) using the top 53 bits.
inline double to_unit(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Map a word to (0, 1]; safe as a log argument.
inline double to_unit_open(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
}

// Sequential generator for bulk sampling (initial positions, Monte Carlo).
class Stream {
  public:
    explicit Stream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0, 1).
    double uniform() { return to_unit(next_u64()); }

    // Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller; the sine partner is cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = to_unit_open(next_u64());
        double u2 = to_unit(next_u64());
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

  private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Counter-based draws: the value depends only on the key tuple, never on
// call order, so stepping code stays deterministic under any loop layout.
inline double keyed_uniform(std::initializer_list<std::uint64_t> key) {
    return to_unit(combine(key));
}

inline double keyed_normal(std::initializer_list<std::uint64_t> key) {
    std::uint64_t base = combine(key);
    double u1 = to_unit_open(mix(base ^ 0x5851f42d4c957f2dULL));
    double u2 = to_unit(mix(base ^ 0x14057b7ef767814fULL));
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace mscbo::rng
