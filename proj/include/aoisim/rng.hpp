#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace aoisim {

// Deterministic uniform stream for channel draws. mt19937_64 produces the
// same bit stream on every platform; the (0,1] mapping and the inverse-CDF
// Rayleigh below avoid distribution classes whose output is
// implementation-defined.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    // Uniform on (0,1] with 53-bit resolution.
    double uniform_unit() {
        const std::uint64_t bits = engine_() >> 11;
        return static_cast<double>(bits + 1) * 0x1.0p-53;
    }

    // Rayleigh amplitude via inverse CDF: c = scale * sqrt(-2 ln u).
    double rayleigh(double scale) {
        return scale * std::sqrt(-2.0 * std::log(uniform_unit()));
    }

private:
    std::mt19937_64 engine_;
};

// Episode streams derive from the config seed by XOR with the episode index,
// so a seed list in a sweep maps to disjoint deterministic streams and
// episode index 0 reproduces a plain single run.
inline std::uint64_t episode_stream_seed(std::uint64_t config_seed, std::uint64_t episode_index) {
    return config_seed ^ episode_index;
}

}  // namespace aoisim
