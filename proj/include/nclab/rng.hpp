#ifndef NCLAB_RNG_HPP
#define NCLAB_RNG_HPP

#include <cmath>
#include <cstdint>

namespace nclab {

// SplitMix64 stream generator. Chosen as the project-wide RNG because the
// whole algorithm fits in a dozen lines and is trivially portable across
// languages: state advances by the golden-ratio increment and each output is
// finalized with two xor-shift multiplies. A sample stream is derived from
// (seed, stream) so that sample i of a sweep is independent of evaluation
// order; see README "Reproducibility" for the exact definition.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    // Stream k of a given seed: mix the stream index in before use so
    // neighbouring streams are uncorrelated.
    SplitMix64(std::uint64_t seed, std::uint64_t stream)
        : state_(seed + (stream + 1) * 0x9E3779B97F4A7C15ULL) {
        next_u64();
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 significant bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Standard normal via Box-Muller (always consumes two uniforms).
    double next_normal() {
        double u1 = next_double(), u2 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

  private:
    std::uint64_t state_;
};

} // namespace nclab

#endif
