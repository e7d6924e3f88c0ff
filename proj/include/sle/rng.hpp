#ifndef SLE_RNG_HPP
#define SLE_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace sle {

// SplitMix64: Steele, Lea & Flood (2014), "Fast splittable pseudorandom
// number generators"; finalizer constants from Vigna's public-domain
// reference implementation. One instance per Monte Carlo path; the
// substream construction below makes results independent of execution
// order and thread count.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in (0, 1): top 53 bits, offset by half an ulp so 0 is excluded.
    double uniform() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

namespace rng_detail {
inline std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}
} // namespace rng_detail

// Deterministic per-path substream: the state is a hash of
// (master_seed, stream_index), so stream i can be constructed in O(1)
// from any thread.
inline SplitMix64 substream(std::uint64_t master_seed, std::uint64_t index) {
    const std::uint64_t h =
        rng_detail::mix(master_seed ^ 0x6C62272E07BB0142ull) ^
        rng_detail::mix(index + 0x9E3779B97F4A7C15ull);
    return SplitMix64(rng_detail::mix(h));
}

// Standard normal pairs by the Box-Muller transform (a deterministic map
// of two uniforms); the spare is cached per generator wrapper.
class NormalSource {
public:
    explicit NormalSource(SplitMix64 gen) : gen_(gen) {}

    double next() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = gen_.uniform();
        const double u2 = gen_.uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

    double uniform() { return gen_.uniform(); }

private:
    SplitMix64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Standard symmetric alpha-stable variate by the Chambers-Mallows-Stuck
// construction: V uniform on (-pi/2, pi/2), W standard exponential,
//   X = sin(alpha V)/cos(V)^(1/alpha) * (cos((1-alpha)V)/W)^((1-alpha)/alpha),
// reducing to tan(V) (Cauchy) at alpha = 1.
inline double symmetric_stable(NormalSource& src, double alpha) {
    const double v = std::numbers::pi * (src.uniform() - 0.5);
    if (std::abs(alpha - 1.0) < 1e-12) {
        return std::tan(v);
    }
    const double w = -std::log(src.uniform());
    const double s = std::sin(alpha * v) /
                     std::pow(std::cos(v), 1.0 / alpha);
    return s * std::pow(std::cos((1.0 - alpha) * v) / w,
                        (1.0 - alpha) / alpha);
}

} // namespace sle

#endif
