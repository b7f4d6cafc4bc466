#ifndef TRANSCLUST_RNG_HPP
#define TRANSCLUST_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace transclust {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Stream-splittable RNG. Each (seed, tag...) path gives an independent
/// stream; uniform doubles are derived from raw 64-bit output so results
/// are identical across standard-library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : key_(splitmix64(seed)), engine_(key_) {}
    Rng(std::uint64_t seed, std::uint64_t tag)
        : key_(splitmix64(splitmix64(seed) ^ splitmix64(~tag))), engine_(key_) {}

    /// Independent stream for a sub-task; does not disturb this stream.
    Rng derive(std::uint64_t tag) const { return Rng(key_, tag); }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return next_double() < p; }

    /// Uniform integer in [0, bound), bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = engine_();
            if (r >= threshold) return r % bound;
        }
    }

    /// Number of failures before the first success of Bernoulli(p);
    /// used for geometric skipping through large pair spaces.
    std::uint64_t geometric_skip(double p) {
        if (p >= 1.0) return 0;
        double u = next_double();
        if (u == 0.0) u = 0x1.0p-53;
        return static_cast<std::uint64_t>(std::floor(std::log(u) / std::log1p(-p)));
    }

private:
    std::uint64_t key_;
    std::mt19937_64 engine_;
};

}  // namespace transclust

#endif
