#ifndef FRECHET_JL_RNG_HPP
#define FRECHET_JL_RNG_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>

namespace frechet_jl {

/*
 * Seeded generator with a stream that is identical across standard libraries:
 * mt19937_64 is fully specified, and every transform below is spelled out
 * here instead of going through the implementation-defined <random>
 * distributions.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal via the Marsaglia polar method.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double factor = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * factor;
        has_spare_ = true;
        return u * factor;
    }

    /// Standard exponential by inversion.
    double exponential() { return -std::log1p(-uniform()); }

    /// Uniform integer in [0, n), unbiased (rejection on the top remainder).
    std::size_t index(std::size_t n) {
        const std::uint64_t range = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % range;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return static_cast<std::size_t>(x % range);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace frechet_jl

#endif
