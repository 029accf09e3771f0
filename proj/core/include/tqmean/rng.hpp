#ifndef TQMEAN_RNG_HPP
#define TQMEAN_RNG_HPP

#include <cmath>
#include <cstdint>

namespace tqmean {

/// SplitMix64 step; used only to expand a user seed into a non-zero state.
constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept
{
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// xorshift64* (Vigna 2016): shifts 12/25/27, multiplier 0x2545F4914F6CDD1D.
/// Fully specified so that verification samples are reproducible anywhere.
class Xorshift64Star {
public:
    using result_type = std::uint64_t;

    explicit constexpr Xorshift64Star(std::uint64_t seed) noexcept
    {
        std::uint64_t s = seed;
        state_ = splitmix64(s);
        if (state_ == 0) {
            state_ = 0x9E3779B97F4A7C15ULL;
        }
    }

    constexpr std::uint64_t next() noexcept
    {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    constexpr result_type operator()() noexcept { return next(); }
    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

    /// exp(U(log lo, log hi)); lo, hi > 0.
    double log_uniform(double lo, double hi) noexcept
    {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

private:
    std::uint64_t state_;
};

} // namespace tqmean

#endif
