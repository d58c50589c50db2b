#pragma once

#include <cstdint>

namespace finetti {

// splitmix64 output function (Steele, Lea, Flood 2014; public domain
// reference implementation by Sebastiano Vigna). Used both to expand
// seeds into generator state and to derive per-trial sub-seeds.
inline std::uint64_t splitmix64_mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// The i-th sub-seed of a master seed: output i of the splitmix64 stream
// seeded with `seed`. Fixed contract so trial streams are reproducible.
inline std::uint64_t derive_subseed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64_mix(seed + index * 0x9e3779b97f4a7c15ULL);
}

// xoshiro256++ 1.0 (Blackman, Vigna 2019; public domain reference
// implementation). Small state, fast, and bit-reproducible across
// platforms, which is the contract the simulators rely on.
class Xoshiro256pp {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256pp(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) {
            sm += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = sm;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~static_cast<result_type>(0); }

    result_type operator()() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform draw from {0, ..., bound-1} without modulo bias
    // (Lemire 2019 multiply-reject). Exact probabilities, so a
    // Bernoulli(s/(n+s)) event is `uniform_below(n+s) < s`.
    std::uint64_t uniform_below(std::uint64_t bound) {
        unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<unsigned __int128>((*this)()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

}  // namespace finetti
