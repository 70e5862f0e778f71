#pragma once

#include <array>
#include <cstdint>

#include "hasselab/integer.hpp"

namespace hasselab {

// Cross-platform deterministic generators. Distributions from <random> are
// implementation-defined, so bounded draws are done by hand (rejection).

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

class RngStream {
  public:
    RngStream() : RngStream(0) {}
    explicit RngStream(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }
    // independent stream for one sample index of a seeded run
    static RngStream for_index(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t sm = seed ^ (index * 0x9e3779b97f4a7c15ull + 0x243f6a8885a308d3ull);
        RngStream r;
        for (auto& w : r.s_) w = splitmix64(sm);
        return r;
    }

    std::uint64_t next_u64() {  // xoshiro256**
        std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform in [0, bound) via rejection; bound > 0
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    // uniform in [lo, hi] inclusive (exact, arbitrary precision)
    Int uniform_int(const Int& lo, const Int& hi) {
        Int width = hi - lo + 1;
        if (width <= 0) throw std::invalid_argument("empty integer range");
        std::size_t bits = mpz_sizeinbase(width.get_mpz_t(), 2);
        for (;;) {
            Int r = random_bits(bits);
            if (r < width) return lo + r;
        }
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    Int random_bits(std::size_t bits) {
        Int r(0);
        std::size_t produced = 0;
        while (produced < bits) {
            std::uint64_t w = next_u64();
            std::size_t take = std::min<std::size_t>(64, bits - produced);
            if (take < 64) w &= (take == 64) ? ~0ull : ((1ull << take) - 1);
            Int chunk(0);
            mpz_import(chunk.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
            r |= chunk << produced;
            produced += take;
        }
        return r;
    }
    std::array<std::uint64_t, 4> s_{};
};

}  // namespace hasselab
