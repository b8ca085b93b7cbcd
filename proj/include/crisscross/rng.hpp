#pragma once

#include <cstdint>

namespace crisscross {

// Deterministic pseudo-random generator (SplitMix64 core, fixed constants).
// Identical seeds give identical streams on every platform and toolchain,
// which is what makes seeded runs byte-for-byte reproducible.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    int next_bit() { return static_cast<int>(next_u64() >> 63); }

    // Uniform value in [0, bound); bound > 0. Multiply-shift on the top 32
    // bits; the O(2^-32) bias is irrelevant at the bounds used here.
    uint32_t next_below(uint32_t bound) {
        uint32_t top = static_cast<uint32_t>(next_u64() >> 32);
        return static_cast<uint32_t>((static_cast<uint64_t>(top) * bound) >> 32);
    }

    // Independent derived stream; does not consume draws from this one.
    Rng substream(uint64_t index) const {
        Rng r(state_ ^ (0x9e3779b97f4a7c15ull * (index + 1)));
        r.next_u64();
        return r;
    }

private:
    uint64_t state_;
};

}  // namespace crisscross
