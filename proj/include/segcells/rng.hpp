#pragma once

#include <cstdint>

namespace segcells {

// splitmix64: tiny, fast, and fully specified here so that seeded streams are
// identical across platforms and standard library versions.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi] via rejection, bias-free.
    int64_t uniform(int64_t lo, int64_t hi) {
        const uint64_t span = (uint64_t)(hi - lo) + 1;
        if (span == 0) return (int64_t)next_u64();  // full 64-bit range
        const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return lo + (int64_t)(v % span);
    }

    bool coin() { return next_u64() & 1; }

  private:
    uint64_t state_;
};

}  // namespace segcells
