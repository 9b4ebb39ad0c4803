#pragma once

#include <cstdint>

namespace bohr {

// SplitMix64 (Steele/Lea/Vigna): a small seedable generator with a full
// 64-bit state walk. Every consumer in this library draws from its own
// instance so that sign choices and sample points are reproducible and
// independent of evaluation order.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // one fair bit (top bit of the next word)
    bool next_bit() { return (next() >> 63) != 0; }

    // uniform double in [0, 1)
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Deterministic sub-stream seed for task number `index` under a base seed.
// Distinct indices land in unrelated parts of the SplitMix64 orbit, so
// per-trial streams do not overlap in practice.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
    return g.next();
}

} // namespace bohr
