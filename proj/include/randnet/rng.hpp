#pragma once

#include <cstdint>

namespace randnet {

// SplitMix64 (Steele, Lea & Flood): 64-bit state, one mix pipeline per draw,
// bit-identical output everywhere. All randomized code in this library draws
// from SplitMix64 streams so that a (seed, stream index) pair pins the result.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in the open interval (0, 1); safe as a log() argument.
    double uniform_open() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Unbiased integer in [0, range); range must be nonzero.
    /// Lemire multiply-shift with rejection.
    std::uint64_t bounded(std::uint64_t range) {
        unsigned __int128 m =
            static_cast<unsigned __int128>(next()) * static_cast<unsigned __int128>(range);
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < range) {
            const std::uint64_t threshold = (0 - range) % range;
            while (lo < threshold) {
                m = static_cast<unsigned __int128>(next()) *
                    static_cast<unsigned __int128>(range);
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    std::uint64_t state_;
};

// Seed of substream `index` under a master seed. Substreams are allocated one
// per sampler row and one per experiment trial; each call site documents its
// index scheme. The extra mix round decorrelates neighbouring indices.
inline std::uint64_t derive_stream(std::uint64_t master, std::uint64_t index) {
    SplitMix64 g(master ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    return g.next();
}

} // namespace randnet
