#pragma once

#include <cstdint>
#include <string_view>

namespace stylescope::rng {

// SplitMix64 step (Steele, Lea, Flood 2014). Advances the state and returns
// the next output word.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// FNV-1a, folded through one splitmix round so short strings diffuse well.
inline std::uint64_t hash_bytes(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::uint64_t st = h;
    return splitmix64(st);
}

// Deterministic random stream keyed by (seed, label, index). Streams with
// distinct keys are statistically independent; the same key always yields
// the same sequence, regardless of what other streams were drawn from.
// This is what makes bootstrap replicates order-independent and parallel-safe.
class Stream {
public:
    Stream(std::uint64_t seed, std::string_view label, std::uint64_t index) {
        std::uint64_t s = seed;
        std::uint64_t a = splitmix64(s);
        s ^= hash_bytes(label);
        std::uint64_t b = splitmix64(s);
        s ^= index * 0x9e3779b97f4a7c15ULL;
        std::uint64_t c = splitmix64(s);
        state_ = a ^ (b * 0xff51afd7ed558ccdULL) ^ (c + index);
        // burn-in so nearby keys decorrelate
        next_u64();
        next_u64();
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    // Uniform in [0, 1), 53-bit resolution.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, n). Fixed-point multiply; bias is below 2^-64 per draw.
    std::uint64_t next_below(std::uint64_t n) {
        using u128 = unsigned __int128;
        return static_cast<std::uint64_t>((u128(next_u64()) * u128(n)) >> 64);
    }

    // Standard normal via Marsaglia's polar method.
    double next_gauss();

private:
    std::uint64_t state_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// One derived 64-bit key from (seed, label, index); used to split seeds for
// sub-experiments (e.g. independent runs of the same experiment).
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view label,
                                 std::uint64_t index) {
    std::uint64_t s = seed ^ hash_bytes(label) ^ (index * 0xd6e8feb86659fd93ULL);
    splitmix64(s);
    return splitmix64(s);
}

} // namespace stylescope::rng
