#pragma once

#include <cstdint>
#include <random>

#include "insdel/seq.hpp"

namespace insdel {

inline constexpr const char* kRngName = "mt19937_64";

// Deterministic RNG used everywhere randomness is needed. mt19937_64 output
// is fully specified by the standard and the bounded draw below avoids
// std::uniform_int_distribution, whose mapping is implementation-defined, so
// seeded runs reproduce bit-identically across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    // Stream-splitting: derive(seed, k) gives independent deterministic
    // streams for parallel trials.
    static Rng derive(uint64_t seed, uint64_t stream) {
        return Rng(splitmix64(seed + 0x9E3779B97F4A7C15ULL * (stream + 1)));
    }

    uint64_t next() { return gen_(); }

    // Unbiased draw from [0, n) by rejection.
    uint64_t below(uint64_t n) {
        if (n == 0) throw std::domain_error("rng: below(0)");
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t r = gen_();
        while (r >= limit) r = gen_();
        return r % n;
    }

    // Uniform in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (gen_() & 1) != 0; }

    Seq random_seq(int q, size_t len) {
        std::vector<int32_t> sym(len);
        for (auto& s : sym) s = static_cast<int32_t>(below(static_cast<uint64_t>(q)));
        return Seq(q, std::move(sym));
    }

    static uint64_t splitmix64(uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace insdel
