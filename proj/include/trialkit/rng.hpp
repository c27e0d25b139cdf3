#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace trialkit {

// mt19937_64 plus hand-rolled reductions: std::uniform_int_distribution is
// implementation-defined, and seeded runs must reproduce byte-identically
// across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % bound;
    }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(double p) {
        return static_cast<double>(engine_()) <
               p * static_cast<double>(std::numeric_limits<std::uint64_t>::max());
    }

    std::vector<int> permutation(int n) {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i) {
            int j = static_cast<int>(below(static_cast<std::uint64_t>(i + 1)));
            std::swap(perm[i], perm[j]);
        }
        return perm;
    }

    // Derives an independent stream; keeps experiment repetitions decoupled.
    Rng fork(std::uint64_t salt) {
        std::uint64_t x = next_u64() ^ (salt * 0x9e3779b97f4a7c15ull);
        x ^= x >> 30; x *= 0xbf58476d1ce4e5b9ull;
        x ^= x >> 27; x *= 0x94d049bb133111ebull;
        x ^= x >> 31;
        return Rng(x);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace trialkit
