#pragma once

#include <vector>

#include "trialkit/feedback.hpp"
#include "trialkit/numeric.hpp"
#include "trialkit/poset.hpp"
#include "trialkit/rng.hpp"

namespace trialkit {

inline constexpr int kDefaultExtensionCap = 16;

// Exact number of linear extensions, by dynamic programming over subsets:
// f(S) = sum over maximal a in S of f(S \ {a}). Replaces the paper's FPRAS;
// exact at desk scale.
BigInt count_linear_extensions(const Poset& p, int cap = kDefaultExtensionCap);

// Exact extension statistics of a poset: total count, pairwise order
// probabilities (on demand), and average heights under the paper's rank
// convention (rank of a = number of elements above a, so the maximum
// element of a chain has height 0).
class ExtensionStats {
public:
    explicit ExtensionStats(const Poset& p, int cap = kDefaultExtensionCap);

    const BigInt& total() const { return total_; }

    // Number of extensions with a ≻ b (a != b). Memoized.
    const BigInt& count_above(int a, int b);

    // Pr(a ≻ b) over a uniform random linear extension.
    Rational pair_prob(int a, int b);

    // h(a) = sum over b != a of Pr(b ≻ a); exact rational in [0, n-1].
    Rational height(int a);
    std::vector<Rational> heights();

private:
    Poset poset_;
    int cap_;
    BigInt total_;
    std::vector<BigInt> count_memo_;     // n*n, count_above values
    std::vector<char> count_computed_;
};

// Elements sorted by ascending exact average height, ties by element index;
// first element is the likeliest top. Every out-of-order pair keeps
// probability < 8/11 (Kahn-Saks), so any violation shrinks the extension
// count by a constant factor.
std::vector<int> good_order(const Poset& p, int cap = kDefaultExtensionCap);

// Uniform random linear extension, sampled top-down with exact DP weights.
// Returned greatest-first.
std::vector<int> random_linear_extension(const Poset& p, Rng& rng,
                                         int cap = kDefaultExtensionCap);

// Test oracle: counts extensions by filtering all n! permutations.
BigInt count_extensions_brute(const Poset& p);

}  // namespace trialkit
