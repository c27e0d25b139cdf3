#include "trialkit/extensions.hpp"

#include <algorithm>
#include <numeric>

namespace trialkit {

namespace {

void check_cap(const Poset& p, int cap) {
    if (p.size() > cap)
        throw CapacityError("poset has " + std::to_string(p.size()) +
                            " elements, above the exact-counting cap of " +
                            std::to_string(cap));
}

// f[S] = number of linear extensions of the subposet induced on S.
// Only downward-closed S feed the full count, and on those the stored
// relation is closure-complete, so iterating all masks is safe.
std::vector<BigInt> extension_dp(const Poset& p) {
    int n = p.size();
    std::vector<BigInt> f(std::size_t(1) << n);
    f[0] = 1;
    for (std::uint32_t mask = 1; mask < f.size(); ++mask) {
        BigInt acc = 0;
        for (int a = 0; a < n; ++a) {
            if (!((mask >> a) & 1u)) continue;
            if (p.above_mask(a) & mask) continue;  // not maximal in S
            acc += f[mask & ~(1u << a)];
        }
        f[mask] = std::move(acc);
    }
    return f;
}

BigInt count_closed(const Poset& p) {
    int n = p.size();
    if (n == 0) return 1;
    return extension_dp(p).back();
}

}  // namespace

BigInt count_linear_extensions(const Poset& p, int cap) {
    check_cap(p, cap);
    return count_closed(p);
}

ExtensionStats::ExtensionStats(const Poset& p, int cap)
    : poset_(p),
      cap_(cap),
      count_memo_(static_cast<std::size_t>(p.size()) * p.size()),
      count_computed_(static_cast<std::size_t>(p.size()) * p.size(), 0) {
    check_cap(p, cap);
    total_ = count_closed(poset_);
}

const BigInt& ExtensionStats::count_above(int a, int b) {
    std::size_t idx = static_cast<std::size_t>(a) * poset_.size() + b;
    if (!count_computed_[idx]) {
        std::size_t rev = static_cast<std::size_t>(b) * poset_.size() + a;
        BigInt above;
        if (poset_.greater(a, b)) {
            above = total_;
        } else if (poset_.greater(b, a)) {
            above = 0;
        } else {
            Poset augmented = poset_;
            augmented.add_greater(a, b);
            above = count_closed(augmented);
        }
        count_memo_[rev] = total_ - above;
        count_computed_[rev] = 1;
        count_memo_[idx] = std::move(above);
        count_computed_[idx] = 1;
    }
    return count_memo_[idx];
}

Rational ExtensionStats::pair_prob(int a, int b) {
    return Rational(count_above(a, b), total_);
}

Rational ExtensionStats::height(int a) {
    Rational h = 0;
    for (int b = 0; b < poset_.size(); ++b) {
        if (b == a) continue;
        h += pair_prob(b, a);
    }
    return h;
}

std::vector<Rational> ExtensionStats::heights() {
    std::vector<Rational> hs(poset_.size());
    for (int a = 0; a < poset_.size(); ++a) hs[a] = height(a);
    return hs;
}

std::vector<int> good_order(const Poset& p, int cap) {
    ExtensionStats stats(p, cap);
    std::vector<Rational> hs = stats.heights();
    std::vector<int> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return hs[a] < hs[b]; });
    return order;
}

namespace {

// Uniform BigInt in [0, bound) by bit-truncated rejection.
BigInt random_below(Rng& rng, const BigInt& bound) {
    if (bound <= 1) return 0;
    unsigned bits = boost::multiprecision::msb(bound) + 1;
    unsigned chunks = (bits + 63) / 64;
    BigInt ticket;
    do {
        ticket = 0;
        for (unsigned c = 0; c < chunks; ++c) {
            ticket <<= 64;
            ticket += rng.next_u64();
        }
        ticket >>= 64 * chunks - bits;
    } while (ticket >= bound);
    return ticket;
}

}  // namespace

std::vector<int> random_linear_extension(const Poset& p, Rng& rng, int cap) {
    check_cap(p, cap);
    int n = p.size();
    std::vector<int> out;
    out.reserve(n);
    std::vector<BigInt> f = n ? extension_dp(p) : std::vector<BigInt>{};
    std::uint32_t mask = n ? ((1u << n) - 1u) : 0u;  // n <= 16 per cap
    while (mask) {
        // Pick the top of the remaining set, weighted by extensions left.
        BigInt ticket = random_below(rng, f[mask]);
        for (int a = 0; a < n; ++a) {
            if (!((mask >> a) & 1u)) continue;
            if (p.above_mask(a) & mask) continue;
            const BigInt& weight = f[mask & ~(1u << a)];
            if (ticket < weight) {
                out.push_back(a);
                mask &= ~(1u << a);
                break;
            }
            ticket -= weight;
        }
    }
    return out;
}

BigInt count_extensions_brute(const Poset& p) {
    int n = p.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    BigInt count = 0;
    do {
        // perm read greatest-first: perm[i] above perm[j] for i < j.
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if (p.greater(perm[j], perm[i])) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace trialkit
