#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "trialkit/extensions.hpp"
#include "trialkit/feedback.hpp"
#include "trialkit/poset.hpp"

namespace trialkit {

// A trial is a linear order listed greatest-first: position i claims
// trial[i] ≻ trial[j] for all j > i. A violation (a, b) says the trial
// placed a before b while b ≻ a in the hidden order.
using SortOrder = std::vector<int>;
using SortLabel = std::pair<int, int>;
using SortFeedback = Feedback<SortLabel>;
using SortRunResult = RunResult<SortOrder, SortLabel>;

// Good-order strategy of the O(n log n) upper bound: propose the elements
// sorted by exact average height; every violation multiplies the number of
// consistent extensions by less than 8/11.
class GoodOrderSortProposer {
public:
    using candidate_type = SortOrder;
    using label_type = SortLabel;

    explicit GoodOrderSortProposer(int n, int cap = kDefaultExtensionCap);

    std::optional<SortOrder> propose();
    void absorb(const SortOrder& trial, const SortLabel& label);

    const Poset& knowledge() const { return poset_; }
    std::size_t computation_calls() const { return computation_calls_; }

private:
    Poset poset_;
    int cap_;
    std::size_t computation_calls_ = 0;
};

// Baseline for the lower-bound experiments: proposes a uniformly random
// linear extension of the accumulated poset.
class RandomExtensionSortProposer {
public:
    using candidate_type = SortOrder;
    using label_type = SortLabel;

    RandomExtensionSortProposer(int n, std::uint64_t seed, int cap = kDefaultExtensionCap);

    std::optional<SortOrder> propose();
    void absorb(const SortOrder& trial, const SortLabel& label);

    const Poset& knowledge() const { return poset_; }
    std::size_t computation_calls() const { return computation_calls_; }

private:
    Poset poset_;
    int cap_;
    Rng rng_;
    std::size_t computation_calls_ = 0;
};

// Stateless honest oracle for a hidden total order; returns the violated
// pair at the lexicographically first position pair.
class HonestSortOracle {
public:
    explicit HonestSortOracle(SortOrder hidden);  // greatest-first

    SortFeedback operator()(const SortOrder& trial) const;

    const SortOrder& hidden() const { return hidden_; }

private:
    SortOrder hidden_;
    std::vector<int> rank_;  // rank_[element] = position in hidden (0 = greatest)
};

// Honesty checker for audits against a hidden order.
class SortHonestyChecker {
public:
    explicit SortHonestyChecker(SortOrder hidden);
    bool is_solution(const SortOrder& trial) const;
    bool violates(const SortOrder& trial, const SortLabel& label) const;

private:
    SortOrder hidden_;
    std::vector<int> rank_;
};

// Kahn-Saks adversary for the Ω(n log n) lower bound: always answers with a
// pair whose both order probabilities exceed 3/11, oriented against the
// trial, so at least a 3/11 fraction of extensions survives every answer.
class KahnSaksAdversary {
public:
    explicit KahnSaksAdversary(int n, int cap = kDefaultExtensionCap);

    SortFeedback operator()(const SortOrder& trial);

    const Poset& state() const { return poset_; }
    const BigInt& extensions_left() const { return extensions_left_; }

    // Survivor counts before/after each violation, for the 3/11 audit.
    const std::vector<std::pair<BigInt, BigInt>>& shrink_log() const { return shrink_log_; }

private:
    Poset poset_;
    int cap_;
    BigInt extensions_left_;
    std::vector<std::pair<BigInt, BigInt>> shrink_log_;
};

SortRunResult solve_sort_good_order(int n, const std::function<SortFeedback(const SortOrder&)>& oracle,
                                    OracleBudget budget, int cap = kDefaultExtensionCap);

// ⌈log_{11/8}(n!)⌉ + 1: violations consistent with good orders, plus the
// confirming Yes (counted as a trial).
std::size_t sort_trial_bound(int n);
// ⌈log_{11/3}(n!)⌉: violations any solver must absorb against the adversary.
std::size_t sort_violation_lower_bound(int n);

}  // namespace trialkit
