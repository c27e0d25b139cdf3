#include "trialkit/sort_u.hpp"

#include <functional>

namespace trialkit {

namespace {

std::vector<int> ranks_of(const SortOrder& order) {
    std::vector<int> rank(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
    return rank;
}

}  // namespace

GoodOrderSortProposer::GoodOrderSortProposer(int n, int cap) : poset_(n), cap_(cap) {}

std::optional<SortOrder> GoodOrderSortProposer::propose() {
    ++computation_calls_;  // one exact-counting pass per proposal
    return good_order(poset_, cap_);
}

void GoodOrderSortProposer::absorb(const SortOrder&, const SortLabel& label) {
    // label (a, b): b ≻ a in the hidden order.
    poset_.add_greater(label.second, label.first);
}

RandomExtensionSortProposer::RandomExtensionSortProposer(int n, std::uint64_t seed, int cap)
    : poset_(n), cap_(cap), rng_(seed) {}

std::optional<SortOrder> RandomExtensionSortProposer::propose() {
    ++computation_calls_;
    return random_linear_extension(poset_, rng_, cap_);
}

void RandomExtensionSortProposer::absorb(const SortOrder&, const SortLabel& label) {
    poset_.add_greater(label.second, label.first);
}

HonestSortOracle::HonestSortOracle(SortOrder hidden)
    : hidden_(std::move(hidden)), rank_(ranks_of(hidden_)) {}

SortFeedback HonestSortOracle::operator()(const SortOrder& trial) const {
    int n = static_cast<int>(hidden_.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rank_[trial[j]] < rank_[trial[i]])  // trial[j] ≻ trial[i] in truth
                return SortFeedback::violation({trial[i], trial[j]});
    return SortFeedback::yes();
}

SortHonestyChecker::SortHonestyChecker(SortOrder hidden)
    : hidden_(std::move(hidden)), rank_(ranks_of(hidden_)) {}

bool SortHonestyChecker::is_solution(const SortOrder& trial) const {
    return trial == hidden_;
}

bool SortHonestyChecker::violates(const SortOrder& trial, const SortLabel& label) const {
    auto [a, b] = label;
    // Genuine iff the trial placed a before b while b ≻ a in truth.
    int pos_a = -1, pos_b = -1;
    for (std::size_t i = 0; i < trial.size(); ++i) {
        if (trial[i] == a) pos_a = static_cast<int>(i);
        if (trial[i] == b) pos_b = static_cast<int>(i);
    }
    if (pos_a < 0 || pos_b < 0 || pos_a >= pos_b) return false;
    return rank_[b] < rank_[a];
}

KahnSaksAdversary::KahnSaksAdversary(int n, int cap)
    : poset_(n), cap_(cap), extensions_left_(count_linear_extensions(poset_, cap)) {}

SortFeedback KahnSaksAdversary::operator()(const SortOrder& trial) {
    int n = poset_.size();
    std::vector<int> pos = ranks_of(trial);

    if (extensions_left_ == 1) {
        // The hidden order is pinned down; behave like an honest oracle.
        SortOrder unique;
        {
            Rng dummy(0);  // one extension left: sampling is deterministic
            unique = random_linear_extension(poset_, dummy, cap_);
        }
        if (trial == unique) return SortFeedback::yes();
        HonestSortOracle honest(unique);
        SortFeedback fb = honest(trial);
        auto [a, b] = fb.label();
        BigInt before = extensions_left_;
        poset_.add_greater(b, a);  // already implied; keeps state explicit
        shrink_log_.emplace_back(before, extensions_left_);
        return fb;
    }

    // Kahn-Saks: some pair has both order probabilities above 3/11. Among
    // qualifying pairs take the one maximizing min(Pr(a≻b), Pr(b≻a)), ties
    // lexicographic, then orient it against the trial.
    ExtensionStats stats(poset_, cap_);
    int best_a = -1, best_b = -1;
    Rational best_min = -1;
    const Rational threshold(3, 11);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            Rational p = stats.pair_prob(a, b);
            Rational q = Rational(1) - p;
            Rational mn = p < q ? p : q;
            if (p > threshold && q > threshold && mn > best_min) {
                best_min = mn;
                best_a = a;
                best_b = b;
            }
        }
    }
    if (best_a < 0)
        throw std::logic_error(
            "Kahn-Saks guarantee failed: no qualifying pair with >1 extension");

    // Answer claims the reverse of the trial's relative order.
    int first = best_a, second = best_b;
    if (pos[first] > pos[second]) std::swap(first, second);
    BigInt before = extensions_left_;
    extensions_left_ = stats.count_above(second, first);
    poset_.add_greater(second, first);
    shrink_log_.emplace_back(before, extensions_left_);
    return SortFeedback::violation({first, second});
}

SortRunResult solve_sort_good_order(int n,
                                    const std::function<SortFeedback(const SortOrder&)>& oracle,
                                    OracleBudget budget, int cap) {
    GoodOrderSortProposer proposer(n, cap);
    return run_solver(proposer, oracle, budget);
}

std::size_t sort_trial_bound(int n) {
    return ceil_log_ratio(factorial(n), 11, 8) + 1;
}

std::size_t sort_violation_lower_bound(int n) {
    return ceil_log_ratio(factorial(n), 11, 3);
}

}  // namespace trialkit
