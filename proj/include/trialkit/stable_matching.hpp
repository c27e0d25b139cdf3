#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "trialkit/extensions.hpp"
#include "trialkit/feedback.hpp"
#include "trialkit/poset.hpp"
#include "trialkit/rng.hpp"

namespace trialkit {

// Gale-Shapley original model: equal sides, complete strict lists.
struct PreferenceProfile {
    int n = 0;
    std::vector<std::vector<int>> men;    // men[m]: women, most-preferred first
    std::vector<std::vector<int>> women;  // women[w]: men, most-preferred first

    void validate() const;
    static PreferenceProfile random(int n, Rng& rng);

    // Profile JSON: {"n": int, "men": [[...]...], "women": [[...]...]}.
    static PreferenceProfile from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

using Matching = std::vector<int>;        // woman matched to each man
using SmLabel = std::pair<int, int>;      // blocking pair (m, w)
using SmFeedback = Feedback<SmLabel>;
using SmRunResult = RunResult<Matching, SmLabel>;

// Deterministic men-proposing deferred acceptance. Output has no blocking
// pair under the given profile.
Matching gale_shapley(const PreferenceProfile& profile);

// Brute-force stability check over all n^2 pairs.
bool is_stable(const PreferenceProfile& profile, const Matching& matching);
std::optional<SmLabel> first_blocking_pair(const PreferenceProfile& profile,
                                           const Matching& matching);

class HonestSmOracle {
public:
    explicit HonestSmOracle(PreferenceProfile profile);
    SmFeedback operator()(const Matching& trial) const;
    const PreferenceProfile& profile() const { return profile_; }

private:
    PreferenceProfile profile_;
};

class SmHonestyChecker {
public:
    explicit SmHonestyChecker(PreferenceProfile profile);
    bool is_solution(const Matching& trial) const;
    bool violates(const Matching& trial, const SmLabel& label) const;

private:
    PreferenceProfile profile_;
    std::vector<std::vector<int>> man_rank_, woman_rank_;
};

// Partial knowledge of the hidden market: one poset per agent over the
// opposite side.
struct MarketKnowledge {
    std::vector<Poset> men;
    std::vector<Poset> women;

    explicit MarketKnowledge(int n) : men(n, Poset(n)), women(n, Poset(n)) {}
    int size() const { return static_cast<int>(men.size()); }
};

// Theorem 3.1 strategy: good orders for all 2n posets, Gale-Shapley on the
// assumed profile, query the result. Both relations of a returned blocking
// pair are recorded; at least one contradicts the assumed good orders, so
// that agent's extension count shrinks by a factor below 8/11.
class SmProposer {
public:
    using candidate_type = Matching;
    using label_type = SmLabel;

    explicit SmProposer(int n, int cap = kDefaultExtensionCap);

    std::optional<Matching> propose();
    void absorb(const Matching& trial, const SmLabel& label);

    const MarketKnowledge& knowledge() const { return knowledge_; }
    std::size_t computation_calls() const { return computation_calls_; }

private:
    MarketKnowledge knowledge_;
    int cap_;
    std::size_t computation_calls_ = 0;
};

// Adaptive consistency-preserving adversary modeled on the Theorem 3.2
// accounting. Answers with an off-matching pair whose two blocking
// relations stay acyclic and reveal as little as possible; Yes only when
// every off-matching pair has one direction contradicted (which makes the
// trial stable under every completion of the recorded posets).
class SmAdversary {
public:
    explicit SmAdversary(int n);

    SmFeedback operator()(const Matching& trial);

    const MarketKnowledge& state() const { return knowledge_; }
    int recorded_relations() const;

private:
    MarketKnowledge knowledge_;
};

SmRunResult solve_sm(int n, const std::function<SmFeedback(const Matching&)>& oracle,
                     OracleBudget budget, int cap = kDefaultExtensionCap);

// 2n · (⌈log_{11/8}(n!)⌉ + 1)
std::size_t sm_trial_bound(int n);

}  // namespace trialkit
