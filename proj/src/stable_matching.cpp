#include "trialkit/stable_matching.hpp"

#include <algorithm>
#include <deque>

#include <nlohmann/json.hpp>

#include "trialkit/sort_u.hpp"

namespace trialkit {

namespace {

std::vector<std::vector<int>> rank_table(const std::vector<std::vector<int>>& prefs) {
    std::vector<std::vector<int>> rank(prefs.size(), std::vector<int>(prefs.size()));
    for (std::size_t agent = 0; agent < prefs.size(); ++agent)
        for (std::size_t pos = 0; pos < prefs[agent].size(); ++pos)
            rank[agent][prefs[agent][pos]] = static_cast<int>(pos);
    return rank;
}

bool is_permutation_list(const std::vector<int>& list, int n) {
    if (static_cast<int>(list.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : list) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

}  // namespace

void PreferenceProfile::validate() const {
    if (static_cast<int>(men.size()) != n || static_cast<int>(women.size()) != n)
        throw std::invalid_argument("profile must have n lists per side");
    for (const auto& list : men)
        if (!is_permutation_list(list, n))
            throw std::invalid_argument("each man's list must be a permutation of the women");
    for (const auto& list : women)
        if (!is_permutation_list(list, n))
            throw std::invalid_argument("each woman's list must be a permutation of the men");
}

PreferenceProfile PreferenceProfile::random(int n, Rng& rng) {
    PreferenceProfile p;
    p.n = n;
    for (int i = 0; i < n; ++i) p.men.push_back(rng.permutation(n));
    for (int i = 0; i < n; ++i) p.women.push_back(rng.permutation(n));
    return p;
}

PreferenceProfile PreferenceProfile::from_json(const nlohmann::json& j) {
    PreferenceProfile p;
    p.n = j.at("n").get<int>();
    p.men = j.at("men").get<std::vector<std::vector<int>>>();
    p.women = j.at("women").get<std::vector<std::vector<int>>>();
    p.validate();
    return p;
}

nlohmann::json PreferenceProfile::to_json() const {
    return {{"n", n}, {"men", men}, {"women", women}};
}

Matching gale_shapley(const PreferenceProfile& profile) {
    int n = profile.n;
    auto woman_rank = rank_table(profile.women);
    std::vector<int> next_proposal(n, 0);       // index into each man's list
    std::vector<int> fiance(n, -1);             // woman -> man
    std::deque<int> free_men;
    for (int m = 0; m < n; ++m) free_men.push_back(m);

    while (!free_men.empty()) {
        int m = free_men.front();
        free_men.pop_front();
        int w = profile.men[m][next_proposal[m]++];
        if (fiance[w] < 0) {
            fiance[w] = m;
        } else if (woman_rank[w][m] < woman_rank[w][fiance[w]]) {
            free_men.push_back(fiance[w]);
            fiance[w] = m;
        } else {
            free_men.push_back(m);
        }
    }
    Matching matching(n);
    for (int w = 0; w < n; ++w) matching[fiance[w]] = w;
    return matching;
}

std::optional<SmLabel> first_blocking_pair(const PreferenceProfile& profile,
                                           const Matching& matching) {
    auto man_rank = rank_table(profile.men);
    auto woman_rank = rank_table(profile.women);
    std::vector<int> husband(profile.n);
    for (int m = 0; m < profile.n; ++m) husband[matching[m]] = m;
    for (int m = 0; m < profile.n; ++m)
        for (int w = 0; w < profile.n; ++w) {
            if (matching[m] == w) continue;
            if (man_rank[m][w] < man_rank[m][matching[m]] &&
                woman_rank[w][m] < woman_rank[w][husband[w]])
                return SmLabel{m, w};
        }
    return std::nullopt;
}

bool is_stable(const PreferenceProfile& profile, const Matching& matching) {
    return !first_blocking_pair(profile, matching).has_value();
}

HonestSmOracle::HonestSmOracle(PreferenceProfile profile) : profile_(std::move(profile)) {}

SmFeedback HonestSmOracle::operator()(const Matching& trial) const {
    if (auto pair = first_blocking_pair(profile_, trial))
        return SmFeedback::violation(*pair);
    return SmFeedback::yes();
}

SmHonestyChecker::SmHonestyChecker(PreferenceProfile profile)
    : profile_(std::move(profile)),
      man_rank_(rank_table(profile_.men)),
      woman_rank_(rank_table(profile_.women)) {}

bool SmHonestyChecker::is_solution(const Matching& trial) const {
    return is_stable(profile_, trial);
}

bool SmHonestyChecker::violates(const Matching& trial, const SmLabel& label) const {
    auto [m, w] = label;
    if (trial[m] == w) return false;
    int husband = -1;
    for (int other = 0; other < profile_.n; ++other)
        if (trial[other] == w) husband = other;
    return man_rank_[m][w] < man_rank_[m][trial[m]] &&
           woman_rank_[w][m] < woman_rank_[w][husband];
}

SmProposer::SmProposer(int n, int cap) : knowledge_(n), cap_(cap) {}

std::optional<Matching> SmProposer::propose() {
    int n = knowledge_.size();
    PreferenceProfile assumed;
    assumed.n = n;
    for (int m = 0; m < n; ++m) {
        assumed.men.push_back(good_order(knowledge_.men[m], cap_));
        ++computation_calls_;
    }
    for (int w = 0; w < n; ++w) {
        assumed.women.push_back(good_order(knowledge_.women[w], cap_));
        ++computation_calls_;
    }
    ++computation_calls_;  // the Gale-Shapley run
    return gale_shapley(assumed);
}

void SmProposer::absorb(const Matching& trial, const SmLabel& label) {
    auto [m, w] = label;
    int n = knowledge_.size();
    if (m < 0 || m >= n || w < 0 || w >= n || trial[m] == w)
        throw DishonestOracleError("blocking pair outside the market or inside the matching");
    int husband = -1;
    for (int other = 0; other < n; ++other)
        if (trial[other] == w) husband = other;
    try {
        // w ≻_m μ(m) and m ≻_w μ(w); both are sound, at least one is news.
        knowledge_.men[m].add_greater(w, trial[m]);
        knowledge_.women[w].add_greater(m, husband);
    } catch (const PosetCycleError&) {
        throw DishonestOracleError("blocking pair contradicts previously revealed relations");
    }
}

SmAdversary::SmAdversary(int n) : knowledge_(n) {}

int SmAdversary::recorded_relations() const {
    int total = 0;
    for (const auto& p : knowledge_.men) total += p.relation_count();
    for (const auto& p : knowledge_.women) total += p.relation_count();
    return total;
}

SmFeedback SmAdversary::operator()(const Matching& trial) {
    int n = knowledge_.size();
    std::vector<int> husband(n);
    for (int m = 0; m < n; ++m) husband[trial[m]] = m;

    // A pair qualifies if both blocking relations are recordable without a
    // cycle and recording reveals at least one new relation. Pick the
    // qualifying pair revealing the fewest closure relations.
    int best_m = -1, best_w = -1, best_cost = -1;
    for (int m = 0; m < n; ++m) {
        for (int w = 0; w < n; ++w) {
            if (trial[m] == w) continue;
            if (!knowledge_.men[m].can_add(w, trial[m])) continue;
            if (!knowledge_.women[w].can_add(m, husband[w])) continue;
            bool known_m = knowledge_.men[m].greater(w, trial[m]);
            bool known_w = knowledge_.women[w].greater(m, husband[w]);
            if (known_m && known_w) continue;  // already recorded in full
            Poset mcopy = knowledge_.men[m];
            Poset wcopy = knowledge_.women[w];
            int cost = mcopy.add_greater(w, trial[m]) + wcopy.add_greater(m, husband[w]);
            if (best_cost < 0 || cost < best_cost) {
                best_cost = cost;
                best_m = m;
                best_w = w;
            }
        }
    }
    if (best_m >= 0) {
        knowledge_.men[best_m].add_greater(best_w, trial[best_m]);
        knowledge_.women[best_w].add_greater(best_m, husband[best_w]);
        return SmFeedback::violation({best_m, best_w});
    }

    // No fresh pair. If some fully recorded pair still blocks this trial,
    // repeat it verbatim; that answer stays honest and reveals nothing.
    for (int m = 0; m < n; ++m)
        for (int w = 0; w < n; ++w) {
            if (trial[m] == w) continue;
            if (knowledge_.men[m].greater(w, trial[m]) &&
                knowledge_.women[w].greater(m, husband[w]))
                return SmFeedback::violation({m, w});
        }

    // Every off-matching pair has a contradicted direction, so the trial is
    // stable under every completion. Double-check against one completion.
    PreferenceProfile completion;
    completion.n = n;
    for (int m = 0; m < n; ++m) completion.men.push_back(good_order(knowledge_.men[m]));
    for (int w = 0; w < n; ++w) completion.women.push_back(good_order(knowledge_.women[w]));
    if (!is_stable(completion, trial))
        throw std::logic_error("adversary bookkeeping error: exhausted state but trial unstable");
    return SmFeedback::yes();
}

SmRunResult solve_sm(int n, const std::function<SmFeedback(const Matching&)>& oracle,
                     OracleBudget budget, int cap) {
    SmProposer proposer(n, cap);
    return run_solver(proposer, oracle, budget);
}

std::size_t sm_trial_bound(int n) {
    return 2 * static_cast<std::size_t>(n) * sort_trial_bound(n);
}

}  // namespace trialkit
