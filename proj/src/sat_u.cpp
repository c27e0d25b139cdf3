#include "trialkit/sat_u.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace trialkit {

ClauseShadow::ClauseShadow(int num_vars, std::size_t num_clauses) : num_vars_(num_vars) {
    std::vector<int> all;
    all.reserve(2 * static_cast<std::size_t>(num_vars));
    for (int v = 1; v <= num_vars; ++v) {
        all.push_back(v);
        all.push_back(-v);
    }
    sets_.assign(num_clauses, all);
}

std::size_t ClauseShadow::total_size() const {
    std::size_t total = 0;
    for (const auto& s : sets_) total += s.size();
    return total;
}

std::size_t ClauseShadow::shrink(std::size_t clause, const Assignment& x) {
    auto& set = sets_[clause];
    std::size_t before = set.size();
    set.erase(std::remove_if(set.begin(), set.end(),
                             [&](int lit) { return literal_true(lit, x); }),
              set.end());
    return before - set.size();
}

bool ClauseShadow::contains_clause(std::size_t index, const std::vector<int>& clause) const {
    const auto& set = sets_[index];
    for (int lit : clause)
        if (std::find(set.begin(), set.end(), lit) == set.end()) return false;
    return true;
}

CnfFormula ClauseShadow::to_formula() const {
    CnfFormula f;
    f.num_vars = num_vars_;
    f.clauses = sets_;
    return f;
}

AlgSatProposer::AlgSatProposer(int num_vars, std::size_t num_clauses, int dpll_cap)
    : num_vars_(num_vars), dpll_cap_(dpll_cap), shadow_(num_vars, num_clauses) {}

std::optional<Assignment> AlgSatProposer::propose() {
    CnfFormula phi_prime = shadow_.to_formula();
    ++computation_calls_;
    DpllResult result = dpll_solve(phi_prime, dpll_cap_);
    if (!result.model.has_value()) return std::nullopt;  // φ unsatisfiable
    return std::move(result.model);
}

void AlgSatProposer::absorb(const Assignment& trial, const SatLabel& label) {
    if (label >= shadow_.clause_count())
        throw DishonestOracleError("clause index " + std::to_string(label) +
                                   " out of range");
    if (shadow_.shrink(label, trial) == 0)
        throw DishonestOracleError(
            "violated clause " + std::to_string(label) +
            " had no satisfied candidate literal; the oracle must be lying");
}

HonestSatOracle::HonestSatOracle(CnfFormula hidden, ViolationPolicy policy, std::uint64_t seed)
    : hidden_(std::move(hidden)), policy_(policy), rng_(seed) {
    hidden_.validate();
}

SatFeedback HonestSatOracle::operator()(const Assignment& trial) {
    if (policy_ == ViolationPolicy::LowestIndex) {
        if (auto idx = hidden_.first_violated(trial)) return SatFeedback::violation(*idx);
        return SatFeedback::yes();
    }
    std::vector<std::size_t> violated;
    for (std::size_t i = 0; i < hidden_.clauses.size(); ++i)
        if (!hidden_.clause_satisfied(i, trial)) violated.push_back(i);
    if (violated.empty()) return SatFeedback::yes();
    return SatFeedback::violation(violated[rng_.below(violated.size())]);
}

SatHonestyChecker::SatHonestyChecker(CnfFormula hidden) : hidden_(std::move(hidden)) {}

bool SatHonestyChecker::is_solution(const Assignment& trial) const {
    return hidden_.satisfied(trial);
}

bool SatHonestyChecker::violates(const Assignment& trial, const SatLabel& label) const {
    return label < hidden_.clauses.size() && !hidden_.clause_satisfied(label, trial);
}

SatRunResult alg_sat(int num_vars, std::size_t num_clauses,
                     const std::function<SatFeedback(const Assignment&)>& oracle,
                     OracleBudget budget, int dpll_cap) {
    AlgSatProposer proposer(num_vars, num_clauses, dpll_cap);
    return run_solver(proposer, oracle, budget);
}

BlockAdversary::BlockAdversary(int n) : n_(n), block_(n / 3) {
    if (n <= 0 || n % 3 != 0)
        throw std::invalid_argument("block adversary needs n divisible by 3");
    for (int i1 = 0; i1 < block_; ++i1)
        for (int i2 = 0; i2 < block_; ++i2)
            for (int i3 = 0; i3 < block_; ++i3)
                survivors_.insert({i1, i2 + block_, i3 + 2 * block_});
}

std::size_t BlockAdversary::initial_triples(int n) {
    std::size_t b = static_cast<std::size_t>(n) / 3;
    return b * b * b;
}

std::size_t BlockAdversary::clause_count() const {
    std::size_t b = static_cast<std::size_t>(block_);
    return 3 + b * (b - 1) / 2 + b * b;
}

SatLabel BlockAdversary::pair_clause_index(int i1, int i2) const {
    std::size_t b = static_cast<std::size_t>(block_);
    std::size_t base = 3 + b * (b - 1) / 2;
    return base + static_cast<std::size_t>(i1) * b + (static_cast<std::size_t>(i2) - b);
}

SatFeedback BlockAdversary::operator()(const Assignment& trial) {
    // First part: at least one 1 per block, at most one 1 in B3. Violations
    // are answered in clause-index order.
    auto block_has_one = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i)
            if (trial[static_cast<std::size_t>(i)]) return true;
        return false;
    };
    if (!block_has_one(0, block_)) return SatFeedback::violation(0);
    if (!block_has_one(block_, 2 * block_)) return SatFeedback::violation(1);
    if (!block_has_one(2 * block_, n_)) return SatFeedback::violation(2);
    std::size_t amo = 3;
    for (int i = 2 * block_; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            if (trial[static_cast<std::size_t>(i)] && trial[static_cast<std::size_t>(j)])
                return SatFeedback::violation(amo);
            ++amo;
        }

    // The trial now has >=1 one in B1 and B2 and exactly one in B3. Take the
    // first 1-positions of B1 and B2 and the unique 1 of B3.
    auto first_one = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i)
            if (trial[static_cast<std::size_t>(i)]) return i;
        return -1;
    };
    int i1 = first_one(0, block_);
    int i2 = first_one(block_, 2 * block_);
    int i3 = first_one(2 * block_, n_);
    std::tuple<int, int, int> triple{i1, i2, i3};

    if (survivors_.size() == 1) {
        // The formula is pinned down; answer honestly for it. Its unique
        // satisfying assignment is the survivor's characteristic assignment.
        CnfFormula pinned = materialize(*survivors_.begin());
        if (pinned.satisfied(trial)) return SatFeedback::yes();
        SatLabel paper_rule = pair_clause_index(i1, i2);
        if (!pinned.clause_satisfied(paper_rule, trial))
            return SatFeedback::violation(paper_rule);
        return SatFeedback::violation(*pinned.first_violated(trial));
    }

    // Answering (i1, i2) commits that this clause has no x_{i3} literal;
    // exactly the triple (i1, i2, i3) is eliminated.
    if (survivors_.erase(triple)) ++informative_queries_;
    return SatFeedback::violation(pair_clause_index(i1, i2));
}

CnfFormula BlockAdversary::materialize(const std::tuple<int, int, int>& survivor) const {
    CnfFormula f;
    f.num_vars = n_;
    auto block_clause = [&](int lo, int hi) {
        std::vector<int> clause;
        for (int i = lo; i < hi; ++i) clause.push_back(i + 1);
        return clause;
    };
    f.clauses.push_back(block_clause(0, block_));
    f.clauses.push_back(block_clause(block_, 2 * block_));
    f.clauses.push_back(block_clause(2 * block_, n_));
    for (int i = 2 * block_; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            f.clauses.push_back({-(i + 1), -(j + 1)});
    auto [s1, s2, s3] = survivor;
    for (int i1 = 0; i1 < block_; ++i1)
        for (int i2 = block_; i2 < 2 * block_; ++i2) {
            std::vector<int> clause{-(i1 + 1), -(i2 + 1)};
            if (i1 == s1 && i2 == s2) clause.push_back(s3 + 1);
            f.clauses.push_back(std::move(clause));
        }
    return f;
}

std::size_t learning_family_size(int n) {
    if (n < 0 || n >= 63) throw std::invalid_argument("learning family size overflows");
    return (std::size_t{1} << n) + 1;
}

std::size_t learning_consistent_after(int n, const std::vector<Assignment>& trials) {
    // A YES answer on trial x is consistent with every formula except φ_x.
    std::set<Assignment> distinct(trials.begin(), trials.end());
    return learning_family_size(n) - distinct.size();
}

CnfFormula learning_formula(const Assignment& y) {
    CnfFormula f;
    f.num_vars = static_cast<int>(y.size());
    std::vector<int> clause;
    for (int i = 0; i < f.num_vars; ++i)
        clause.push_back(y[static_cast<std::size_t>(i)] ? -(i + 1) : (i + 1));
    f.clauses.push_back(std::move(clause));
    return f;
}

}  // namespace trialkit
