#pragma once

#include <functional>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "trialkit/dpll.hpp"
#include "trialkit/feedback.hpp"

namespace trialkit {

using SatLabel = std::size_t;  // clause index
using SatFeedback = Feedback<SatLabel>;
using SatRunResult = RunResult<Assignment, SatLabel>;

// Per-clause candidate-literal sets L_1..L_m. Starts at all 2n literals and
// only ever shrinks; on an honest run the true clause stays inside its set.
class ClauseShadow {
public:
    ClauseShadow(int num_vars, std::size_t num_clauses);

    const std::vector<int>& literals(std::size_t clause) const { return sets_[clause]; }
    std::size_t clause_count() const { return sets_.size(); }
    std::size_t total_size() const;

    // Keeps exactly the literals evaluating false on x; returns how many
    // were dropped.
    std::size_t shrink(std::size_t clause, const Assignment& x);

    // Whether every literal of the given clause is still present.
    bool contains_clause(std::size_t index, const std::vector<int>& clause) const;

    CnfFormula to_formula() const;  // φ' = ∧_i (∨_{ℓ∈L_i} ℓ)

private:
    int num_vars_;
    std::vector<std::vector<int>> sets_;
};

// Algorithm Alg-SAT: propose DPLL models of φ', shrink the violated
// clause's candidate set, stop on Yes or when φ' goes unsatisfiable.
// At most 2nm violations are possible.
class AlgSatProposer {
public:
    using candidate_type = Assignment;
    using label_type = SatLabel;

    AlgSatProposer(int num_vars, std::size_t num_clauses, int dpll_cap = kDefaultDpllVarCap);

    std::optional<Assignment> propose();
    void absorb(const Assignment& trial, const SatLabel& label);

    const ClauseShadow& shadow() const { return shadow_; }
    std::size_t computation_calls() const { return computation_calls_; }

private:
    int num_vars_;
    int dpll_cap_;
    ClauseShadow shadow_;
    std::size_t computation_calls_ = 0;
};

enum class ViolationPolicy { LowestIndex, Seeded };

class HonestSatOracle {
public:
    explicit HonestSatOracle(CnfFormula hidden,
                             ViolationPolicy policy = ViolationPolicy::LowestIndex,
                             std::uint64_t seed = 0);
    SatFeedback operator()(const Assignment& trial);
    const CnfFormula& hidden() const { return hidden_; }

private:
    CnfFormula hidden_;
    ViolationPolicy policy_;
    Rng rng_;
};

class SatHonestyChecker {
public:
    explicit SatHonestyChecker(CnfFormula hidden);
    bool is_solution(const Assignment& trial) const;
    bool violates(const Assignment& trial, const SatLabel& label) const;

private:
    CnfFormula hidden_;
};

SatRunResult alg_sat(int num_vars, std::size_t num_clauses,
                     const std::function<SatFeedback(const Assignment&)>& oracle,
                     OracleBudget budget, int dpll_cap = kDefaultDpllVarCap);

// Three-block lower-bound adversary. [n] is split into B1, B2, B3; the
// first-part clauses force at least one 1 per block and at most one 1 in
// B3; the second part hides one triple per (i1, i2) pair. Each informative
// query removes exactly one triple from the candidate set T, which starts
// at (n/3)^3, and no Yes is possible while two or more triples survive.
class BlockAdversary {
public:
    explicit BlockAdversary(int n);  // n divisible by 3

    SatFeedback operator()(const Assignment& trial);

    int n() const { return n_; }
    std::size_t clause_count() const;
    std::size_t surviving_triples() const { return survivors_.size(); }
    std::size_t informative_queries() const { return informative_queries_; }
    static std::size_t initial_triples(int n);

    const std::set<std::tuple<int, int, int>>& survivors() const { return survivors_; }

    // Hidden formula realized by a surviving triple; replaying a transcript
    // against it shows every answer was genuine.
    CnfFormula materialize(const std::tuple<int, int, int>& survivor) const;

    // Clause index layout (also how the materialized formula is ordered):
    // 0..2 the at-least-one clauses of B1, B2, B3; then the at-most-one
    // pairs of B3 in lex order; then the (i1, i2) clauses in lex order.
    SatLabel pair_clause_index(int i1, int i2) const;

private:
    int n_;
    int block_;
    std::set<std::tuple<int, int, int>> survivors_;
    std::size_t informative_queries_ = 0;
};

// Always-YES adversary of the learning separation: after k distinct trials,
// exactly 2^n + 1 - k of the candidate formulas remain consistent.
class LearningAdversary {
public:
    template <typename Candidate>
    Feedback<SatLabel> operator()(const Candidate&) const {
        return Feedback<SatLabel>::yes();
    }
};

std::size_t learning_family_size(int n);  // 2^n + 1
// Candidates of the family {φ_y} ∪ {φ_∅} consistent with always-YES answers.
std::size_t learning_consistent_after(int n, const std::vector<Assignment>& trials);
CnfFormula learning_formula(const Assignment& y);  // φ_y: falsified exactly by y

}  // namespace trialkit
