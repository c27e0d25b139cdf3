#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trialkit {

// Thrown when an oracle's answer is provably inconsistent with its own
// earlier answers or with the protocol (e.g., a violation index whose
// candidate-literal set has no satisfied literal).
struct DishonestOracleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Answer of a verification oracle: Yes, or the label of one violated
// constraint. Labels are opaque here; each problem family defines its own
// (clause index, man-woman pair, vertex pair, coalition, ...).
template <typename Label>
class Feedback {
public:
    static Feedback yes() { return Feedback(std::nullopt); }
    static Feedback violation(Label label) { return Feedback(std::move(label)); }

    bool is_yes() const { return !label_.has_value(); }
    const Label& label() const {
        if (is_yes()) throw std::logic_error("Feedback::label() on a Yes answer");
        return *label_;
    }

    bool operator==(const Feedback&) const = default;

private:
    explicit Feedback(std::optional<Label> label) : label_(std::move(label)) {}
    std::optional<Label> label_;
};

template <typename Candidate, typename Label>
struct TranscriptEntry {
    Candidate trial;
    Feedback<Label> feedback;
};

// Append-only record of (trial, feedback) pairs. A Yes closes it: nothing
// may follow.
template <typename Candidate, typename Label>
class Transcript {
public:
    using Entry = TranscriptEntry<Candidate, Label>;

    void append(Candidate trial, Feedback<Label> feedback) {
        if (closed()) throw std::logic_error("transcript already closed by a Yes");
        entries_.push_back(Entry{std::move(trial), std::move(feedback)});
    }

    std::size_t trial_count() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::vector<Entry>& entries() const { return entries_; }
    const Entry& back() const { return entries_.back(); }

    bool closed() const { return !entries_.empty() && entries_.back().feedback.is_yes(); }

    std::size_t violation_count() const {
        return entries_.size() - (closed() ? 1 : 0);
    }

private:
    std::vector<Entry> entries_;
};

struct OracleBudget {
    std::optional<std::size_t> max_trials;  // nullopt: unlimited

    static OracleBudget unlimited() { return OracleBudget{std::nullopt}; }
    static OracleBudget limited(std::size_t trials) { return OracleBudget{trials}; }

    bool allows(std::size_t trials_used) const {
        return !max_trials.has_value() || trials_used < *max_trials;
    }
};

enum class RunStatus { Solved, Unsatisfiable, BudgetExhausted };

inline const char* to_string(RunStatus status) {
    switch (status) {
        case RunStatus::Solved: return "solved";
        case RunStatus::Unsatisfiable: return "unsatisfiable";
        case RunStatus::BudgetExhausted: return "budget_exhausted";
    }
    return "?";
}

template <typename Candidate, typename Label>
struct RunResult {
    RunStatus status;
    std::optional<Candidate> solution;  // present iff status == Solved
    Transcript<Candidate, Label> transcript;
    // Computation-oracle invocations (DPLL runs, Gale-Shapley runs,
    // extension countings); never counted as trials.
    std::size_t computation_calls = 0;
};

template <typename P>
concept ReportsComputationCalls = requires(const P& p) {
    { p.computation_calls() } -> std::convertible_to<std::size_t>;
};

// The solver loop every problem module plugs into. Proposer supplies
//   std::optional<candidate_type> propose();    nullopt: no candidate exists
//   void absorb(const candidate_type&, const label_type&);
// Oracle maps a candidate to Feedback<label_type>. The loop stops on the
// first Yes and never queries past it; the budget is checked before each
// query, so max_trials == 0 yields an empty transcript.
template <typename Proposer, typename Oracle>
auto run_solver(Proposer& proposer, Oracle&& oracle, OracleBudget budget)
    -> RunResult<typename Proposer::candidate_type, typename Proposer::label_type> {
    using Candidate = typename Proposer::candidate_type;
    using Label = typename Proposer::label_type;

    RunResult<Candidate, Label> result{RunStatus::Unsatisfiable, std::nullopt, {}, 0};
    for (;;) {
        std::optional<Candidate> candidate = proposer.propose();
        if (!candidate.has_value()) {
            result.status = RunStatus::Unsatisfiable;
            break;
        }
        if (!budget.allows(result.transcript.trial_count())) {
            result.status = RunStatus::BudgetExhausted;
            break;
        }
        Feedback<Label> feedback = oracle(*candidate);
        result.transcript.append(*candidate, feedback);
        if (feedback.is_yes()) {
            result.status = RunStatus::Solved;
            result.solution = std::move(*candidate);
            break;
        }
        proposer.absorb(*candidate, feedback.label());
    }
    if constexpr (ReportsComputationCalls<Proposer>) {
        result.computation_calls = proposer.computation_calls();
    }
    return result;
}

struct HonestyReport {
    bool ok = true;
    std::optional<std::size_t> first_bad_entry;
    std::string detail;
};

// Test-side audit that an oracle never lied, judged against the hidden
// instance. Checker supplies
//   bool is_solution(const Candidate&) const;
//   bool violates(const Candidate&, const Label&) const;
template <typename Candidate, typename Label, typename Checker>
HonestyReport check_honesty(const Transcript<Candidate, Label>& transcript,
                            const Checker& checker) {
    const auto& entries = transcript.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& entry = entries[i];
        if (entry.feedback.is_yes()) {
            if (i + 1 != entries.size())
                return {false, i, "Yes answer before the final entry"};
            if (!checker.is_solution(entry.trial))
                return {false, i, "Yes given to a non-solution"};
        } else {
            if (!checker.violates(entry.trial, entry.feedback.label()))
                return {false, i, "violation label names a satisfied constraint"};
        }
    }
    return {};
}

}  // namespace trialkit
