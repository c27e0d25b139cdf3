#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "trialkit/feedback.hpp"
#include "trialkit/graph.hpp"

namespace trialkit {

// Explicit multiplication table of the cyclic group T built from a
// Hamiltonian cycle (b_0, ..., b_{p-1}): b_i ∘ b_j = b_{i+j mod p}.
// Materialized only in tests and audits; the reduction never constructs it.
struct CyclicGroupTable {
    int p = 0;
    std::vector<std::vector<int>> table;  // table[a][b] = a ∘ b over element labels

    // cycle lists vertices in cycle order; it is rotated so that position 1
    // holds a1 (the lowest-labeled vertex), matching the b_1 = a_1 shift.
    static CyclicGroupTable from_cycle(int p, std::vector<int> cycle);

    int mul(int a, int b) const { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    bool is_group_table() const;  // identity, inverses, associativity
};

// Bijection element-labels -> Z_p with its inverse.
struct GroupBijection {
    std::vector<int> to_zp;    // π
    std::vector<int> from_zp;  // π⁻¹

    static GroupBijection from_map(std::vector<int> pi);
    int p() const { return static_cast<int>(to_zp.size()); }
    bool operator==(const GroupBijection&) const = default;
};

using GroupLabel = std::pair<int, int>;  // element pair (a, b) with Eq. (1) violated
using GroupFeedback = Feedback<GroupLabel>;

// Simulator V': answers from the graph alone, in time O(p). Every violation
// it returns is genuine for the cycle group of any Hamiltonian cycle of g
// (Claim 4.1); whenever it answers Yes, the trail π⁻¹(0), π⁻¹(x), ... is a
// Hamiltonian cycle (Claim 4.2).
GroupFeedback simulator_vprime(const Graph& g, const GroupBijection& pi);

// Honest oracle for an explicit table; lexicographically first violated pair.
class HonestGroupIsoOracle {
public:
    explicit HonestGroupIsoOracle(CyclicGroupTable table);
    GroupFeedback operator()(const GroupBijection& trial) const;

private:
    CyclicGroupTable table_;
};

class GroupIsoHonestyChecker {
public:
    explicit GroupIsoHonestyChecker(CyclicGroupTable table);
    bool is_solution(const GroupBijection& trial) const;
    bool violates(const GroupBijection& trial, const GroupLabel& label) const;

private:
    CyclicGroupTable table_;
};

// Black-box GroupIso(·, Z_p)_u solver interface consumed by algorithm_b.
class GroupIsoSolver {
public:
    virtual ~GroupIsoSolver() = default;
    virtual std::optional<GroupBijection> propose() = 0;
    virtual void absorb(const GroupBijection& trial, const GroupLabel& label) = 0;
    // A bijection the solver deduced without a confirming Yes, if any.
    virtual std::optional<GroupBijection> final_output() const { return std::nullopt; }
};

// Desk-scale solver: enumerates bijections in lexicographic order, skipping
// those matching a forbidden rule. A violation (a, b) against π forbids
// re-proposing any π' that agrees with π on a, b, and on which element maps
// to π(a)+π(b) — the weakest sound inference without the table.
class NaiveGroupIsoSolver : public GroupIsoSolver {
public:
    using candidate_type = GroupBijection;
    using label_type = GroupLabel;

    static constexpr int kMaxOrder = 11;  // factorial search space

    explicit NaiveGroupIsoSolver(int p);

    std::optional<GroupBijection> propose() override;
    void absorb(const GroupBijection& trial, const GroupLabel& label) override;

    std::size_t rules() const { return rules_.size(); }

private:
    struct Rule {
        int a, b;        // queried pair
        int va, vb;      // π(a), π(b)
        int sum_elem;    // π⁻¹(π(a)+π(b) mod p)
    };

    bool forbidden(const std::vector<int>& pi) const;
    bool next_candidate(std::vector<int>& pi) const;  // lex successor scan

    int p_;
    std::vector<int> cursor_;  // next bijection to consider; empty = exhausted
    std::vector<Rule> rules_;
};

struct AlgorithmBResult {
    enum class Kind { CycleFound, PromiseViolated, BudgetExhausted };
    Kind kind = Kind::PromiseViolated;
    std::vector<int> cycle;
    Transcript<GroupBijection, GroupLabel> transcript;
    // How the cycle was obtained: via a V' Yes or via the solver's σ output.
    bool via_yes = false;
};

// Algorithm B for promise-HC: drives the solver against simulator V'. The
// first V' Yes yields the cycle; a solver σ output yields it via
// (σ⁻¹(0), σ⁻¹(σ(a1)), σ⁻¹(2σ(a1)), ...). Exhaustion of the solver means
// the promise was violated (cross-checked by brute force in the harness).
AlgorithmBResult algorithm_b(const Graph& g, GroupIsoSolver& solver,
                             OracleBudget budget = OracleBudget::unlimited());

// Cycle extraction shared by both paths.
std::vector<int> cycle_from_bijection(const GroupBijection& pi);

bool is_prime(int p);

}  // namespace trialkit
