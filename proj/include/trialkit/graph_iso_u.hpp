#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "trialkit/dpll.hpp"
#include "trialkit/feedback.hpp"
#include "trialkit/graph.hpp"
#include "trialkit/union_find.hpp"

namespace trialkit {

using GiLabel = std::pair<int, int>;  // violated vertex pair of G1, i < j
using Bijection = std::vector<int>;
using GiFeedback = Feedback<GiLabel>;
using GiRunResult = RunResult<Bijection, GiLabel>;

// Bipartite pair graph H: one node per unordered vertex pair on each side,
// an edge per violation. A violation on trial π links left (i,j) with right
// (π(i),π(j)) and carries parity 1 (exactly one of the two edges exists in
// truth; which one stays hidden). Components only ever merge.
class PairGraph {
public:
    explicit PairGraph(int n);

    int vertices() const { return n_; }
    int pair_count() const { return pairs_; }

    int left_index(int i, int j) const;   // i < j
    int right_index(int a, int b) const;  // a < b

    bool same_component(int left, int right) const { return uf_.same_component(left, right); }
    const ParityUnionFind& components() const { return uf_; }
    int component_count() const { return uf_.components(); }

    // Records a violation edge. Returns true if it merged two components;
    // throws DishonestOracleError when the violation contradicts recorded
    // parities (the pair provably satisfies Eq. (2) in every completion).
    bool add_violation(const GiLabel& left_pair, const std::pair<int, int>& right_pair);

    const std::vector<std::pair<int, int>>& links() const { return links_; }

    // Scratch copy of the union-find for feasibility probes.
    ParityUnionFind& mutable_components() { return uf_; }

private:
    int n_;
    int pairs_;
    ParityUnionFind uf_;
    std::vector<std::pair<int, int>> links_;
};

// Proposes a bijection mapping every pair across distinct components of H,
// by encoding bijectivity plus component avoidance into CNF and running the
// deterministic DPLL (SAT as the computation oracle). nullopt when the CNF
// is unsatisfiable.
std::optional<Bijection> propose_bijection(const PairGraph& h, int n,
                                           std::size_t* dpll_calls = nullptr);

// Fallback and rejection rule: lexicographically first bijection that
// admits a hidden-graph completion consistent with every recorded parity
// (backtracking with an undoable parity union-find). nullopt means no
// completion makes the graphs isomorphic: G1 ≇ G2 is certain.
std::optional<Bijection> parity_feasible_bijection(PairGraph& h, int n);

class GraphIsoProposer {
public:
    using candidate_type = Bijection;
    using label_type = GiLabel;

    explicit GraphIsoProposer(int n);

    std::optional<Bijection> propose();
    void absorb(const Bijection& trial, const GiLabel& label);

    const PairGraph& pair_graph() const { return h_; }
    std::size_t computation_calls() const { return computation_calls_; }
    std::size_t merges() const { return merges_; }

private:
    int n_;
    PairGraph h_;
    std::size_t computation_calls_ = 0;
    std::size_t merges_ = 0;
};

class HonestGraphIsoOracle {
public:
    HonestGraphIsoOracle(Graph g1, Graph g2);
    GiFeedback operator()(const Bijection& trial) const;

private:
    Graph g1_, g2_;
};

class GiHonestyChecker {
public:
    GiHonestyChecker(Graph g1, Graph g2);
    bool is_solution(const Bijection& trial) const;
    bool violates(const Bijection& trial, const GiLabel& label) const;

private:
    Graph g1_, g2_;
};

// Component-tracking solver; status Unsatisfiable means "not isomorphic"
// (no completion consistent with the transcript admits an isomorphism).
GiRunResult solve_graph_iso(int n, const std::function<GiFeedback(const Bijection&)>& oracle,
                            OracleBudget budget);

// Verification oracle of the Clique reduction: G1 is implicitly a k-clique
// plus isolated vertices, G2 = G is known. Violations with both endpoints
// in the clique block are preferred, minimizing max{i,j}.
class CliqueOracle {
public:
    CliqueOracle(Graph g, int k);
    GiFeedback operator()(const Bijection& trial) const;

    bool is_clique_pair(const GiLabel& label) const;  // max index within the block

private:
    Graph g_;
    int k_;
};

struct CliqueReductionResult {
    std::optional<std::vector<int>> clique;
    std::size_t trials = 0;
    std::size_t computation_calls = 0;
};

// Algorithm B: runs the GraphI_u solver as a black box against CliqueOracle;
// a bijection output or an out-of-block violation yields the clique.
CliqueReductionResult find_clique_via_reduction(const Graph& g, int k,
                                                OracleBudget budget = OracleBudget::unlimited());

}  // namespace trialkit
