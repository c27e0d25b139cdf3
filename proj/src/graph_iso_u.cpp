#include "trialkit/graph_iso_u.hpp"

#include <algorithm>
#include <string>

namespace trialkit {

namespace {

std::pair<int, int> ordered(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

bool is_bijection(const Bijection& pi, int n) {
    if (static_cast<int>(pi.size()) != n) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : pi) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

}  // namespace

PairGraph::PairGraph(int n)
    : n_(n), pairs_(n * (n - 1) / 2), uf_(2 * (n * (n - 1) / 2)) {}

int PairGraph::left_index(int i, int j) const {
    // rank of (i, j), i < j, in lexicographic order
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

int PairGraph::right_index(int a, int b) const { return pairs_ + left_index(a, b); }

bool PairGraph::add_violation(const GiLabel& left_pair, const std::pair<int, int>& right_pair) {
    auto [i, j] = ordered(left_pair.first, left_pair.second);
    auto [a, b] = ordered(right_pair.first, right_pair.second);
    int l = left_index(i, j);
    int r = right_index(a, b);
    switch (uf_.unite(l, r, 1)) {
        case ParityUnionFind::Unite::Merged:
            links_.emplace_back(l, r);
            return true;
        case ParityUnionFind::Unite::Consistent:
            return false;  // re-asserts a known odd link; no information
        case ParityUnionFind::Unite::Contradiction:
            throw DishonestOracleError(
                "violation on a pair whose sides are provably equal in every completion");
    }
    return false;
}

std::optional<Bijection> propose_bijection(const PairGraph& h, int n, std::size_t* dpll_calls) {
    CnfFormula cnf;
    cnf.num_vars = n * n;
    auto var = [n](int u, int v) { return u * n + v + 1; };  // π(u) = v

    for (int u = 0; u < n; ++u) {
        std::vector<int> row;
        for (int v = 0; v < n; ++v) row.push_back(var(u, v));
        cnf.clauses.push_back(std::move(row));
    }
    for (int u = 0; u < n; ++u)
        for (int v1 = 0; v1 < n; ++v1)
            for (int v2 = v1 + 1; v2 < n; ++v2)
                cnf.clauses.push_back({-var(u, v1), -var(u, v2)});
    for (int v = 0; v < n; ++v)
        for (int u1 = 0; u1 < n; ++u1)
            for (int u2 = u1 + 1; u2 < n; ++u2)
                cnf.clauses.push_back({-var(u1, v), -var(u2, v)});

    // Forbid mapping a left pair onto a right pair of the same component.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int l = h.left_index(i, j);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    int r = h.right_index(a, b);
                    if (!h.same_component(l, r)) continue;
                    cnf.clauses.push_back({-var(i, a), -var(j, b)});
                    cnf.clauses.push_back({-var(i, b), -var(j, a)});
                }
        }

    if (dpll_calls) ++*dpll_calls;
    DpllResult result = dpll_solve(cnf, n * n);
    if (!result.model.has_value()) return std::nullopt;

    Bijection pi(static_cast<std::size_t>(n), -1);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if ((*result.model)[static_cast<std::size_t>(var(u, v)) - 1]) pi[u] = v;
    return pi;
}

namespace {

bool extend_feasible(ParityUnionFind& uf, const PairGraph& h, int n, int depth,
                     std::vector<int>& pi, std::vector<char>& used) {
    if (depth == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used[static_cast<std::size_t>(w)]) continue;
        std::size_t mark = uf.mark();
        bool ok = true;
        for (int u = 0; u < depth && ok; ++u) {
            auto [i, j] = ordered(u, depth);
            auto [a, b] = ordered(pi[u], w);
            // π maps pair {i,j} onto {a,b}: their edge bits agree in truth.
            if (uf.unite(h.left_index(i, j), h.right_index(a, b), 0) ==
                ParityUnionFind::Unite::Contradiction)
                ok = false;
        }
        if (ok) {
            pi[depth] = w;
            used[static_cast<std::size_t>(w)] = 1;
            if (extend_feasible(uf, h, n, depth + 1, pi, used)) return true;
            used[static_cast<std::size_t>(w)] = 0;
            pi[depth] = -1;
        }
        uf.rollback(mark);
    }
    return false;
}

}  // namespace

std::optional<Bijection> parity_feasible_bijection(PairGraph& h, int n) {
    ParityUnionFind& uf = h.mutable_components();
    std::size_t base = uf.mark();
    std::vector<int> pi(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    bool found = extend_feasible(uf, h, n, 0, pi, used);
    uf.rollback(base);
    if (!found) return std::nullopt;
    return pi;
}

GraphIsoProposer::GraphIsoProposer(int n) : n_(n), h_(n) {}

std::optional<Bijection> GraphIsoProposer::propose() {
    if (auto pi = propose_bijection(h_, n_, &computation_calls_)) return pi;
    ++computation_calls_;
    return parity_feasible_bijection(h_, n_);
}

void GraphIsoProposer::absorb(const Bijection& trial, const GiLabel& label) {
    auto [i, j] = label;
    if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_)
        throw DishonestOracleError("violated pair out of range");
    if (h_.add_violation(ordered(i, j), ordered(trial[static_cast<std::size_t>(i)],
                                                trial[static_cast<std::size_t>(j)])))
        ++merges_;
}

HonestGraphIsoOracle::HonestGraphIsoOracle(Graph g1, Graph g2)
    : g1_(std::move(g1)), g2_(std::move(g2)) {}

GiFeedback HonestGraphIsoOracle::operator()(const Bijection& trial) const {
    for (int i = 0; i < g1_.n; ++i)
        for (int j = i + 1; j < g1_.n; ++j)
            if (g1_.has_edge(i, j) != g2_.has_edge(trial[static_cast<std::size_t>(i)],
                                                   trial[static_cast<std::size_t>(j)]))
                return GiFeedback::violation({i, j});
    return GiFeedback::yes();
}

GiHonestyChecker::GiHonestyChecker(Graph g1, Graph g2)
    : g1_(std::move(g1)), g2_(std::move(g2)) {}

bool GiHonestyChecker::is_solution(const Bijection& trial) const {
    return is_isomorphism(g1_, g2_, trial);
}

bool GiHonestyChecker::violates(const Bijection& trial, const GiLabel& label) const {
    auto [i, j] = label;
    if (i == j || !is_bijection(trial, g1_.n)) return false;
    return g1_.has_edge(i, j) != g2_.has_edge(trial[static_cast<std::size_t>(i)],
                                              trial[static_cast<std::size_t>(j)]);
}

GiRunResult solve_graph_iso(int n, const std::function<GiFeedback(const Bijection&)>& oracle,
                            OracleBudget budget) {
    GraphIsoProposer proposer(n);
    return run_solver(proposer, oracle, budget);
}

CliqueOracle::CliqueOracle(Graph g, int k) : g_(std::move(g)), k_(k) {}

bool CliqueOracle::is_clique_pair(const GiLabel& label) const {
    return label.first < k_ && label.second < k_;
}

GiFeedback CliqueOracle::operator()(const Bijection& trial) const {
    int n = g_.n;
    // E(G1) = all pairs inside the first k vertices.
    std::optional<GiLabel> block_pair;   // e1 and not e2, minimal max{i,j}
    std::optional<GiLabel> other_pair;   // any other violation, lex first
    for (int j = 1; j < n; ++j) {        // scan by max index so the first hit is minimal
        for (int i = 0; i < j; ++i) {
            bool e1 = j < k_;
            bool e2 = g_.has_edge(trial[static_cast<std::size_t>(i)],
                                  trial[static_cast<std::size_t>(j)]);
            if (e1 == e2) continue;
            if (e1 && !e2) {
                if (!block_pair) block_pair = GiLabel{i, j};
            } else if (!other_pair) {
                other_pair = GiLabel{i, j};
            }
        }
        if (block_pair) break;
    }
    if (block_pair) return GiFeedback::violation(*block_pair);
    if (other_pair) return GiFeedback::violation(*other_pair);
    return GiFeedback::yes();
}

CliqueReductionResult find_clique_via_reduction(const Graph& g, int k, OracleBudget budget) {
    CliqueReductionResult out;
    int n = g.n;
    if (k < 0 || k > n) return out;
    if (k == 0) {
        out.clique = std::vector<int>{};
        return out;
    }

    CliqueOracle oracle(g, k);
    GraphIsoProposer solver(n);
    auto clique_from = [&](const Bijection& pi) {
        std::vector<int> clique(pi.begin(), pi.begin() + k);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (!g.has_edge(clique[static_cast<std::size_t>(i)],
                                clique[static_cast<std::size_t>(j)]))
                    return false;
        out.clique = std::move(clique);
        return true;
    };

    while (budget.allows(out.trials)) {
        std::optional<Bijection> trial = solver.propose();
        if (!trial.has_value()) return out;  // A concluded not isomorphic: no k-clique
        GiFeedback fb = oracle(*trial);
        ++out.trials;
        if (fb.is_yes()) {
            clique_from(*trial);  // isomorphism found; first k images form the clique
            break;
        }
        if (!oracle.is_clique_pair(fb.label())) {
            // Out-of-block violation: every in-block pair already maps onto
            // an edge of G, so the first k images form a clique.
            clique_from(*trial);
            break;
        }
        solver.absorb(*trial, fb.label());
    }
    out.computation_calls = solver.computation_calls();
    return out;
}

}  // namespace trialkit
