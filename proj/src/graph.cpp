#include "trialkit/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace trialkit {

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("no self-loops");
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("vertex out of range");
    adj[static_cast<std::size_t>(u)] |= 1u << v;
    adj[static_cast<std::size_t>(v)] |= 1u << u;
}

int Graph::edge_count() const {
    int twice = 0;
    for (std::uint32_t mask : adj) twice += __builtin_popcount(mask);
    return twice / 2;
}

int Graph::degree(int v) const { return __builtin_popcount(adj[static_cast<std::size_t>(v)]); }

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::random(int n, double edge_prob, Rng& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(edge_prob)) g.add_edge(u, v);
    return g;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (has_edge(u, v)) g.add_edge(perm[u], perm[v]);
    return g;
}

Graph Graph::from_json(const nlohmann::json& j) {
    Graph g(j.at("n").get<int>());
    if (g.n > 32) throw std::invalid_argument("graphs are capped at 32 vertices");
    if (j.contains("edges"))
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("edge must be a pair [u, v]");
            g.add_edge(e[0].get<int>(), e[1].get<int>());
        }
    return g;
}

nlohmann::json Graph::to_json() const {
    nlohmann::json edges = nlohmann::json::array();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (has_edge(u, v)) edges.push_back({u, v});
    return {{"n", n}, {"edges", edges}};
}

bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& perm) {
    if (g1.n != g2.n || static_cast<int>(perm.size()) != g1.n) return false;
    for (int i = 0; i < g1.n; ++i)
        for (int j = i + 1; j < g1.n; ++j)
            if (g1.has_edge(i, j) != g2.has_edge(perm[i], perm[j])) return false;
    return true;
}

std::optional<std::vector<int>> find_isomorphism_brute(const Graph& g1, const Graph& g2) {
    if (g1.n != g2.n || g1.edge_count() != g2.edge_count()) return std::nullopt;
    std::vector<int> perm(static_cast<std::size_t>(g1.n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (is_isomorphism(g1, g2, perm)) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

namespace {

bool extend_clique(const Graph& g, int k, std::uint32_t candidates, std::vector<int>& acc) {
    if (static_cast<int>(acc.size()) == k) return true;
    int start = acc.empty() ? 0 : acc.back() + 1;
    for (int v = start; v < g.n; ++v) {
        if (!((candidates >> v) & 1u)) continue;
        acc.push_back(v);
        if (extend_clique(g, k, candidates & g.adj[static_cast<std::size_t>(v)], acc))
            return true;
        acc.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_clique_brute(const Graph& g, int k) {
    if (k < 0 || k > g.n) return std::nullopt;
    if (k == 0) return std::vector<int>{};
    std::vector<int> acc;
    std::uint32_t all = g.n == 32 ? 0xffffffffu : ((1u << g.n) - 1u);
    if (extend_clique(g, k, all, acc)) return acc;
    return std::nullopt;
}

bool hc_verify(const Graph& g, const std::vector<int>& seq) {
    if (static_cast<int>(seq.size()) != g.n || g.n < 3) return false;
    std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
    for (int v : seq) {
        if (v < 0 || v >= g.n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (!g.has_edge(seq[i], seq[(i + 1) % seq.size()])) return false;
    return true;
}

namespace {

bool extend_cycle(const Graph& g, std::vector<int>& acc, std::vector<char>& used) {
    if (static_cast<int>(acc.size()) == g.n)
        return g.has_edge(acc.back(), acc.front());
    for (int v = 1; v < g.n; ++v) {
        if (used[static_cast<std::size_t>(v)] || !g.has_edge(acc.back(), v)) continue;
        used[static_cast<std::size_t>(v)] = 1;
        acc.push_back(v);
        if (extend_cycle(g, acc, used)) return true;
        acc.pop_back();
        used[static_cast<std::size_t>(v)] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_hamiltonian_cycle_brute(const Graph& g) {
    if (g.n < 3) return std::nullopt;
    std::vector<int> acc{0};
    std::vector<char> used(static_cast<std::size_t>(g.n), 0);
    used[0] = 1;
    if (extend_cycle(g, acc, used)) return acc;
    return std::nullopt;
}

}  // namespace trialkit
