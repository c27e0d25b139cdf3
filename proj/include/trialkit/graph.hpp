#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "trialkit/rng.hpp"

namespace trialkit {

// Simple undirected graph on up to 32 vertices, adjacency as bitmasks.
struct Graph {
    int n = 0;
    std::vector<std::uint32_t> adj;

    Graph() = default;
    explicit Graph(int vertices) : n(vertices), adj(static_cast<std::size_t>(vertices), 0) {}

    bool has_edge(int u, int v) const { return (adj[static_cast<std::size_t>(u)] >> v) & 1u; }
    void add_edge(int u, int v);
    int edge_count() const;
    int degree(int v) const;

    static Graph empty(int n) { return Graph(n); }
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);
    static Graph random(int n, double edge_prob, Rng& rng);
    // Relabels vertices by the permutation: edge (u,v) -> (perm[u], perm[v]).
    Graph relabeled(const std::vector<int>& perm) const;

    // Graph JSON: {"n": int, "edges": [[u, v], ...]}.
    static Graph from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    bool operator==(const Graph&) const = default;
};

// Whether perm is an isomorphism G1 -> G2 under
// (i,j) ∈ E(G1) ⇔ (perm(i), perm(j)) ∈ E(G2).
bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& perm);

// Brute-force search over all bijections (test oracle; n ≤ 8 sensible).
std::optional<std::vector<int>> find_isomorphism_brute(const Graph& g1, const Graph& g2);

// Brute-force k-clique search, lexicographically first (test oracle).
std::optional<std::vector<int>> find_clique_brute(const Graph& g, int k);

// True iff seq visits every vertex exactly once and consecutive pairs
// (including the wraparound) are edges.
bool hc_verify(const Graph& g, const std::vector<int>& seq);

// Backtracking Hamiltonian-cycle search (test oracle).
std::optional<std::vector<int>> find_hamiltonian_cycle_brute(const Graph& g);

}  // namespace trialkit
