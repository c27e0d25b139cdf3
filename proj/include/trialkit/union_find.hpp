#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace trialkit {

// Union-find with a GF(2) parity per node relative to its root, union by
// rank, no path compression so merges can be rolled back (the bijection
// searches probe many tentative merges).
class ParityUnionFind {
public:
    explicit ParityUnionFind(int n)
        : parent_(static_cast<std::size_t>(n)),
          rank_(static_cast<std::size_t>(n), 0),
          parity_(static_cast<std::size_t>(n), 0),
          components_(n) {
        for (int v = 0; v < n; ++v) parent_[static_cast<std::size_t>(v)] = v;
    }

    struct Found {
        int root;
        std::uint8_t parity;  // parity of the node relative to its root
    };

    Found find(int v) const {
        std::uint8_t parity = 0;
        while (parent_[static_cast<std::size_t>(v)] != v) {
            parity ^= parity_[static_cast<std::size_t>(v)];
            v = parent_[static_cast<std::size_t>(v)];
        }
        return {v, parity};
    }

    bool same_component(int a, int b) const { return find(a).root == find(b).root; }

    // Relation between a and b if connected: 0 = equal, 1 = different.
    std::uint8_t relation(int a, int b) const { return find(a).parity ^ find(b).parity; }

    enum class Unite { Merged, Consistent, Contradiction };

    // Asserts a ⊕ b == rel.
    Unite unite(int a, int b, std::uint8_t rel) {
        Found fa = find(a), fb = find(b);
        if (fa.root == fb.root)
            return (fa.parity ^ fb.parity) == rel ? Unite::Consistent : Unite::Contradiction;
        if (rank_[static_cast<std::size_t>(fa.root)] < rank_[static_cast<std::size_t>(fb.root)])
            std::swap(fa, fb);
        // attach fb.root under fa.root
        parent_[static_cast<std::size_t>(fb.root)] = fa.root;
        parity_[static_cast<std::size_t>(fb.root)] =
            static_cast<std::uint8_t>(fa.parity ^ fb.parity ^ rel);
        bool bumped = false;
        if (rank_[static_cast<std::size_t>(fa.root)] == rank_[static_cast<std::size_t>(fb.root)]) {
            ++rank_[static_cast<std::size_t>(fa.root)];
            bumped = true;
        }
        --components_;
        trail_.push_back({fb.root, fa.root, bumped});
        return Unite::Merged;
    }

    int components() const { return components_; }

    std::size_t mark() const { return trail_.size(); }

    void rollback(std::size_t mark) {
        while (trail_.size() > mark) {
            auto [child, root, bumped] = trail_.back();
            trail_.pop_back();
            parent_[static_cast<std::size_t>(child)] = child;
            parity_[static_cast<std::size_t>(child)] = 0;
            if (bumped) --rank_[static_cast<std::size_t>(root)];
            ++components_;
        }
    }

private:
    struct TrailEntry {
        int child;
        int root;
        bool bumped;
    };

    std::vector<int> parent_;
    std::vector<int> rank_;
    std::vector<std::uint8_t> parity_;
    int components_;
    std::vector<TrailEntry> trail_;
};

}  // namespace trialkit
