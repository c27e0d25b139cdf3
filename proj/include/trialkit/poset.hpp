#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace trialkit {

struct PosetCycleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Irreflexive, transitively closed, acyclic relation over elements 0..n-1.
// greater(a, b) means a ≻ b. Closure is maintained on every insertion.
class Poset {
public:
    static constexpr int kMaxElements = 16;

    explicit Poset(int n);

    int size() const { return n_; }

    bool greater(int a, int b) const { return (below_[a] >> b) & 1u; }
    bool comparable(int a, int b) const { return greater(a, b) || greater(b, a); }

    // Mask of elements strictly above / below a.
    std::uint32_t above_mask(int a) const { return above_[a]; }
    std::uint32_t below_mask(int a) const { return below_[a]; }

    // Whether a ≻ b can be recorded without creating a cycle.
    bool can_add(int a, int b) const { return a != b && !greater(b, a); }

    // Records a ≻ b plus transitive consequences; returns the number of new
    // pairs. Throws PosetCycleError if b ≻ a already holds.
    int add_greater(int a, int b);

    int relation_count() const { return relation_count_; }

    std::vector<std::pair<int, int>> relations() const;  // all (a, b) with a ≻ b

    // Instance JSON: {"n": int, "relations": [[a, b], ...]} with a ≻ b.
    static Poset from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    bool operator==(const Poset&) const = default;

private:
    void check_element(int a) const;

    int n_;
    int relation_count_ = 0;
    std::vector<std::uint32_t> above_;  // above_[a]: elements b with b ≻ a
    std::vector<std::uint32_t> below_;  // below_[a]: elements b with a ≻ b
};

}  // namespace trialkit
