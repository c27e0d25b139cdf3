#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "trialkit/feedback.hpp"
#include "trialkit/numeric.hpp"
#include "trialkit/rng.hpp"
#include "trialkit/simplex.hpp"

namespace trialkit {

// Monotone cost function on coalitions of n agents; index = bitmask.
struct CostGame {
    int n = 0;
    int encoding_bits = 0;                      // N: every numerator/denominator < 2^N
    std::vector<Rational> cost;                 // size 2^n, cost[0] == 0

    std::uint32_t grand() const { return (1u << n) - 1u; }
    const Rational& of(std::uint32_t coalition) const { return cost[coalition]; }

    void validate() const;

    static CostGame additive(const std::vector<Rational>& values, int encoding_bits);
    // Random nonnegative values monotonized by max over one-smaller subsets.
    static CostGame random_monotone(int n, int encoding_bits, Rng& rng);

    // Game JSON: {"n": int, "N": int, "costs": {"0b0101": "3/2", ...}},
    // coalition bitmask keys, rational string values.
    static CostGame from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

struct CoreLabel {
    enum class Dir { Le, Ge };  // Ge arises only for the grand coalition

    std::uint32_t coalition = 0;
    Dir dir = Dir::Le;

    bool operator==(const CoreLabel&) const = default;
};

using Allocation = std::vector<Rational>;
using CoreFeedback = Feedback<CoreLabel>;

// Exact membership check against the explicit constraint list.
bool in_core(const CostGame& game, const Allocation& x);
// Signed violation amount of one constraint (positive = violated).
Rational constraint_violation(const CostGame& game, const CoreLabel& label,
                              const Allocation& x);

enum class CoreViolationPolicy { MostViolated, Seeded };

// Brute force over all 2^n coalitions. MostViolated breaks ties by smaller
// coalition, then lexicographically; Seeded picks uniformly among violated.
class HonestCoreOracle {
public:
    explicit HonestCoreOracle(CostGame game,
                              CoreViolationPolicy policy = CoreViolationPolicy::MostViolated,
                              std::uint64_t seed = 0);
    CoreFeedback operator()(const Allocation& trial);
    const CostGame& game() const { return game_; }

private:
    CostGame game_;
    CoreViolationPolicy policy_;
    Rng rng_;
};

class CoreHonestyChecker {
public:
    explicit CoreHonestyChecker(CostGame game);
    bool is_solution(const Allocation& trial) const;
    bool violates(const Allocation& trial, const CoreLabel& label) const;

private:
    CostGame game_;
};

// Hyperplane normal ±1_S: v · trial > max{v · x : x in core}. The value
// c(S) itself stays hidden.
std::vector<Rational> separation_from_feedback(const CoreLabel& label, int n);

struct SolveCoreResult {
    enum class Kind { Point, DegenerateOrEmpty, BudgetExhausted };
    Kind kind = Kind::DegenerateOrEmpty;
    Allocation point;
    Transcript<Allocation, CoreLabel> transcript;
    std::size_t iterations = 0;
    // Shape-matrix determinant after each cut; strictly decreasing.
    std::vector<BigFloat> det_log;
};

struct CoreSolverOptions {
    std::optional<Rational> box_scale;       // default 2^N
    std::optional<std::size_t> max_iterations;  // default from the volume bound
};

// Central-cut ellipsoid over [0, box]^n driven by the verification oracle as
// a strong separation oracle; every iteration additionally queries the
// continued-fraction rounding of the center (denominator bound (nN)^n) so
// degenerate cores with desk-scale denominators are hit exactly.
SolveCoreResult solve_core(int n, int encoding_bits,
                           const std::function<CoreFeedback(const Allocation&)>& oracle,
                           OracleBudget budget, const CoreSolverOptions& options = {});

// Exact feasibility over the 2^n + 2 explicit constraints (test oracle;
// also the Bondareva-Shapley checks ride on it).
std::optional<Allocation> explicit_core_lp(const CostGame& game);

// max objective · x over the core; Infeasible when the core is empty.
LpResult core_max(const CostGame& game, const std::vector<Rational>& objective);

nlohmann::json core_label_to_json(const CoreLabel& label);
CoreLabel core_label_from_json(const nlohmann::json& j);

}  // namespace trialkit
