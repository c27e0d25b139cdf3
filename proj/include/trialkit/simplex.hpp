#pragma once

#include <vector>

#include "trialkit/numeric.hpp"

namespace trialkit {

// maximize objective · x  subject to  le_rows · x <= le_rhs,
// eq_rows · x == eq_rhs, x >= 0. All data exact rationals.
struct LinearProgram {
    int num_vars = 0;
    std::vector<std::vector<Rational>> le_rows;
    std::vector<Rational> le_rhs;
    std::vector<std::vector<Rational>> eq_rows;
    std::vector<Rational> eq_rhs;
    std::vector<Rational> objective;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> x;
    Rational value = 0;
};

// Two-phase dense tableau simplex with Bland's rule (exact arithmetic, no
// cycling). Desk scale: the tableau is materialized in full.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace trialkit
