#pragma once

#include <optional>

#include "trialkit/cnf.hpp"

namespace trialkit {

inline constexpr int kDefaultDpllVarCap = 64;

struct DpllResult {
    std::optional<Assignment> model;
    std::size_t decisions = 0;
    std::size_t propagations = 0;
};

// Complete SAT search standing in for the computation oracle. Fully
// deterministic: unit propagation to fixpoint (clauses scanned in index
// order), then branch on the lowest unset variable, false first, so
// transcripts replay bit-exactly. Unassigned variables in the model are
// reported false.
DpllResult dpll_solve(const CnfFormula& formula, int var_cap = kDefaultDpllVarCap);

}  // namespace trialkit
