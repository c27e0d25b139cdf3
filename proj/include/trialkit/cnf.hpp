#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "trialkit/rng.hpp"

namespace trialkit {

// Literals are DIMACS-style nonzero ints: +v / -v for variable v in 1..n.
using Assignment = std::vector<std::uint8_t>;  // value of x1..xn

struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    void validate() const;  // no duplicate literal in a clause, vars in range

    bool clause_satisfied(std::size_t index, const Assignment& x) const;
    bool satisfied(const Assignment& x) const;
    std::optional<std::size_t> first_violated(const Assignment& x) const;

    static CnfFormula parse_dimacs(std::istream& in);
    void emit_dimacs(std::ostream& out) const;

    // Random formula with fixed clause width (distinct variables, random
    // polarities).
    static CnfFormula random(int num_vars, int num_clauses, int width, Rng& rng);
};

inline bool literal_true(int literal, const Assignment& x) {
    int var = literal > 0 ? literal : -literal;
    bool value = x[static_cast<std::size_t>(var) - 1] != 0;
    return literal > 0 ? value : !value;
}

// Exhaustive satisfiability over all 2^n assignments; test oracle for DPLL.
std::optional<Assignment> sat_brute_force(const CnfFormula& formula);

}  // namespace trialkit
