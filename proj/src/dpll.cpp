#include "trialkit/dpll.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace trialkit {

namespace {

enum : std::int8_t { kUnset = -1, kFalse = 0, kTrue = 1 };

// Unit propagation is confluent (the closure of forced assignments under a
// partial assignment is unique), so occurrence-list scheduling reproduces
// exactly the models a naive fixpoint scan would produce.
struct Searcher {
    const CnfFormula& formula;
    std::vector<std::int8_t> value;
    std::vector<std::vector<std::size_t>> occurs;  // literal slot -> clause indices
    DpllResult stats;

    explicit Searcher(const CnfFormula& f)
        : formula(f),
          value(static_cast<std::size_t>(f.num_vars), kUnset),
          occurs(2 * static_cast<std::size_t>(f.num_vars)) {
        for (std::size_t ci = 0; ci < f.clauses.size(); ++ci)
            for (int lit : f.clauses[ci]) occurs[slot(lit)].push_back(ci);
    }

    std::size_t slot(int lit) const {
        int var = lit > 0 ? lit : -lit;
        return 2 * (static_cast<std::size_t>(var) - 1) + (lit < 0 ? 1 : 0);
    }

    std::int8_t literal_value(int lit) const {
        std::int8_t v = value[static_cast<std::size_t>(lit > 0 ? lit : -lit) - 1];
        if (v == kUnset) return kUnset;
        return (lit > 0) == (v == kTrue) ? kTrue : kFalse;
    }

    void assign(int lit, std::vector<int>& trail) {
        int var = lit > 0 ? lit : -lit;
        value[static_cast<std::size_t>(var) - 1] = lit > 0 ? kTrue : kFalse;
        trail.push_back(var);
    }

    // Satisfied: skip. Unit: assign the survivor. Empty: conflict (false).
    bool recheck(std::size_t ci, std::vector<int>& trail) {
        int unassigned = 0;
        int candidate = 0;
        for (int lit : formula.clauses[ci]) {
            std::int8_t lv = literal_value(lit);
            if (lv == kTrue) return true;
            if (lv == kUnset) {
                if (++unassigned > 1) return true;
                candidate = lit;
            }
        }
        if (unassigned == 0) return false;
        ++stats.propagations;
        assign(candidate, trail);
        return true;
    }

    // Processes consequences of trail entries from queue_start on.
    bool propagate(std::vector<int>& trail, std::size_t queue_start) {
        for (std::size_t qi = queue_start; qi < trail.size(); ++qi) {
            int var = trail[qi];
            int false_lit = value[static_cast<std::size_t>(var) - 1] == kTrue ? -var : var;
            for (std::size_t ci : occurs[slot(false_lit)])
                if (!recheck(ci, trail)) return false;
        }
        return true;
    }

    bool propagate_initial(std::vector<int>& trail) {
        for (std::size_t ci = 0; ci < formula.clauses.size(); ++ci)
            if (!recheck(ci, trail)) return false;
        return propagate(trail, 0);
    }

    void undo(std::vector<int>& trail, std::size_t mark) {
        while (trail.size() > mark) {
            value[static_cast<std::size_t>(trail.back()) - 1] = kUnset;
            trail.pop_back();
        }
    }

    bool search(std::vector<int>& trail) {
        int branch_var = 0;
        for (int v = 1; v <= formula.num_vars; ++v) {
            if (value[static_cast<std::size_t>(v) - 1] == kUnset) {
                branch_var = v;
                break;
            }
        }
        if (branch_var == 0) return true;  // all assigned, no conflict anywhere

        for (int lit : {-branch_var, branch_var}) {  // false first
            ++stats.decisions;
            std::size_t mark = trail.size();
            assign(lit, trail);
            if (propagate(trail, mark) && search(trail)) return true;
            undo(trail, mark);
        }
        return false;
    }
};

}  // namespace

DpllResult dpll_solve(const CnfFormula& formula, int var_cap) {
    if (formula.num_vars > var_cap)
        throw std::invalid_argument("formula has " + std::to_string(formula.num_vars) +
                                    " variables, above the DPLL cap of " +
                                    std::to_string(var_cap));
    Searcher searcher(formula);
    std::vector<int> trail;
    bool sat = searcher.propagate_initial(trail) && searcher.search(trail);
    DpllResult result = searcher.stats;
    if (sat) {
        Assignment model(static_cast<std::size_t>(formula.num_vars), 0);
        for (int v = 1; v <= formula.num_vars; ++v)
            model[static_cast<std::size_t>(v) - 1] =
                searcher.value[static_cast<std::size_t>(v) - 1] == kTrue ? 1 : 0;
        result.model = std::move(model);
    }
    return result;
}

}  // namespace trialkit
