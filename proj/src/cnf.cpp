#include "trialkit/cnf.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace trialkit {

void CnfFormula::validate() const {
    for (const auto& clause : clauses) {
        std::set<int> seen;
        for (int lit : clause) {
            int var = lit > 0 ? lit : -lit;
            if (lit == 0 || var > num_vars)
                throw std::invalid_argument("literal out of range in clause");
            if (!seen.insert(lit).second)
                throw std::invalid_argument("duplicate literal in clause");
        }
    }
}

bool CnfFormula::clause_satisfied(std::size_t index, const Assignment& x) const {
    for (int lit : clauses[index])
        if (literal_true(lit, x)) return true;
    return false;
}

bool CnfFormula::satisfied(const Assignment& x) const {
    return !first_violated(x).has_value();
}

std::optional<std::size_t> CnfFormula::first_violated(const Assignment& x) const {
    for (std::size_t i = 0; i < clauses.size(); ++i)
        if (!clause_satisfied(i, x)) return i;
    return std::nullopt;
}

CnfFormula CnfFormula::parse_dimacs(std::istream& in) {
    CnfFormula formula;
    std::string line;
    bool header_seen = false;
    std::vector<int> current;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            int m = 0;
            ls >> p >> fmt >> formula.num_vars >> m;
            if (fmt != "cnf") throw std::invalid_argument("expected DIMACS 'p cnf' header");
            header_seen = true;
            continue;
        }
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                formula.clauses.push_back(current);
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
    }
    if (!current.empty()) formula.clauses.push_back(current);
    if (!header_seen) throw std::invalid_argument("missing DIMACS header");
    formula.validate();
    return formula;
}

void CnfFormula::emit_dimacs(std::ostream& out) const {
    out << "p cnf " << num_vars << ' ' << clauses.size() << '\n';
    for (const auto& clause : clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
}

CnfFormula CnfFormula::random(int num_vars, int num_clauses, int width, Rng& rng) {
    if (width > num_vars) throw std::invalid_argument("clause width exceeds variable count");
    CnfFormula formula;
    formula.num_vars = num_vars;
    for (int i = 0; i < num_clauses; ++i) {
        std::set<int> vars;
        while (static_cast<int>(vars.size()) < width)
            vars.insert(rng.range(1, num_vars));
        std::vector<int> clause;
        for (int v : vars) clause.push_back(rng.chance(0.5) ? v : -v);
        formula.clauses.push_back(std::move(clause));
    }
    return formula;
}

std::optional<Assignment> sat_brute_force(const CnfFormula& formula) {
    int n = formula.num_vars;
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
        Assignment x(n);
        for (int i = 0; i < n; ++i) x[i] = (bits >> i) & 1u;
        if (formula.satisfied(x)) return x;
    }
    return std::nullopt;
}

}  // namespace trialkit
