#include "trialkit/group_iso_u.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace trialkit {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

CyclicGroupTable CyclicGroupTable::from_cycle(int p, std::vector<int> cycle) {
    if (static_cast<int>(cycle.size()) != p)
        throw std::invalid_argument("cycle must list all p vertices");
    // Rotate so that position 1 holds the lowest-labeled vertex (b_1 = a_1).
    auto lowest = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(),
                lowest == cycle.begin() ? cycle.end() - 1 : lowest - 1, cycle.end());
    CyclicGroupTable t;
    t.p = p;
    t.table.assign(static_cast<std::size_t>(p), std::vector<int>(static_cast<std::size_t>(p)));
    std::vector<int> pos(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) pos[static_cast<std::size_t>(cycle[static_cast<std::size_t>(i)])] = i;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            t.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                cycle[static_cast<std::size_t>((pos[static_cast<std::size_t>(a)] +
                                                pos[static_cast<std::size_t>(b)]) %
                                               p)];
    return t;
}

bool CyclicGroupTable::is_group_table() const {
    int identity = -1;
    for (int e = 0; e < p && identity < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < p && ok; ++a)
            if (mul(e, a) != a || mul(a, e) != a) ok = false;
        if (ok) identity = e;
    }
    if (identity < 0) return false;
    for (int a = 0; a < p; ++a) {
        bool inverse = false;
        for (int b = 0; b < p && !inverse; ++b)
            if (mul(a, b) == identity && mul(b, a) == identity) inverse = true;
        if (!inverse) return false;
    }
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
    return true;
}

GroupBijection GroupBijection::from_map(std::vector<int> pi) {
    GroupBijection b;
    b.from_zp.assign(pi.size(), -1);
    for (std::size_t e = 0; e < pi.size(); ++e) {
        int v = pi[e];
        if (v < 0 || v >= static_cast<int>(pi.size()) || b.from_zp[static_cast<std::size_t>(v)] >= 0)
            throw std::invalid_argument("not a bijection onto Z_p");
        b.from_zp[static_cast<std::size_t>(v)] = static_cast<int>(e);
    }
    b.to_zp = std::move(pi);
    return b;
}

GroupFeedback simulator_vprime(const Graph& g, const GroupBijection& pi) {
    int p = g.n;
    const int a1 = 0;  // lowest-labeled vertex
    int x = pi.to_zp[a1];
    if (x == 0) return GroupFeedback::violation({a1, a1});
    for (int i = 0; i < p; ++i) {
        int u = pi.from_zp[static_cast<std::size_t>(static_cast<long long>(i) * x % p)];
        int v = pi.from_zp[static_cast<std::size_t>((static_cast<long long>(i) + 1) * x % p)];
        if (!g.has_edge(u, v)) return GroupFeedback::violation({u, a1});
    }
    return GroupFeedback::yes();
}

HonestGroupIsoOracle::HonestGroupIsoOracle(CyclicGroupTable table) : table_(std::move(table)) {}

GroupFeedback HonestGroupIsoOracle::operator()(const GroupBijection& trial) const {
    int p = table_.p;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            if (trial.to_zp[static_cast<std::size_t>(table_.mul(a, b))] !=
                (trial.to_zp[static_cast<std::size_t>(a)] +
                 trial.to_zp[static_cast<std::size_t>(b)]) % p)
                return GroupFeedback::violation({a, b});
    return GroupFeedback::yes();
}

GroupIsoHonestyChecker::GroupIsoHonestyChecker(CyclicGroupTable table)
    : table_(std::move(table)) {}

bool GroupIsoHonestyChecker::is_solution(const GroupBijection& trial) const {
    int p = table_.p;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            if (trial.to_zp[static_cast<std::size_t>(table_.mul(a, b))] !=
                (trial.to_zp[static_cast<std::size_t>(a)] +
                 trial.to_zp[static_cast<std::size_t>(b)]) % p)
                return false;
    return true;
}

bool GroupIsoHonestyChecker::violates(const GroupBijection& trial,
                                      const GroupLabel& label) const {
    auto [a, b] = label;
    int p = table_.p;
    if (a < 0 || b < 0 || a >= p || b >= p) return false;
    return trial.to_zp[static_cast<std::size_t>(table_.mul(a, b))] !=
           (trial.to_zp[static_cast<std::size_t>(a)] +
            trial.to_zp[static_cast<std::size_t>(b)]) % p;
}

NaiveGroupIsoSolver::NaiveGroupIsoSolver(int p) : p_(p) {
    if (p < 1 || p > kMaxOrder)
        throw CapacityError("naive GroupIso solver is capped at order " +
                            std::to_string(kMaxOrder));
    cursor_.resize(static_cast<std::size_t>(p));
    std::iota(cursor_.begin(), cursor_.end(), 0);  // identity, lexicographically first
}

bool NaiveGroupIsoSolver::forbidden(const std::vector<int>& pi) const {
    for (const Rule& rule : rules_) {
        if (pi[static_cast<std::size_t>(rule.a)] != rule.va) continue;
        if (pi[static_cast<std::size_t>(rule.b)] != rule.vb) continue;
        if (pi[static_cast<std::size_t>(rule.sum_elem)] == (rule.va + rule.vb) % p_)
            return true;
    }
    return false;
}

bool NaiveGroupIsoSolver::next_candidate(std::vector<int>& pi) const {
    return std::next_permutation(pi.begin(), pi.end());
}

std::optional<GroupBijection> NaiveGroupIsoSolver::propose() {
    while (!cursor_.empty()) {
        if (!forbidden(cursor_)) return GroupBijection::from_map(cursor_);
        std::vector<int> next = cursor_;
        if (next_candidate(next))
            cursor_ = std::move(next);
        else
            cursor_.clear();
    }
    return std::nullopt;
}

void NaiveGroupIsoSolver::absorb(const GroupBijection& trial, const GroupLabel& label) {
    auto [a, b] = label;
    int va = trial.to_zp[static_cast<std::size_t>(a)];
    int vb = trial.to_zp[static_cast<std::size_t>(b)];
    rules_.push_back(Rule{a, b, va, vb,
                          trial.from_zp[static_cast<std::size_t>((va + vb) % p_)]});
    // The rule forbids the current cursor (it matches it), so advance.
    std::vector<int> next = cursor_;
    if (next_candidate(next))
        cursor_ = std::move(next);
    else
        cursor_.clear();
}

std::vector<int> cycle_from_bijection(const GroupBijection& pi) {
    int p = pi.p();
    int x = pi.to_zp[0];  // σ(a_1)
    std::vector<int> cycle;
    cycle.reserve(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i)
        cycle.push_back(pi.from_zp[static_cast<std::size_t>(static_cast<long long>(i) * x % p)]);
    return cycle;
}

AlgorithmBResult algorithm_b(const Graph& g, GroupIsoSolver& solver, OracleBudget budget) {
    if (!is_prime(g.n))
        throw std::invalid_argument("algorithm B requires a prime vertex count");
    AlgorithmBResult result;
    for (;;) {
        std::optional<GroupBijection> trial = solver.propose();
        if (!trial.has_value()) {
            if (auto sigma = solver.final_output()) {
                result.kind = AlgorithmBResult::Kind::CycleFound;
                result.cycle = cycle_from_bijection(*sigma);
                result.via_yes = false;
                if (!hc_verify(g, result.cycle))
                    result.kind = AlgorithmBResult::Kind::PromiseViolated;
                return result;
            }
            result.kind = AlgorithmBResult::Kind::PromiseViolated;
            return result;
        }
        if (!budget.allows(result.transcript.trial_count())) {
            result.kind = AlgorithmBResult::Kind::BudgetExhausted;
            return result;
        }
        GroupFeedback fb = simulator_vprime(g, *trial);
        result.transcript.append(*trial, fb);
        if (fb.is_yes()) {
            result.kind = AlgorithmBResult::Kind::CycleFound;
            result.cycle = cycle_from_bijection(*trial);
            result.via_yes = true;
            if (!hc_verify(g, result.cycle))
                throw std::logic_error("V' said Yes but the extracted trail is no cycle");
            return result;
        }
        solver.absorb(*trial, fb.label());
    }
}

}  // namespace trialkit
