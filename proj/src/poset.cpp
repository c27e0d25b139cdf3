#include "trialkit/poset.hpp"

#include <nlohmann/json.hpp>

namespace trialkit {

Poset::Poset(int n) : n_(n) {
    if (n < 0 || n > kMaxElements)
        throw std::invalid_argument("poset size must be in [0, " +
                                    std::to_string(kMaxElements) + "]");
    above_.assign(static_cast<std::size_t>(n), 0);
    below_.assign(static_cast<std::size_t>(n), 0);
}

void Poset::check_element(int a) const {
    if (a < 0 || a >= n_) throw std::out_of_range("poset element out of range");
}

int Poset::add_greater(int a, int b) {
    check_element(a);
    check_element(b);
    if (a == b) throw PosetCycleError("irreflexive relation: cannot add a ≻ a");
    if (greater(b, a))
        throw PosetCycleError("adding " + std::to_string(a) + " ≻ " + std::to_string(b) +
                              " would create a cycle");
    if (greater(a, b)) return 0;

    // Everything at or above a becomes greater than everything at or below b.
    std::uint32_t uppers = above_[a] | (1u << a);
    std::uint32_t lowers = below_[b] | (1u << b);
    int added = 0;
    for (int x = 0; x < n_; ++x) {
        if (!((uppers >> x) & 1u)) continue;
        std::uint32_t fresh = lowers & ~below_[x];
        if (!fresh) continue;
        below_[x] |= fresh;
        for (int y = 0; y < n_; ++y) {
            if ((fresh >> y) & 1u) {
                above_[y] |= (1u << x);
                ++added;
            }
        }
    }
    relation_count_ += added;
    return added;
}

std::vector<std::pair<int, int>> Poset::relations() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (greater(a, b)) out.emplace_back(a, b);
    return out;
}

Poset Poset::from_json(const nlohmann::json& j) {
    Poset p(j.at("n").get<int>());
    if (j.contains("relations")) {
        for (const auto& pair : j.at("relations")) {
            if (!pair.is_array() || pair.size() != 2)
                throw std::invalid_argument("poset relation must be a pair [a, b]");
            p.add_greater(pair[0].get<int>(), pair[1].get<int>());
        }
    }
    return p;
}

nlohmann::json Poset::to_json() const {
    nlohmann::json rels = nlohmann::json::array();
    for (auto [a, b] : relations()) rels.push_back({a, b});
    return {{"n", n_}, {"relations", rels}};
}

}  // namespace trialkit
