#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "schubert/weyl.hpp"

namespace schubert {

/// A finite poset given by its Hasse diagram. Covers are pairs (lower, upper)
/// of indices into `elements`.
template <class T>
struct Poset {
    std::vector<T> elements;
    std::vector<std::pair<std::size_t, std::size_t>> covers;

    /// DOT export: nodes labeled by `label`, one edge per cover (upper -> lower).
    [[nodiscard]] std::string to_dot(const std::function<std::string(const T&)>& label,
                                     const std::string& name = "poset") const {
        std::string out = "digraph " + name + " {\n  rankdir=BT;\n";
        for (std::size_t i = 0; i < elements.size(); ++i)
            out += "  n" + std::to_string(i) + " [label=\"" + label(elements[i]) + "\"];\n";
        for (auto [lo, hi] : covers) out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
        out += "}\n";
        return out;
    }

    /// JSON export {elements, covers}; `encode` serializes one element.
    [[nodiscard]] nlohmann::ordered_json to_json(const std::function<nlohmann::ordered_json(const T&)>& encode) const {
        nlohmann::ordered_json j;
        j["elements"] = nlohmann::ordered_json::array();
        for (const auto& e : elements) j["elements"].push_back(encode(e));
        j["covers"] = nlohmann::ordered_json::array();
        for (auto [lo, hi] : covers) j["covers"].push_back({lo, hi});
        return j;
    }
};

using BruhatPoset = Poset<Permutation>;

/// Bruhat order on all of S_n; elements in (length, lex) order.
BruhatPoset bruhat_poset(int n);
/// Restriction of the Bruhat order to the interval [v, w].
BruhatPoset bruhat_interval(const Permutation& v, const Permutation& w);

}  // namespace schubert
