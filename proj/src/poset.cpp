#include "schubert/poset.hpp"

#include <algorithm>
#include <map>

namespace schubert {

namespace {

BruhatPoset from_elements(std::vector<Permutation> elems) {
    std::sort(elems.begin(), elems.end(), LengthLexLess{});
    BruhatPoset p;
    std::map<Permutation, std::size_t> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& v : covers(elems[i])) {
            auto it = index.find(v);
            if (it != index.end()) p.covers.emplace_back(it->second, i);
        }
    }
    std::sort(p.covers.begin(), p.covers.end());
    p.elements = std::move(elems);
    return p;
}

}  // namespace

BruhatPoset bruhat_poset(int n) { return from_elements(all_permutations(n)); }

BruhatPoset bruhat_interval(const Permutation& v, const Permutation& w) {
    std::vector<Permutation> elems;
    for (const auto& x : all_permutations(w.window()))
        if (bruhat_leq(v, x) && bruhat_leq(x, w)) elems.push_back(x);
    return from_elements(std::move(elems));
}

}  // namespace schubert
