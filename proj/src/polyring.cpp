#include "schubert/polyring.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace schubert {

namespace {

// Memo of basis polynomials. Lookups take a shared lock; inserts are
// serialized. std::map nodes are stable, so returned references stay valid.
class PolyMemo {
public:
    const Poly* find(const Permutation& w) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(w);
        return it == table_.end() ? nullptr : &it->second;
    }
    const Poly& insert(const Permutation& w, Poly p) {
        std::unique_lock lock(mutex_);
        return table_.try_emplace(w, std::move(p)).first->second;
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Permutation, Poly> table_;
};

bool is_dominant_code(const std::vector<int>& c) {
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i - 1] < c[i]) return false;
    return true;
}

// Dominant permutations have a single-monomial polynomial x^{code}. Any other
// w has some i with c_i < c_{i+1}; then w s_i is one step longer and the
// recursion climbs towards a dominant permutation.
const Poly& memoized_basis(const Permutation& w_in, PolyMemo& memo,
                           const std::function<Poly(int, const Poly&)>& op) {
    const Permutation w = w_in.trimmed();
    if (const Poly* hit = memo.find(w)) return *hit;
    const auto c = code(w);
    if (is_dominant_code(c)) return memo.insert(w, Poly::monomial(Monomial(c)));
    std::size_t i = 0;
    while (c[i] >= c[i + 1]) ++i;
    const int pos = static_cast<int>(i) + 1;
    const Poly& up = memoized_basis(compose(w, Permutation::simple(pos, w.window())), memo, op);
    return memo.insert(w, op(pos, up));
}

PolyMemo& schubert_memo() {
    static PolyMemo memo;
    return memo;
}

PolyMemo& grothendieck_memo() {
    static PolyMemo memo;
    return memo;
}

Poly from_top(const Permutation& w, const std::function<Poly(int, const Poly&)>& op) {
    const int n = w.window();
    std::vector<int> delta(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) delta[static_cast<std::size_t>(i)] = n - 1 - i;
    Poly p = Poly::monomial(Monomial(delta));
    // w_o = w·v with lengths adding; w = w_o·v^{-1} = w_o s_{b_k} ··· s_{b_1}.
    const auto v = compose(inverse(w), Permutation::longest(n));
    const auto word = reduced_word(v);
    for (auto it = word.rbegin(); it != word.rend(); ++it) p = op(*it, p);
    return p;
}

using Accumulator = std::unordered_map<Monomial, Integer, Monomial::Hash>;

struct LayeredRemainder {
    std::vector<Accumulator> layers;

    explicit LayeredRemainder(const Poly& f) {
        for (const auto& [m, c] : f.terms()) at(m.degree())[m] += c;
    }
    Accumulator& at(int d) {
        if (static_cast<std::size_t>(d) >= layers.size()) layers.resize(static_cast<std::size_t>(d) + 1);
        return layers[static_cast<std::size_t>(d)];
    }
};

Permutation leading_index(const Monomial& m, const ExpandOptions& options) {
    auto w = Permutation::from_code(m.exponents());
    if (w.window() > options.max_window)
        throw AmbientExceeded("expansion needs window " + std::to_string(w.window()) + " > " +
                              std::to_string(options.max_window));
    return w;
}

// Processes degree layers from the bottom. x^{code(w)} is the lex-smallest
// monomial of S_w, so within a layer the lex-smallest remaining monomial
// names the next basis element and every subtraction only touches larger
// monomials. Higher-degree tails of G_w go to later layers.
Expansion layered_expand(const Poly& f, PolyBasis basis, const ExpandOptions& options) {
    const int cap = options.degree_cap > 0 ? options.degree_cap : 2 * options.max_window * options.max_window;
    LayeredRemainder rem(f);
    Expansion out;
    for (std::size_t d = 0; d < rem.layers.size(); ++d) {
        auto& layer = rem.layers[d];
        std::map<Monomial, Integer> ordered;
        for (auto& [m, c] : layer)
            if (!c.is_zero()) ordered.emplace(m, std::move(c));
        layer.clear();
        if (ordered.empty()) continue;
        if (basis == PolyBasis::Grothendieck && static_cast<int>(d) > cap)
            throw LimitExceeded("Grothendieck expansion exceeded degree cap " + std::to_string(cap));
        while (!ordered.empty()) {
            auto lead = ordered.begin();
            const Integer c = lead->second;
            const auto w = leading_index(lead->first, options);
            const Poly& b = basis_poly(w, basis);
            for (const auto& [m, bc] : b.terms()) {
                const auto md = static_cast<std::size_t>(m.degree());
                if (md < d) throw InvariantViolation("basis polynomial has a term below its length");
                if (md == d) {
                    auto [it, fresh] = ordered.try_emplace(m, 0);
                    it->second.add_product(-c, bc);
                    if (it->second.is_zero()) ordered.erase(it);
                } else {
                    rem.at(static_cast<int>(md))[m].add_product(-c, bc);
                }
            }
            auto& slot = out[w];
            slot += c;
            if (slot.is_zero()) out.erase(w);
        }
    }
    return out;
}

}  // namespace

const Poly& schubert_poly(const Permutation& w) {
    static const std::function<Poly(int, const Poly&)> op = [](int i, const Poly& p) {
        return divided_difference(i, p);
    };
    return memoized_basis(w, schubert_memo(), op);
}

const Poly& grothendieck_poly(const Permutation& w) {
    static const std::function<Poly(int, const Poly&)> op = [](int i, const Poly& p) {
        return isobaric_difference(i, p);
    };
    return memoized_basis(w, grothendieck_memo(), op);
}

Poly schubert_poly_from_top(const Permutation& w) {
    return from_top(w, [](int i, const Poly& p) { return divided_difference(i, p); });
}

Poly grothendieck_poly_from_top(const Permutation& w) {
    return from_top(w, [](int i, const Poly& p) { return isobaric_difference(i, p); });
}

const Poly& basis_poly(const Permutation& w, PolyBasis basis) {
    return basis == PolyBasis::Schubert ? schubert_poly(w) : grothendieck_poly(w);
}

Expansion expand_schubert(const Poly& f, const ExpandOptions& options) {
    return layered_expand(f, PolyBasis::Schubert, options);
}

Expansion expand_grothendieck(const Poly& f, const ExpandOptions& options) {
    return layered_expand(f, PolyBasis::Grothendieck, options);
}

Expansion expand(const Poly& f, PolyBasis basis, const ExpandOptions& options) {
    return layered_expand(f, basis, options);
}

StableProduct stable_product_expand(const Permutation& u, const Permutation& v, PolyBasis basis, int ambient_cap) {
    const Poly product = basis_poly(u, basis) * basis_poly(v, basis);
    int m = std::max(u.trimmed().window(), v.trimmed().window());
    for (;; ++m) {
        if (m + 1 > ambient_cap) throw AmbientExceeded("ambient cap " + std::to_string(ambient_cap) + " exceeded");
        Expansion at_m;
        try {
            at_m = expand(product, basis, ExpandOptions{m, 0});
        } catch (const AmbientExceeded&) {
            continue;
        }
        auto next = expand(product, basis, ExpandOptions{m + 1, 0});
        if (next == at_m) return StableProduct{std::move(at_m), m};
    }
}

Poly combine(const Expansion& e, PolyBasis basis) {
    Poly p;
    for (const auto& [w, c] : e) p += basis_poly(w, basis).scaled(c);
    return p;
}

}  // namespace schubert
