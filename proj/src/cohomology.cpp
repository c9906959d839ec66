#include "schubert/cohomology.hpp"

#include <gmpxx.h>

#include "schubert/errors.hpp"
#include "schubert/table.hpp"

namespace schubert {

namespace {

void require_window(const Permutation& w, int n) {
    if (w.window() != n) throw WindowMismatch(w.window(), n);
}

void require_same(int a, int b) {
    if (a != b) throw WindowMismatch(a, b);
}

}  // namespace

CohClass::CohClass(int n) : n_(n) {
    if (n < 1) throw DomainError("window must be positive");
}

CohClass CohClass::schubert(const Permutation& w) {
    CohClass c(w.window());
    c.terms_.emplace(w, 1);
    return c;
}

CohClass CohClass::opposite(const Permutation& w) {
    return schubert(compose(longest_element(w.window()), w));
}

Integer CohClass::coefficient(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Integer(0) : it->second;
}

void CohClass::add_term(const Permutation& w, const Integer& c) {
    require_window(w, n_);
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, 0);
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

CohClass& CohClass::operator+=(const CohClass& rhs) {
    require_same(n_, rhs.n_);
    for (const auto& [w, c] : rhs.terms_) add_term(w, c);
    return *this;
}

CohClass& CohClass::operator-=(const CohClass& rhs) {
    require_same(n_, rhs.n_);
    for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
    return *this;
}

CohClass CohClass::scaled(const Integer& c) const {
    CohClass out(n_);
    if (c.is_zero()) return out;
    for (const auto& [w, a] : terms_) out.terms_.emplace(w, a * c);
    return out;
}

CohClass cup(const CohClass& a, const CohClass& b) {
    require_same(a.window(), b.window());
    const int n = a.window();
    const auto& g = SymmetricGroup::get(n);
    auto& table = ProductTable::get(PolyBasis::Schubert, n);
    CohClass out(n);
    for (const auto& [v, cv] : a.terms())
        for (const auto& [w, cw] : b.terms()) {
            const Integer scale = cv * cw;
            for (const auto& [x, c] : table.product(g.index_of(v), g.index_of(w))) out.add_term(g.at(x), scale * c);
        }
    return out;
}

Integer pairing(const CohClass& a, const CohClass& b) {
    return cup(a, b).coefficient(Permutation::identity(a.window()));
}

Integer structure_constant(const Permutation& v, const Permutation& w, const Permutation& x) {
    require_same(v.window(), w.window());
    require_same(v.window(), x.window());
    const auto& g = SymmetricGroup::get(v.window());
    Integer c = ProductTable::get(PolyBasis::Schubert, v.window()).coefficient(g.index_of(v), g.index_of(w), g.index_of(x));
    if (c.sign() < 0)
        throw InvariantViolation("negative cohomology structure constant at (" + v.str() + ", " + w.str() + ", " +
                                 x.str() + ")");
    return c;
}

CohClass chevalley_cup(const Weight& lambda, const Permutation& w) {
    require_same(lambda.window(), w.window());
    const int n = w.window();
    CohClass out(n);
    for (auto [i, j] : cover_transpositions(w)) {
        const long long c = lambda.entries[static_cast<std::size_t>(i - 1)] - lambda.entries[static_cast<std::size_t>(j - 1)];
        out.add_term(compose(w, Permutation::transposition(i, j, n)), c);
    }
    return out;
}

CohClass c1_class(const Weight& lambda) {
    const int n = lambda.window();
    CohClass out(n);
    const auto wo = longest_element(n);
    for (int i = 1; i < n; ++i) {
        const long long gap = lambda.entries[static_cast<std::size_t>(i - 1)] - lambda.entries[static_cast<std::size_t>(i)];
        out.add_term(compose(wo, Permutation::simple(i, n)), gap);
    }
    return out;
}

DivisorTerms divisor_of_section(const Weight& lambda, const Permutation& w) {
    require_same(lambda.window(), w.window());
    if (!lambda.is_dominant()) throw DomainError("divisor_of_section needs a dominant weight");
    DivisorTerms out;
    for (auto [i, j] : cover_transpositions(w)) {
        const long long c = lambda.entries[static_cast<std::size_t>(i - 1)] - lambda.entries[static_cast<std::size_t>(j - 1)];
        out.emplace(compose(w, Permutation::transposition(i, j, w.window())), c);
    }
    return out;
}

DivisorTerms canonical_divisor(const Permutation& w) {
    DivisorTerms out;
    for (auto [i, j] : cover_transpositions(w))
        out.emplace(compose(w, Permutation::transposition(i, j, w.window())), -(j - i + 1));
    return out;
}

Positivity line_bundle_positivity(const Weight& lambda) {
    if (lambda.is_regular_dominant()) return Positivity::Ample;
    if (lambda.is_dominant()) return Positivity::GloballyGenerated;
    return Positivity::Neither;
}

const char* to_string(Positivity p) {
    switch (p) {
        case Positivity::Ample: return "ample";
        case Positivity::GloballyGenerated: return "globally_generated";
        case Positivity::Neither: return "neither";
    }
    return "neither";
}

bool pic_kernel_check(const Permutation& w, const Weight& lambda) {
    require_same(lambda.window(), w.window());
    for (int i : support(w))
        if (lambda.entries[static_cast<std::size_t>(i - 1)] != lambda.entries[static_cast<std::size_t>(i)]) return false;
    return true;
}

std::map<std::pair<Permutation, Permutation>, Integer> diagonal_class_cohomology(int n) {
    // [diag] = Σ d_{w,v} [X_w × X^v] is characterized by pairing against
    // [X^a × X_b]: Σ_{w,v} d_{w,v} ⟨X_w, X^a⟩⟨X^v, X_b⟩ = ⟨X^a, X_b⟩.
    // With P_{w,a} = ⟨X_w, X^a⟩ this reads Pᵀ D Pᵀ = Pᵀ, so D = (P⁻¹)ᵀ.
    const auto& g = SymmetricGroup::get(n);
    const std::size_t N = g.size();
    std::vector<mpq_class> m(N * 2 * N);
    auto at = [&](std::size_t r, std::size_t c) -> mpq_class& { return m[r * 2 * N + c]; };
    for (std::size_t w = 0; w < N; ++w) {
        for (std::size_t a = 0; a < N; ++a)
            at(w, a) = pairing(CohClass::schubert(g.at(w)), CohClass::opposite(g.at(a))).to_mpz();
        at(w, N + w) = 1;
    }
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t pivot = col;
        while (pivot < N && at(pivot, col) == 0) ++pivot;
        if (pivot == N) throw InvariantViolation("Poincaré pairing matrix is singular");
        if (pivot != col)
            for (std::size_t c = 0; c < 2 * N; ++c) std::swap(at(pivot, c), at(col, c));
        const mpq_class inv = 1 / at(col, col);
        for (std::size_t c = 0; c < 2 * N; ++c) at(col, c) *= inv;
        for (std::size_t r = 0; r < N; ++r) {
            if (r == col || at(r, col) == 0) continue;
            const mpq_class f = at(r, col);
            for (std::size_t c = 0; c < 2 * N; ++c) at(r, c) -= f * at(col, c);
        }
    }
    std::map<std::pair<Permutation, Permutation>, Integer> out;
    for (std::size_t w = 0; w < N; ++w)
        for (std::size_t v = 0; v < N; ++v) {
            const mpq_class& q = at(v, N + w);
            if (q == 0) continue;
            if (q.get_den() != 1) throw InvariantViolation("diagonal class has a non-integral coefficient");
            out.emplace(std::make_pair(g.at(w), g.at(v)), Integer(q.get_num()));
        }
    return out;
}

}  // namespace schubert
