#include "schubert/ktheory.hpp"

#include <gmpxx.h>

#include <memory>
#include <mutex>
#include <random>
#include <shared_mutex>

#include "schubert/errors.hpp"
#include "schubert/table.hpp"

namespace schubert {

namespace {

void require_same(int a, int b) {
    if (a != b) throw WindowMismatch(a, b);
}

int parity_sign(int k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

const char* to_string(KBasis b) { return b == KBasis::O ? "O" : "I"; }

KClass::KClass(int n, KBasis basis) : n_(n), basis_(basis) {
    if (n < 1) throw DomainError("window must be positive");
}

KClass KClass::O(const Permutation& w) {
    KClass c(w.window(), KBasis::O);
    c.terms_.emplace(w, 1);
    return c;
}

KClass KClass::I(const Permutation& w) {
    KClass c(w.window(), KBasis::I);
    c.terms_.emplace(w, 1);
    return c;
}

KClass KClass::O_opp(const Permutation& w) { return O(compose(longest_element(w.window()), w)); }
KClass KClass::I_opp(const Permutation& w) { return I(compose(longest_element(w.window()), w)); }

Integer KClass::coefficient(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Integer(0) : it->second;
}

void KClass::add_term(const Permutation& w, const Integer& c) {
    if (w.window() != n_) throw WindowMismatch(w.window(), n_);
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, 0);
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

KClass& KClass::operator+=(const KClass& rhs) {
    require_same(n_, rhs.n_);
    const KClass r = rhs.basis_ == basis_ ? rhs : basis_convert(rhs, basis_);
    for (const auto& [w, c] : r.terms_) add_term(w, c);
    return *this;
}

KClass& KClass::operator-=(const KClass& rhs) {
    require_same(n_, rhs.n_);
    const KClass r = rhs.basis_ == basis_ ? rhs : basis_convert(rhs, basis_);
    for (const auto& [w, c] : r.terms_) add_term(w, -c);
    return *this;
}

KClass KClass::scaled(const Integer& c) const {
    KClass out(n_, basis_);
    if (c.is_zero()) return out;
    for (const auto& [w, a] : terms_) out.terms_.emplace(w, a * c);
    return out;
}

bool operator==(const KClass& a, const KClass& b) {
    if (a.n_ != b.n_) return false;
    if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
    return basis_convert(a, KBasis::O).terms_ == basis_convert(b, KBasis::O).terms_;
}

KClass basis_convert(const KClass& a, KBasis target) {
    if (a.basis() == target) return a;
    const int n = a.window();
    const auto& g = SymmetricGroup::get(n);
    KClass out(n, target);
    // O→I has all-ones entries; I→O carries the Möbius sign.
    const bool to_o = target == KBasis::O;
    for (const auto& [w, c] : a.terms()) {
        const std::size_t wi = g.index_of(w);
        for (std::size_t v = 0; v <= wi; ++v) {
            if (!g.leq(v, wi)) continue;
            out.add_term(g.at(v), to_o ? c * parity_sign(g.length(wi) - g.length(v)) : c);
        }
    }
    return out;
}

KClass multiply(const KClass& a, const KClass& b) {
    require_same(a.window(), b.window());
    const int n = a.window();
    const KClass ao = basis_convert(a, KBasis::O);
    const KClass bo = basis_convert(b, KBasis::O);
    const auto& g = SymmetricGroup::get(n);
    auto& table = ProductTable::get(PolyBasis::Grothendieck, n);
    KClass out(n, KBasis::O);
    for (const auto& [v, cv] : ao.terms())
        for (const auto& [w, cw] : bo.terms()) {
            const Integer scale = cv * cw;
            for (const auto& [x, c] : table.product(g.index_of(v), g.index_of(w))) out.add_term(g.at(x), scale * c);
        }
    return out;
}

Integer chi(const KClass& a) {
    Integer s = 0;
    for (const KClass ao = basis_convert(a, KBasis::O); const auto& [w, c] : ao.terms()) s += c;
    return s;
}

Integer duality_pairing(const KClass& a, const KClass& b) { return chi(multiply(a, b)); }

KClass expand_by_duality(const KClass& a) {
    const int n = a.window();
    KClass out(n, KBasis::O);
    for (const auto& w : SymmetricGroup::get(n).elements()) out.add_term(w, duality_pairing(a, KClass::I_opp(w)));
    return out;
}

Integer structure_constant_k(const Permutation& v, const Permutation& w, const Permutation& x) {
    require_same(v.window(), w.window());
    require_same(v.window(), x.window());
    const int n = v.window();
    const auto& g = SymmetricGroup::get(n);
    Integer c = ProductTable::get(PolyBasis::Grothendieck, n).coefficient(g.index_of(v), g.index_of(w), g.index_of(x));
    const int sign = parity_sign(length(v) + length(w) + length(x) + g.longest_length());
    if ((c * sign).sign() < 0)
        throw InvariantViolation("sign pattern violated by K structure constant at (" + v.str() + ", " + w.str() +
                                 ", " + x.str() + ")");
    return c;
}

OperatorMatrix::OperatorMatrix(int window)
    : n(window), size(SymmetricGroup::get(window).size()), entries(size * size) {}

KClass OperatorMatrix::apply(const KClass& a) const {
    require_same(a.window(), n);
    const auto& g = SymmetricGroup::get(n);
    KClass out(n, KBasis::O);
    for (const KClass ao = basis_convert(a, KBasis::O); const auto& [w, c] : ao.terms()) {
        const std::size_t col = g.index_of(w);
        for (std::size_t row = 0; row < size; ++row)
            if (!at(row, col).is_zero()) out.add_term(g.at(row), c * at(row, col));
    }
    return out;
}

bool OperatorMatrix::is_unitriangular() const {
    const auto& g = SymmetricGroup::get(n);
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) {
            const Integer& e = at(r, c);
            if (r == c ? e != Integer(1) : !e.is_zero() && !g.leq(r, c)) return false;
        }
    return true;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same(a.n, b.n);
    OperatorMatrix out(a.n);
    for (std::size_t r = 0; r < a.size; ++r)
        for (std::size_t k = 0; k < a.size; ++k) {
            const Integer& x = a.at(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < a.size; ++c)
                if (!b.at(k, c).is_zero()) out.at(r, c).add_product(x, b.at(k, c));
        }
    return out;
}

OperatorMatrix unitriangular_inverse(const OperatorMatrix& m) {
    if (!m.is_unitriangular()) throw InvariantViolation("operator matrix is not unitriangular");
    // Bruhat-below implies earlier in length-lex order, so m is upper
    // triangular and back substitution is exact.
    OperatorMatrix inv(m.n);
    for (std::size_t col = 0; col < m.size; ++col) {
        inv.at(col, col) = 1;
        for (std::size_t r = col; r-- > 0;) {
            Integer s = 0;
            for (std::size_t k = r + 1; k <= col; ++k)
                if (!m.at(r, k).is_zero() && !inv.at(k, col).is_zero()) s.add_product(m.at(r, k), inv.at(k, col));
            inv.at(r, col) = -s;
        }
    }
    return inv;
}

namespace {

// [L_{−β}] for β ≥ 0: multiply G_{w_o w} by Π(1−x_i)^{β_i}.
OperatorMatrix anti_effective_operator(const std::vector<long long>& beta) {
    const int n = static_cast<int>(beta.size());
    Poly factor = Poly::one();
    for (int i = 1; i <= n; ++i)
        for (long long k = 0; k < beta[static_cast<std::size_t>(i - 1)]; ++k)
            factor = factor * (Poly::one() - Poly::variable(i));
    const auto& g = SymmetricGroup::get(n);
    OperatorMatrix m(n);
    for (std::size_t w = 0; w < g.size(); ++w) {
        const Poly p = factor * grothendieck_poly(g.at(g.opposite(w)));
        for (const auto& [x, c] : expand(p, PolyBasis::Grothendieck, ExpandOptions{Monomial::kMaxVars, 0}))
            if (x.window() <= n) m.at(g.opposite(g.index_of(x.embedded(n))), w) = c;
    }
    if (!m.is_unitriangular()) throw InvariantViolation("line bundle operator is not unitriangular");
    return m;
}

struct OperatorCache {
    std::shared_mutex mutex;
    std::map<std::vector<long long>, std::unique_ptr<OperatorMatrix>> table;
};

OperatorCache& operator_cache() {
    static OperatorCache cache;
    return cache;
}

}  // namespace

const OperatorMatrix& line_bundle_operator(const Weight& lambda) {
    auto& cache = operator_cache();
    {
        std::shared_lock lock(cache.mutex);
        auto it = cache.table.find(lambda.entries);
        if (it != cache.table.end()) return *it->second;
    }
    std::vector<long long> pos(lambda.entries.size()), neg(lambda.entries.size());
    bool has_pos = false;
    for (std::size_t i = 0; i < lambda.entries.size(); ++i) {
        pos[i] = std::max(0LL, lambda.entries[i]);
        neg[i] = std::max(0LL, -lambda.entries[i]);
        has_pos = has_pos || pos[i] > 0;
    }
    OperatorMatrix m = anti_effective_operator(neg);
    if (has_pos) m = unitriangular_inverse(anti_effective_operator(pos)) * m;
    std::unique_lock lock(cache.mutex);
    auto& slot = cache.table[lambda.entries];
    if (!slot) slot = std::make_unique<OperatorMatrix>(std::move(m));
    return *slot;
}

KClass line_bundle_mult(const Weight& lambda, const KClass& a) {
    require_same(lambda.window(), a.window());
    return line_bundle_operator(lambda).apply(a);
}

KClass line_bundle_class(const Weight& lambda) { return line_bundle_mult(lambda, KClass::unit(lambda.window())); }

KClass k_chevalley(const Weight& lambda, const Permutation& w) {
    require_same(lambda.window(), w.window());
    if (!lambda.is_dominant()) throw DomainError("k_chevalley needs a dominant weight");
    KClass out = line_bundle_mult(lambda, KClass::O(w));
    for (const auto& [v, c] : out.terms()) {
        if (c.sign() < 0 || !bruhat_leq(v, w))
            throw InvariantViolation("K-Chevalley coefficient at " + v.str() + " violates positivity or support");
    }
    if (out.coefficient(w) != Integer(1)) throw InvariantViolation("K-Chevalley diagonal coefficient is not 1");
    return out;
}

KClass o_lambda_mult(const Weight& lambda, const Permutation& w) {
    require_same(lambda.window(), w.window());
    if (!lambda.is_dominant()) throw DomainError("o_lambda_mult needs a dominant weight");
    KClass out = KClass::O(w) - line_bundle_mult(-lambda, KClass::O(w));
    const int lw = length(w);
    for (const auto& [v, c] : out.terms()) {
        if (v == w || !bruhat_leq(v, w) || c.sign() != parity_sign(lw - length(v) - 1))
            throw InvariantViolation("O_lambda product violates the sign pattern at " + v.str());
    }
    return out;
}

KClass dualize(const KClass& a) {
    const int n = a.window();
    const auto& lr = line_bundle_operator(rho(n));
    const int top = n * (n - 1) / 2;
    KClass out(n, KBasis::O);
    for (const KClass ao = basis_convert(a, KBasis::O); const auto& [w, c] : ao.terms())
        out += lr.apply(KClass::I(w)).scaled(c * parity_sign(top - length(w)));
    return out;
}

KClass i_rho_transition(const Permutation& w) {
    KClass out = line_bundle_mult(rho(w.window()), KClass::I(w));
    for (const auto& [v, c] : out.terms())
        if (c.sign() < 0 || !bruhat_leq(v, w))
            throw InvariantViolation("h_w^v at " + v.str() + " is negative or outside the interval");
    return out;
}

KClass richardson_class(const Permutation& v, const Permutation& w) {
    return multiply(KClass::O(w), KClass::O_opp(v));
}

std::map<std::pair<Permutation, Permutation>, Integer> diagonal_class_k(int n) {
    // Same derivation as the cohomological diagonal, with the χ-pairing
    // matrix P_{x,y} = χ(O_x·I^y).
    const auto& g = SymmetricGroup::get(n);
    const std::size_t N = g.size();
    std::vector<mpq_class> m(N * 2 * N);
    auto at = [&](std::size_t r, std::size_t c) -> mpq_class& { return m[r * 2 * N + c]; };
    for (std::size_t x = 0; x < N; ++x) {
        for (std::size_t y = 0; y < N; ++y)
            at(x, y) = duality_pairing(KClass::O(g.at(x)), KClass::I_opp(g.at(y))).to_mpz();
        at(x, N + x) = 1;
    }
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t pivot = col;
        while (pivot < N && at(pivot, col) == 0) ++pivot;
        if (pivot == N) throw InvariantViolation("χ-pairing matrix is singular");
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
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y) {
            const mpq_class& q = at(y, N + x);
            if (q == 0) continue;
            if (q.get_den() != 1) throw InvariantViolation("diagonal class has a non-integral coefficient");
            out.emplace(std::make_pair(g.at(x), g.at(y)), Integer(q.get_num()));
        }
    return out;
}

Report diagonal_identities(int n, const DiagonalOptions& options) {
    Report report("diagonal");
    report.parameters["n"] = n;
    report.parameters["seed"] = options.seed;
    report.parameters["samples"] = options.samples;
    const auto& g = SymmetricGroup::get(n);
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int s = 0; s < options.samples; ++s) {
        KClass a(n, KBasis::O);
        for (const auto& w : g.elements()) a.add_term(w, coeff(rng));
        report.check(expand_by_duality(a) == a, {{"identity", "functional"}, {"sample", s}});
    }

    std::vector<std::pair<Permutation, Permutation>> pairs;
    if (options.pair) {
        pairs.push_back(*options.pair);
    } else {
        for (const auto& v : g.elements())
            for (const auto& w : g.elements()) pairs.emplace_back(v, w);
    }
    std::size_t terms = 0;
    for (const auto& [v, w] : pairs) {
        // (χ⊗χ)((Σ_x O_x⊗I^x)·(O^v⊗O_w)) = Σ_x χ(O_x·O^v)·χ(I^x·O_w).
        Integer total = 0;
        for (const auto& x : g.elements()) {
            const KClass left = multiply(KClass::O(x), KClass::O_opp(v));
            const KClass right = multiply(KClass::I_opp(x), KClass::O(w));
            const bool in_left = bruhat_leq(v, x);
            const bool in_right = bruhat_leq(x, w);
            report.check(in_left || left.is_zero(), {{"identity", "O_x*O^v vanishes off v<=x"}, {"v", v.str()}, {"x", x.str()}});
            report.check(in_right || right.is_zero(), {{"identity", "I^x*O_w vanishes off x<=w"}, {"x", x.str()}, {"w", w.str()}});
            const Integer term = chi(left) * chi(right);
            if (!term.is_zero()) {
                ++terms;
                report.check(in_left && in_right, {{"identity", "interval support"}, {"v", v.str()}, {"w", w.str()}, {"x", x.str()}});
            }
            total += term;
        }
        report.check(total == chi(richardson_class(v, w)),
                     {{"identity", "contraction equals chi(O_w*O^v)"}, {"v", v.str()}, {"w", w.str()}});
    }
    report.summary["pairs"] = pairs.size();
    report.summary["nonzero_terms"] = terms;
    return report;
}

}  // namespace schubert
