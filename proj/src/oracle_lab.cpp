#include "schubert/oracle_lab.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "schubert/errors.hpp"
#include "schubert/ktheory.hpp"
#include "schubert/polyring.hpp"

namespace schubert {

namespace {

int inversions(const Permutation& w) {
    int c = 0;
    for (int i = 1; i <= w.window(); ++i)
        for (int j = i + 1; j <= w.window(); ++j) c += w(i) > w(j);
    return c;
}

// x_i·[X_u] = Σ_{j≠i} ±[X_{u t_ij}] over transpositions lowering the length
// by exactly one, with sign + for j > i and − for j < i.
CohClass times_variable(int i, const CohClass& a) {
    const int n = a.window();
    CohClass out(n);
    for (const auto& [u, c] : a.terms()) {
        const int lu = inversions(u);
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            const auto t = compose(u, Permutation::transposition(std::min(i, j), std::max(i, j), n));
            if (inversions(t) != lu - 1) continue;
            out.add_term(t, j > i ? c : -c);
        }
    }
    return out;
}

}  // namespace

CohClass monk_iterated_product(const Permutation& v, const Permutation& w) {
    if (v.window() != w.window()) throw WindowMismatch(v.window(), w.window());
    const int n = v.window();
    const Poly& s = schubert_poly(compose(longest_element(n), v));
    CohClass out(n);
    const CohClass start = CohClass::schubert(w);
    for (const auto& [m, c] : s.terms()) {
        CohClass cur = start;
        for (int i = 1; i <= m.num_vars() && !cur.is_zero(); ++i)
            for (int k = 0; k < m.exponent(i); ++k) cur = times_variable(i, cur);
        out += cur.scaled(c);
    }
    return out;
}

Integer mobius_recursive(const Permutation& v, const Permutation& w) {
    if (!bruhat_leq(v, w)) throw DomainError("mobius_recursive needs v <= w");
    std::vector<Permutation> interval;
    for (const auto& z : all_permutations(v.window()))
        if (bruhat_leq(v, z) && bruhat_leq(z, w)) interval.push_back(z);
    // all_permutations is sorted by length, so every z comes after its
    // predecessors in the interval.
    std::map<Permutation, Integer> mu;
    for (const auto& z : interval) {
        if (z == v) {
            mu[z] = 1;
            continue;
        }
        Integer s = 0;
        for (const auto& [y, m] : mu)
            if (y != z && bruhat_leq(y, z)) s += m;
        mu[z] = -s;
    }
    return mu.at(w);
}

std::size_t interval_size(const Permutation& v, const Permutation& w) {
    std::size_t count = 0;
    for (const auto& z : all_permutations(v.window())) count += bruhat_leq(v, z) && bruhat_leq(z, w);
    return count;
}

namespace {

// Degree-m piece of the semigroup generated by (d,0), (d−1,1), (1,d−1),
// (0,d): the set of second coordinates b of reachable (md − b, b).
std::vector<std::set<int>> reachable_pieces(int d, int max_m) {
    std::vector<std::set<int>> pieces{{0}};
    const int steps[] = {0, 1, d - 1, d};
    for (int m = 1; m <= max_m; ++m) {
        std::set<int> next;
        for (int b : pieces.back())
            for (int s : steps) next.insert(b + s);
        pieces.push_back(std::move(next));
    }
    return pieces;
}

}  // namespace

ConeResult cone_counterexample(int d, const ConeOptions& options) {
    if (d < 3) throw DomainError("cone_counterexample needs d >= 3");
    ConeResult r;
    r.d = d;
    int fit_lo = options.fit_lo > 0 ? options.fit_lo : d;
    int fit_hi = options.fit_hi > 0 ? options.fit_hi : d + 5;
    int verify_lo = options.verify_lo > 0 ? options.verify_lo : d + 6;
    int verify_hi = options.verify_hi > 0 ? options.verify_hi : d + 10;
    if (fit_hi - fit_lo < 2 || verify_hi < verify_lo || verify_lo <= fit_hi)
        throw DomainError("cone fitting windows are inconsistent");

    for (int attempt = 0;; ++attempt) {
        if (attempt > options.max_shifts) throw LimitExceeded("cone Hilbert polynomial did not stabilize");
        const auto pieces = reachable_pieces(d, verify_hi);
        // Cone ring = curve ring adjoin one variable, so its Hilbert function
        // is the partial sum of the curve's.
        std::vector<Integer> h;
        long long running = 0;
        for (const auto& p : pieces) {
            running += static_cast<long long>(p.size());
            h.emplace_back(running);
        }
        std::vector<std::pair<mpq_class, mpq_class>> pts;
        for (int k = fit_lo; k < fit_lo + 3; ++k) pts.emplace_back(k, mpq_class(h[static_cast<std::size_t>(k)].to_mpz()));
        const HilbertPoly fit = HilbertPoly::interpolate(pts);
        bool stable = true;
        for (int k = fit_lo; k <= fit_hi && stable; ++k) stable = fit(k) == mpq_class(h[static_cast<std::size_t>(k)].to_mpz());
        for (int k = verify_lo; k <= verify_hi && stable; ++k)
            stable = fit(k) == mpq_class(h[static_cast<std::size_t>(k)].to_mpz());
        if (!stable) {
            fit_lo += 2, fit_hi += 2, verify_lo += 2, verify_hi += 2;
            continue;
        }
        r.hilbert = fit;
        r.hilbert_function = std::move(h);
        // Gaps: (md − b, b) in the saturation but not in the semigroup,
        // summed over all degrees m. High degrees have none.
        long long gaps = 0;
        for (std::size_t m = 0; m < pieces.size(); ++m)
            gaps += static_cast<long long>(m) * d + 1 - static_cast<long long>(pieces[m].size());
        r.gaps = gaps;
        break;
    }
    r.fit_lo = fit_lo, r.fit_hi = fit_hi, r.verify_lo = verify_lo, r.verify_hi = verify_hi;

    const ProjectiveKModel model(4);
    r.coefficients = model.decompose(r.hilbert);
    r.c0 = r.coefficients[0];
    r.c1 = r.coefficients[1];
    r.c2 = r.coefficients[2];
    if (!r.coefficients[3].is_zero() || !r.coefficients[4].is_zero())
        throw InvariantViolation("cone class has components above dimension 2");
    if (r.c2 != Integer(d)) throw InvariantViolation("cone degree coefficient differs from d");
    if (r.c1.sign() > 0) throw InvariantViolation("cone coefficient c_1 is positive");
    if (r.c0 > Integer(3 - d)) throw InvariantViolation("cone coefficient c_0 exceeds 3 - d");
    r.violates_signs = r.c0.sign() < 0;
    return r;
}

Report sign_theorem_scan(int n) {
    Report report("signs");
    report.parameters["n"] = n;
    const auto& g = SymmetricGroup::get(n);
    const int top = g.longest_length();
    // Nonzero constants by codimension excess ℓ(v)+ℓ(w)−ℓ(w_o)−ℓ(x), which
    // is never negative.
    std::map<int, std::size_t> layers;
    std::size_t triples = 0;
    for (const auto& v : g.elements())
        for (const auto& w : g.elements()) {
            const KClass p = multiply(KClass::O(v), KClass::O(w));
            for (const auto& x : g.elements()) {
                ++triples;
                const Integer c = p.coefficient(x);
                if (c.is_zero()) continue;
                const int exponent = length(v) + length(w) + length(x) + top;
                const int excess = length(v) + length(w) - top - length(x);
                ++layers[excess];
                report.check(excess >= 0, {{"v", v.str()}, {"w", w.str()}, {"x", x.str()}, {"excess", excess}});
                report.check((exponent % 2 == 0 ? c : -c).sign() >= 0,
                             {{"v", v.str()}, {"w", w.str()}, {"x", x.str()}, {"c", c.str()}});
            }
        }
    std::size_t richardson = 0;
    for (const auto& v : g.elements())
        for (const auto& w : g.elements()) {
            const KClass r = richardson_class(v, w);
            const bool leq = bruhat_leq(v, w);
            report.check(leq ? chi(r) == Integer(1) : r.is_zero(),
                         {{"richardson_v", v.str()}, {"richardson_w", w.str()}, {"chi", chi(r).str()}});
            richardson += leq;
        }
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (const auto& [k, c] : layers) counts[std::to_string(k)] = c;
    report.summary["triples"] = triples;
    report.summary["nonzero_by_layer"] = counts;
    report.summary["richardson_classes"] = richardson;
    return report;
}

Report expansion_delta_check(int sample_count, int window, std::uint64_t seed) {
    Report report("expansion-delta");
    report.parameters["samples"] = sample_count;
    report.parameters["window"] = window;
    report.parameters["seed"] = seed;
    const auto perms = all_permutations(window);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (PolyBasis basis : {PolyBasis::Schubert, PolyBasis::Grothendieck}) {
        const char* name = basis == PolyBasis::Schubert ? "S" : "G";
        report.check(expand(Poly{}, basis).empty(), {{"basis", name}, {"case", "empty"}});
        for (int s = 0; s < sample_count; ++s) {
            Expansion want;
            for (int k = 0; k < 4; ++k) {
                const Integer c = coeff(rng);
                const Permutation w = perms[pick(rng)].trimmed();
                auto& slot = want[w];
                slot += c;
                if (slot.is_zero()) want.erase(w);
            }
            const Expansion got = expand(combine(want, basis), basis);
            report.check(got == want, {{"basis", name}, {"sample", s}});
        }
    }
    return report;
}

}  // namespace schubert
