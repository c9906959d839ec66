#include "schubert/verify.hpp"

#include <gmpxx.h>

#include <chrono>
#include <random>

#include "schubert/cohomology.hpp"
#include "schubert/errors.hpp"
#include "schubert/grassmann.hpp"
#include "schubert/ktheory.hpp"
#include "schubert/oracle_lab.hpp"
#include "schubert/polyring.hpp"
#include "schubert/table.hpp"

namespace schubert {

namespace {

using Clock = std::chrono::steady_clock;
using Json = nlohmann::ordered_json;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int sign_of_parity(int k) { return k % 2 == 0 ? 1 : -1; }

std::vector<Weight> chevalley_probes(int n, bool with_coordinates) {
    std::vector<Weight> probes;
    for (int d = 1; d < n; ++d) probes.push_back(fundamental_weight(d, n));
    probes.push_back(rho(n));
    if (with_coordinates)
        for (int i = 1; i <= n; ++i) probes.push_back(coordinate_weight(i, n));
    return probes;
}

std::string weight_str(const Weight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.entries.size(); ++i) s += (i ? "," : "") + std::to_string(w.entries[i]);
    return s;
}

// Reads a full-flag class on maximal representatives as a Grassmannian
// class; components elsewhere are reported.
GrassTerms pull_to_grassmannian(const ClassTerms& terms, int d, Report& report, const std::string& what) {
    GrassTerms out;
    for (const auto& [x, c] : terms) {
        const GrassIndex J = from_permutation(x, d);
        if (max_rep(J) != x) {
            report.fail({{"check", what}, {"off_max_rep", x.str()}, {"coeff", c.str()}});
            continue;
        }
        out.emplace(J, c);
    }
    return out;
}

mpz_class binomial_oracle(long a, int j) {
    // Polynomial convention: binom(a, j) = (−1)^j binom(j − a − 1, j) for a < 0.
    mpz_class r;
    if (a >= 0) {
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(j));
        return r;
    }
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(j - a - 1), static_cast<unsigned long>(j));
    return j % 2 ? mpz_class(-r) : r;
}

}  // namespace

Report check_k_duality(int n) {
    const auto t0 = Clock::now();
    Report report("k-duality");
    report.parameters["n"] = n;
    const auto& g = SymmetricGroup::get(n);
    std::size_t strict_pairs = 0;
    for (const auto& w : g.elements()) {
        const KClass ow = KClass::O(w);
        const KClass iw = KClass::I(w);
        for (const auto& v : g.elements()) {
            const bool leq = bruhat_leq(v, w);
            const Integer oi = duality_pairing(ow, KClass::I_opp(v));
            report.check(oi == Integer(v == w ? 1 : 0), {{"pairing", "chi(O_w*I^v)"}, {"w", w.str()}, {"v", v.str()}, {"value", oi.str()}});
            const Integer oo = duality_pairing(ow, KClass::O_opp(v));
            report.check(oo == Integer(leq ? 1 : 0), {{"pairing", "chi(O_w*O^v)"}, {"w", w.str()}, {"v", v.str()}, {"value", oo.str()}});
            const Integer ii = duality_pairing(iw, KClass::I_opp(v));
            const Integer want = leq ? Integer(sign_of_parity(length(w) - length(v))) : Integer(0);
            report.check(ii == want, {{"pairing", "chi(I_w*I^v)"}, {"w", w.str()}, {"v", v.str()}, {"value", ii.str()}});
            strict_pairs += leq && v != w;
        }
    }
    // Two readings of χ(O_w·O^v): "1 iff v ≤ w" is what the scan asserts; the
    // reading "1 iff v = w" is contradicted on every strict pair.
    report.summary["chi_O_O_reading"] = "1 iff v <= w";
    report.summary["pairs_refuting_v_equals_w_reading"] = strict_pairs;
    report.summary["pairs"] = g.size() * g.size();
    report.summary["seconds"] = seconds_since(t0);
    return report;
}

Report check_poincare_duality(int n) {
    const auto t0 = Clock::now();
    Report report("poincare-duality");
    report.parameters["n"] = n;
    const auto& g = SymmetricGroup::get(n);
    for (const auto& w : g.elements()) {
        const CohClass xw = CohClass::schubert(w);
        for (const auto& v : g.elements()) {
            const Integer p = pairing(xw, CohClass::opposite(v));
            report.check(p == Integer(v == w ? 1 : 0), {{"w", w.str()}, {"v", v.str()}, {"value", p.str()}});
        }
    }
    report.summary["pairs"] = g.size() * g.size();
    report.summary["seconds"] = seconds_since(t0);
    return report;
}

namespace {

template <class F>
Report triple_scan(const char* name, int full_n, int sample_n, int samples, std::uint64_t seed, F&& check_triple) {
    const auto t0 = Clock::now();
    Report report(name);
    report.parameters["full_n"] = full_n;
    report.parameters["sample_n"] = sample_n;
    report.parameters["samples"] = samples;
    report.parameters["seed"] = seed;
    std::size_t triples = 0;
    for (int m = 1; m <= full_n; ++m) {
        const auto& g = SymmetricGroup::get(m);
        for (const auto& v : g.elements())
            for (const auto& w : g.elements())
                for (const auto& x : g.elements()) {
                    ++triples;
                    check_triple(report, v, w, x);
                }
    }
    if (sample_n > full_n) {
        const auto& g = SymmetricGroup::get(sample_n);
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
        for (int s = 0; s < samples; ++s) {
            ++triples;
            check_triple(report, g.at(pick(rng)), g.at(pick(rng)), g.at(pick(rng)));
        }
    }
    report.summary["triples"] = triples;
    report.summary["seconds"] = seconds_since(t0);
    return report;
}

}  // namespace

Report check_positivity(int full_n, int sample_n, int samples, std::uint64_t seed) {
    return triple_scan("positivity", full_n, sample_n, samples, seed,
                       [](Report& r, const Permutation& v, const Permutation& w, const Permutation& x) {
                           try {
                               const Integer c = structure_constant(v, w, x);
                               r.check(c.sign() >= 0, {{"v", v.str()}, {"w", w.str()}, {"x", x.str()}});
                           } catch (const InvariantViolation& e) {
                               r.fail({{"v", v.str()}, {"w", w.str()}, {"x", x.str()}, {"error", e.what()}});
                           }
                       });
}

Report check_signs(int full_n, int sample_n, int samples, std::uint64_t seed) {
    Report report = triple_scan("signs", full_n, sample_n, samples, seed,
                                [](Report& r, const Permutation& v, const Permutation& w, const Permutation& x) {
                                    try {
                                        const Integer c = structure_constant_k(v, w, x);
                                        const int top = v.window() * (v.window() - 1) / 2;
                                        const int e = length(v) + length(w) + length(x) + top;
                                        r.check((c * sign_of_parity(e)).sign() >= 0,
                                                {{"v", v.str()}, {"w", w.str()}, {"x", x.str()}, {"c", c.str()}});
                                    } catch (const InvariantViolation& ex) {
                                        r.fail({{"v", v.str()}, {"w", w.str()}, {"x", x.str()}, {"error", ex.what()}});
                                    }
                                });
    for (int m = 2; m <= full_n; ++m) report.merge(sign_theorem_scan(m));
    return report;
}

Report check_chevalley_routes(int n) {
    Report report("chevalley-routes");
    report.parameters["n"] = n;
    std::size_t checks = 0;
    for (const auto& lambda : chevalley_probes(n, true)) {
        const CohClass c1 = c1_class(lambda);
        for (const auto& w : all_permutations(n)) {
            ++checks;
            report.check(chevalley_cup(lambda, w) == cup(c1, CohClass::schubert(w)),
                         {{"lambda", weight_str(lambda)}, {"w", w.str()}});
        }
    }
    report.summary["checks"] = checks;
    return report;
}

Report check_monk_oracle(int n) {
    Report report("monk-oracle");
    report.parameters["n"] = n;
    std::size_t pairs = 0;
    for (int m = 1; m <= n; ++m)
        for (const auto& v : all_permutations(m))
            for (const auto& w : all_permutations(m)) {
                ++pairs;
                report.check(monk_iterated_product(v, w) == cup(CohClass::schubert(v), CohClass::schubert(w)),
                             {{"v", v.str()}, {"w", w.str()}});
            }
    report.summary["pairs"] = pairs;
    return report;
}

Report check_basis_change(int n) {
    Report report("basis-change");
    report.parameters["n"] = n;
    for (int m = 1; m <= n; ++m) {
        const auto& g = SymmetricGroup::get(m);
        const std::size_t N = g.size();
        // Columns: images of O_w in the I-basis and of I_w in the O-basis.
        std::vector<Integer> to_i(N * N), to_o(N * N);
        for (std::size_t w = 0; w < N; ++w) {
            const KClass a = basis_convert(KClass::O(g.at(w)), KBasis::I);
            const KClass b = basis_convert(KClass::I(g.at(w)), KBasis::O);
            for (const auto& [v, c] : a.terms()) to_i[g.index_of(v) * N + w] = c;
            for (const auto& [v, c] : b.terms()) to_o[g.index_of(v) * N + w] = c;
        }
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) {
                Integer ab = 0, ba = 0;
                for (std::size_t k = 0; k < N; ++k) {
                    ab.add_product(to_i[r * N + k], to_o[k * N + c]);
                    ba.add_product(to_o[r * N + k], to_i[k * N + c]);
                }
                const Integer id = r == c ? 1 : 0;
                report.check(ab == id && ba == id, {{"n", m}, {"row", g.at(r).str()}, {"col", g.at(c).str()}});
                const Permutation& v = g.at(r);
                const Permutation& w = g.at(c);
                const Integer oracle = bruhat_leq(v, w) ? mobius_recursive(v, w) : Integer(0);
                report.check(to_o[r * N + c] == oracle, {{"n", m}, {"v", v.str()}, {"w", w.str()}, {"entry", to_o[r * N + c].str()}});
                report.check(Integer(mobius(v, w)) == oracle, {{"n", m}, {"mobius", "closed form"}, {"v", v.str()}, {"w", w.str()}});
            }
    }
    return report;
}

Report check_k_chevalley(int n) {
    Report report("k-chevalley");
    report.parameters["n"] = n;
    for (const auto& lambda : chevalley_probes(n, false)) {
        report.check(line_bundle_operator(lambda).is_unitriangular(), {{"lambda", weight_str(lambda)}, {"check", "unitriangular"}});
        for (const auto& w : all_permutations(n)) {
            try {
                const KClass k = k_chevalley(lambda, w);
                bool ok = k.coefficient(w) == Integer(1);
                for (const auto& [v, c] : k.terms()) ok = ok && c.sign() >= 0 && bruhat_leq(v, w);
                report.check(ok, {{"lambda", weight_str(lambda)}, {"w", w.str()}});
            } catch (const InvariantViolation& e) {
                report.fail({{"lambda", weight_str(lambda)}, {"w", w.str()}, {"error", e.what()}});
            }
        }
    }
    // Character additivity and triviality of L_{(c,…,c)} on a probe class.
    KClass probe(n, KBasis::O);
    for (const auto& w : all_permutations(n)) probe.add_term(w, length(w) % 3 - 1);
    const auto probes = chevalley_probes(n, true);
    for (const auto& a : probes)
        for (const auto& b : probes)
            report.check(line_bundle_mult(a, line_bundle_mult(-b, probe)) == line_bundle_mult(a - b, probe),
                         {{"check", "additivity"}, {"lambda", weight_str(a)}, {"mu", weight_str(-b)}});
    const Weight ones{std::vector<long long>(static_cast<std::size_t>(n), 1)};
    report.check(line_bundle_mult(ones, probe) == probe, {{"check", "trivial weight (1,...,1)"}});
    return report;
}

Report check_o_lambda(int n) {
    Report report("o-lambda");
    report.parameters["n"] = n;
    for (const auto& lambda : chevalley_probes(n, false))
        for (const auto& w : all_permutations(n)) {
            try {
                const KClass k = o_lambda_mult(lambda, w);
                const CohClass shadow = chevalley_cup(lambda, w);
                CohClass graded(n);
                for (const auto& [v, c] : k.terms()) {
                    const int gap = length(w) - length(v);
                    report.check(gap >= 1 && c.sign() == sign_of_parity(gap - 1), {{"lambda", weight_str(lambda)}, {"w", w.str()}, {"v", v.str()}});
                    if (gap == 1) graded.add_term(v, c);
                }
                report.check(graded == shadow, {{"lambda", weight_str(lambda)}, {"w", w.str()}, {"check", "graded shadow"}});
            } catch (const InvariantViolation& e) {
                report.fail({{"lambda", weight_str(lambda)}, {"w", w.str()}, {"error", e.what()}});
            }
        }
    return report;
}

Report check_dualize(int n, int samples, std::uint64_t seed) {
    Report report("dualize");
    report.parameters["n"] = n;
    report.parameters["samples"] = samples;
    report.parameters["seed"] = seed;
    const auto& g = SymmetricGroup::get(n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    auto random_class = [&] {
        KClass a(n, KBasis::O);
        for (int k = 0; k < 3; ++k) a.add_term(g.at(pick(rng)), coeff(rng));
        return a;
    };
    report.check(dualize(KClass::unit(n)) == KClass::unit(n), {{"check", "dual of 1"}});
    for (int s = 0; s < samples; ++s) {
        const KClass a = random_class();
        const KClass b = random_class();
        report.check(dualize(dualize(a)) == a, {{"check", "involution"}, {"sample", s}});
        report.check(dualize(multiply(a, b)) == multiply(dualize(a), dualize(b)), {{"check", "multiplicative"}, {"sample", s}});
    }
    for (const auto& lambda : chevalley_probes(n, true))
        report.check(dualize(line_bundle_class(lambda)) == line_bundle_class(-lambda),
                     {{"check", "line bundle dual"}, {"lambda", weight_str(lambda)}});
    // h_w^v ≥ 0, unitriangular, and O_w = Σ (−1)^{ℓ(w)−ℓ(v)} h_w^v I_v(ρ).
    std::vector<KClass> irho;
    for (const auto& w : g.elements()) {
        try {
            irho.push_back(i_rho_transition(w));
        } catch (const InvariantViolation& e) {
            report.fail({{"check", "h_w^v"}, {"w", w.str()}, {"error", e.what()}});
            irho.push_back(KClass(n, KBasis::O));
        }
        report.check(irho.back().coefficient(w) == Integer(1), {{"check", "h_w^w = 1"}, {"w", w.str()}});
    }
    for (std::size_t w = 0; w < g.size(); ++w) {
        KClass sum(n, KBasis::O);
        for (const auto& [v, h] : irho[w].terms())
            sum += irho[g.index_of(v)].scaled(h * sign_of_parity(g.length(w) - length(v)));
        report.check(sum == KClass::O(g.at(w)), {{"check", "inverse transition"}, {"w", g.at(w).str()}});
    }
    return report;
}

Report check_grassmann(int max_n) {
    Report report("grassmann");
    report.parameters["max_n"] = max_n;
    std::size_t indices = 0;
    for (int m = 2; m <= max_n; ++m)
        for (int d = 1; d < m; ++d) {
            const auto elems = grass_indices(d, m);
            const auto poset = grass_poset(d, m);
            report.check(poset.elements.size() == elems.size(), {{"d", d}, {"n", m}, {"check", "poset size"}});
            const Weight chi_d = fundamental_weight(d, m);
            for (const auto& I : elems) {
                ++indices;
                const Permutation w = max_rep(I);
                const auto tag = [&](const char* what) {
                    return Json{{"d", d}, {"n", m}, {"I", I.str()}, {"check", what}};
                };
                // Dictionaries.
                const Partition lam = to_partition(I);
                report.check(from_partition(lam) == I && from_partition(dual(lam)) == I && dual(dual(lam)) == lam &&
                                 dual(lam).area() == d * (m - d) - lam.area() && lam.area() == I.dim() &&
                                 from_permutation(min_rep(I), d) == I && length(min_rep(I)) == I.dim(),
                             tag("dictionaries"));
                // Cohomological Pieri and Plücker divisor against the flag.
                const GrassTerms pieri = pieri_divisor_cohomology(I);
                report.check(pull_to_grassmannian(chevalley_cup(chi_d, w).terms(), d, report, "pieri") == pieri, tag("pieri"));
                try {
                    report.check(plucker_divisor(I) == pieri, tag("plucker"));
                } catch (const InvariantViolation& e) {
                    report.fail({{"I", I.str()}, {"error", e.what()}});
                }
                // K-Pieri in all three modes.
                const auto kl = k_pieri(I, KPieriMode::L);
                report.check(pull_to_grassmannian(k_chevalley(chi_d, w).terms(), d, report, "k_pieri L") == kl, tag("k_pieri L"));
                const auto kinv = k_pieri(I, KPieriMode::LInverse);
                report.check(pull_to_grassmannian(line_bundle_mult(-chi_d, KClass::O(w)).terms(), d, report, "k_pieri L^-1") == kinv,
                             tag("k_pieri L^-1"));
                const auto kdiv = k_pieri(I, KPieriMode::Divisor);
                report.check(pull_to_grassmannian(o_lambda_mult(chi_d, w).terms(), d, report, "k_pieri divisor") == kdiv,
                             tag("k_pieri divisor"));
                GrassTerms round;
                for (const auto& [J, c] : kinv)
                    for (const auto& [K, e] : k_pieri(J, KPieriMode::L)) {
                        auto& slot = round[K];
                        slot += c * e;
                        if (slot.is_zero()) round.erase(K);
                    }
                report.check(round == GrassTerms{{I, 1}}, tag("L after L^-1"));
            }
            // LR numbers: H non-negative, K with alternating signs, both
            // symmetric (codimension areas).
            for (const auto& I : elems)
                for (const auto& J : elems) {
                    const Partition a = dual(to_partition(I));
                    const Partition b = dual(to_partition(J));
                    const auto h = lr_coefficients(a, b, Theory::H);
                    const auto k = lr_coefficients(a, b, Theory::K);
                    report.check(h == lr_coefficients(b, a, Theory::H) && k == lr_coefficients(b, a, Theory::K),
                                 {{"lambda", a.str()}, {"mu", b.str()}, {"check", "lr symmetry"}});
                    for (const auto& [nu, c] : h)
                        report.check(c.sign() > 0 && nu.area() == a.area() + b.area(),
                                     {{"lambda", a.str()}, {"mu", b.str()}, {"nu", nu.str()}, {"theory", "H"}});
                    for (const auto& [nu, c] : k)
                        report.check((c * sign_of_parity(nu.area() - a.area() - b.area())).sign() > 0,
                                     {{"lambda", a.str()}, {"mu", b.str()}, {"nu", nu.str()}, {"theory", "K"}});
                }
        }
    report.summary["indices"] = indices;
    return report;
}

Report check_hilbert(int max_n, long k_lo, long k_hi, std::uint64_t seed) {
    Report report("hilbert");
    report.parameters["max_n"] = max_n;
    report.parameters["k_range"] = {k_lo, k_hi};
    report.parameters["seed"] = seed;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-20, 20);
    for (int n = 0; n <= max_n; ++n) {
        const ProjectiveKModel model(n);
        for (int j = 0; j <= n; ++j) {
            for (long k = k_lo; k <= k_hi; ++k) {
                const Integer e = model.euler(j, k);
                report.check(e.to_mpz() == binomial_oracle(k + j, j), {{"n", n}, {"j", j}, {"k", k}, {"value", e.str()}});
            }
            std::vector<Integer> delta(static_cast<std::size_t>(n) + 1, 0);
            delta[static_cast<std::size_t>(j)] = 1;
            report.check(model.decompose(model.basis_hilbert(j)) == delta, {{"n", n}, {"j", j}, {"check", "basis delta"}});
            for (int i = 0; i <= n; ++i)
                report.check(model.dual_pairing(j, i) == Integer(i == j ? 1 : 0), {{"n", n}, {"j", j}, {"i", i}, {"check", "dual basis"}});
        }
        // Both directions of the binomial-basis bijection.
        for (int s = 0; s < 20; ++s) {
            std::vector<Integer> c;
            for (int j = 0; j <= n; ++j) c.emplace_back(coeff(rng));
            const HilbertPoly p = model.compose(c);
            report.check(model.decompose(p) == c, {{"n", n}, {"sample", s}, {"check", "decompose(compose)"}});
            report.check(model.compose(model.decompose(p)) == p, {{"n", n}, {"sample", s}, {"check", "compose(decompose)"}});
        }
        if (n >= 1) {
            HilbertPoly half;
            half.coefficients = {0, mpq_class(1, 2)};
            bool rejected = false;
            try {
                (void)model.decompose(half);
            } catch (const DomainError&) {
                rejected = true;
            }
            report.check(rejected, {{"n", n}, {"check", "t/2 is not integer-valued"}});
        }
    }
    // In K(P^1): (1 − [O(−1)])² has Hilbert polynomial P(t) − 2P(t−1) + P(t−2).
    const ProjectiveKModel p1(1);
    const HilbertPoly one = p1.basis_hilbert(1);
    const HilbertPoly sq = one + mpq_class(-2) * one.shifted(-1) + one.shifted(-2);
    report.check(p1.decompose(sq) == std::vector<Integer>{0, 0}, {{"check", "(1-[O(-1)])^2 in K(P^1)"}});
    return report;
}

Report check_cone(int d_lo, int d_hi, double seconds_per_d) {
    Report report("cone");
    report.parameters["d_range"] = {d_lo, d_hi};
    report.parameters["seconds_per_d"] = seconds_per_d;
    Json rows = Json::array();
    for (int d = d_lo; d <= d_hi; ++d) {
        const auto t0 = Clock::now();
        try {
            const ConeResult r = cone_counterexample(d);
            const double t = seconds_since(t0);
            report.check(r.c2 == Integer(d) && r.c1.sign() <= 0 && r.c0 <= Integer(3 - d),
                         {{"d", d}, {"c2", r.c2.str()}, {"c1", r.c1.str()}, {"c0", r.c0.str()}});
            report.check(r.violates_signs == (d >= 4), {{"d", d}, {"check", "sign violation exactly for d >= 4"}});
            report.check(t <= seconds_per_d, {{"d", d}, {"seconds", t}});
            rows.push_back(Json{{"d", d}, {"c2", r.c2.str()}, {"c1", r.c1.str()}, {"c0", r.c0.str()}, {"gaps", r.gaps.str()}});
        } catch (const std::exception& e) {
            report.fail({{"d", d}, {"error", e.what()}});
        }
    }
    report.summary["classes"] = rows;
    return report;
}

Report check_stability(int n) {
    Report report("stability");
    report.parameters["n"] = n;
    const auto perms = all_permutations(n);
    for (const auto& w : perms)
        for (int m : {n + 1, n + 2}) {
            report.check(schubert_poly_from_top(w.embedded(m)) == schubert_poly_from_top(w), {{"w", w.str()}, {"m", m}, {"basis", "S"}});
            report.check(grothendieck_poly_from_top(w.embedded(m)) == grothendieck_poly_from_top(w), {{"w", w.str()}, {"m", m}, {"basis", "G"}});
        }
    for (PolyBasis basis : {PolyBasis::Schubert, PolyBasis::Grothendieck}) {
        const char* tag = basis == PolyBasis::Schubert ? "S" : "G";
        auto& table = ProductTable::get(basis, n);
        const auto& g = SymmetricGroup::get(n);
        for (const auto& u : perms)
            for (const auto& v : perms) {
                const StableProduct sp = stable_product_expand(u, v, basis);
                const Poly product = basis_poly(u, basis) * basis_poly(v, basis);
                for (int extra : {1, 2})
                    report.check(expand(product, basis, ExpandOptions{sp.ambient + extra, 0}) == sp.terms,
                                 {{"u", u.str()}, {"v", v.str()}, {"basis", tag}, {"ambient", sp.ambient + extra}});
                // The truncated table entry is the S_n part of the stable product.
                Expansion in_window;
                for (const auto& [x, c] : sp.terms)
                    if (x.window() <= n) in_window.emplace(x, c);
                Expansion from_table;
                for (const auto& [x, c] : table.product(g.opposite(g.index_of(u)), g.opposite(g.index_of(v))))
                    from_table.emplace(g.at(g.opposite(x)).trimmed(), c);
                report.check(in_window == from_table, {{"u", u.str()}, {"v", v.str()}, {"basis", tag}, {"check", "table"}});
            }
    }
    return report;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"duality", "positivity", "signs",  "mobius",   "chevalley-routes",
                                                "pieri",   "hilbert",    "cone",   "stability"};
    return names;
}

Report run_suite(const std::string& name, const SuiteParams& p) {
    Report report(name);
    report.parameters["n"] = p.n;
    report.parameters["seed"] = p.seed;
    const int n = p.n;
    const int full = std::min(n, 4);
    const int sample_n = n >= 5 ? 5 : 0;
    if (name == "duality") {
        report.merge(check_k_duality(n));
        report.merge(check_poincare_duality(n));
        report.merge(check_dualize(std::min(n, 4), p.samples, p.seed));
        DiagonalOptions opt;
        opt.seed = p.seed;
        report.merge(diagonal_identities(std::min(n, 3), opt));
    } else if (name == "positivity") {
        report.merge(check_positivity(full, sample_n, 10000, p.seed));
    } else if (name == "signs") {
        report.merge(check_signs(full, sample_n, 10000, p.seed));
    } else if (name == "mobius") {
        report.merge(check_basis_change(n));
    } else if (name == "chevalley-routes") {
        report.merge(check_chevalley_routes(n));
        report.merge(check_monk_oracle(full));
        report.merge(check_k_chevalley(n));
        report.merge(check_o_lambda(n));
    } else if (name == "pieri") {
        report.merge(check_grassmann(n));
    } else if (name == "hilbert") {
        report.merge(check_hilbert(n, -10, 10, p.seed));
    } else if (name == "cone") {
        report.parameters["dmax"] = p.dmax;
        report.merge(check_cone(3, p.dmax, 1.0));
    } else if (name == "stability") {
        report.merge(check_stability(n));
    } else {
        throw DomainError("unknown suite: " + name);
    }
    return report;
}

}  // namespace schubert
