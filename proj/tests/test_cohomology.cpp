#include <doctest.h>

#include "oracles.hpp"
#include "schubert/cohomology.hpp"
#include "schubert/errors.hpp"
#include "schubert/oracle_lab.hpp"

using namespace schubert;

namespace {

Permutation wo_times(const Permutation& w) { return compose(longest_element(w.window()), w); }

CohClass divisor_sum(int n) {
    CohClass c(n);
    for (int i = 1; i < n; ++i) c += CohClass::opposite(Permutation::simple(i, n));
    return c;
}

}  // namespace

TEST_CASE("cup against divided-difference extraction") {
    for (int n = 2; n <= 4; ++n) {
        const auto perms = all_permutations(n);
        for (const auto& v : perms)
            for (const auto& w : perms) {
                const CohClass got = cup(CohClass::schubert(v), CohClass::schubert(w));
                const Poly f = schubert_poly(wo_times(v)) * schubert_poly(wo_times(w));
                for (const auto& x : perms) {
                    const Integer want = oracle::extract_schubert(f, wo_times(x));
                    REQUIRE(got.coefficient(x) == want);
                }
            }
    }
}

TEST_CASE("cup units, degrees and the S_3 divisor square") {
    const CohClass a = CohClass::schubert(Permutation{2, 3, 1}) + CohClass::schubert(Permutation{1, 3, 2}).scaled(3);
    CHECK(cup(CohClass::unit(3), a) == a);
    CHECK(cup(CohClass::point(2), CohClass::point(2)).is_zero());
    const CohClass d = CohClass::opposite(Permutation::simple(1, 3));
    CHECK(cup(d, d) == monk_iterated_product(wo_times(Permutation::simple(1, 3)), wo_times(Permutation::simple(1, 3))));
    CHECK_THROWS_AS(cup(CohClass::unit(2), CohClass::unit(3)), WindowMismatch);
}

TEST_CASE("Poincaré pairing and structure constants") {
    for (const auto& w : all_permutations(3)) {
        CHECK(pairing(CohClass::schubert(w), CohClass::opposite(w)) == 1);
        CHECK(structure_constant(longest_element(3), w, w) == 1);
        for (const auto& v : all_permutations(3))
            if (v != w) CHECK(pairing(CohClass::schubert(w), CohClass::opposite(v)) == 0);
    }
    CHECK(pairing(CohClass::unit(3), CohClass::point(3)) == 1);
}

TEST_CASE("Chevalley formula") {
    const Weight lam{{7, 3}};
    CHECK(chevalley_cup(lam, Permutation{2, 1}) == CohClass::point(2).scaled(4));
    for (const auto& w : all_permutations(4)) {
        CHECK(chevalley_cup(Weight{{5, 5, 5, 5}}, w).is_zero());
        for (int d = 1; d < 4; ++d)
            CHECK(chevalley_cup(fundamental_weight(d, 4), w) ==
                  cup(CohClass::opposite(Permutation::simple(d, 4)), CohClass::schubert(w)));
        CHECK(chevalley_cup(rho(4), w) == cup(divisor_sum(4), CohClass::schubert(w)));
    }
    CHECK(c1_class(rho(4)) == divisor_sum(4));
    CHECK(c1_class(Weight{{1, 1, 1}}).is_zero());
    CHECK(c1_class(fundamental_weight(2, 3)) == CohClass::opposite(Permutation::simple(2, 3)));
}

TEST_CASE("divisors of sections and the canonical divisor") {
    const DivisorTerms k = canonical_divisor(longest_element(4));
    CHECK(k.size() == 3);
    for (int i = 1; i < 4; ++i) CHECK(k.at(compose(longest_element(4), Permutation::simple(i, 4))) == -2);
    CHECK(canonical_divisor(Permutation{2, 1, 3}) == DivisorTerms{{Permutation{1, 2, 3}, -2}});
    CHECK_THROWS_AS(divisor_of_section(Weight{{0, 1, 0}}, longest_element(3)), DomainError);
    // The divisor of a section represents c1(L_λ) restricted to X_w.
    for (const auto& w : all_permutations(4)) {
        CohClass as_class(4);
        for (const auto& [v, c] : divisor_of_section(rho(4), w)) as_class.add_term(v, c);
        CHECK(as_class == chevalley_cup(rho(4), w));
    }
}

TEST_CASE("line bundle positivity and the Picard kernel") {
    CHECK(line_bundle_positivity(rho(3)) == Positivity::Ample);
    CHECK(line_bundle_positivity(fundamental_weight(1, 3)) == Positivity::GloballyGenerated);
    CHECK(line_bundle_positivity(Weight{{0, 1, 0}}) == Positivity::Neither);
    CHECK(std::string(to_string(Positivity::Ample)) == "ample");
    CHECK_FALSE(pic_kernel_check(Permutation{1, 3, 2}, Weight{{5, 5, 3}}));
    CHECK(pic_kernel_check(Permutation{1, 3, 2}, Weight{{5, 3, 3}}));
    // λ restricts to zero on X_w exactly when c1(L_λ)·[X_w] vanishes.
    for (const auto& w : all_permutations(3))
        for (const Weight& lam : {Weight{{5, 5, 3}}, Weight{{5, 3, 3}}, Weight{{2, 2, 2}}, Weight{{3, 1, 0}}})
            CHECK(pic_kernel_check(w, lam) == chevalley_cup(lam, w).is_zero());
}

TEST_CASE("diagonal class") {
    const auto d2 = diagonal_class_cohomology(2);
    CHECK(d2.size() == 2);
    CHECK(d2.at({Permutation{1, 2}, Permutation{1, 2}}) == 1);
    CHECK(d2.at({Permutation{2, 1}, Permutation{2, 1}}) == 1);
    // Contraction against [X^a × X_b] gives the identity matrix.
    const auto d3 = diagonal_class_cohomology(3);
    for (const auto& a : all_permutations(3))
        for (const auto& b : all_permutations(3)) {
            Integer s = 0;
            for (const auto& [key, c] : d3)
                s += c * pairing(CohClass::schubert(key.first), CohClass::opposite(a)) *
                     pairing(CohClass::opposite(key.second), CohClass::schubert(b));
            CHECK(s == (a == b ? 1 : 0));
        }
}
