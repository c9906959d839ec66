#include <doctest.h>

#include <gmpxx.h>

#include <set>

#include "schubert/cohomology.hpp"
#include "schubert/errors.hpp"
#include "schubert/oracle_lab.hpp"

using namespace schubert;

namespace {

struct ConeOracle {
    mpz_class c0, c1, c2, c3, c4;
    long gaps = 0;
};

// Semigroup generated by (d,0), (d−1,1), (1,d−1), (0,d): degree-k part is
// the set of first coordinates of k-fold sums. The cone adjoins one variable,
// so its Hilbert function is the partial sum.
ConeOracle cone_oracle(int d) {
    const int top = d + 10;
    std::vector<std::set<int>> layer{{0}};
    for (int k = 1; k <= top; ++k) {
        std::set<int> next;
        for (int a : layer.back())
            for (int g : {d, d - 1, 1, 0}) next.insert(a + g);
        layer.push_back(next);
    }
    ConeOracle out;
    std::vector<mpq_class> h;
    long running = 0;
    for (int k = 0; k <= top; ++k) {
        running += static_cast<long>(layer[static_cast<std::size_t>(k)].size());
        h.emplace_back(running);
        out.gaps += static_cast<long>(d) * k + 1 - static_cast<long>(layer[static_cast<std::size_t>(k)].size());
    }
    // Lagrange through three points past the irregular range; the remaining
    // points must lie on the same quadratic.
    const std::vector<int> xs{d, d + 1, d + 2};
    const auto P = [&](const mpq_class& t) {
        mpq_class s = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            mpq_class term = h[static_cast<std::size_t>(xs[i])];
            for (std::size_t j = 0; j < xs.size(); ++j)
                if (i != j) term *= (t - xs[j]) / mpq_class(xs[i] - xs[j]);
            s += term;
        }
        return s;
    };
    for (int k = d; k <= top; ++k) REQUIRE(P(k) == h[static_cast<std::size_t>(k)]);
    // c_j = (∇^j P)(−1) in the basis binomial(t+j, j).
    std::vector<mpq_class> vals;
    for (int m = 1; m <= 5; ++m) vals.push_back(P(-m));
    std::vector<mpz_class> c;
    std::vector<mpq_class> cur = vals;
    for (int j = 0; j < 5; ++j) {
        REQUIRE(cur[0].get_den() == 1);
        c.push_back(cur[0].get_num());
        std::vector<mpq_class> nxt;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) nxt.push_back(cur[i] - cur[i + 1]);
        cur = nxt;
    }
    out.c0 = c[0];
    out.c1 = c[1];
    out.c2 = c[2];
    out.c3 = c[3];
    out.c4 = c[4];
    return out;
}

}  // namespace

TEST_CASE("iterated Monk oracle") {
    for (const auto& v : all_permutations(3))
        for (const auto& w : all_permutations(3))
            CHECK(monk_iterated_product(v, w) == cup(CohClass::schubert(v), CohClass::schubert(w)));
    const auto w = Permutation{2, 3, 1};
    CHECK(monk_iterated_product(longest_element(3), w) == CohClass::schubert(w));
}

TEST_CASE("recursive Möbius oracle") {
    for (const auto& w : all_permutations(4)) {
        CHECK(mobius_recursive(w, w) == 1);
        for (const auto& v : all_permutations(4))
            if (bruhat_leq(v, w)) CHECK(mobius_recursive(v, w) == ((length(w) - length(v)) % 2 ? -1 : 1));
    }
    CHECK(interval_size(Permutation::identity(3), longest_element(3)) == 6);
    CHECK(interval_size(Permutation{2, 1, 3}, Permutation{2, 3, 1}) == 2);
    CHECK_THROWS_AS(mobius_recursive(Permutation{3, 1, 2}, Permutation{2, 3, 1}), DomainError);
}

TEST_CASE("cone counterexample against a semigroup count") {
    for (int d = 3; d <= 8; ++d) {
        const ConeResult r = cone_counterexample(d);
        const ConeOracle o = cone_oracle(d);
        CHECK(r.d == d);
        CHECK(r.c2.str() == o.c2.get_str());
        CHECK(r.c1.str() == o.c1.get_str());
        CHECK(r.c0.str() == o.c0.get_str());
        CHECK(o.c3 == 0);
        CHECK(o.c4 == 0);
        CHECK(r.gaps.str() == std::to_string(o.gaps));
        CHECK(r.c2 == Integer(d));
        CHECK(r.c1.sign() <= 0);
        CHECK(r.c0 <= Integer(3 - d));
        CHECK(r.violates_signs == (d >= 4));
    }
    CHECK(cone_counterexample(3).c0 == 0);
    CHECK(cone_counterexample(4).c0 == -1);
    CHECK(cone_counterexample(4).gaps == 1);
    ConeOptions opt;
    opt.fit_lo = 12;
    opt.fit_hi = 17;
    opt.verify_lo = 18;
    opt.verify_hi = 22;
    CHECK(cone_counterexample(5, opt).c0 == cone_counterexample(5).c0);
}

TEST_CASE("sign pattern scan and expansion round trips") {
    CHECK(sign_theorem_scan(2).pass);
    CHECK(sign_theorem_scan(3).pass);
    const Report e = expansion_delta_check(20, 4, 3);
    CHECK(e.pass);
    CHECK(e.suite == "expansion-delta");
}
