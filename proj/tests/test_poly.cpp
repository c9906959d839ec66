#include <doctest.h>
#include <gmpxx.h>

#include <random>

#include "schubert/errors.hpp"
#include "schubert/integer.hpp"
#include "schubert/poly.hpp"

using namespace schubert;

namespace {

Poly x(int i) { return Poly::variable(i); }

Poly random_poly(std::mt19937& rng, int vars, int max_exp, int terms) {
    std::uniform_int_distribution<int> e(0, max_exp), c(-4, 4);
    std::vector<Poly::Term> t;
    for (int k = 0; k < terms; ++k) {
        std::vector<int> ex(static_cast<std::size_t>(vars));
        for (auto& v : ex) v = e(rng);
        t.emplace_back(Monomial(ex), c(rng));
    }
    return Poly::from_terms(std::move(t));
}

}  // namespace

TEST_CASE("integer arithmetic promotes on overflow") {
    Integer big = Integer(std::numeric_limits<long long>::max());
    Integer sum = big + Integer(1);
    CHECK_FALSE(sum.fits_int64());
    CHECK(sum.str() == "9223372036854775808");
    CHECK((sum - Integer(1)).fits_int64());
    CHECK(sum - Integer(1) == big);
    Integer sq = big * big;
    mpz_class ref(std::to_string(std::numeric_limits<long long>::max()));
    ref *= ref;
    CHECK(sq.str() == ref.get_str());
    CHECK(Integer::from_string(sq.str()) == sq);
    CHECK(Integer::from_string("-12") == Integer(-12));
    CHECK_THROWS_AS(Integer::from_string("1x"), std::invalid_argument);
    CHECK(-Integer(std::numeric_limits<long long>::min()) > big);
    CHECK(Integer(-3) < Integer(2));
    Integer acc = 5;
    acc.add_product(big, Integer(2));
    CHECK(acc.str() == "18446744073709551619");
    CHECK(sq.sign() == 1);
    CHECK((-sq).sign() == -1);
}

TEST_CASE("polynomial arithmetic") {
    Poly f = x(1) * x(1) * x(2) - x(3).scaled(3) + Poly::one();
    CHECK(f + Poly{} == f);
    CHECK(x(1) * x(2) == Poly::monomial(Monomial(std::vector<int>{1, 1})));
    CHECK((x(1) * x(1) * x(2)).swap_variables(1) == x(2) * x(2) * x(1));
    CHECK((f - f).is_zero());
    CHECK(f.str() == "x1^2*x2 - 3*x3 + 1");
    CHECK(f.min_degree() == 0);
    CHECK(f.max_degree() == 3);
    CHECK(f.homogeneous_component(1) == x(3).scaled(-3));
    CHECK(f.constant_term() == Integer(1));
    // Terms are kept in decreasing lex order with x1 > x2 > ...
    CHECK(f.leading_term().first == Monomial(std::vector<int>{2, 1}));
    CHECK_THROWS_AS(Monomial(std::vector<int>{300}), LimitExceeded);
}

TEST_CASE("divided differences") {
    CHECK(divided_difference(1, x(1)) == Poly::one());
    CHECK(divided_difference(1, x(1) * x(2)).is_zero());
    CHECK(divided_difference(1, x(1) * x(1) * x(2)) == x(1) * x(2));
    CHECK(isobaric_difference(1, Poly::one()) == Poly::one());
    CHECK(isobaric_difference(1, x(1)) == Poly::one());

    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Poly f = random_poly(rng, 5, 3, 6);
        for (int i = 1; i <= 4; ++i) {
            // Exactness: (x_i - x_{i+1}) ∂_i f = f - s_i f.
            CHECK((x(i) - x(i + 1)) * divided_difference(i, f) == f - f.swap_variables(i));
            CHECK(divided_difference(i, divided_difference(i, f)).is_zero());
            Poly p = isobaric_difference(i, f);
            CHECK(isobaric_difference(i, p) == p);
        }
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 2; j <= 4; ++j) {
                CHECK(divided_difference(i, divided_difference(j, f)) == divided_difference(j, divided_difference(i, f)));
                CHECK(isobaric_difference(i, isobaric_difference(j, f)) ==
                      isobaric_difference(j, isobaric_difference(i, f)));
            }
        for (int i = 1; i <= 3; ++i) {
            auto d = [&](int k, const Poly& p) { return divided_difference(k, p); };
            auto pi = [&](int k, const Poly& p) { return isobaric_difference(k, p); };
            CHECK(d(i, d(i + 1, d(i, f))) == d(i + 1, d(i, d(i + 1, f))));
            CHECK(pi(i, pi(i + 1, pi(i, f))) == pi(i + 1, pi(i, pi(i + 1, f))));
        }
    }
}
