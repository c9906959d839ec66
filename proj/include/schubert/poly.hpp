#pragma once

// Sparse multivariate polynomials in x_1, x_2, ... with exact integer
// coefficients, and the divided-difference operators acting on them.

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "schubert/integer.hpp"

namespace schubert {

/// Exponent vector with finite support. Variables are 1-based.
///
/// Storage is a fixed byte array, so trailing zeros are normalized away by
/// construction. Ordering is lexicographic with x_1 > x_2 > ···.
class Monomial {
public:
    static constexpr int kMaxVars = 16;
    static constexpr int kMaxExponent = 255;

    Monomial() noexcept = default;
    /// Throws LimitExceeded for too many variables or too large exponents.
    explicit Monomial(std::span<const int> exponents);

    [[nodiscard]] int exponent(int var) const noexcept {
        return var >= 1 && var <= kMaxVars ? exps_[static_cast<std::size_t>(var - 1)] : 0;
    }
    void set_exponent(int var, int value);
    [[nodiscard]] int degree() const noexcept;
    /// Index of the last variable with a non-zero exponent (0 for the unit).
    [[nodiscard]] int num_vars() const noexcept;
    /// Exponent vector without trailing zeros.
    [[nodiscard]] std::vector<int> exponents() const;
    [[nodiscard]] Monomial times(const Monomial& other) const;
    /// Exchanges the exponents of x_i and x_{i+1}.
    [[nodiscard]] Monomial swapped(int i) const;

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
        return std::memcmp(a.exps_.data(), b.exps_.data(), kMaxVars) == 0;
    }
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
        int c = std::memcmp(a.exps_.data(), b.exps_.data(), kMaxVars);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    struct Hash {
        std::size_t operator()(const Monomial& m) const noexcept;
    };

private:
    std::array<std::uint8_t, kMaxVars> exps_{};
};

/// Sparse polynomial over the integers. Terms are kept sorted in decreasing
/// monomial order with no zero coefficients, which is also the canonical
/// serialization order.
class Poly {
public:
    using Term = std::pair<Monomial, Integer>;

    Poly() = default;
    static Poly constant(const Integer& c);
    static Poly one() { return constant(1); }
    /// The variable x_i.
    static Poly variable(int i);
    static Poly monomial(const Monomial& m, const Integer& c = 1);
    /// Builds from arbitrary terms: merges duplicates and drops zeros.
    static Poly from_terms(std::vector<Term> terms);

    [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] Integer coefficient(const Monomial& m) const;
    [[nodiscard]] Integer constant_term() const { return coefficient(Monomial{}); }
    /// Degree bounds; both are 0 for the zero polynomial.
    [[nodiscard]] int min_degree() const;
    [[nodiscard]] int max_degree() const;
    [[nodiscard]] bool is_homogeneous() const;
    [[nodiscard]] Poly homogeneous_component(int degree) const;
    [[nodiscard]] int num_vars() const;
    /// Lex-greatest term; precondition: non-zero.
    [[nodiscard]] const Term& leading_term() const { return terms_.front(); }

    /// Action of s_i: exchanges x_i and x_{i+1}.
    [[nodiscard]] Poly swap_variables(int i) const;
    [[nodiscard]] Poly scaled(const Integer& c) const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly operator-() const { return scaled(-1); }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly&, const Poly&) = default;

    /// Human-readable form, e.g. "x1^2*x2 - 3*x3 + 1".
    [[nodiscard]] std::string str() const;

private:
    std::vector<Term> terms_;
};

/// ∂_i f = (f - s_i f) / (x_i - x_{i+1}). The quotient is computed term by
/// term, so it is always exact.
Poly divided_difference(int i, const Poly& f);

/// π_i f = ∂_i((1 - x_{i+1}) f).
Poly isobaric_difference(int i, const Poly& f);

}  // namespace schubert
