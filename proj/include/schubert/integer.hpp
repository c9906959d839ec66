#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace schubert {

/// Arbitrary-precision signed integer.
///
/// Values that fit in 64 bits are kept inline; arithmetic promotes to a GMP
/// integer on overflow and demotes back when the result fits again. Almost all
/// coefficients met in Schubert calculus at desk scale are small, so the fast
/// path dominates.
class Integer {
public:
    Integer() noexcept = default;
    Integer(long long v) noexcept : small_(v) {}  // NOLINT: implicit by design of numeric types
    Integer(int v) noexcept : small_(v) {}        // NOLINT
    explicit Integer(const mpz_class& v);

    Integer(const Integer& other);
    Integer(Integer&& other) noexcept = default;
    Integer& operator=(const Integer& other);
    Integer& operator=(Integer&& other) noexcept = default;
    ~Integer() = default;

    /// Parses an optionally signed decimal string; throws std::invalid_argument.
    static Integer from_string(std::string_view text);

    [[nodiscard]] bool is_zero() const noexcept { return !big_ && small_ == 0; }
    [[nodiscard]] int sign() const noexcept;
    [[nodiscard]] bool fits_int64() const noexcept { return !big_; }
    /// Throws std::overflow_error when the value does not fit.
    [[nodiscard]] long long to_int64() const;
    [[nodiscard]] mpz_class to_mpz() const;
    [[nodiscard]] std::string str() const;

    Integer& operator+=(const Integer& rhs);
    Integer& operator-=(const Integer& rhs);
    Integer& operator*=(const Integer& rhs);
    /// Adds a*b in place (the hot loop of polynomial multiplication).
    Integer& add_product(const Integer& a, const Integer& b);
    Integer operator-() const;

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

    friend bool operator==(const Integer& a, const Integer& b) noexcept;
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept;

    friend std::ostream& operator<<(std::ostream& os, const Integer& v);

private:
    void set_big(mpz_class v);
    void normalize();

    long long small_ = 0;
    std::unique_ptr<mpz_class> big_;  // engaged iff the value does not fit in int64
};

}  // namespace schubert
