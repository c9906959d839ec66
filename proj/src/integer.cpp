#include "schubert/integer.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace schubert {

namespace {

mpz_class from_ll(long long v) {
    mpz_class r;
    // mpz_set_si takes long, which is 64-bit on the supported LP64 targets.
    static_assert(sizeof(long) == sizeof(long long));
    mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
    return r;
}

}  // namespace

Integer::Integer(const mpz_class& v) {
    set_big(v);
    normalize();
}

Integer::Integer(const Integer& other)
    : small_(other.small_), big_(other.big_ ? std::make_unique<mpz_class>(*other.big_) : nullptr) {}

Integer& Integer::operator=(const Integer& other) {
    if (this != &other) {
        small_ = other.small_;
        big_ = other.big_ ? std::make_unique<mpz_class>(*other.big_) : nullptr;
    }
    return *this;
}

Integer Integer::from_string(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("malformed integer literal: " + s);
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer literal: " + s);
    if (s[0] == '+') s.erase(0, 1);
    Integer r;
    r.set_big(mpz_class(s, 10));
    r.normalize();
    return r;
}

int Integer::sign() const noexcept {
    if (big_) return sgn(*big_);
    return (small_ > 0) - (small_ < 0);
}

long long Integer::to_int64() const {
    if (big_) throw std::overflow_error("integer does not fit in 64 bits: " + str());
    return small_;
}

mpz_class Integer::to_mpz() const { return big_ ? *big_ : from_ll(small_); }

std::string Integer::str() const { return big_ ? big_->get_str(10) : std::to_string(small_); }

void Integer::set_big(mpz_class v) {
    if (big_)
        *big_ = std::move(v);
    else
        big_ = std::make_unique<mpz_class>(std::move(v));
}

void Integer::normalize() {
    if (big_ && mpz_fits_slong_p(big_->get_mpz_t())) {
        small_ = mpz_get_si(big_->get_mpz_t());
        big_.reset();
    }
}

Integer& Integer::operator+=(const Integer& rhs) {
    if (!big_ && !rhs.big_) {
        long long r;
        if (!__builtin_add_overflow(small_, rhs.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    set_big(to_mpz() + rhs.to_mpz());
    normalize();
    return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
    if (!big_ && !rhs.big_) {
        long long r;
        if (!__builtin_sub_overflow(small_, rhs.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    set_big(to_mpz() - rhs.to_mpz());
    normalize();
    return *this;
}

Integer& Integer::operator*=(const Integer& rhs) {
    if (!big_ && !rhs.big_) {
        long long r;
        if (!__builtin_mul_overflow(small_, rhs.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    set_big(to_mpz() * rhs.to_mpz());
    normalize();
    return *this;
}

Integer& Integer::add_product(const Integer& a, const Integer& b) {
    if (!big_ && !a.big_ && !b.big_) {
        long long p, r;
        if (!__builtin_mul_overflow(a.small_, b.small_, &p) && !__builtin_add_overflow(small_, p, &r)) {
            small_ = r;
            return *this;
        }
    }
    set_big(to_mpz() + a.to_mpz() * b.to_mpz());
    normalize();
    return *this;
}

Integer Integer::operator-() const {
    if (!big_ && small_ != std::numeric_limits<long long>::min()) return Integer(-small_);
    return Integer(mpz_class(-to_mpz()));
}

bool operator==(const Integer& a, const Integer& b) noexcept {
    // Both sides are normalized, so a big value never equals a small one.
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    int c = cmp(a.to_mpz(), b.to_mpz());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.str(); }

}  // namespace schubert
