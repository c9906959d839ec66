#include "schubert/poly.hpp"

#include <algorithm>
#include <unordered_map>

#include "schubert/errors.hpp"

namespace schubert {

Monomial::Monomial(std::span<const int> exponents) {
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        set_exponent(static_cast<int>(i) + 1, exponents[i]);
    }
}

void Monomial::set_exponent(int var, int value) {
    if (var < 1) throw DomainError("variables are 1-based");
    if (value < 0) throw DomainError("negative exponent");
    if (var > kMaxVars) {
        if (value == 0) return;
        throw LimitExceeded("monomial uses more than " + std::to_string(kMaxVars) + " variables");
    }
    if (value > kMaxExponent) throw LimitExceeded("exponent exceeds " + std::to_string(kMaxExponent));
    exps_[static_cast<std::size_t>(var - 1)] = static_cast<std::uint8_t>(value);
}

int Monomial::degree() const noexcept {
    int d = 0;
    for (auto e : exps_) d += e;
    return d;
}

int Monomial::num_vars() const noexcept {
    for (int i = kMaxVars; i >= 1; --i)
        if (exps_[static_cast<std::size_t>(i - 1)]) return i;
    return 0;
}

std::vector<int> Monomial::exponents() const {
    std::vector<int> out(exps_.begin(), exps_.begin() + num_vars());
    return out;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial r;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        int s = exps_[i] + other.exps_[i];
        if (s > kMaxExponent) throw LimitExceeded("exponent exceeds " + std::to_string(kMaxExponent));
        r.exps_[i] = static_cast<std::uint8_t>(s);
    }
    return r;
}

Monomial Monomial::swapped(int i) const {
    if (i < 1 || i >= kMaxVars) throw LimitExceeded("variable index out of range");
    Monomial r = *this;
    std::swap(r.exps_[static_cast<std::size_t>(i - 1)], r.exps_[static_cast<std::size_t>(i)]);
    return r;
}

std::size_t Monomial::Hash::operator()(const Monomial& m) const noexcept {
    std::uint64_t a, b;
    std::memcpy(&a, m.exps_.data(), 8);
    std::memcpy(&b, m.exps_.data() + 8, 8);
    std::uint64_t h = a * 0x9E3779B97F4A7C15ull;
    h ^= (b + 0x7F4A7C159E3779B9ull) + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ (h >> 31));
}

namespace {

using Accumulator = std::unordered_map<Monomial, Integer, Monomial::Hash>;

std::vector<Poly::Term> drain_sorted(Accumulator& acc) {
    std::vector<Poly::Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) out.emplace_back(m, std::move(c));
    std::sort(out.begin(), out.end(), [](const Poly::Term& a, const Poly::Term& b) { return a.first > b.first; });
    return out;
}

}  // namespace

Poly Poly::constant(const Integer& c) { return monomial(Monomial{}, c); }

Poly Poly::variable(int i) {
    Monomial m;
    m.set_exponent(i, 1);
    return monomial(m);
}

Poly Poly::monomial(const Monomial& m, const Integer& c) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace_back(m, c);
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    Accumulator acc;
    for (auto& [m, c] : terms) acc[m] += c;
    Poly p;
    p.terms_ = drain_sorted(acc);
    return p;
}

Integer Poly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.first > key; });
    if (it != terms_.end() && it->first == m) return it->second;
    return 0;
}

int Poly::min_degree() const {
    if (terms_.empty()) return 0;
    int d = terms_.front().first.degree();
    for (const auto& t : terms_) d = std::min(d, t.first.degree());
    return d;
}

int Poly::max_degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
}

bool Poly::is_homogeneous() const { return min_degree() == max_degree(); }

Poly Poly::homogeneous_component(int degree) const {
    Poly p;
    for (const auto& t : terms_)
        if (t.first.degree() == degree) p.terms_.push_back(t);
    return p;
}

int Poly::num_vars() const {
    int v = 0;
    for (const auto& t : terms_) v = std::max(v, t.first.num_vars());
    return v;
}

Poly Poly::swap_variables(int i) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.emplace_back(m.swapped(i), c);
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
    Poly p;
    p.terms_ = std::move(out);
    return p;
}

Poly Poly::scaled(const Integer& c) const {
    Poly p;
    if (c.is_zero()) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& [m, v] : terms_) p.terms_.emplace_back(m, v * c);
    return p;
}

namespace {

template <bool Subtract>
std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b) {
    std::vector<Poly::Term> out;
    out.reserve(a.size() + b.size());
    auto i = a.begin(), j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first > j->first)) {
            out.push_back(*i++);
        } else if (i == a.end() || j->first > i->first) {
            out.emplace_back(j->first, Subtract ? -j->second : j->second);
            ++j;
        } else {
            Integer c = i->second;
            if constexpr (Subtract)
                c -= j->second;
            else
                c += j->second;
            if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& rhs) {
    terms_ = merge<false>(terms_, rhs.terms_);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    terms_ = merge<true>(terms_, rhs.terms_);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Accumulator acc;
    acc.reserve(a.size() * b.size());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) acc[ma.times(mb)].add_product(ca, cb);
    Poly p;
    p.terms_ = drain_sorted(acc);
    return p;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Integer mag = c.sign() < 0 ? -c : c;
        if (first)
            s += c.sign() < 0 ? "-" : "";
        else
            s += c.sign() < 0 ? " - " : " + ";
        first = false;
        auto e = m.exponents();
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += '*';
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            s += mag.str();
        else if (mag == Integer(1))
            s += mono;
        else
            s += mag.str() + "*" + mono;
    }
    return s;
}

Poly divided_difference(int i, const Poly& f) {
    if (i < 1) throw DomainError("divided difference index must be positive");
    Accumulator acc;
    for (const auto& [m, c] : f.terms()) {
        const int p = m.exponent(i), q = m.exponent(i + 1);
        if (p == q) continue;
        // (x_i^p x_{i+1}^q - x_i^q x_{i+1}^p)/(x_i - x_{i+1})
        //   = sign * (x_i x_{i+1})^lo * Σ_{k=0}^{hi-lo-1} x_i^{hi-lo-1-k} x_{i+1}^k
        const int lo = std::min(p, q), hi = std::max(p, q);
        const Integer coeff = p > q ? c : -c;
        Monomial base = m;
        for (int k = 0; k < hi - lo; ++k) {
            base.set_exponent(i, lo + (hi - lo - 1 - k));
            base.set_exponent(i + 1, lo + k);
            acc[base] += coeff;
        }
    }
    return Poly::from_terms([&] {
        std::vector<Poly::Term> t;
        t.reserve(acc.size());
        for (auto& kv : acc) t.emplace_back(kv.first, std::move(kv.second));
        return t;
    }());
}

Poly isobaric_difference(int i, const Poly& f) {
    return divided_difference(i, f - Poly::variable(i + 1) * f);
}

}  // namespace schubert
