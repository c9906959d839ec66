#pragma once

// H*(Fl_n) in the Schubert basis. Classes are indexed in the dimension
// convention: [X_w] has dimension ℓ(w), the fundamental class is [X_{w_o}]
// and the point class is [X_id]. The polynomial engine works with
// codimension indices w_o·w internally.

#include <map>
#include <utility>

#include "schubert/integer.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

using ClassTerms = std::map<Permutation, Integer, LengthLexLess>;

class CohClass {
public:
    explicit CohClass(int n);

    static CohClass schubert(const Permutation& w);
    /// [X^w] = [X_{w_o w}].
    static CohClass opposite(const Permutation& w);
    static CohClass unit(int n) { return schubert(longest_element(n)); }
    static CohClass point(int n) { return schubert(Permutation::identity(n)); }

    [[nodiscard]] int window() const noexcept { return n_; }
    [[nodiscard]] const ClassTerms& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] Integer coefficient(const Permutation& w) const;

    /// Adds c·[X_w]; w must lie in S_n.
    void add_term(const Permutation& w, const Integer& c);

    CohClass& operator+=(const CohClass& rhs);
    CohClass& operator-=(const CohClass& rhs);
    [[nodiscard]] CohClass scaled(const Integer& c) const;
    friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
    friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
    friend bool operator==(const CohClass&, const CohClass&) = default;

private:
    int n_;
    ClassTerms terms_;
};

/// [X_v]∪[X_w] extended bilinearly.
CohClass cup(const CohClass& a, const CohClass& b);

/// Coefficient of the point class in a∪b.
Integer pairing(const CohClass& a, const CohClass& b);

/// a_vw^x. Throws InvariantViolation if negative.
Integer structure_constant(const Permutation& v, const Permutation& w, const Permutation& x);

/// c_1(L_λ)∪[X_w] = Σ (λ_i − λ_j)[X_{w s_ij}] over the Schubert divisors of X_w.
CohClass chevalley_cup(const Weight& lambda, const Permutation& w);

/// c_1(L_λ) = Σ_i (λ_i − λ_{i+1})[X^{s_i}].
CohClass c1_class(const Weight& lambda);

/// Divisor data on X_w keyed by the Schubert divisor X_v, v = w s_ij.
using DivisorTerms = std::map<Permutation, Integer, LengthLexLess>;

/// Zero divisor of the extremal weight section of L_λ on X_w: λ_i − λ_j on
/// X_{w s_ij}. λ must be dominant.
DivisorTerms divisor_of_section(const Weight& lambda, const Permutation& w);

/// −(j − i + 1) on each Schubert divisor X_{w s_ij}.
DivisorTerms canonical_divisor(const Permutation& w);

enum class Positivity { Ample, GloballyGenerated, Neither };
Positivity line_bundle_positivity(const Weight& lambda);
const char* to_string(Positivity p);

/// True iff L_λ restricts trivially on X_w in Pic: λ_i = λ_{i+1} for every
/// i in support(w).
bool pic_kernel_check(const Permutation& w, const Weight& lambda);

/// Coefficients d_{w,v} of [diag(X)] = Σ d_{w,v} [X_w × X^v], derived by
/// inverting the Poincaré pairing matrix.
std::map<std::pair<Permutation, Permutation>, Integer> diagonal_class_cohomology(int n);

}  // namespace schubert
