#pragma once

// K(Fl_n) with the structure-sheaf basis O_w = [O_{X_w}] and the boundary
// basis I_w = [O_{X_w}(−∂X_w)], dimension convention as in cohomology.
// χ is the O-coefficient sum (χ(O_w) = 1).

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "schubert/cohomology.hpp"
#include "schubert/integer.hpp"
#include "schubert/report.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

enum class KBasis { O, I };
const char* to_string(KBasis b);

class KClass {
public:
    KClass(int n, KBasis basis);

    static KClass O(const Permutation& w);
    static KClass I(const Permutation& w);
    /// O^w = O_{w_o w}, I^w = I_{w_o w}.
    static KClass O_opp(const Permutation& w);
    static KClass I_opp(const Permutation& w);
    static KClass unit(int n) { return O(longest_element(n)); }

    [[nodiscard]] int window() const noexcept { return n_; }
    [[nodiscard]] KBasis basis() const noexcept { return basis_; }
    [[nodiscard]] const ClassTerms& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] Integer coefficient(const Permutation& w) const;

    void add_term(const Permutation& w, const Integer& c);

    /// Both operands are brought to this class's basis first.
    KClass& operator+=(const KClass& rhs);
    KClass& operator-=(const KClass& rhs);
    [[nodiscard]] KClass scaled(const Integer& c) const;
    friend KClass operator+(KClass a, const KClass& b) { return a += b; }
    friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
    /// Equal as elements of K(X), whatever the bases.
    friend bool operator==(const KClass& a, const KClass& b);

private:
    int n_;
    KBasis basis_;
    ClassTerms terms_;
};

/// O_w = Σ_{v≤w} I_v and I_w = Σ_{v≤w} (−1)^{ℓ(w)−ℓ(v)} O_v.
KClass basis_convert(const KClass& a, KBasis target);

/// Product in the O-basis.
KClass multiply(const KClass& a, const KClass& b);

Integer chi(const KClass& a);

/// χ(a·b).
Integer duality_pairing(const KClass& a, const KClass& b);

/// Σ_w χ(a·I^w) O_w; equals `a` by duality.
KClass expand_by_duality(const KClass& a);

/// c_vw^x, the coefficient of O_x in O_v·O_w. Throws InvariantViolation
/// when (−1)^{ℓ(v)+ℓ(w)+ℓ(x)+ℓ(w_o)} c_vw^x < 0.
Integer structure_constant_k(const Permutation& v, const Permutation& w, const Permutation& x);

/// Dense matrix of an operator in the O-basis, rows and columns indexed by
/// SymmetricGroup::get(n): column w holds the image of O_w.
struct OperatorMatrix {
    int n = 0;
    std::size_t size = 0;
    std::vector<Integer> entries;

    OperatorMatrix() = default;
    explicit OperatorMatrix(int window);
    [[nodiscard]] const Integer& at(std::size_t row, std::size_t col) const { return entries[row * size + col]; }
    Integer& at(std::size_t row, std::size_t col) { return entries[row * size + col]; }
    [[nodiscard]] KClass apply(const KClass& a) const;
    /// True iff zero below the diagonal in the Bruhat sense (entry (x, w)
    /// non-zero only if x ≤ w) with unit diagonal.
    [[nodiscard]] bool is_unitriangular() const;
    friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
    friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;
};

/// Exact inverse of a unitriangular matrix; InvariantViolation otherwise.
OperatorMatrix unitriangular_inverse(const OperatorMatrix& m);

/// Matrix of multiplication by [L_λ] (memoized). For λ = α − β with α, β
/// entrywise non-negative, [L_{−β}] is multiplication by Π(1−x_i)^{β_i}
/// on Grothendieck polynomials and [L_α] is the inverse of [L_{−α}].
const OperatorMatrix& line_bundle_operator(const Weight& lambda);

KClass line_bundle_mult(const Weight& lambda, const KClass& a);
/// [L_λ] as an element of K(X).
KClass line_bundle_class(const Weight& lambda);

/// [L_λ]·O_w for dominant λ, checked non-negative, unit at w and supported
/// on the Bruhat interval below w.
KClass k_chevalley(const Weight& lambda, const Permutation& w);

/// O_λ·O_w with O_λ = 1 − [L_{−λ}] for dominant λ; the coefficient at v is
/// checked to be zero or of sign (−1)^{ℓ(w)−ℓ(v)−1}.
KClass o_lambda_mult(const Weight& lambda, const Permutation& w);

/// The duality involution: O_w^∨ = (−1)^{ℓ(w_o)−ℓ(w)} [L_ρ]·I_w.
KClass dualize(const KClass& a);

/// h_w^v: coefficients of I_w(ρ) = [L_ρ]·I_w in the O-basis, checked
/// non-negative and supported below w.
KClass i_rho_transition(const Permutation& w);

/// O_w·O^v, the class of the Richardson variety X_w^v.
KClass richardson_class(const Permutation& v, const Permutation& w);

/// Coefficients d_{x,y} of [O_diag] = Σ d_{x,y} O_x ⊗ I^y, derived by
/// inverting the χ-pairing matrix.
std::map<std::pair<Permutation, Permutation>, Integer> diagonal_class_k(int n);

struct DiagonalOptions {
    std::uint64_t seed = 1;
    int samples = 10;
    /// Pair for the Richardson refinement; every pair when absent.
    std::optional<std::pair<Permutation, Permutation>> pair;
};

/// Checks α = Σ χ(α·I^w)O_w on random α and the interval refinement of the
/// diagonal contraction against O^v ⊗ O_w.
Report diagonal_identities(int n, const DiagonalOptions& options = {});

}  // namespace schubert
