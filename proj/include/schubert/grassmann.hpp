#pragma once

// Grassmannians Gr(d, n): multi-indices, partitions, Bruhat posets, Pieri
// and K-Pieri formulas, Littlewood–Richardson numbers through the full flag
// variety, and the Hilbert-polynomial model of K(P^n).

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schubert/integer.hpp"
#include "schubert/poset.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

/// I = (i_1 < … < i_d) ⊂ {1, …, n}. X_I has dimension |I| = Σ (i_j − j).
struct GrassIndex {
    int d = 0;
    int n = 0;
    std::vector<int> indices;

    GrassIndex() = default;
    GrassIndex(int n, std::vector<int> indices);
    static GrassIndex parse(const std::string& text, int n);

    [[nodiscard]] int dim() const;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const GrassIndex&, const GrassIndex&) = default;
    friend auto operator<=>(const GrassIndex&, const GrassIndex&) = default;
};

/// Orders by dimension, then lexicographically.
struct DimLexLess {
    bool operator()(const GrassIndex& a, const GrassIndex& b) const;
};

enum class PartitionConvention {
    /// λ_j = i_j − j; area = dim X_I.
    Dimension,
    /// The dual partition; area = codim X_I.
    Codimension,
};
const char* to_string(PartitionConvention c);

/// Weakly increasing parts (exactly d of them, zeros included), each at
/// most n − d. The convention tag says which area the partition measures.
struct Partition {
    int d = 0;
    int n = 0;
    std::vector<int> parts;
    PartitionConvention convention = PartitionConvention::Dimension;

    Partition() = default;
    /// Parts may be given in any order and with fewer than d entries.
    Partition(int d, int n, std::vector<int> parts, PartitionConvention convention);

    [[nodiscard]] int area() const;
    /// Weakly decreasing view, trailing zeros dropped, e.g. "(2,1)".
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

Partition to_partition(const GrassIndex& I);
/// (n − i_d, n − 1 − i_{d−1}, …, n − d + 1 − i_1) as a codimension partition
/// of I, i.e. the dual of to_partition(I).
Partition dual(const Partition& lambda);
GrassIndex from_partition(const Partition& lambda);

/// Minimal coset representative: w(k) = i_k for k ≤ d, the rest increasing.
Permutation min_rep(const GrassIndex& I);
Permutation max_rep(const GrassIndex& I);
/// The multi-index of the coset w·W_P (sorted first d values).
GrassIndex from_permutation(const Permutation& w, int d);

/// J ≤ I, i.e. X_J ⊆ X_I: j_k ≤ i_k for all k.
bool contains(const GrassIndex& I, const GrassIndex& J);

/// All multi-indices of Gr(d, n), ordered by DimLexLess.
std::vector<GrassIndex> grass_indices(int d, int n);
Poset<GrassIndex> grass_poset(int d, int n);
/// Möbius function of the Bruhat poset of Gr(d, n) by recursion; 0 when
/// J ≰ I.
Integer grass_mobius(const GrassIndex& J, const GrassIndex& I);

using GrassTerms = std::map<GrassIndex, Integer, DimLexLess>;

/// c_1(L)∪[X_I] = Σ_{J⋖I} [X_J].
GrassTerms pieri_divisor_cohomology(const GrassIndex& I);

enum class KPieriMode { L, LInverse, Divisor };
/// L: [L]·O_I = Σ_{J≤I} O_J. LInverse: its Möbius inversion
/// Σ_{J≤I} μ(J, I) O_J. Divisor: O_I − [L^{-1}]·O_I.
GrassTerms k_pieri(const GrassIndex& I, KPieriMode mode);

enum class Theory { H, K };

/// Structure constants of Gr(d, n) in the given theory, read off products
/// of the pulled-back classes [X_{w_max(I)}] (resp. O_{w_max(I)}) in the full
/// flag variety. Keys use the convention of the inputs.
std::map<Partition, Integer> lr_coefficients(const Partition& lambda, const Partition& mu, Theory theory);

/// div(p_I|X_I) computed on the full flag variety as the zero divisor of
/// the χ_d-section on X_{w_max(I)}; every coefficient is checked to be 1.
GrassTerms plucker_divisor(const GrassIndex& I);

struct IncidenceSingularity {
    bool singular = false;
    /// (j − 1, i + 1) when singular.
    std::optional<std::pair<int, int>> locus;
};
/// Schubert variety I_{i,j} = {V_1 ⊆ E_{1..i}, E_{1..j−1} ⊆ V_{n−1}} of the
/// incidence variety of pairs (line ⊂ hyperplane) in C^n.
IncidenceSingularity incidence_singularity(int i, int j, int n);

/// Univariate polynomial with rational coefficients, coefficient k on t^k.
struct HilbertPoly {
    std::vector<mpq_class> coefficients;

    [[nodiscard]] int degree() const;
    [[nodiscard]] mpq_class operator()(const mpq_class& t) const;
    /// P(t + k).
    [[nodiscard]] HilbertPoly shifted(long k) const;
    /// Exact interpolation through (t_0, y_0), …, (t_m, y_m).
    static HilbertPoly interpolate(const std::vector<std::pair<mpq_class, mpq_class>>& points);

    friend HilbertPoly operator+(const HilbertPoly& a, const HilbertPoly& b);
    friend HilbertPoly operator*(const mpq_class& c, const HilbertPoly& p);
    friend bool operator==(const HilbertPoly& a, const HilbertPoly& b);
};

/// K(P^n) through Hilbert polynomials: [O_{P^j}] ↦ binomial(t + j, j).
class ProjectiveKModel {
public:
    explicit ProjectiveKModel(int n);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] HilbertPoly basis_hilbert(int j) const;
    /// Coefficients c_0..c_n with P = Σ c_j binomial(t + j, j). Throws
    /// DomainError if deg P > n or P is not integer-valued.
    [[nodiscard]] std::vector<Integer> decompose(const HilbertPoly& p) const;
    [[nodiscard]] HilbertPoly compose(const std::vector<Integer>& c) const;
    /// χ(O_{P^j}(k)) = binomial(k + j, j), polynomial convention.
    [[nodiscard]] Integer euler(int j, long k) const;
    /// χ(O_{P^j} · O_{P^{n−i}}(−1)): the linear sections meet in P^{j−i}
    /// (empty when j < i), and the twist shifts its Hilbert polynomial.
    [[nodiscard]] Integer dual_pairing(int j, int i) const;

private:
    int n_;
};

}  // namespace schubert
