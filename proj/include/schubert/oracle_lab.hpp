#pragma once

// Brute-force oracles that re-derive engine results by independent routes,
// and the cone counterexample to alternating signs.

#include <cstdint>
#include <vector>

#include "schubert/cohomology.hpp"
#include "schubert/grassmann.hpp"
#include "schubert/report.hpp"

namespace schubert {

/// [X_v]∪[X_w] by expanding S_{w_o v} into monomials and applying the
/// multiplication by x_i = c_1(L_{ε_i}) one variable at a time, with the
/// Monk rule evaluated by direct length comparison.
CohClass monk_iterated_product(const Permutation& v, const Permutation& w);

/// μ(v, w) by the defining recursion over the Bruhat interval. Throws
/// DomainError when v ≰ w.
Integer mobius_recursive(const Permutation& v, const Permutation& w);

/// Number of elements of the Bruhat interval [v, w].
std::size_t interval_size(const Permutation& v, const Permutation& w);

struct ConeOptions {
    int fit_lo = 0;      // 0 means d
    int fit_hi = 0;      // 0 means d + 5
    int verify_lo = 0;   // 0 means d + 6
    int verify_hi = 0;   // 0 means d + 10
    int max_shifts = 8;  // window shifts tried before giving up
};

struct ConeResult {
    int d = 0;
    Integer c2, c1, c0;
    /// Coefficients c_0..c_4 in the binomial basis of K(P^4).
    std::vector<Integer> coefficients;
    HilbertPoly hilbert;
    /// Raw Hilbert function of the cone ring at k = 0..verify_hi.
    std::vector<Integer> hilbert_function;
    /// Monomials of the saturation missing from the semigroup, all degrees.
    Integer gaps;
    int fit_lo = 0, fit_hi = 0, verify_lo = 0, verify_hi = 0;
    /// c_0 < 0 breaks the sign pattern required at the point class.
    bool violates_signs = false;
};

/// The cone Y ⊂ P^4 over the curve (x^d, x^{d−1}y, xy^{d−1}, y^d) ⊂ P^3.
/// Asserts c_2 = d, c_1 ≤ 0 and c_0 ≤ 3 − d (InvariantViolation otherwise).
ConeResult cone_counterexample(int d, const ConeOptions& options = {});

/// Full scan of the sign pattern of c_vw^x over S_n, and χ = 1 for every
/// Richardson class O_w·O^v with v ≤ w.
Report sign_theorem_scan(int n);

/// Random integer combinations of S_w (resp. G_w) for w in S_window must
/// round-trip through expansion.
Report expansion_delta_check(int sample_count, int window, std::uint64_t seed = 1);

}  // namespace schubert
