#pragma once

// Schubert and Grothendieck polynomials and expansion of arbitrary
// polynomials in those bases.
//
// Conventions (validated by the test suite, not assumed):
//   S_{w_o} = G_{w_o} = x_1^{n-1} x_2^{n-2} ··· x_{n-1}  for w_o in S_n,
//   S_{w s_i} = ∂_i S_w and G_{w s_i} = π_i G_w  whenever ℓ(w s_i) = ℓ(w) - 1.
// Both families are stable under S_n ↪ S_{n+1}, so they are indexed by
// permutations of any window.

#include <map>
#include <optional>

#include "schubert/errors.hpp"
#include "schubert/poly.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

/// Coefficients on a polynomial basis indexed by S_∞. Keys are trimmed
/// (no trailing fixed points).
using Expansion = std::map<Permutation, Integer>;

enum class PolyBasis { Schubert, Grothendieck };

/// An expansion needed a basis element outside the allowed ambient window.
class AmbientExceeded : public LimitExceeded {
public:
    using LimitExceeded::LimitExceeded;
};

/// Schubert polynomial S_w (memoized, thread-safe).
const Poly& schubert_poly(const Permutation& w);
/// Grothendieck polynomial G_w (memoized, thread-safe).
const Poly& grothendieck_poly(const Permutation& w);

/// Reference construction: descend from the top seed of S_n along a reduced
/// chain w_o → w. Unmemoized; used to cross-check the memoized route.
Poly schubert_poly_from_top(const Permutation& w);
Poly grothendieck_poly_from_top(const Permutation& w);

struct ExpandOptions {
    /// Largest window a basis element may need; AmbientExceeded beyond it.
    int max_window = Monomial::kMaxVars;
    /// Largest total degree processed by the Grothendieck expansion; the
    /// default 0 means 2·max_window². Exceeding it throws LimitExceeded.
    int degree_cap = 0;
};

/// f = Σ c_w S_w. Greedy on lex-smallest monomials: x^a is the smallest
/// monomial of exactly one S_w, namely the w with code(w) = a.
Expansion expand_schubert(const Poly& f, const ExpandOptions& options = {});

/// f = Σ c_w G_w, built up from the lowest degree layer.
Expansion expand_grothendieck(const Poly& f, const ExpandOptions& options = {});

Expansion expand(const Poly& f, PolyBasis basis, const ExpandOptions& options = {});

const Poly& basis_poly(const Permutation& w, PolyBasis basis);

struct StableProduct {
    Expansion terms;
    /// Smallest ambient window at which the expansion was complete.
    int ambient = 0;
};

/// Expands S_u·S_v (or G_u·G_v) in the matching basis over S_m, growing m
/// from the natural window until the expansion at m and m+1 agree. Throws
/// AmbientExceeded when m would exceed `ambient_cap`.
StableProduct stable_product_expand(const Permutation& u, const Permutation& v, PolyBasis basis,
                                    int ambient_cap = Monomial::kMaxVars);

/// Σ c_w · basis(w).
Poly combine(const Expansion& e, PolyBasis basis);

}  // namespace schubert
