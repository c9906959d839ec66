#pragma once

// Verification checks. Each returns a Report whose witnesses pin down the
// first failures. The named suites used by the command line combine them.

#include <cstdint>
#include <string>
#include <vector>

#include "schubert/report.hpp"

namespace schubert {

/// χ(O_w·I^v) = δ_vw on all of S_n, plus χ(O_w·O^v) = [v ≤ w] and
/// χ(I_w·I^v) = (−1)^{ℓ(w)−ℓ(v)}[v ≤ w].
Report check_k_duality(int n);
/// ⟨[X_w], [X^v]⟩ = δ_vw on all of S_n.
Report check_poincare_duality(int n);
/// a_vw^x ≥ 0: every triple for windows up to full_n, then `samples`
/// random triples at sample_n (skipped when sample_n ≤ full_n).
Report check_positivity(int full_n, int sample_n, int samples, std::uint64_t seed);
/// Sign pattern of c_vw^x, same coverage; the full scans also check the
/// Richardson classes.
Report check_signs(int full_n, int sample_n, int samples, std::uint64_t seed);
/// chevalley_cup(λ, w) = cup(c1_class(λ), [X_w]) for λ ∈ {χ_d, ρ, ε_i}.
Report check_chevalley_routes(int n);
/// cup ≡ monk_iterated_product on every pair, windows up to n.
Report check_monk_oracle(int n);
/// O↔I conversion matrices are mutually inverse with Möbius entries, and
/// weyl.mobius agrees with the recursive oracle, windows up to n.
Report check_basis_change(int n);
/// [L_λ]·O_w for λ ∈ {χ_d, ρ}: non-negative, unit diagonal, Bruhat support;
/// line-bundle operators are unitriangular and additive in λ.
Report check_k_chevalley(int n);
/// O_λ·O_w signs and the graded shadow against chevalley_cup.
Report check_o_lambda(int n);
/// Duality involution and the I_w(ρ) transition.
Report check_dualize(int n, int samples, std::uint64_t seed);
/// Pieri, Plücker and K-Pieri formulas against full-flag pullbacks, and LR
/// sign patterns, on every Gr(d, m) with 2 ≤ m ≤ max_n.
Report check_grassmann(int max_n);
/// The K(P^n) Hilbert model for n ≤ max_n and k in [k_lo, k_hi].
Report check_hilbert(int max_n, long k_lo, long k_hi, std::uint64_t seed);
/// Cone counterexample for d in [d_lo, d_hi], each within `seconds_per_d`.
Report check_cone(int d_lo, int d_hi, double seconds_per_d);
/// S_w, G_w under window growth and product expansions under ambient growth,
/// for w ∈ S_n.
Report check_stability(int n);

struct SuiteParams {
    int n = 4;
    int dmax = 8;
    std::uint64_t seed = 1;
    int samples = 100;
};

const std::vector<std::string>& suite_names();
/// Throws DomainError for an unknown suite.
Report run_suite(const std::string& name, const SuiteParams& params);

}  // namespace schubert
