#pragma once

// The symmetric group S_n as the Weyl group of GL_n: one-line permutations,
// Bruhat order, reduced words, parabolic cosets and weights.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace schubert {

/// Element of S_n in one-line notation w(1),...,w(n).
///
/// The window n is part of the value. Operations that combine permutations of
/// different windows embed the smaller one by fixing trailing points.
class Permutation {
public:
    /// The identity of S_1.
    Permutation() : images_{1} {}
    /// Validates that `images` is a bijection of {1,...,n}.
    explicit Permutation(std::vector<int> images);
    Permutation(std::initializer_list<int> images) : Permutation(std::vector<int>(images)) {}

    static Permutation identity(int n);
    static Permutation longest(int n);
    /// Simple reflection s_i = (i, i+1) in S_n.
    static Permutation simple(int i, int n);
    /// Transposition s_ij exchanging i and j in S_n.
    static Permutation transposition(int i, int j, int n);
    /// Inverse of code(): the permutation whose Lehmer code is `code`, in the
    /// smallest window that holds it.
    static Permutation from_code(std::span<const int> code);
    /// Parses "2,3,1"; throws DomainError.
    static Permutation parse(const std::string& text);

    [[nodiscard]] int window() const noexcept { return static_cast<int>(images_.size()); }
    /// w(i) for 1-based i; points beyond the window are fixed.
    [[nodiscard]] int operator()(int i) const noexcept {
        return i <= window() ? images_[static_cast<std::size_t>(i - 1)] : i;
    }
    [[nodiscard]] const std::vector<int>& images() const noexcept { return images_; }

    [[nodiscard]] Permutation embedded(int n) const;
    /// Drops trailing fixed points (window at least 1).
    [[nodiscard]] Permutation trimmed() const;
    [[nodiscard]] bool is_identity() const noexcept;

    [[nodiscard]] std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    struct Unchecked {};
    Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}
    friend Permutation compose(const Permutation&, const Permutation&);
    friend Permutation inverse(const Permutation&);

    std::vector<int> images_;
};

/// (u∘v)(i) = u(v(i)). Mixed windows are embedded into the larger one.
Permutation compose(const Permutation& u, const Permutation& v);
/// Same as compose() but rejects mixed windows with WindowMismatch.
Permutation compose_strict(const Permutation& u, const Permutation& v);
Permutation inverse(const Permutation& w);

/// Number of inversions.
int length(const Permutation& w);
Permutation longest_element(int n);
/// Lehmer code c_i = #{j > i : w(j) < w(i)}.
std::vector<int> code(const Permutation& w);

/// Bruhat order by sorted prefixes ("rearrange to increasing values and compare").
/// Windows must agree; throws WindowMismatch otherwise.
bool bruhat_leq(const Permutation& v, const Permutation& w);

/// Elements covered by w in Bruhat order, each of the form w·s_ij.
std::vector<Permutation> covers(const Permutation& w);

/// Transpositions (i,j), i<j, with w·s_ij covered by w.
std::vector<std::pair<int, int>> cover_transpositions(const Permutation& w);

/// Möbius function of the Bruhat order, closed form.
int mobius(const Permutation& v, const Permutation& w);

using ReducedWord = std::vector<int>;

/// One reduced word (a_1,...,a_k) with w = s_{a_1}···s_{a_k}.
ReducedWord reduced_word(const Permutation& w);
/// All reduced words of w. Throws LimitExceeded when more than `limit` exist.
std::vector<ReducedWord> reduced_words(const Permutation& w, std::optional<std::size_t> limit = std::nullopt);
/// Product s_{a_1}···s_{a_k} in S_n.
Permutation word_product(std::span<const int> word, int n);

/// Positive integers summing to the window.
struct Composition {
    std::vector<int> parts;

    /// Validates positivity; throws DomainError.
    explicit Composition(std::vector<int> parts);
    [[nodiscard]] int total() const;
    /// Longest element w_{0,P} of the parabolic subgroup S_{d_1}×···×S_{d_m}.
    [[nodiscard]] Permutation longest_parabolic() const;
};

enum class CosetMode { Min, Max };

/// Minimal or maximal representative of the coset w·W_P.
Permutation coset_rep(const Permutation& w, const Composition& type, CosetMode mode);
/// All minimal (or maximal) coset representatives, sorted by (length, lex).
std::vector<Permutation> coset_reps(const Composition& type, CosetMode mode);

/// {i : s_i ≤ w}.
std::vector<int> support(const Permutation& w);

/// Σ_{i<j} d_i d_j.
long long dimension_partial_flag(const Composition& type);

/// Integer weight (λ_1,...,λ_n) of the diagonal torus.
struct Weight {
    std::vector<long long> entries;

    [[nodiscard]] int window() const noexcept { return static_cast<int>(entries.size()); }
    [[nodiscard]] bool is_dominant() const;
    [[nodiscard]] bool is_regular_dominant() const;
    [[nodiscard]] bool is_zero() const;
    /// Parses "2,1,0"; throws DomainError.
    static Weight parse(const std::string& text);

    friend Weight operator+(const Weight& a, const Weight& b);
    friend Weight operator-(const Weight& a);
    friend Weight operator-(const Weight& a, const Weight& b) { return a + (-b); }
    friend bool operator==(const Weight&, const Weight&) = default;
};

/// χ_d = (1^d, 0^{n-d}).
Weight fundamental_weight(int d, int n);
/// ρ = (n-1, ..., 1, 0).
Weight rho(int n);
/// ε_i = i-th coordinate weight.
Weight coordinate_weight(int i, int n);

/// Every element of S_n, sorted by (length, lex).
std::vector<Permutation> all_permutations(int n);

/// Orders permutations by (length, lex); the canonical order for serialized
/// classes and tables.
struct LengthLexLess {
    bool operator()(const Permutation& a, const Permutation& b) const;
};

/// Indexed view of S_n used by the table builders: elements in (length, lex)
/// order, with cached lengths, Bruhat matrix and left multiplication by w_o.
///
/// Instances are immutable and shared process-wide through get().
class SymmetricGroup {
public:
    static const SymmetricGroup& get(int n);

    [[nodiscard]] int window() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
    [[nodiscard]] const std::vector<Permutation>& elements() const noexcept { return elements_; }
    [[nodiscard]] const Permutation& at(std::size_t i) const { return elements_.at(i); }
    /// Throws WindowMismatch on a foreign window.
    [[nodiscard]] std::size_t index_of(const Permutation& w) const;
    [[nodiscard]] int length(std::size_t i) const { return lengths_[i]; }
    [[nodiscard]] bool leq(std::size_t v, std::size_t w) const { return bruhat_[v * size() + w] != 0; }
    /// Index of w_o·w.
    [[nodiscard]] std::size_t opposite(std::size_t w) const { return opposite_[w]; }
    [[nodiscard]] int longest_length() const noexcept { return n_ * (n_ - 1) / 2; }

private:
    explicit SymmetricGroup(int n);

    int n_;
    std::vector<Permutation> elements_;
    std::vector<int> lengths_;
    std::vector<std::uint8_t> bruhat_;
    std::vector<std::size_t> opposite_;
    std::vector<std::size_t> lex_to_sorted_;
};

}  // namespace schubert
