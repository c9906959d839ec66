#pragma once

// Structure constants of H*(Fl_n) and K(Fl_n) in the Schubert bases,
// indexed by position in SymmetricGroup::get(n) and in the dimension
// convention: entry (v, w) lists the x with [X_v]·[X_w] ∋ c·[X_x]
// (resp. O_v·O_w ∋ c·O_x).

#include <cstddef>
#include <memory>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "schubert/integer.hpp"
#include "schubert/polyring.hpp"

namespace schubert {

using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

/// Coefficients of basis(u)·basis(v) on the basis elements lying in S_n.
/// u, v ∈ S_n are codimension indices. Elements outside S_n vanish in the
/// ring of Fl_n and are discarded.
Expansion truncated_product(const Permutation& u, const Permutation& v, PolyBasis basis, int n);

class ProductTable {
public:
    /// Process-wide table for (basis, n). Entries are computed on demand.
    static ProductTable& get(PolyBasis basis, int n);

    [[nodiscard]] PolyBasis basis() const noexcept { return basis_; }
    [[nodiscard]] int window() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return size_; }

    /// Sorted by index. Safe to call concurrently.
    const SparseRow& product(std::size_t v, std::size_t w);
    Integer coefficient(std::size_t v, std::size_t w, std::size_t x);

    /// Computes every entry (v ≤ w by index), using up to `threads` workers.
    void fill(unsigned threads = 0);
    [[nodiscard]] bool complete() const;
    /// Number of computed entries.
    [[nodiscard]] std::size_t computed() const;

    /// Replaces the entry for the unordered pair {v, w}; used by the cache
    /// loader. Throws DomainError on out-of-range indices.
    void install(std::size_t v, std::size_t w, SparseRow row);
    /// Drops all entries.
    void clear();

private:
    ProductTable(PolyBasis basis, int n);
    [[nodiscard]] std::size_t slot(std::size_t v, std::size_t w) const;
    SparseRow compute(std::size_t v, std::size_t w) const;

    PolyBasis basis_;
    int n_;
    std::size_t size_;
    mutable std::shared_mutex mutex_;
    std::vector<std::unique_ptr<SparseRow>> entries_;
};

}  // namespace schubert
