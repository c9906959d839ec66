#include "schubert/table.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <thread>

namespace schubert {

Expansion truncated_product(const Permutation& u, const Permutation& v, PolyBasis basis, int n) {
    // The expansion is unique, so one pass with the widest ambient the
    // monomial type allows gives the stable answer.
    const Poly product = basis_poly(u, basis) * basis_poly(v, basis);
    Expansion full = expand(product, basis, ExpandOptions{Monomial::kMaxVars, 0});
    Expansion out;
    for (auto& [w, c] : full)
        if (w.window() <= n) out.emplace(w, std::move(c));
    return out;
}

ProductTable& ProductTable::get(PolyBasis basis, int n) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<ProductTable>> tables;
    std::lock_guard lock(mutex);
    auto& slot = tables[{static_cast<int>(basis), n}];
    if (!slot) slot.reset(new ProductTable(basis, n));
    return *slot;
}

ProductTable::ProductTable(PolyBasis basis, int n)
    : basis_(basis), n_(n), size_(SymmetricGroup::get(n).size()), entries_(size_ * (size_ + 1) / 2) {}

std::size_t ProductTable::slot(std::size_t v, std::size_t w) const {
    if (v >= size_ || w >= size_) throw DomainError("product table index out of range");
    if (v > w) std::swap(v, w);
    return w * (w + 1) / 2 + v;
}

SparseRow ProductTable::compute(std::size_t v, std::size_t w) const {
    const auto& g = SymmetricGroup::get(n_);
    const auto e = truncated_product(g.at(g.opposite(v)), g.at(g.opposite(w)), basis_, n_);
    SparseRow row;
    row.reserve(e.size());
    for (const auto& [x, c] : e) row.emplace_back(g.opposite(g.index_of(x.embedded(n_))), c);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

const SparseRow& ProductTable::product(std::size_t v, std::size_t w) {
    const std::size_t s = slot(v, w);
    {
        std::shared_lock lock(mutex_);
        if (entries_[s]) return *entries_[s];
    }
    auto row = std::make_unique<SparseRow>(compute(v, w));
    std::unique_lock lock(mutex_);
    if (!entries_[s]) entries_[s] = std::move(row);
    return *entries_[s];
}

Integer ProductTable::coefficient(std::size_t v, std::size_t w, std::size_t x) {
    const auto& row = product(v, w);
    auto it = std::lower_bound(row.begin(), row.end(), x, [](const auto& t, std::size_t k) { return t.first < k; });
    return it != row.end() && it->first == x ? it->second : Integer(0);
}

void ProductTable::fill(unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::pair<std::size_t, std::size_t>> pending;
    {
        std::shared_lock lock(mutex_);
        for (std::size_t w = 0; w < size_; ++w)
            for (std::size_t v = 0; v <= w; ++v)
                if (!entries_[slot(v, w)]) pending.emplace_back(v, w);
    }
    auto work = [&](std::size_t start) {
        for (std::size_t k = start; k < pending.size(); k += threads) product(pending[k].first, pending[k].second);
    };
    if (threads == 1) {
        work(0);
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
}

bool ProductTable::complete() const { return computed() == entries_.size(); }

std::size_t ProductTable::computed() const {
    std::shared_lock lock(mutex_);
    return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](const auto& e) { return e != nullptr; }));
}

void ProductTable::install(std::size_t v, std::size_t w, SparseRow row) {
    const std::size_t s = slot(v, w);
    for (const auto& [x, c] : row)
        if (x >= size_) throw DomainError("product table index out of range");
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::unique_lock lock(mutex_);
    entries_[s] = std::make_unique<SparseRow>(std::move(row));
}

void ProductTable::clear() {
    std::unique_lock lock(mutex_);
    for (auto& e : entries_) e.reset();
}

}  // namespace schubert
