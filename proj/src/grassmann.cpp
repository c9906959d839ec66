#include "schubert/grassmann.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "schubert/cohomology.hpp"
#include "schubert/errors.hpp"
#include "schubert/ktheory.hpp"

namespace schubert {

GrassIndex::GrassIndex(int n_, std::vector<int> idx) : d(static_cast<int>(idx.size())), n(n_), indices(std::move(idx)) {
    if (d < 1 || d > n) throw DomainError("multi-index size must be in 1..n");
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] < 1 || indices[k] > n) throw DomainError("multi-index entry out of range");
        if (k > 0 && indices[k - 1] >= indices[k]) throw DomainError("multi-index must be strictly increasing");
    }
}

GrassIndex GrassIndex::parse(const std::string& text, int n) {
    std::vector<int> idx;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            idx.push_back(std::stoi(item, &used));
            if (used != item.size()) throw DomainError("bad multi-index: " + text);
        } catch (const std::logic_error&) {
            throw DomainError("bad multi-index: " + text);
        }
    }
    return GrassIndex(n, std::move(idx));
}

int GrassIndex::dim() const {
    int s = 0;
    for (int k = 0; k < d; ++k) s += indices[static_cast<std::size_t>(k)] - (k + 1);
    return s;
}

std::string GrassIndex::str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < indices.size(); ++k) s += (k ? "," : "") + std::to_string(indices[k]);
    return s + ")";
}

bool DimLexLess::operator()(const GrassIndex& a, const GrassIndex& b) const {
    const int da = a.dim(), db = b.dim();
    if (da != db) return da < db;
    return a < b;
}

const char* to_string(PartitionConvention c) {
    return c == PartitionConvention::Dimension ? "dimension" : "codimension";
}

Partition::Partition(int d_, int n_, std::vector<int> p, PartitionConvention c)
    : d(d_), n(n_), parts(std::move(p)), convention(c) {
    if (d < 1 || d > n) throw DomainError("partition shape needs 1 <= d <= n");
    if (static_cast<int>(parts.size()) > d) throw DomainError("partition has more than d parts");
    for (int x : parts)
        if (x < 0 || x > n - d) throw DomainError("partition part out of range 0..n-d");
    parts.resize(static_cast<std::size_t>(d), 0);
    std::sort(parts.begin(), parts.end());
}

int Partition::area() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::str() const {
    std::string s = "(";
    bool first = true;
    for (auto it = parts.rbegin(); it != parts.rend() && *it > 0; ++it) {
        s += (first ? "" : ",") + std::to_string(*it);
        first = false;
    }
    return s + ")";
}

Partition to_partition(const GrassIndex& I) {
    std::vector<int> parts;
    for (int k = 0; k < I.d; ++k) parts.push_back(I.indices[static_cast<std::size_t>(k)] - (k + 1));
    return Partition(I.d, I.n, std::move(parts), PartitionConvention::Dimension);
}

Partition dual(const Partition& lambda) {
    std::vector<int> parts;
    for (int k = 1; k <= lambda.d; ++k)
        parts.push_back(lambda.n - lambda.d - lambda.parts[static_cast<std::size_t>(lambda.d - k)]);
    const auto flipped = lambda.convention == PartitionConvention::Dimension ? PartitionConvention::Codimension
                                                                             : PartitionConvention::Dimension;
    return Partition(lambda.d, lambda.n, std::move(parts), flipped);
}

GrassIndex from_partition(const Partition& lambda) {
    const Partition p = lambda.convention == PartitionConvention::Dimension ? lambda : dual(lambda);
    std::vector<int> idx;
    for (int k = 0; k < p.d; ++k) idx.push_back(p.parts[static_cast<std::size_t>(k)] + k + 1);
    return GrassIndex(p.n, std::move(idx));
}

Permutation min_rep(const GrassIndex& I) {
    std::vector<int> images = I.indices;
    for (int v = 1; v <= I.n; ++v)
        if (!std::binary_search(I.indices.begin(), I.indices.end(), v)) images.push_back(v);
    return Permutation(std::move(images));
}

Permutation max_rep(const GrassIndex& I) {
    return coset_rep(min_rep(I), Composition({I.d, I.n - I.d}), CosetMode::Max);
}

GrassIndex from_permutation(const Permutation& w, int d) {
    if (d < 1 || d > w.window()) throw DomainError("d out of range for the permutation window");
    std::vector<int> idx(w.images().begin(), w.images().begin() + d);
    std::sort(idx.begin(), idx.end());
    return GrassIndex(w.window(), std::move(idx));
}

bool contains(const GrassIndex& I, const GrassIndex& J) {
    if (I.d != J.d || I.n != J.n) throw DomainError("multi-indices of different Grassmannians");
    for (int k = 0; k < I.d; ++k)
        if (J.indices[static_cast<std::size_t>(k)] > I.indices[static_cast<std::size_t>(k)]) return false;
    return true;
}

std::vector<GrassIndex> grass_indices(int d, int n) {
    if (d < 1 || d > n) throw DomainError("Gr(d, n) needs 1 <= d <= n");
    std::vector<GrassIndex> out;
    std::vector<int> idx(static_cast<std::size_t>(d));
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == d) {
            out.emplace_back(n, idx);
            return;
        }
        for (int v = start; v <= n - (d - pos) + 1; ++v) {
            idx[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 1);
    std::sort(out.begin(), out.end(), DimLexLess{});
    return out;
}

Poset<GrassIndex> grass_poset(int d, int n) {
    Poset<GrassIndex> p;
    p.elements = grass_indices(d, n);
    for (std::size_t hi = 0; hi < p.elements.size(); ++hi)
        for (std::size_t lo = 0; lo < p.elements.size(); ++lo)
            if (p.elements[lo].dim() + 1 == p.elements[hi].dim() && contains(p.elements[hi], p.elements[lo]))
                p.covers.emplace_back(lo, hi);
    std::sort(p.covers.begin(), p.covers.end());
    return p;
}

Integer grass_mobius(const GrassIndex& J, const GrassIndex& I) {
    if (!contains(I, J)) return 0;
    // μ(J, J) = 1 and μ(J, K) = −Σ_{J≤Y<K} μ(J, Y), along the interval in
    // increasing dimension.
    std::vector<GrassIndex> interval;
    for (const auto& K : grass_indices(I.d, I.n))
        if (contains(K, J) && contains(I, K)) interval.push_back(K);
    std::map<GrassIndex, Integer> mu;
    for (const auto& K : interval) {
        if (K == J) {
            mu[K] = 1;
            continue;
        }
        Integer s = 0;
        for (const auto& [Y, m] : mu)
            if (Y != K && contains(K, Y)) s += m;
        mu[K] = -s;
    }
    return mu.at(I);
}

GrassTerms pieri_divisor_cohomology(const GrassIndex& I) {
    GrassTerms out;
    for (const auto& J : grass_indices(I.d, I.n))
        if (J.dim() + 1 == I.dim() && contains(I, J)) out.emplace(J, 1);
    return out;
}

GrassTerms k_pieri(const GrassIndex& I, KPieriMode mode) {
    GrassTerms out;
    for (const auto& J : grass_indices(I.d, I.n)) {
        if (!contains(I, J)) continue;
        Integer c;
        switch (mode) {
            case KPieriMode::L: c = 1; break;
            case KPieriMode::LInverse: c = grass_mobius(J, I); break;
            case KPieriMode::Divisor: c = J == I ? Integer(0) : -grass_mobius(J, I); break;
        }
        if (!c.is_zero()) out.emplace(J, c);
    }
    return out;
}

std::map<Partition, Integer> lr_coefficients(const Partition& lambda, const Partition& mu, Theory theory) {
    if (lambda.d != mu.d || lambda.n != mu.n) throw DomainError("partitions of different Grassmannians");
    if (lambda.convention != mu.convention) throw DomainError("partitions carry different conventions");
    const int d = lambda.d;
    const Permutation a = max_rep(from_partition(lambda));
    const Permutation b = max_rep(from_partition(mu));
    ClassTerms product;
    if (theory == Theory::H) {
        product = cup(CohClass::schubert(a), CohClass::schubert(b)).terms();
    } else {
        product = multiply(KClass::O(a), KClass::O(b)).terms();
    }
    std::map<Partition, Integer> out;
    for (const auto& [x, c] : product) {
        const GrassIndex K = from_permutation(x, d);
        if (max_rep(K) != x)
            throw InvariantViolation("pulled-back product has a component off the maximal representatives: " + x.str());
        Partition nu = to_partition(K);
        if (lambda.convention == PartitionConvention::Codimension) nu = dual(nu);
        out.emplace(nu, c);
    }
    return out;
}

GrassTerms plucker_divisor(const GrassIndex& I) {
    const Permutation w = max_rep(I);
    GrassTerms out;
    for (const auto& [v, c] : divisor_of_section(fundamental_weight(I.d, I.n), w)) {
        if (c.is_zero()) continue;
        const GrassIndex J = from_permutation(v, I.d);
        if (max_rep(J) != v || c != Integer(1))
            throw InvariantViolation("Plücker divisor of " + I.str() + " has an unexpected component " + v.str());
        out.emplace(J, c);
    }
    return out;
}

IncidenceSingularity incidence_singularity(int i, int j, int n) {
    if (i < 1 || j < 1 || i > n || j > n) throw DomainError("incidence indices out of range");
    if (i == j) throw DomainError("incidence indices must differ");
    if (1 < j && j < i && i < n) return {true, std::make_pair(j - 1, i + 1)};
    return {false, std::nullopt};
}

int HilbertPoly::degree() const {
    for (std::size_t k = coefficients.size(); k-- > 0;)
        if (coefficients[k] != 0) return static_cast<int>(k);
    return -1;
}

mpq_class HilbertPoly::operator()(const mpq_class& t) const {
    mpq_class acc = 0;
    for (std::size_t k = coefficients.size(); k-- > 0;) acc = acc * t + coefficients[k];
    return acc;
}

namespace {

HilbertPoly trimmed(HilbertPoly p) {
    while (!p.coefficients.empty() && p.coefficients.back() == 0) p.coefficients.pop_back();
    return p;
}

// Multiplies by (t + a).
HilbertPoly times_linear(const HilbertPoly& p, const mpq_class& a) {
    HilbertPoly out;
    out.coefficients.assign(p.coefficients.size() + 1, 0);
    for (std::size_t k = 0; k < p.coefficients.size(); ++k) {
        out.coefficients[k + 1] += p.coefficients[k];
        out.coefficients[k] += a * p.coefficients[k];
    }
    return out;
}

}  // namespace

HilbertPoly HilbertPoly::shifted(long k) const {
    // Horner in the shifted variable: P(t + k) = (…(c_m (t+k) + c_{m−1})(t+k) …).
    HilbertPoly out;
    for (std::size_t idx = coefficients.size(); idx-- > 0;) {
        out = times_linear(out, k);
        if (out.coefficients.empty()) out.coefficients.push_back(0);
        out.coefficients[0] += coefficients[idx];
    }
    return trimmed(out);
}

HilbertPoly HilbertPoly::interpolate(const std::vector<std::pair<mpq_class, mpq_class>>& points) {
    HilbertPoly out;
    for (std::size_t a = 0; a < points.size(); ++a) {
        HilbertPoly basis;
        basis.coefficients = {1};
        mpq_class denom = 1;
        for (std::size_t b = 0; b < points.size(); ++b) {
            if (a == b) continue;
            basis = times_linear(basis, -points[b].first);
            denom *= points[a].first - points[b].first;
        }
        out = out + mpq_class(points[a].second / denom) * basis;
    }
    return trimmed(out);
}

HilbertPoly operator+(const HilbertPoly& a, const HilbertPoly& b) {
    HilbertPoly out;
    out.coefficients.assign(std::max(a.coefficients.size(), b.coefficients.size()), 0);
    for (std::size_t k = 0; k < a.coefficients.size(); ++k) out.coefficients[k] += a.coefficients[k];
    for (std::size_t k = 0; k < b.coefficients.size(); ++k) out.coefficients[k] += b.coefficients[k];
    return trimmed(out);
}

HilbertPoly operator*(const mpq_class& c, const HilbertPoly& p) {
    HilbertPoly out = p;
    for (auto& x : out.coefficients) x *= c;
    return trimmed(out);
}

bool operator==(const HilbertPoly& a, const HilbertPoly& b) {
    return trimmed(a).coefficients == trimmed(b).coefficients;
}

ProjectiveKModel::ProjectiveKModel(int n) : n_(n) {
    if (n < 0) throw DomainError("projective dimension must be non-negative");
}

HilbertPoly ProjectiveKModel::basis_hilbert(int j) const {
    if (j < 0 || j > n_) throw DomainError("basis index out of range 0..n");
    HilbertPoly p;
    p.coefficients = {1};
    mpq_class factorial = 1;
    for (int k = 1; k <= j; ++k) {
        p = times_linear(p, k);
        factorial *= k;
    }
    return mpq_class(1 / factorial) * p;
}

std::vector<Integer> ProjectiveKModel::decompose(const HilbertPoly& p) const {
    if (p.degree() > n_) throw DomainError("Hilbert polynomial degree exceeds n");
    // binomial(t + j, j) vanishes at t = −1, …, −j and equals (−1)^j at
    // t = −(j + 1), so the values at t = −1, −2, … are unitriangular in c.
    std::vector<mpz_class> c;
    for (int k = 1; k <= n_ + 1; ++k) {
        mpq_class rest = p(mpq_class(-k));
        for (int j = 0; j + 1 < k; ++j) rest -= mpq_class(c[static_cast<std::size_t>(j)]) * basis_hilbert(j)(mpq_class(-k));
        if (rest.get_den() != 1) throw DomainError("Hilbert polynomial is not integer-valued");
        mpz_class v = rest.get_num();
        if ((k - 1) % 2) v = -v;
        c.push_back(v);
    }
    std::vector<Integer> out;
    for (const auto& v : c) out.emplace_back(v);
    if (!(compose(out) == p)) throw InvariantViolation("binomial-basis decomposition does not reproduce its input");
    return out;
}

HilbertPoly ProjectiveKModel::compose(const std::vector<Integer>& c) const {
    HilbertPoly p;
    for (std::size_t j = 0; j < c.size(); ++j) p = p + mpq_class(c[j].to_mpz()) * basis_hilbert(static_cast<int>(j));
    return p;
}

Integer ProjectiveKModel::euler(int j, long k) const {
    const mpq_class v = basis_hilbert(j)(mpq_class(k));
    if (v.get_den() != 1) throw InvariantViolation("non-integral Euler characteristic");
    return Integer(v.get_num());
}

Integer ProjectiveKModel::dual_pairing(int j, int i) const {
    if (j < 0 || j > n_ || i < 0 || i > n_) throw DomainError("index out of range 0..n");
    const int m = j - i;
    if (m < 0) return 0;
    const mpq_class v = basis_hilbert(m).shifted(-1)(mpq_class(0));
    return Integer(v.get_num());
}

}  // namespace schubert
