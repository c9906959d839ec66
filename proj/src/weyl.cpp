#include "schubert/weyl.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw DomainError("malformed integer list: '" + text + "'");
        }
        if (pos != item.size()) throw DomainError("malformed integer list: '" + text + "'");
        out.push_back(v);
    }
    if (out.empty()) throw DomainError("empty integer list");
    return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = window();
    if (n == 0) throw DomainError("permutation must have window at least 1");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw DomainError("not a bijection of {1..n}: " + str());
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw DomainError("window must be positive");
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im), Unchecked{});
}

Permutation Permutation::longest(int n) {
    if (n < 1) throw DomainError("window must be positive");
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(im), Unchecked{});
}

Permutation Permutation::simple(int i, int n) {
    if (i < 1 || i >= n) throw DomainError("simple reflection index out of range");
    return transposition(i, i + 1, n);
}

Permutation Permutation::transposition(int i, int j, int n) {
    if (i < 1 || j < 1 || i > n || j > n || i == j) throw DomainError("transposition indices out of range");
    auto id = identity(n);
    std::swap(id.images_[static_cast<std::size_t>(i - 1)], id.images_[static_cast<std::size_t>(j - 1)]);
    return id;
}

Permutation Permutation::from_code(std::span<const int> code) {
    int m = std::max<int>(1, static_cast<int>(code.size()));
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (code[i] < 0) throw DomainError("Lehmer code entries must be non-negative");
        m = std::max(m, static_cast<int>(i) + 1 + code[i]);
    }
    std::vector<int> unused(static_cast<std::size_t>(m));
    std::iota(unused.begin(), unused.end(), 1);
    std::vector<int> im;
    im.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        int c = i < static_cast<int>(code.size()) ? code[static_cast<std::size_t>(i)] : 0;
        im.push_back(unused[static_cast<std::size_t>(c)]);
        unused.erase(unused.begin() + c);
    }
    return Permutation(std::move(im), Unchecked{}).trimmed();
}

Permutation Permutation::parse(const std::string& text) { return Permutation(parse_int_list(text)); }

Permutation Permutation::embedded(int n) const {
    if (n < window()) throw DomainError("cannot embed into a smaller window");
    auto im = images_;
    for (int i = window() + 1; i <= n; ++i) im.push_back(i);
    return Permutation(std::move(im), Unchecked{});
}

Permutation Permutation::trimmed() const {
    std::size_t n = images_.size();
    while (n > 1 && images_[n - 1] == static_cast<int>(n)) --n;
    return Permutation(std::vector<int>(images_.begin(), images_.begin() + static_cast<std::ptrdiff_t>(n)),
                       Unchecked{});
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

std::string Permutation::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(images_[i]);
    }
    return s + ")";
}

Permutation compose(const Permutation& u, const Permutation& v) {
    const int n = std::max(u.window(), v.window());
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) im[static_cast<std::size_t>(i - 1)] = u(v(i));
    return Permutation(std::move(im), Permutation::Unchecked{});
}

Permutation compose_strict(const Permutation& u, const Permutation& v) {
    if (u.window() != v.window()) throw WindowMismatch(u.window(), v.window());
    return compose(u, v);
}

Permutation inverse(const Permutation& w) {
    std::vector<int> im(static_cast<std::size_t>(w.window()));
    for (int i = 1; i <= w.window(); ++i) im[static_cast<std::size_t>(w(i) - 1)] = i;
    return Permutation(std::move(im), Permutation::Unchecked{});
}

int length(const Permutation& w) {
    int len = 0;
    const auto& im = w.images();
    for (std::size_t i = 0; i < im.size(); ++i)
        for (std::size_t j = i + 1; j < im.size(); ++j)
            if (im[i] > im[j]) ++len;
    return len;
}

Permutation longest_element(int n) { return Permutation::longest(n); }

std::vector<int> code(const Permutation& w) {
    const auto& im = w.images();
    std::vector<int> c(im.size(), 0);
    for (std::size_t i = 0; i < im.size(); ++i)
        for (std::size_t j = i + 1; j < im.size(); ++j)
            if (im[j] < im[i]) ++c[i];
    return c;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
    if (v.window() != w.window()) throw WindowMismatch(v.window(), w.window());
    const int n = v.window();
    std::vector<int> pv, pw;
    pv.reserve(static_cast<std::size_t>(n));
    pw.reserve(static_cast<std::size_t>(n));
    for (int d = 1; d < n; ++d) {
        pv.insert(std::upper_bound(pv.begin(), pv.end(), v(d)), v(d));
        pw.insert(std::upper_bound(pw.begin(), pw.end(), w(d)), w(d));
        for (std::size_t k = 0; k < pv.size(); ++k)
            if (pv[k] > pw[k]) return false;
    }
    return true;
}

std::vector<std::pair<int, int>> cover_transpositions(const Permutation& w) {
    std::vector<std::pair<int, int>> out;
    const int n = w.window();
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (w(i) < w(j)) continue;
            bool blocked = false;
            for (int k = i + 1; k < j && !blocked; ++k) blocked = w(j) < w(k) && w(k) < w(i);
            if (!blocked) out.emplace_back(i, j);
        }
    }
    return out;
}

std::vector<Permutation> covers(const Permutation& w) {
    std::vector<Permutation> out;
    for (auto [i, j] : cover_transpositions(w))
        out.push_back(compose(w, Permutation::transposition(i, j, w.window())));
    std::sort(out.begin(), out.end(), LengthLexLess{});
    return out;
}

int mobius(const Permutation& v, const Permutation& w) {
    if (!bruhat_leq(v, w)) return 0;
    return ((length(w) - length(v)) % 2 == 0) ? 1 : -1;
}

ReducedWord reduced_word(const Permutation& w) {
    ReducedWord word;
    auto cur = w;
    const int n = w.window();
    // Peel right descents: w = (w s_i) s_i with ℓ(w s_i) = ℓ(w) - 1.
    for (;;) {
        int i = 1;
        while (i < n && cur(i) < cur(i + 1)) ++i;
        if (i >= n) break;
        word.push_back(i);
        cur = compose(cur, Permutation::simple(i, n));
    }
    std::reverse(word.begin(), word.end());
    return word;
}

namespace {

void collect_words(const Permutation& w, std::map<Permutation, std::vector<ReducedWord>>& memo,
                   std::optional<std::size_t> limit) {
    if (memo.count(w)) return;
    std::vector<ReducedWord> words;
    const int n = w.window();
    bool any = false;
    for (int i = 1; i < n; ++i) {
        if (w(i) < w(i + 1)) continue;
        any = true;
        auto shorter = compose(w, Permutation::simple(i, n));
        collect_words(shorter, memo, limit);
        for (const auto& sub : memo.at(shorter)) {
            auto word = sub;
            word.push_back(i);
            words.push_back(std::move(word));
            if (limit && words.size() > *limit)
                throw LimitExceeded("more than " + std::to_string(*limit) + " reduced words");
        }
    }
    if (!any) words.push_back({});
    memo.emplace(w, std::move(words));
}

}  // namespace

std::vector<ReducedWord> reduced_words(const Permutation& w, std::optional<std::size_t> limit) {
    std::map<Permutation, std::vector<ReducedWord>> memo;
    collect_words(w, memo, limit);
    auto words = memo.at(w);
    std::sort(words.begin(), words.end());
    return words;
}

Permutation word_product(std::span<const int> word, int n) {
    auto w = Permutation::identity(n);
    for (int a : word) w = compose(w, Permutation::simple(a, n));
    return w;
}

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw DomainError("composition must have at least one part");
    for (int d : parts)
        if (d <= 0) throw DomainError("composition parts must be positive");
}

int Composition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Permutation Composition::longest_parabolic() const {
    std::vector<int> im;
    int start = 0;
    for (int d : parts) {
        for (int k = d; k >= 1; --k) im.push_back(start + k);
        start += d;
    }
    return Permutation(std::move(im));
}

Permutation coset_rep(const Permutation& w, const Composition& type, CosetMode mode) {
    if (type.total() != w.window()) throw DomainError("composition does not sum to the window");
    auto im = w.images();
    auto it = im.begin();
    for (int d : type.parts) {
        if (mode == CosetMode::Min)
            std::sort(it, it + d);
        else
            std::sort(it, it + d, std::greater<>());
        it += d;
    }
    return Permutation(std::move(im));
}

std::vector<Permutation> coset_reps(const Composition& type, CosetMode mode) {
    std::vector<Permutation> out;
    for (const auto& w : all_permutations(type.total()))
        if (coset_rep(w, type, mode) == w) out.push_back(w);
    return out;
}

std::vector<int> support(const Permutation& w) {
    std::vector<int> out;
    for (int i = 1; i < w.window(); ++i)
        if (bruhat_leq(Permutation::simple(i, w.window()), w)) out.push_back(i);
    return out;
}

long long dimension_partial_flag(const Composition& type) {
    long long total = 0, before = 0;
    for (int d : type.parts) {
        total += before * d;
        before += d;
    }
    return total;
}

bool Weight::is_dominant() const {
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i - 1] < entries[i]) return false;
    return true;
}

bool Weight::is_regular_dominant() const {
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i - 1] <= entries[i]) return false;
    return true;
}

bool Weight::is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](long long v) { return v == 0; });
}

Weight Weight::parse(const std::string& text) {
    auto ints = parse_int_list(text);
    return Weight{std::vector<long long>(ints.begin(), ints.end())};
}

Weight operator+(const Weight& a, const Weight& b) {
    if (a.window() != b.window()) throw WindowMismatch(a.window(), b.window());
    Weight r = a;
    for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] += b.entries[i];
    return r;
}

Weight operator-(const Weight& a) {
    Weight r = a;
    for (auto& e : r.entries) e = -e;
    return r;
}

Weight fundamental_weight(int d, int n) {
    if (d < 1 || d > n) throw DomainError("fundamental weight index out of range");
    Weight w{std::vector<long long>(static_cast<std::size_t>(n), 0)};
    for (int i = 0; i < d; ++i) w.entries[static_cast<std::size_t>(i)] = 1;
    return w;
}

Weight rho(int n) {
    if (n < 1) throw DomainError("window must be positive");
    Weight w{std::vector<long long>(static_cast<std::size_t>(n))};
    for (int i = 0; i < n; ++i) w.entries[static_cast<std::size_t>(i)] = n - 1 - i;
    return w;
}

Weight coordinate_weight(int i, int n) {
    if (i < 1 || i > n) throw DomainError("coordinate weight index out of range");
    Weight w{std::vector<long long>(static_cast<std::size_t>(n), 0)};
    w.entries[static_cast<std::size_t>(i - 1)] = 1;
    return w;
}

bool LengthLexLess::operator()(const Permutation& a, const Permutation& b) const {
    int la = length(a), lb = length(b);
    if (la != lb) return la < lb;
    return a < b;
}

std::vector<Permutation> all_permutations(int n) {
    auto id = Permutation::identity(n);
    std::vector<int> im = id.images();
    std::vector<Permutation> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    std::stable_sort(out.begin(), out.end(),
                     [](const Permutation& a, const Permutation& b) { return length(a) < length(b); });
    return out;
}

namespace {

std::size_t lex_rank(const Permutation& w) {
    auto c = code(w);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < c.size(); ++i) rank = rank * (c.size() - i) + static_cast<std::size_t>(c[i]);
    return rank;
}

}  // namespace

SymmetricGroup::SymmetricGroup(int n) : n_(n), elements_(all_permutations(n)) {
    const std::size_t m = elements_.size();
    lengths_.resize(m);
    lex_to_sorted_.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        lengths_[i] = schubert::length(elements_[i]);
        lex_to_sorted_[lex_rank(elements_[i])] = i;
    }
    bruhat_.assign(m * m, 0);
    for (std::size_t v = 0; v < m; ++v)
        for (std::size_t w = 0; w < m; ++w)
            if (lengths_[v] <= lengths_[w] && bruhat_leq(elements_[v], elements_[w])) bruhat_[v * m + w] = 1;
    const auto wo = Permutation::longest(n);
    opposite_.resize(m);
    for (std::size_t i = 0; i < m; ++i) opposite_[i] = index_of(compose(wo, elements_[i]));
}

const SymmetricGroup& SymmetricGroup::get(int n) {
    if (n < 1) throw DomainError("window must be positive");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<SymmetricGroup>> groups;
    std::lock_guard lock(mutex);
    auto& slot = groups[n];
    if (!slot) slot.reset(new SymmetricGroup(n));
    return *slot;
}

std::size_t SymmetricGroup::index_of(const Permutation& w) const {
    if (w.window() != n_) throw WindowMismatch(w.window(), n_);
    return lex_to_sorted_[lex_rank(w)];
}

}  // namespace schubert
