#include "schubert/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "schubert/cache.hpp"
#include "schubert/cohomology.hpp"
#include "schubert/grassmann.hpp"
#include "schubert/ktheory.hpp"
#include "schubert/oracle_lab.hpp"
#include "schubert/serialize.hpp"
#include "schubert/table.hpp"
#include "schubert/verify.hpp"
#include "schubert/version.hpp"

namespace schubert {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Sorted keys, two-space indent, trailing newline.
std::string canonical(const Json& j) { return nlohmann::json(j).dump(2) + "\n"; }

struct Globals {
    std::optional<int> max_n;
    bool allow_large = false;
    std::string cache_dir;
};

int window_cap(const Globals& g) {
    if (g.max_n) return *g.max_n;
    if (const char* env = std::getenv("SCHUBERT_MAX_N"); env && *env) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(env, &used);
            if (used == std::strlen(env) && v >= 1) return v;
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("SCHUBERT_MAX_N must be a positive integer, got '") + env + "'");
    }
    return kDefaultMaxN;
}

void guard_window(int n, const Globals& g) {
    if (n < 1) throw UsageError("window n must be at least 1");
    const int cap = window_cap(g);
    if (n > cap && !g.allow_large)
        throw UsageError("window n = " + std::to_string(n) + " exceeds the cap " + std::to_string(cap) +
                         "; pass --allow-large to proceed");
}

Permutation perm_arg(const std::string& text, int n) {
    const Permutation w = Permutation::parse(text).trimmed();
    if (w.window() > n) throw UsageError("permutation " + text + " does not lie in S_" + std::to_string(n));
    return w.embedded(n);
}

Weight weight_arg(const std::string& text, int n) {
    Weight w = Weight::parse(text);
    if (w.window() != n) throw UsageError("weight " + text + " must have " + std::to_string(n) + " entries");
    return w;
}

KBasis basis_arg(const std::string& s) {
    if (s == "O") return KBasis::O;
    if (s == "I") return KBasis::I;
    throw UsageError("basis must be O or I");
}

std::vector<int> int_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("expected a comma-separated integer list, got '" + text + "'");
        }
    }
    return out;
}

Json grass_terms_json(const GrassTerms& t) {
    Json a = Json::array();
    for (const auto& [I, c] : t) a.push_back({{"index", to_json(I)}, {"coeff", c.str()}});
    return a;
}

void write_output(const std::string& path, const std::string& data, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << data;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << data;
    if (!f) throw std::runtime_error("cannot write " + path);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Schubert calculus on flag varieties: cohomology, K-theory and verification"};
    app.set_version_flag("--version", kEngineVersion);
    app.require_subcommand(1);

    Globals g;
    int max_n_flag = 0;
    auto* max_n_opt = app.add_option("--max-n", max_n_flag, "Window cap (default: $SCHUBERT_MAX_N, else 6)")
                          ->check(CLI::PositiveNumber);
    app.add_flag("--allow-large", g.allow_large, "Permit windows above the cap");
    app.add_option("--cache-dir", g.cache_dir, "Cache directory (default: $SCHUBERT_CACHE_DIR)");

    int n = 0, d = 0;
    std::string v_text, w_text, lambda_text, mu_text, basis_text = "O", to_text = "I", mode_text, theory_text = "H",
                                                     conv_text = "codim", index_text, format_text = "json", out_path,
                                                     suite, kind, action;

    auto* cup = app.add_subcommand("cup", "[X_v]·[X_w] in the dimension convention");
    auto* kmul = app.add_subcommand("kmul", "Product of two K-theory basis classes");
    auto* chev = app.add_subcommand("chevalley", "c1(L_λ)·[X_w]");
    auto* kchev = app.add_subcommand("kchevalley", "[L_λ]·O_w, or O_λ·O_w with --mode divisor");
    auto* conv = app.add_subcommand("convert", "Change a basis class between O and I");
    auto* dualize_cmd = app.add_subcommand("dualize", "Duality involution of a basis class");
    auto* mob = app.add_subcommand("mobius", "Bruhat Möbius function μ(v, w)");
    for (auto* s : {cup, kmul, chev, kchev, conv, dualize_cmd, mob}) s->add_option("--n", n, "Window")->required();
    for (auto* s : {cup, kmul, mob}) s->add_option("--v", v_text, "Permutation, one-line notation")->required();
    for (auto* s : {cup, kmul, chev, kchev, conv, dualize_cmd, mob})
        s->add_option("--w", w_text, "Permutation, one-line notation")->required();
    for (auto* s : {chev, kchev}) s->add_option("--lambda", lambda_text, "Weight, comma-separated")->required();
    kmul->add_option("--basis", basis_text, "O or I");
    dualize_cmd->add_option("--basis", basis_text, "O or I");
    conv->add_option("--from", basis_text, "O or I");
    conv->add_option("--to", to_text, "O or I");
    kchev->add_option("--mode", mode_text, "line (default) or divisor");

    auto* lr = app.add_subcommand("lr", "Littlewood–Richardson numbers on Gr(d, n)");
    lr->add_option("--d", d)->required();
    lr->add_option("--n", n)->required();
    lr->add_option("--lambda", lambda_text, "Partition, comma-separated")->required();
    lr->add_option("--mu", mu_text, "Partition, comma-separated")->required();
    lr->add_option("--theory", theory_text, "H or K");
    lr->add_option("--convention", conv_text, "codim (default) or dim");

    auto* pieri = app.add_subcommand("pieri", "Pieri formulas on Gr(d, n)");
    pieri->add_option("--n", n)->required();
    pieri->add_option("--index", index_text, "Increasing index set, e.g. 2,4")->required();
    pieri->add_option("--mode", mode_text, "H (default), L, Linv or divisor");

    auto* hilbert = app.add_subcommand("hilbert", "χ(O_{P^j}(k)) in the K(P^n) model");
    int j = 0;
    long k_lo = -3, k_hi = 3;
    hilbert->add_option("--n", n)->required();
    hilbert->add_option("--j", j)->required();
    hilbert->add_option("--k-min", k_lo);
    hilbert->add_option("--k-max", k_hi);

    auto* cone = app.add_subcommand("cone", "K-class of the cone counterexample");
    cone->add_option("--d", d)->required()->check(CLI::Range(3, 64));

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    SuiteParams params;
    verify->add_option("suite", suite)->required();
    verify->add_option("--n", params.n);
    verify->add_option("--dmax", params.dmax);
    verify->add_option("--seed", params.seed);
    verify->add_option("--samples", params.samples);

    auto* exp = app.add_subcommand("export", "Export a poset or a structure-constant table");
    exp->add_option("kind", kind, "poset or table")->required()->check(CLI::IsMember({"poset", "table"}));
    exp->add_option("--n", n)->required();
    exp->add_option("--d", d, "Grassmannian Gr(d, n) poset instead of S_n");
    exp->add_option("--theory", theory_text, "H or K (tables)");
    exp->add_option("--format", format_text, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    exp->add_option("--out", out_path, "Output file (default stdout)");

    auto* cache = app.add_subcommand("cache", "Build, load or garbage-collect cached tables");
    cache->add_option("action", action)->required()->check(CLI::IsMember({"build", "load", "gc"}));
    cache->add_option("--n", n, "Largest window")->default_val(4);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (*max_n_opt) g.max_n = max_n_flag;

    try {
        if (cup->parsed()) {
            guard_window(n, g);
            out << canonical(to_json(schubert::cup(CohClass::schubert(perm_arg(v_text, n)), CohClass::schubert(perm_arg(w_text, n)))));
        } else if (kmul->parsed()) {
            guard_window(n, g);
            const KBasis b = basis_arg(basis_text);
            const auto make = [&](const std::string& t) {
                return b == KBasis::O ? KClass::O(perm_arg(t, n)) : KClass::I(perm_arg(t, n));
            };
            out << canonical(to_json(basis_convert(multiply(make(v_text), make(w_text)), b)));
        } else if (chev->parsed()) {
            guard_window(n, g);
            out << canonical(to_json(chevalley_cup(weight_arg(lambda_text, n), perm_arg(w_text, n))));
        } else if (kchev->parsed()) {
            guard_window(n, g);
            const Weight lam = weight_arg(lambda_text, n);
            const Permutation w = perm_arg(w_text, n);
            if (mode_text.empty() || mode_text == "line")
                out << canonical(to_json(k_chevalley(lam, w)));
            else if (mode_text == "divisor")
                out << canonical(to_json(o_lambda_mult(lam, w)));
            else
                throw UsageError("mode must be line or divisor");
        } else if (conv->parsed()) {
            guard_window(n, g);
            const Permutation w = perm_arg(w_text, n);
            const KClass a = basis_arg(basis_text) == KBasis::O ? KClass::O(w) : KClass::I(w);
            out << canonical(to_json(basis_convert(a, basis_arg(to_text))));
        } else if (dualize_cmd->parsed()) {
            guard_window(n, g);
            const KBasis b = basis_arg(basis_text);
            const Permutation w = perm_arg(w_text, n);
            out << canonical(to_json(basis_convert(dualize(b == KBasis::O ? KClass::O(w) : KClass::I(w)), b)));
        } else if (mob->parsed()) {
            guard_window(n, g);
            const Permutation v = perm_arg(v_text, n);
            const Permutation w = perm_arg(w_text, n);
            if (!bruhat_leq(v, w)) throw UsageError("mobius needs v <= w in Bruhat order");
            out << mobius(v, w) << "\n";
        } else if (lr->parsed()) {
            guard_window(n, g);
            if (d < 1 || d >= n) throw UsageError("need 0 < d < n");
            PartitionConvention pc;
            if (conv_text == "codim")
                pc = PartitionConvention::Codimension;
            else if (conv_text == "dim")
                pc = PartitionConvention::Dimension;
            else
                throw UsageError("convention must be codim or dim");
            if (theory_text != "H" && theory_text != "K") throw UsageError("theory must be H or K");
            const auto res = lr_coefficients(Partition(d, n, int_list(lambda_text), pc), Partition(d, n, int_list(mu_text), pc),
                                             theory_text == "H" ? Theory::H : Theory::K);
            Json a = Json::array();
            for (const auto& [nu, c] : res) a.push_back({{"partition", to_json(nu)}, {"coeff", c.str()}});
            out << canonical(a);
        } else if (pieri->parsed()) {
            guard_window(n, g);
            const GrassIndex I = GrassIndex::parse(index_text, n);
            if (mode_text.empty() || mode_text == "H")
                out << canonical(grass_terms_json(pieri_divisor_cohomology(I)));
            else if (mode_text == "L")
                out << canonical(grass_terms_json(k_pieri(I, KPieriMode::L)));
            else if (mode_text == "Linv")
                out << canonical(grass_terms_json(k_pieri(I, KPieriMode::LInverse)));
            else if (mode_text == "divisor")
                out << canonical(grass_terms_json(k_pieri(I, KPieriMode::Divisor)));
            else
                throw UsageError("mode must be H, L, Linv or divisor");
        } else if (hilbert->parsed()) {
            if (n < 0 || j < 0 || j > n) throw UsageError("need 0 <= j <= n");
            if (k_lo > k_hi) throw UsageError("need k-min <= k-max");
            const ProjectiveKModel model(n);
            Json values = Json::array();
            for (long k = k_lo; k <= k_hi; ++k) values.push_back({{"k", k}, {"chi", model.euler(j, k).str()}});
            out << canonical(Json{{"n", n}, {"j", j}, {"hilbert", to_json(model.basis_hilbert(j))}, {"values", values}});
        } else if (cone->parsed()) {
            const ConeResult r = cone_counterexample(d);
            Json coeffs = Json::array();
            for (const auto& c : r.coefficients) coeffs.push_back(c.str());
            out << canonical(Json{{"d", r.d},
                                  {"c2", r.c2.str()},
                                  {"c1", r.c1.str()},
                                  {"c0", r.c0.str()},
                                  {"coefficients", coeffs},
                                  {"gaps", r.gaps.str()},
                                  {"violates_signs", r.violates_signs}});
        } else if (verify->parsed()) {
            const auto& names = suite_names();
            if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite: " + suite);
            guard_window(params.n, g);
            const Report r = run_suite(suite, params);
            out << canonical(r.to_json());
            return r.pass ? kExitOk : kExitFailure;
        } else if (exp->parsed()) {
            guard_window(n, g);
            std::string data;
            if (kind == "poset") {
                if (d != 0) {
                    if (d < 1 || d >= n) throw UsageError("need 0 < d < n");
                    const auto p = grass_poset(d, n);
                    data = format_text == "dot" ? p.to_dot([](const GrassIndex& I) { return I.str(); })
                                                : canonical(p.to_json([](const GrassIndex& I) { return to_json(I); }));
                } else {
                    const auto p = bruhat_poset(n);
                    data = format_text == "dot" ? p.to_dot([](const Permutation& w) { return w.str(); })
                                                : canonical(p.to_json([](const Permutation& w) { return to_json(w); }));
                }
            } else {
                if (format_text != "json") throw UsageError("tables export as json only");
                if (theory_text != "H" && theory_text != "K") throw UsageError("theory must be H or K");
                auto& table = ProductTable::get(theory_text == "H" ? PolyBasis::Schubert : PolyBasis::Grothendieck, n);
                table.fill();
                data = canonical(table_to_json(table));
            }
            write_output(out_path, data, out);
        } else if (cache->parsed()) {
            TableCache tc(g.cache_dir.empty() ? TableCache::default_dir() : std::filesystem::path(g.cache_dir));
            Json report{{"action", action}, {"dir", tc.dir().string()}};
            if (action == "gc") {
                Json removed = Json::array();
                for (const auto& p : tc.gc()) removed.push_back(p.filename().string());
                report["removed"] = removed;
            } else {
                guard_window(n, g);
                const auto entries = action == "build" ? tc.build(n) : tc.load(n);
                Json files = Json::array();
                for (const auto& e : entries)
                    files.push_back({{"theory", e.basis == PolyBasis::Schubert ? "H" : "K"},
                                     {"window", e.n},
                                     {"file", e.path.filename().string()},
                                     {"pairs", e.pairs}});
                report["tables"] = files;
            }
            out << canonical(report);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace schubert
