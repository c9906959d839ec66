#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unistd.h>
#include <sstream>

#include "schubert/cache.hpp"
#include "schubert/cli.hpp"
#include "schubert/errors.hpp"
#include "schubert/serialize.hpp"
#include "schubert/table.hpp"
#include "schubert/verify.hpp"

using namespace schubert;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() / ("schubert-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::remove_all(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

struct CliResult {
    int code;
    std::string out, err;
};

CliResult cli(std::vector<std::string> args) {
    args.insert(args.begin(), "schubert");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("serialization round trips") {
    const Permutation w{3, 1, 2};
    CHECK(permutation_from_json(to_json(w)) == w);
    CHECK(to_json(w).dump() == "[3,1,2]");
    const Poly p = schubert_poly(Permutation{1, 4, 3, 2}) * Poly::constant(Integer::from_string("123456789012345678901234567890"));
    CHECK(poly_from_json(to_json(p)) == p);
    CHECK(to_json(p).dump() == to_json(poly_from_json(to_json(p))).dump());
    const CohClass c = CohClass::schubert(w) + CohClass::point(3).scaled(-7);
    CHECK(coh_class_from_json(to_json(c)) == c);
    const KClass k = KClass::I(w) + KClass::I(Permutation{1, 2, 3}).scaled(5);
    const KClass k2 = k_class_from_json(to_json(k));
    CHECK(k2 == k);
    CHECK(k2.basis() == KBasis::I);
    CHECK_THROWS_AS(permutation_from_json(Json::object()), DomainError);
    CHECK(to_json(GrassIndex(4, {2, 4})).dump() == "[2,4]");
}

TEST_CASE("table JSON round trip") {
    for (PolyBasis b : {PolyBasis::Schubert, PolyBasis::Grothendieck}) {
        auto& t = ProductTable::get(b, 3);
        t.fill();
        const std::string before = table_to_json(t).dump();
        t.clear();
        CHECK(t.computed() == 0);
        CHECK(&table_from_json(Json::parse(before)) == &t);
        CHECK(t.complete());
        CHECK(table_to_json(t).dump() == before);
    }
    CHECK_THROWS_AS(table_from_json(Json{{"theory", "Q"}, {"window", 3}, {"entries", Json::array()}}), DomainError);
    CHECK_THROWS_AS(table_from_json(Json{{"theory", "H"}}), DomainError);
}

TEST_CASE("sha256") {
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("table cache") {
    TempDir dir;
    TableCache cache(dir.path);
    CHECK(cache.gc().empty());
    const auto built = cache.build(3);
    CHECK(built.size() == 6);
    std::vector<std::string> payloads;
    for (PolyBasis b : {PolyBasis::Schubert, PolyBasis::Grothendieck}) {
        auto& t = ProductTable::get(b, 3);
        payloads.push_back(table_to_json(t).dump());
        t.clear();
    }
    CHECK(cache.load(3).size() == 6);
    CHECK(table_to_json(ProductTable::get(PolyBasis::Schubert, 3)).dump() == payloads[0]);
    CHECK(table_to_json(ProductTable::get(PolyBasis::Grothendieck, 3)).dump() == payloads[1]);

    // A single flipped bit anywhere in the payload is detected.
    const fs::path f = cache.file_for(PolyBasis::Grothendieck, 3);
    const std::string good = slurp(f);
    const auto payload_at = good.find("\"payload\"");
    REQUIRE(payload_at != std::string::npos);
    for (std::size_t pos = payload_at + 12; pos < good.size() - 2; pos += 7) {
        std::string bad = good;
        bad[pos] = static_cast<char>(bad[pos] ^ 1);
        std::ofstream(f, std::ios::binary | std::ios::trunc) << bad;
        CHECK_THROWS_AS(cache.load_one(PolyBasis::Grothendieck, 3), CacheCorrupt);
    }
    std::ofstream(f, std::ios::binary | std::ios::trunc) << good;
    CHECK_NOTHROW(cache.load_one(PolyBasis::Grothendieck, 3));

    // Lock file blocks writers; gc drops other engine versions only.
    { std::ofstream(dir.path / ".lock") << "1\n"; }
    CHECK_THROWS_AS(cache.build(1), CacheLocked);
    fs::remove(dir.path / ".lock");
    { std::ofstream(dir.path / "table-H-n1-v0.0.0.json") << "{}"; }
    const auto removed = cache.gc();
    REQUIRE(removed.size() == 1);
    CHECK(removed[0].filename() == "table-H-n1-v0.0.0.json");
    CHECK(fs::exists(cache.file_for(PolyBasis::Schubert, 1)));
    CHECK_THROWS_AS(cache.load_one(PolyBasis::Schubert, 5), std::runtime_error);
}

TEST_CASE("command line: computations") {
    auto r = cli({"cup", "--n", "3", "--v", "2,3,1", "--w", "3,1,2"});
    CHECK(r.code == kExitOk);
    CHECK(coh_class_from_json(Json::parse(r.out)) ==
          CohClass::schubert(Permutation{1, 3, 2}) + CohClass::schubert(Permutation{2, 1, 3}));
    CHECK(cli({"cup", "--n", "3", "--v", "2,3,1", "--w", "3,1,2"}).out == r.out);
    CHECK(cli({"mobius", "--n", "3", "--v", "1,2,3", "--w", "3,2,1"}).out == "-1\n");
    r = cli({"cone", "--d", "4"});
    CHECK(r.code == kExitOk);
    const Json cone = Json::parse(r.out);
    CHECK(cone["c2"] == "4");
    CHECK(cone["c0"] == "-1");
    r = cli({"kmul", "--n", "2", "--v", "1,2", "--w", "1,2"});
    CHECK(k_class_from_json(Json::parse(r.out)).is_zero());
    r = cli({"convert", "--n", "2", "--w", "2,1", "--from", "I", "--to", "O"});
    CHECK(k_class_from_json(Json::parse(r.out)).terms() == ClassTerms{{Permutation{1, 2}, -1}, {Permutation{2, 1}, 1}});
    CHECK(cli({"chevalley", "--n", "2", "--lambda", "7,3", "--w", "2,1"}).code == kExitOk);
    CHECK(cli({"kchevalley", "--n", "3", "--lambda", "2,1,0", "--w", "3,2,1", "--mode", "divisor"}).code == kExitOk);
    CHECK(cli({"dualize", "--n", "3", "--w", "2,1,3"}).code == kExitOk);
    CHECK(cli({"lr", "--d", "2", "--n", "4", "--lambda", "1", "--mu", "1"}).code == kExitOk);
    CHECK(cli({"pieri", "--n", "4", "--index", "3,4", "--mode", "Linv"}).code == kExitOk);
    r = cli({"hilbert", "--n", "2", "--j", "1", "--k-min", "-2", "--k-max", "-2"});
    CHECK(Json::parse(r.out)["values"][0]["chi"] == "-1");
}

TEST_CASE("command line: exit codes and configuration") {
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"frobnicate"}).code == kExitUsage);
    CHECK(cli({"cup", "--n", "3", "--v", "2,x,1", "--w", "1"}).code == kExitUsage);
    CHECK(cli({"cup", "--n", "2", "--v", "3,1,2", "--w", "1"}).code == kExitUsage);
    CHECK(cli({"mobius", "--n", "3", "--v", "3,1,2", "--w", "2,3,1"}).code == kExitUsage);
    CHECK(cli({"verify", "nonsense"}).code == kExitUsage);
    CHECK(cli({"--help"}).code == kExitOk);
    // Window guard: flag beats environment beats the default.
    CHECK(cli({"cup", "--n", "7", "--v", "1", "--w", "1"}).code == kExitUsage);
    ::setenv("SCHUBERT_MAX_N", "2", 1);
    CHECK(cli({"cup", "--n", "3", "--v", "1", "--w", "1"}).code == kExitUsage);
    CHECK(cli({"--max-n", "3", "cup", "--n", "3", "--v", "1", "--w", "1"}).code == kExitOk);
    CHECK(cli({"--allow-large", "cup", "--n", "3", "--v", "1", "--w", "1"}).code == kExitOk);
    ::setenv("SCHUBERT_MAX_N", "bogus", 1);
    CHECK(cli({"cup", "--n", "3", "--v", "1", "--w", "1"}).code == kExitUsage);
    ::unsetenv("SCHUBERT_MAX_N");
    CHECK(cli({"cup", "--n", "3", "--v", "1", "--w", "1"}).code == kExitOk);
}

TEST_CASE("command line: verify, export and cache") {
    auto r = cli({"verify", "duality", "--n", "3"});
    CHECK(r.code == kExitOk);
    CHECK(Json::parse(r.out)["pass"] == true);
    CHECK(cli({"verify", "signs", "--n", "3"}).code == kExitOk);
    CHECK(cli({"verify", "cone", "--dmax", "8"}).code == kExitOk);

    TempDir dir;
    fs::create_directories(dir.path);
    const auto dot = dir.path / "s3.dot";
    CHECK(cli({"export", "poset", "--n", "3", "--format", "dot", "--out", dot.string()}).code == kExitOk);
    const std::string text = slurp(dot);
    std::size_t nodes = 0, edges = 0;
    for (std::size_t p = text.find("[label="); p != std::string::npos; p = text.find("[label=", p + 1)) ++nodes;
    for (std::size_t p = text.find("->"); p != std::string::npos; p = text.find("->", p + 1)) ++edges;
    CHECK(nodes == 6);
    std::size_t cover_count = 0;
    for (const auto& w : all_permutations(3)) cover_count += covers(w).size();
    CHECK(edges == cover_count);
    CHECK(cli({"export", "poset", "--n", "3", "--format", "dot", "--out", dot.string()}).code == kExitOk);
    CHECK(slurp(dot) == text);
    r = cli({"export", "poset", "--n", "4", "--d", "2", "--format", "json"});
    CHECK(Json::parse(r.out)["elements"].size() == 6);
    r = cli({"export", "table", "--n", "1", "--theory", "K"});
    CHECK(r.code == kExitOk);
    CHECK(Json::parse(r.out)["entries"].size() == 1);
    CHECK(cli({"export", "table", "--n", "2", "--format", "dot"}).code == kExitUsage);
    CHECK(cli({"export", "poset", "--n", "3", "--out", (dir.path / "missing" / "x.json").string()}).code == kExitFailure);

    const auto cache_dir = (dir.path / "cache").string();
    CHECK(cli({"--cache-dir", cache_dir, "cache", "gc"}).code == kExitOk);
    CHECK(cli({"--cache-dir", cache_dir, "cache", "build", "--n", "2"}).code == kExitOk);
    ::setenv("SCHUBERT_CACHE_DIR", cache_dir.c_str(), 1);
    CHECK(cli({"cache", "load", "--n", "2"}).code == kExitOk);
    CHECK(cli({"cache", "load", "--n", "3"}).code == kExitFailure);
    ::unsetenv("SCHUBERT_CACHE_DIR");
}

TEST_CASE("verification suites at small windows") {
    SuiteParams p;
    p.n = 3;
    for (const auto& name : suite_names()) {
        const Report r = run_suite(name, p);
        INFO(name);
        CHECK(r.pass);
    }
    CHECK_THROWS_AS(run_suite("nope", p), DomainError);
}
