#include "schubert/cache.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <openssl/evp.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>

#include "schubert/serialize.hpp"
#include "schubert/table.hpp"
#include "schubert/version.hpp"

namespace schubert {

namespace fs = std::filesystem;

namespace {

constexpr const char* kFormat = "schubert-table";
constexpr const char* kPrefix = "table-";

const char* theory_tag(PolyBasis b) { return b == PolyBasis::Schubert ? "H" : "K"; }

class LockFile {
public:
    explicit LockFile(const fs::path& dir) : path_(dir / ".lock") {
        fd_ = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
        if (fd_ < 0) {
            if (errno == EEXIST) throw CacheLocked("cache is locked by another writer: " + path_.string());
            throw std::runtime_error("cannot create lock " + path_.string() + ": " + std::strerror(errno));
        }
        const std::string pid = std::to_string(::getpid()) + "\n";
        (void)!::write(fd_, pid.data(), pid.size());
    }
    ~LockFile() {
        ::close(fd_);
        std::error_code ec;
        fs::remove(path_, ec);
    }
    LockFile(const LockFile&) = delete;
    LockFile& operator=(const LockFile&) = delete;

private:
    fs::path path_;
    int fd_ = -1;
};

std::string utc_now() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw DomainError("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_atomically(const fs::path& p, const std::string& data) {
    fs::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << data;
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    fs::rename(tmp, p);
}

// Sorted keys, no whitespace.
std::string canonical_dump(const Json& j) { return nlohmann::json(j).dump(); }

}  // namespace

std::string sha256_hex(std::string_view data) {
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1)
        throw std::runtime_error("sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

TableCache::TableCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path TableCache::default_dir() {
    if (const char* d = std::getenv("SCHUBERT_CACHE_DIR"); d && *d) return d;
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "schubert";
    if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "schubert";
    return ".schubert-cache";
}

fs::path TableCache::file_for(PolyBasis basis, int n) const {
    return dir_ / (std::string(kPrefix) + theory_tag(basis) + "-n" + std::to_string(n) + "-v" + kEngineVersion + ".json");
}

CacheEntry TableCache::store(PolyBasis basis, int n, unsigned threads) {
    fs::create_directories(dir_);
    auto& table = ProductTable::get(basis, n);
    table.fill(threads);
    const Json payload = table_to_json(table);
    Json doc;
    doc["header"] = {{"format", kFormat},
                     {"engine_version", kEngineVersion},
                     {"theory", theory_tag(basis)},
                     {"window", n},
                     {"created", utc_now()},
                     {"checksum_algorithm", "sha256"},
                     {"checksum", sha256_hex(canonical_dump(payload))}};
    doc["payload"] = payload;
    const fs::path path = file_for(basis, n);
    write_atomically(path, canonical_dump(doc) + "\n");
    return {basis, n, path, payload.at("entries").size()};
}

CacheEntry TableCache::load_one(PolyBasis basis, int n) {
    const fs::path path = file_for(basis, n);
    if (!fs::exists(path)) throw std::runtime_error("no cached table at " + path.string());
    Json doc;
    try {
        doc = Json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw CacheCorrupt("unparseable cache file " + path.string() + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("header") || !doc.contains("payload"))
        throw CacheCorrupt("cache file lacks header or payload: " + path.string());
    const Json& h = doc["header"];
    const auto field = [&](const char* k) { return h.contains(k) ? h[k].dump() : std::string("null"); };
    if (field("format") != Json(kFormat).dump() || field("engine_version") != Json(kEngineVersion).dump() ||
        field("theory") != Json(theory_tag(basis)).dump() || field("window") != Json(n).dump() ||
        field("checksum_algorithm") != Json("sha256").dump())
        throw CacheCorrupt("cache header mismatch in " + path.string());
    const Json& payload = doc["payload"];
    if (field("checksum") != Json(sha256_hex(canonical_dump(payload))).dump())
        throw CacheCorrupt("checksum mismatch in " + path.string());
    auto& table = table_from_json(payload);
    if (table.basis() != basis || table.window() != n) throw CacheCorrupt("payload key mismatch in " + path.string());
    return {basis, n, path, payload.at("entries").size()};
}

std::vector<CacheEntry> TableCache::build(int max_n, unsigned threads) {
    fs::create_directories(dir_);
    LockFile lock(dir_);
    std::vector<CacheEntry> out;
    for (int n = 1; n <= max_n; ++n)
        for (PolyBasis b : {PolyBasis::Schubert, PolyBasis::Grothendieck}) out.push_back(store(b, n, threads));
    return out;
}

std::vector<CacheEntry> TableCache::load(int max_n) {
    std::vector<CacheEntry> out;
    for (int n = 1; n <= max_n; ++n)
        for (PolyBasis b : {PolyBasis::Schubert, PolyBasis::Grothendieck}) out.push_back(load_one(b, n));
    return out;
}

std::vector<fs::path> TableCache::gc() {
    std::vector<fs::path> removed;
    if (!fs::exists(dir_)) return removed;
    LockFile lock(dir_);
    const std::string current = std::string("-v") + kEngineVersion + ".json";
    for (const auto& e : fs::directory_iterator(dir_)) {
        if (!e.is_regular_file()) continue;
        const std::string name = e.path().filename().string();
        if (name.rfind(kPrefix, 0) != 0) continue;
        const bool tmp = name.size() > 4 && name.ends_with(".tmp");
        const bool stale = name.ends_with(".json") && !name.ends_with(current);
        if (tmp || stale) removed.push_back(e.path());
    }
    std::sort(removed.begin(), removed.end());
    for (const auto& p : removed) fs::remove(p);
    return removed;
}

}  // namespace schubert
