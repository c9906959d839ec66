#pragma once

// On-disk cache of full structure-constant tables.
//
// One file per (theory, window, engine version):
//   {"header": {format, engine_version, theory, window, created,
//               checksum_algorithm, checksum},
//    "payload": <table_to_json>}
// The checksum is SHA-256 over the compact canonical dump of the payload.
// Writers hold an exclusive lock file in the cache directory.

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/errors.hpp"
#include "schubert/polyring.hpp"

namespace schubert {

/// The stored checksum does not match the payload, or the header is wrong.
class CacheCorrupt : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Another writer holds the lock.
class CacheLocked : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string sha256_hex(std::string_view data);

struct CacheEntry {
    PolyBasis basis;
    int n = 0;
    std::filesystem::path path;
    /// Number of stored (v, w) pairs.
    std::size_t pairs = 0;
};

class TableCache {
public:
    explicit TableCache(std::filesystem::path dir);

    /// $SCHUBERT_CACHE_DIR, else $XDG_CACHE_HOME/schubert, else
    /// $HOME/.cache/schubert, else ./.schubert-cache.
    static std::filesystem::path default_dir();

    [[nodiscard]] const std::filesystem::path& dir() const noexcept { return dir_; }
    [[nodiscard]] std::filesystem::path file_for(PolyBasis basis, int n) const;

    /// Computes and writes the H and K tables for every window 1..max_n.
    std::vector<CacheEntry> build(int max_n, unsigned threads = 0);
    /// Verifies and installs the H and K tables for every window 1..max_n.
    /// Throws CacheCorrupt on checksum or header mismatch, runtime_error when a
    /// file is missing.
    std::vector<CacheEntry> load(int max_n);
    /// Single-table forms of the above.
    CacheEntry store(PolyBasis basis, int n, unsigned threads = 0);
    CacheEntry load_one(PolyBasis basis, int n);
    /// Removes table files written by other engine versions and leftover
    /// temporaries. Returns the removed paths.
    std::vector<std::filesystem::path> gc();

private:
    std::filesystem::path dir_;
};

}  // namespace schubert
