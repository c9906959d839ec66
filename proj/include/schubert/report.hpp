#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace schubert {

/// Outcome of a verification suite. Witnesses describe failures; only the
/// first `kMaxWitnesses` are kept, `failures` counts all of them.
struct Report {
    static constexpr std::size_t kMaxWitnesses = 20;

    std::string suite;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    bool pass = true;
    std::size_t failures = 0;
    std::vector<nlohmann::ordered_json> witnesses;
    /// Suite-specific counters and notes.
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();

    explicit Report(std::string name) : suite(std::move(name)) {}

    void fail(nlohmann::ordered_json witness) {
        pass = false;
        ++failures;
        if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
    }
    /// Records a failure when `ok` is false; returns `ok`.
    bool check(bool ok, const nlohmann::ordered_json& witness) {
        if (!ok) fail(witness);
        return ok;
    }
    void merge(const Report& other);

    [[nodiscard]] nlohmann::ordered_json to_json() const;
};

}  // namespace schubert
