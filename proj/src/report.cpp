#include "schubert/report.hpp"

namespace schubert {

void Report::merge(const Report& other) {
    if (!other.pass) pass = false;
    failures += other.failures;
    for (const auto& w : other.witnesses)
        if (witnesses.size() < kMaxWitnesses) witnesses.push_back(w);
    summary[other.suite] = other.summary;
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["parameters"] = parameters;
    j["pass"] = pass;
    j["failures"] = failures;
    j["witnesses"] = witnesses;
    if (!summary.empty()) j["summary"] = summary;
    return j;
}

}  // namespace schubert
