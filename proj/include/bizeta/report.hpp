#pragma once

#include <string>
#include <vector>

namespace bizeta {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string witness; // populated on failure
};

/// Ordered list of named check outcomes. Every check a verifier registers
/// appears exactly once; witness data explains each failure.
struct CheckReport {
    std::vector<CheckResult> checks;

    void add(std::string id, bool pass, std::string witness_on_fail = "") {
        checks.push_back({std::move(id), pass, pass ? std::string() : std::move(witness_on_fail)});
    }
    void merge(const CheckReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::vector<std::string> failed_ids() const {
        std::vector<std::string> ids;
        for (const auto& c : checks)
            if (!c.pass) ids.push_back(c.id);
        return ids;
    }
    bool has(const std::string& id) const {
        for (const auto& c : checks)
            if (c.id == id) return true;
        return false;
    }
};

} // namespace bizeta
