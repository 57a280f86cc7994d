#pragma once

#include <string>
#include <vector>

namespace qgr {

/// One verified identity. `anchor` is a stable id naming the identity; it
/// makes failures greppable and replayable.
struct Check {
    std::string id;
    std::string anchor;
    bool passed = false;
    std::string detail;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;
    long elapsed_ms = 0;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    void add(std::string id, std::string anchor, bool passed, std::string detail = "") {
        checks.push_back(Check{std::move(id), std::move(anchor), passed, std::move(detail)});
    }
    void merge(const Report& o) {
        for (const auto& c : o.checks) checks.push_back(c);
    }
};

}  // namespace qgr
