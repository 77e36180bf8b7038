#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qfock {

// Outcome of a verification suite: one named pass/fail entry per checked
// identity or sample batch.
struct Report {
    std::vector<std::pair<std::string, bool>> checks;

    void add(std::string name, bool pass) { checks.emplace_back(std::move(name), pass); }
    void merge(const Report& o) {
        checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    }
    bool ok() const {
        for (const auto& [name, pass] : checks)
            if (!pass) return false;
        return true;
    }
};

}  // namespace qfock
