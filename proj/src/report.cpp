#include "zmdirac/report.hpp"

namespace zmdirac {

void SuiteReport::add(std::string name, std::string anchor, double residual,
                      double tol, bool expect_pass) {
    checks.push_back(Check{std::move(name), std::move(anchor), residual, tol, expect_pass});
}

void SuiteReport::annotate(std::string key, std::string value) {
    annotations.emplace_back(std::move(key), std::move(value));
}

void SuiteReport::merge(const SuiteReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    annotations.insert(annotations.end(), other.annotations.begin(),
                       other.annotations.end());
    tables.insert(tables.end(), other.tables.begin(), other.tables.end());
}

int SuiteReport::failed_count() const {
    int n = 0;
    for (const auto& c : checks)
        if (!c.ok()) ++n;
    return n;
}

}  // namespace zmdirac
