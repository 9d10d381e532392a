#pragma once

#include <string>
#include <utility>
#include <vector>

namespace zmdirac {

// One named verification check.  `expect_pass` distinguishes ordinary
// checks from negative controls: a control is healthy exactly when its
// residual exceeds the tolerance.
struct Check {
    std::string name;
    std::string paper_anchor;  // data-only source reference carried into reports
    double residual = 0.0;
    double tol = 0.0;
    bool expect_pass = true;

    bool pass() const { return residual <= tol; }
    bool ok() const { return pass() == expect_pass; }
};

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

// Result of one verification suite: checks plus free-form annotations
// (ordered key/value pairs) and display tables.
struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    std::vector<std::pair<std::string, std::string>> annotations;
    std::vector<Table> tables;

    void add(std::string name, std::string anchor, double residual, double tol,
             bool expect_pass = true);
    void annotate(std::string key, std::string value);
    // Appends the other report's checks/annotations/tables onto this one.
    void merge(const SuiteReport& other);

    int failed_count() const;
    bool all_ok() const { return failed_count() == 0; }
};

}  // namespace zmdirac
