#pragma once

#include <string>
#include <vector>

#include "zmdirac/config.hpp"
#include "zmdirac/report.hpp"

namespace zmdirac {

// Serialized report with a fixed field order and no run-dependent content
// (no timestamps, no host data), so identical inputs give identical bytes.
std::string report_json(const RunConfig& cfg, const std::vector<SuiteReport>& suites);

std::string report_markdown(const RunConfig& cfg, const std::vector<SuiteReport>& suites);

// Writes <out>.json and/or <out>.md according to cfg.format and returns the
// paths written.
std::vector<std::string> write_reports(const RunConfig& cfg,
                                       const std::vector<SuiteReport>& suites);

}  // namespace zmdirac
