#pragma once

#include <string>
#include <vector>

#include "zmdirac/config.hpp"
#include "zmdirac/report.hpp"

namespace zmdirac {

// Names of every verification suite, in report order.
const std::vector<std::string>& suite_names();

// The suites a config selects: its explicit list in registry order, or all
// of them.  Throws ConfigError on an unknown name, listing the valid ones.
std::vector<std::string> resolve_suites(const RunConfig& cfg);

SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

std::vector<SuiteReport> run_suites(const RunConfig& cfg);

}  // namespace zmdirac
