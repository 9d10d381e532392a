#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "zmdirac/sweep.hpp"

namespace zmdirac {

// Configuration problems abort the run before any computation starts.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::uint64_t seed = 1973;
    int samples = 200;
    double tol_exact = 1e-10;
    double tol_fd = 1e-6;
    double fd_step = 1e-4;
    double scale_min = 1e-3;
    double scale_max = 1e3;
    std::vector<std::string> suites;  // empty selects every suite
    std::string format = "both";      // json | markdown | both
    std::string out = "zmdirac_report";
    ExecMode exec = ExecMode::parallel;
};

// Applies one `key=value` assignment; throws ConfigError on unknown keys or
// malformed values.
void apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value);

// Flat key=value file; '#' starts a comment, blank lines are skipped.
RunConfig parse_config_file(const std::string& path);

// Range checks shared by file- and flag-driven configuration.
void validate(const RunConfig& cfg);

}  // namespace zmdirac
