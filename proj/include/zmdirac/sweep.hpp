#pragma once

#include <stdexcept>
#include <string>

namespace zmdirac {

enum class ExecMode { serial, parallel };

inline ExecMode exec_mode_from_string(const std::string& s) {
    if (s == "serial") return ExecMode::serial;
    if (s == "parallel") return ExecMode::parallel;
    throw std::invalid_argument("execution mode must be 'serial' or 'parallel', got '" + s + "'");
}

inline std::string to_string(ExecMode mode) {
    return mode == ExecMode::serial ? "serial" : "parallel";
}

// Runs f(i) for i in [0, n).  Parallel mode distributes iterations across
// OpenMP threads with a static schedule; callers must write results into
// per-index slots so both modes produce identical output.
template <class F>
void for_each_index(int n, ExecMode mode, F&& f) {
    if (mode == ExecMode::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (int i = 0; i < n; ++i) f(i);
    } else {
        for (int i = 0; i < n; ++i) f(i);
    }
}

}  // namespace zmdirac
