#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zmdirac/config.hpp"
#include "zmdirac/emit.hpp"
#include "zmdirac/suites.hpp"

namespace {

double run_timed(zmdirac::RunConfig cfg, zmdirac::ExecMode mode, std::string* json_out) {
    cfg.exec = mode;
    const auto start = std::chrono::steady_clock::now();
    const auto reports = zmdirac::run_suites(cfg);
    const auto stop = std::chrono::steady_clock::now();
    *json_out = zmdirac::report_json(cfg, reports);
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    zmdirac::RunConfig cfg;
    cfg.samples = 200;
    if (argc > 1) cfg.samples = std::atoi(argv[1]);
    cfg.suites = {"projectors", "poincare", "modes", "equivalence"};

#ifdef _OPENMP
    std::printf("threads available: %d\n", omp_get_max_threads());
#else
    std::printf("threads available: 1 (compiled without OpenMP)\n");
#endif
    std::printf("samples per sweep: %d\n", cfg.samples);

    std::string serial_json, parallel_json;
    const double warm = run_timed(cfg, zmdirac::ExecMode::serial, &serial_json);
    const double t_serial = run_timed(cfg, zmdirac::ExecMode::serial, &serial_json);
    const double t_parallel = run_timed(cfg, zmdirac::ExecMode::parallel, &parallel_json);

    std::printf("warmup   : %8.1f ms\n", warm);
    std::printf("serial   : %8.1f ms\n", t_serial);
    std::printf("parallel : %8.1f ms\n", t_parallel);
    if (t_parallel > 0.0) std::printf("speedup  : %8.2fx\n", t_serial / t_parallel);

    const bool identical = serial_json == parallel_json;
    std::printf("serial and parallel reports byte-identical: %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
