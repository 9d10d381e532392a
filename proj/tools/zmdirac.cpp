#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zmdirac/config.hpp"
#include "zmdirac/emit.hpp"
#include "zmdirac/report.hpp"
#include "zmdirac/suites.hpp"

int main(int argc, char** argv) {
    using namespace zmdirac;

    CLI::App app{"momentum-space operator verification"};
    std::string config_path;
    std::vector<std::string> suites;
    std::uint64_t seed = 0;
    int samples = 0;
    double tol_exact = 0.0, tol_fd = 0.0, fd_step = 0.0;
    std::string out, format, exec;

    app.add_option("--config", config_path, "flat key=value configuration file");
    app.add_option("--suite", suites, "suite to run (repeatable; default: all)");
    app.add_option("--seed", seed, "master RNG seed");
    app.add_option("--samples", samples, "momenta per sweep");
    app.add_option("--tol-exact", tol_exact, "tolerance for algebraic identities");
    app.add_option("--tol-fd", tol_fd, "tolerance for finite-difference checks");
    app.add_option("--fd-step", fd_step, "relative finite-difference step");
    app.add_option("--out", out, "output basename for reports");
    app.add_option("--format", format, "report format: json | markdown | both");
    app.add_option("--exec", exec, "sweep execution mode: serial | parallel");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    RunConfig cfg;
    try {
        if (!config_path.empty()) cfg = parse_config_file(config_path);
        if (app.count("--suite") > 0) cfg.suites = suites;
        if (app.count("--seed") > 0) cfg.seed = seed;
        if (app.count("--samples") > 0) cfg.samples = samples;
        if (app.count("--tol-exact") > 0) cfg.tol_exact = tol_exact;
        if (app.count("--tol-fd") > 0) cfg.tol_fd = tol_fd;
        if (app.count("--fd-step") > 0) cfg.fd_step = fd_step;
        if (app.count("--out") > 0) cfg.out = out;
        if (app.count("--format") > 0) cfg.format = format;
        if (app.count("--exec") > 0) cfg.exec = exec_mode_from_string(exec);
        validate(cfg);
        const auto selected = resolve_suites(cfg);  // fail on unknown names before any work

        const std::vector<SuiteReport> reports = run_suites(cfg);
        write_reports(cfg, reports);

        int failures = 0;
        for (const auto& rep : reports) {
            const int bad = rep.failed_count();
            failures += bad;
            std::printf("suite %-12s %s  (%zu checks, %d failed)\n", rep.suite.c_str(),
                        bad == 0 ? "PASS" : "FAIL", rep.checks.size(), bad);
        }
        std::printf("overall: %s\n", failures == 0 ? "PASS" : "FAIL");
        return failures == 0 ? 0 : 1;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
