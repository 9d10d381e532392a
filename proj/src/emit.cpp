#include "zmdirac/emit.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "zmdirac/suites.hpp"

namespace zmdirac {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json environment_block(const RunConfig& cfg) {
    ordered_json env;
    env["seed"] = cfg.seed;
    env["samples"] = cfg.samples;
    env["tol_exact"] = cfg.tol_exact;
    env["tol_fd"] = cfg.tol_fd;
    env["fd_step"] = cfg.fd_step;
    env["scale_min"] = cfg.scale_min;
    env["scale_max"] = cfg.scale_max;
    env["suites"] = resolve_suites(cfg);
    return env;
}

std::string sci(double x) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(3) << x;
    return os.str();
}

void render_table(std::ostringstream& os, const Table& t) {
    os << "\n### " << t.name << "\n\n|";
    for (const auto& c : t.columns) os << " " << c << " |";
    os << "\n|";
    for (size_t i = 0; i < t.columns.size(); ++i) os << " --- |";
    os << "\n";
    for (const auto& row : t.rows) {
        os << "|";
        for (const auto& cell : row) os << " " << cell << " |";
        os << "\n";
    }
}

}  // namespace

std::string report_json(const RunConfig& cfg, const std::vector<SuiteReport>& suites) {
    ordered_json j;
    j["schema_version"] = 1;
    j["environment"] = environment_block(cfg);
    j["suites"] = ordered_json::array();
    for (const auto& s : suites) {
        ordered_json js;
        js["suite"] = s.suite;
        ordered_json summary;
        summary["checks"] = s.checks.size();
        summary["failures"] = s.failed_count();
        summary["all_ok"] = s.all_ok();
        js["summary"] = summary;
        js["checks"] = ordered_json::array();
        for (const auto& c : s.checks) {
            ordered_json jc;
            jc["name"] = c.name;
            jc["paper_anchor"] = c.paper_anchor;
            jc["residual"] = c.residual;
            jc["tol"] = c.tol;
            jc["pass"] = c.pass();
            jc["expect_pass"] = c.expect_pass;
            jc["ok"] = c.ok();
            js["checks"].push_back(jc);
        }
        ordered_json notes;
        for (const auto& [key, value] : s.annotations) notes[key] = value;
        js["annotations"] = notes;
        js["tables"] = ordered_json::array();
        for (const auto& t : s.tables) {
            ordered_json jt;
            jt["name"] = t.name;
            jt["columns"] = t.columns;
            jt["rows"] = t.rows;
            js["tables"].push_back(jt);
        }
        j["suites"].push_back(js);
    }
    return j.dump(2) + "\n";
}

std::string report_markdown(const RunConfig& cfg, const std::vector<SuiteReport>& suites) {
    std::ostringstream os;
    os << "# Operator verification report\n\n## Environment\n\n";
    const ordered_json env = environment_block(cfg);
    for (const auto& [key, value] : env.items())
        os << "- " << key << ": " << value.dump() << "\n";

    int failures = 0;
    for (const auto& s : suites) failures += s.failed_count();
    os << "\nOverall: " << (failures == 0 ? "PASS" : "FAIL") << "\n";

    for (const auto& s : suites) {
        os << "\n## Suite `" << s.suite << "` — " << (s.all_ok() ? "PASS" : "FAIL") << " ("
           << s.checks.size() << " checks, " << s.failed_count() << " failures)\n\n";
        os << "| check | anchor | residual | tol | expected | status |\n";
        os << "| --- | --- | --- | --- | --- | --- |\n";
        for (const auto& c : s.checks)
            os << "| " << c.name << " | " << c.paper_anchor << " | " << sci(c.residual)
               << " | " << sci(c.tol) << " | " << (c.expect_pass ? "pass" : "fail") << " | "
               << (c.ok() ? "ok" : "UNEXPECTED") << " |\n";
        if (!s.annotations.empty()) {
            os << "\nNotes:\n";
            for (const auto& [key, value] : s.annotations)
                os << "- " << key << ": " << value << "\n";
        }
        for (const auto& t : s.tables) render_table(os, t);
    }
    return os.str();
}

std::vector<std::string> write_reports(const RunConfig& cfg,
                                       const std::vector<SuiteReport>& suites) {
    std::vector<std::string> written;
    const auto dump = [&](const std::string& path, const std::string& text) {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write report file: " + path);
        f << text;
        written.push_back(path);
    };
    if (cfg.format == "json" || cfg.format == "both")
        dump(cfg.out + ".json", report_json(cfg, suites));
    if (cfg.format == "markdown" || cfg.format == "both")
        dump(cfg.out + ".md", report_markdown(cfg, suites));
    return written;
}

}  // namespace zmdirac
