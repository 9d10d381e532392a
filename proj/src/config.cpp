#include "zmdirac/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace zmdirac {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t idx = 0;
        const std::uint64_t v = std::stoull(value, &idx);
        if (idx != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': expected an unsigned integer, got '" +
                          value + "'");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t idx = 0;
        const int v = std::stoi(value, &idx);
        if (idx != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': expected an integer, got '" + value + "'");
    }
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t idx = 0;
        const double v = std::stod(value, &idx);
        if (idx != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': expected a real number, got '" + value +
                          "'");
    }
}

std::vector<std::string> split_csv(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace

void apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "seed") {
        cfg.seed = parse_u64(key, value);
    } else if (key == "samples") {
        cfg.samples = parse_int(key, value);
    } else if (key == "tol_exact") {
        cfg.tol_exact = parse_double(key, value);
    } else if (key == "tol_fd") {
        cfg.tol_fd = parse_double(key, value);
    } else if (key == "fd_step") {
        cfg.fd_step = parse_double(key, value);
    } else if (key == "scale_min") {
        cfg.scale_min = parse_double(key, value);
    } else if (key == "scale_max") {
        cfg.scale_max = parse_double(key, value);
    } else if (key == "suites") {
        cfg.suites = split_csv(value);
    } else if (key == "format") {
        cfg.format = value;
    } else if (key == "out") {
        cfg.out = value;
    } else if (key == "exec") {
        try {
            cfg.exec = exec_mode_from_string(value);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("config key 'exec': ") + e.what());
        }
    } else {
        throw ConfigError("unknown config key '" + key + "'");
    }
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config file '" + path + "' line " + std::to_string(lineno) +
                              ": expected key=value");
        apply_key_value(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

void validate(const RunConfig& cfg) {
    if (cfg.samples < 1) throw ConfigError("samples must be at least 1");
    if (!(cfg.tol_exact > 0.0)) throw ConfigError("tol_exact must be positive");
    if (!(cfg.tol_fd > 0.0)) throw ConfigError("tol_fd must be positive");
    if (!(cfg.fd_step > 0.0)) throw ConfigError("fd_step must be positive");
    if (!(cfg.scale_min > 0.0)) throw ConfigError("scale_min must be positive");
    if (!(cfg.scale_max >= cfg.scale_min))
        throw ConfigError("scale_max must be at least scale_min");
    if (cfg.format != "json" && cfg.format != "markdown" && cfg.format != "both")
        throw ConfigError("format must be one of json, markdown, both; got '" + cfg.format +
                          "'");
    if (cfg.out.empty()) throw ConfigError("output path must not be empty");
}

}  // namespace zmdirac
