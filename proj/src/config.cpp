#include "alpec/config.hpp"

#include <cstdio>
#include <fstream>

namespace alpec {

std::vector<double> const& threshold_grid() {
    static std::vector<double> const grid = [] {
        std::vector<double> g(101);
        for (int k = 0; k <= 100; ++k) g[static_cast<std::size_t>(k)] = k / 100.0;
        return g;
    }();
    return grid;
}

namespace {

double parse_double(std::string const& value, std::string const& where) {
    try {
        std::size_t pos = 0;
        double const v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (std::exception const&) {
        throw ValidationError(where + ": cannot parse number '" + value + "'");
    }
}

double parse_nonneg(std::string const& value, std::string const& where) {
    double const v = parse_double(value, where);
    if (v < 0.0) throw ValidationError(where + ": value must be >= 0, got '" + value + "'");
    return v;
}

std::string format_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

void apply_config_entry(EvalConfig& cfg, std::string const& key, std::string const& value,
                        std::string const& where) {
    if (key == "d") {
        if (value == "none" || value == "unbounded") {
            cfg.duration_unbounded = true;
        } else {
            cfg.max_duration_s = parse_nonneg(value, where);
            cfg.duration_unbounded = false;
        }
    } else if (key == "delta") {
        cfg.merge_distance_s = parse_nonneg(value, where);
    } else if (key == "b_before") {
        cfg.buffer_before_s = parse_nonneg(value, where);
    } else if (key == "b_after") {
        cfg.buffer_after_s = parse_nonneg(value, where);
    } else if (key == "b") {
        double const v = parse_nonneg(value, where);
        cfg.buffer_before_s = v;
        cfg.buffer_after_s = v;
    } else if (key == "w") {
        cfg.smooth_window_s = parse_nonneg(value, where);
    } else if (key == "l") {
        cfg.iod_length_s = parse_nonneg(value, where);
    } else if (key == "s") {
        cfg.window_s = parse_nonneg(value, where);
    } else if (key == "f") {
        double const v = parse_double(value, where);
        if (v <= 0.0) throw ValidationError(where + ": f must be > 0");
        cfg.sampling_rate_hz = v;
    } else if (key == "task") {
        cfg.task = task_from_string(value);
    } else if (key == "scheme") {
        cfg.scheme = scheme_from_string(value);
    } else if (key == "iod_alignment") {
        cfg.iod_alignment = iod_alignment_from_string(value);
    } else {
        throw ValidationError(where + ": unknown config key '" + key + "'");
    }
}

EvalConfig load_config(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file " + path.string());
    EvalConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string const where = path.string() + ":" + std::to_string(lineno);
        auto const hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto const first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto const last = line.find_last_not_of(" \t\r");
        std::string const trimmed = line.substr(first, last - first + 1);
        auto const eq = trimmed.find('=');
        if (eq == std::string::npos) {
            throw ValidationError(where + ": expected key=value, got '" + trimmed + "'");
        }
        auto strip = [](std::string s) {
            auto const b = s.find_first_not_of(" \t");
            auto const e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        apply_config_entry(cfg, strip(trimmed.substr(0, eq)), strip(trimmed.substr(eq + 1)),
                           where);
    }
    return cfg;
}

std::vector<std::pair<std::string, std::string>> config_entries(EvalConfig const& cfg) {
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back("d", cfg.duration_unbounded ? "none" : format_num(cfg.max_duration_s));
    out.emplace_back("delta", format_num(cfg.merge_distance_s));
    out.emplace_back("b_before", format_num(cfg.buffer_before_s));
    out.emplace_back("b_after", format_num(cfg.buffer_after_s));
    out.emplace_back("w", format_num(cfg.smooth_window_s));
    out.emplace_back("l", format_num(cfg.iod_length_s));
    out.emplace_back("s", format_num(cfg.window_s));
    out.emplace_back("f", format_num(cfg.sampling_rate_hz));
    out.emplace_back("task", to_string(cfg.task));
    out.emplace_back("scheme", to_string(cfg.scheme));
    out.emplace_back("iod_alignment", to_string(cfg.iod_alignment));
    return out;
}

} // namespace alpec
