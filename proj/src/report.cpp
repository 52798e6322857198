#include "hatom/report.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace hatom::report {

namespace {

std::string trim(const std::string& s) {
    std::size_t first = 0;
    while (first < s.size() && std::isspace(static_cast<unsigned char>(s[first]))) ++first;
    std::size_t last = s.size();
    while (last > first && std::isspace(static_cast<unsigned char>(s[last - 1]))) --last;
    return s.substr(first, last - first);
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "' has non-numeric value '" + value + "'");
    }
    if (used != value.size()) {
        throw std::invalid_argument("config key '" + key + "' has trailing characters in '" + value + "'");
    }
    return v;
}

int parse_int(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(value, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "' has non-integer value '" + value + "'");
    }
    if (used != value.size()) {
        throw std::invalid_argument("config key '" + key + "' has trailing characters in '" + value + "'");
    }
    return v;
}

} // namespace

void RunConfig::validate() const {
    if (!(quad_tol > 0.0) || quad_tol > 0.1) {
        throw std::invalid_argument("quad_tol must lie in (0, 0.1]");
    }
    if (numerov_grid < 2000) {
        throw std::invalid_argument("numerov_grid must be at least 2000");
    }
    if (momentum_grid != 0 && momentum_grid < 500) {
        throw std::invalid_argument("momentum_grid must be 0 (automatic) or at least 500");
    }
    if (!(p_max_scale >= 0.25 && p_max_scale <= 16.0)) {
        throw std::invalid_argument("p_max_scale must lie in [0.25, 16]");
    }
    if (!(alpha > 0.0) || alpha == 1.0) {
        throw std::invalid_argument("alpha must be positive and different from 1");
    }
    if (!(beta > 0.0) || beta == 1.0) {
        throw std::invalid_argument("beta must be positive and different from 1");
    }
    if (format != "csv" && format != "json") {
        throw std::invalid_argument("format must be 'csv' or 'json'");
    }
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file: " + path);
    }
    RunConfig cfg;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        " is not of the form key=value: '" + stripped + "'");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key == "quad_tol") {
            cfg.quad_tol = parse_double(key, value);
        } else if (key == "numerov_grid") {
            cfg.numerov_grid = parse_int(key, value);
        } else if (key == "momentum_grid") {
            cfg.momentum_grid = parse_int(key, value);
        } else if (key == "p_max_scale") {
            cfg.p_max_scale = parse_double(key, value);
        } else if (key == "alpha") {
            cfg.alpha = parse_double(key, value);
        } else if (key == "beta") {
            cfg.beta = parse_double(key, value);
        } else if (key == "format") {
            cfg.format = value;
        } else if (key == "output") {
            cfg.output_path = value;
        } else {
            throw std::invalid_argument("unknown config key: '" + key + "'");
        }
    }
    cfg.validate();
    return cfg;
}

RunConfig load_config_from_env() {
    const char* path = std::getenv("HATOM_CONFIG");
    if (path == nullptr || *path == '\0') {
        return RunConfig{};
    }
    return load_config_file(path);
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string csv_escape(const std::string& field) {
    const bool needs_quotes = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quotes) return field;
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string csv_header(const std::vector<std::string>& columns) {
    std::string out = "system,n,l,m,Z,rc,alpha,beta";
    for (const auto& c : columns) {
        out.push_back(',');
        out += csv_escape(c);
    }
    return out;
}

std::string csv_row(const Row& row, const std::vector<std::string>& columns) {
    const auto int_cell = [](const std::optional<int>& v) {
        return v.has_value() ? std::to_string(*v) : std::string{};
    };
    const auto num_cell = [](const std::optional<double>& v) {
        return v.has_value() ? format_number(*v) : std::string{};
    };
    std::string out = csv_escape(row.system);
    out += ',' + int_cell(row.n);
    out += ',' + int_cell(row.l);
    out += ',' + int_cell(row.m);
    out += ',' + num_cell(row.Z);
    out += ',' + num_cell(row.rc);
    out += ',' + num_cell(row.alpha);
    out += ',' + num_cell(row.beta);
    for (const auto& name : columns) {
        out.push_back(',');
        for (const auto& [key, value] : row.values) {
            if (key == name) {
                if (value.has_value()) out += format_number(*value);
                break;
            }
        }
    }
    return out;
}

namespace {

void dump_value(const nlohmann::ordered_json& j, std::string& out, int depth) {
    const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
    const std::string pad_in(2 * static_cast<std::size_t>(depth + 1), ' ');
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            if (j.empty()) { out += "{}"; return; }
            out += "{\n";
            std::size_t i = 0;
            for (const auto& [key, value] : j.items()) {
                out += pad_in;
                out += nlohmann::ordered_json(key).dump();
                out += ": ";
                dump_value(value, out, depth + 1);
                if (++i != j.size()) out.push_back(',');
                out.push_back('\n');
            }
            out += pad + "}";
            return;
        }
        case nlohmann::json::value_t::array: {
            if (j.empty()) { out += "[]"; return; }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                out += pad_in;
                dump_value(j[i], out, depth + 1);
                if (i + 1 != j.size()) out.push_back(',');
                out.push_back('\n');
            }
            out += pad + "]";
            return;
        }
        case nlohmann::json::value_t::string:
            out += j.dump();
            return;
        case nlohmann::json::value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            return;
        case nlohmann::json::value_t::number_integer:
            out += std::to_string(j.get<long long>());
            return;
        case nlohmann::json::value_t::number_unsigned:
            out += std::to_string(j.get<unsigned long long>());
            return;
        case nlohmann::json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) { out += "null"; return; }
            out += format_number(v);
            return;
        }
        default:
            out += "null";
            return;
    }
}

} // namespace

std::string dump_json(const nlohmann::ordered_json& j) {
    std::string out;
    dump_value(j, out, 0);
    out.push_back('\n');
    return out;
}

} // namespace hatom::report
