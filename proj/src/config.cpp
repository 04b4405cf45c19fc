#include "fsb/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "fsb/errors.hpp"

namespace fsb {

namespace {

std::string trim(const std::string& s) {
    const auto b = std::find_if_not(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
    const auto e = std::find_if_not(s.rbegin(), s.rend(), [](unsigned char c) { return std::isspace(c); }).base();
    return b < e ? std::string(b, e) : std::string();
}

std::size_t parse_count(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size()) {
        throw ConfigError(key + ": expected a non-negative integer, got '" + text + "'");
    }
    return v;
}

bool parse_flag(const std::string& key, const std::string& text) {
    std::string t = trim(text);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t == "1" || t == "true" || t == "yes" || t == "on") return true;
    if (t == "0" || t == "false" || t == "no" || t == "off") return false;
    throw ConfigError(key + ": expected a boolean, got '" + text + "'");
}

double parse_value(const std::string& key, const std::string& text) {
    try {
        return parse_quantity(text);
    } catch (const ConfigError& e) {
        throw ConfigError(key + ": " + e.what());
    }
}

Axis& second_axis(RunConfig& c) {
    if (!c.axis2) c.axis2 = Axis{"theta", 0.0, kPi / 2, 200};
    return *c.axis2;
}

} // namespace

SweepSpec RunConfig::sweep_spec() const {
    SweepSpec s;
    s.axis1 = axis1;
    s.axis2 = axis2;
    s.system = system;
    s.bath = bath;
    s.options = options;
    s.p0_threshold = p0_threshold;
    s.ratio_threshold = ratio_threshold;
    return s;
}

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = {
        "system.h_x", "system.h_z0", "system.h_z1", "system.omega", "system.theta",
        "bath.gamma", "bath.omega_c", "bath.temperature",
        "numerics.n_steps", "numerics.n_max", "numerics.analytic",
        "sweep.axis", "sweep.start", "sweep.stop", "sweep.points",
        "sweep.axis2", "sweep.start2", "sweep.stop2", "sweep.points2",
        "sweep.p0_threshold", "sweep.ratio_threshold"};
    return keys;
}

double parse_quantity(const std::string& text) {
    std::string t = trim(text);
    double scale = 1.0;
    if (t.size() >= 2 && t.compare(t.size() - 2, 2, "pi") == 0) {
        scale = kPi;
        t = trim(t.substr(0, t.size() - 2));
        if (!t.empty() && t.back() == '*') t = trim(t.substr(0, t.size() - 1));
        if (t.empty() || t == "+") return scale;
        if (t == "-") return -scale;
    }
    double v = 0.0;
    const char* first = t.data();
    if (!t.empty() && t.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
        throw ConfigError("cannot parse number '" + text + "'");
    }
    return v * scale;
}

void apply_setting(RunConfig& c, const std::string& key, const std::string& value) {
    if (key == "system.h_x") c.system.h_x = parse_value(key, value);
    else if (key == "system.h_z0") c.system.h_z0 = parse_value(key, value);
    else if (key == "system.h_z1") c.system.h_z1 = parse_value(key, value);
    else if (key == "system.omega") c.system.omega = parse_value(key, value);
    else if (key == "system.theta") c.system.theta = parse_value(key, value);
    else if (key == "bath.gamma") c.bath.gamma = parse_value(key, value);
    else if (key == "bath.omega_c") c.bath.omega_c = parse_value(key, value);
    else if (key == "bath.temperature") c.bath.temperature = parse_value(key, value);
    else if (key == "numerics.n_steps") c.options.n_steps = parse_count(key, value);
    else if (key == "numerics.n_max") c.options.n_max = static_cast<int>(parse_count(key, value));
    else if (key == "numerics.analytic") c.options.analytic = parse_flag(key, value);
    else if (key == "sweep.axis") c.axis1.name = trim(value);
    else if (key == "sweep.start") c.axis1.start = parse_value(key, value);
    else if (key == "sweep.stop") c.axis1.stop = parse_value(key, value);
    else if (key == "sweep.points") c.axis1.points = parse_count(key, value);
    else if (key == "sweep.axis2") {
        const std::string name = trim(value);
        if (name.empty() || name == "none") c.axis2.reset();
        else second_axis(c).name = name;
    }
    else if (key == "sweep.start2") second_axis(c).start = parse_value(key, value);
    else if (key == "sweep.stop2") second_axis(c).stop = parse_value(key, value);
    else if (key == "sweep.points2") second_axis(c).points = parse_count(key, value);
    else if (key == "sweep.p0_threshold") c.p0_threshold = parse_value(key, value);
    else if (key == "sweep.ratio_threshold") c.ratio_threshold = parse_value(key, value);
    else throw ConfigError("unknown configuration key '" + key + "'");
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
    namespace pt = boost::property_tree;
    pt::ptree tree;
    try {
        pt::read_ini(path.string(), tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(e.what());
    }
    for (const auto& [section, entries] : tree) {
        if (entries.empty()) {
            throw ConfigError("key '" + section + "' outside a section in " + path.string());
        }
        for (const auto& [name, node] : entries) {
            apply_setting(base, section + "." + name, node.data());
        }
    }
    return base;
}

} // namespace fsb
