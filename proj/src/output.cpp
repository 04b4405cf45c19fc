#include "fsb/output.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include <fmt/format.h>

#include "fsb/errors.hpp"

namespace fsb {

namespace {

void put_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        out << cells[i];
    }
    out << '\n';
}

std::ofstream open_for_writing(const std::filesystem::path& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open " + path.string() + " for writing");
    return f;
}

} // namespace

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    return fmt::format("{:.17g}", value);
}

std::vector<std::string> csv_columns(bool analytic) {
    std::vector<std::string> cols = {
        "h_z1", "theta", "h_z0", "omega", "h_x", "gamma", "omega_c", "temperature",
        "eps0", "eps1", "gap", "degenerate", "swapped", "p0", "p1", "W_01", "W_10",
        "a2_n0_10", "a2_n-1_10", "a2_n-1_01", "I_b", "I_r", "I_0", "ratio", "ratio_defined"};
    if (analytic) {
        for (const char* c : {"an_eps0", "an_eps1", "an_a2_n0_10", "an_a2_n-1_10", "an_a2_n-1_01",
                              "an_max_dev"}) {
            cols.emplace_back(c);
        }
    }
    cols.emplace_back("status");
    return cols;
}

void write_points_csv(std::ostream& out, const std::vector<PointResult>& points, bool analytic) {
    put_row(out, csv_columns(analytic));
    const double nan = std::nan("");
    for (const auto& p : points) {
        const auto f = format_number;
        std::vector<std::string> row = {
            f(p.system.h_z1), f(p.system.theta), f(p.system.h_z0), f(p.system.omega),
            f(p.system.h_x), f(p.bath.gamma), f(p.bath.omega_c), f(p.bath.temperature),
            f(p.quasienergies[0]), f(p.quasienergies[1]), f(p.gap()),
            p.degenerate ? "1" : "0", p.swapped ? "1" : "0",
            f(p.populations[0]), f(p.populations[1]), f(p.totals[0][1]), f(p.totals[1][0]),
            f(p.a2_n0_10), f(p.a2_nm1_10), f(p.a2_nm1_01),
            f(p.emission.intensity_blue), f(p.emission.intensity_red),
            f(p.emission.intensity_unshifted),
            f(p.emission.ratio.value_or(nan)), p.emission.ratio ? "1" : "0"};
        if (analytic) {
            const AnalyticColumns a = p.analytic.value_or(
                AnalyticColumns{{nan, nan}, nan, nan, nan, nan});
            for (double v : {a.quasienergies[0], a.quasienergies[1], a.a2_n0_10, a.a2_nm1_10,
                             a.a2_nm1_01, a.max_deviation}) {
                row.push_back(f(v));
            }
        }
        row.push_back(p.status);
        put_row(out, row);
    }
}

void write_jumps_csv(std::ostream& out, const std::vector<JumpRecord>& jumps) {
    put_row(out, {"observable", "row", "location", "left_value", "right_value", "magnitude",
                  "root_index", "nearest_root", "relative_distance"});
    for (const auto& j : jumps) {
        put_row(out, {j.observable, format_number(j.row), format_number(j.location),
                      format_number(j.left_value), format_number(j.right_value),
                      format_number(j.magnitude), std::to_string(j.root_index),
                      j.root_index ? format_number(j.nearest_root) : "nan",
                      j.root_index ? format_number(j.relative_distance) : "nan"});
    }
}

void write_metadata(std::ostream& out, const SweepResult& result) {
    const SweepSpec& s = result.spec;
    std::size_t failed = 0;
    for (const auto& p : result.points) failed += p.ok() ? 0 : 1;

    auto kv = [&](const std::string& k, const std::string& v) { out << k << '=' << v << '\n'; };
    kv("tool_version", kToolVersion);
    kv("system.h_x", format_number(s.system.h_x));
    kv("system.h_z0", format_number(s.system.h_z0));
    kv("system.h_z1", format_number(s.system.h_z1));
    kv("system.omega", format_number(s.system.omega));
    kv("system.theta", format_number(s.system.theta));
    kv("bath.gamma", format_number(s.bath.gamma));
    kv("bath.omega_c", format_number(s.bath.omega_c));
    kv("bath.temperature", format_number(s.bath.temperature));
    kv("numerics.n_steps", std::to_string(s.options.n_steps));
    kv("numerics.n_max", std::to_string(s.options.n_max));
    kv("numerics.analytic", s.options.analytic ? "true" : "false");
    kv("sweep.axis", s.axis1.name);
    kv("sweep.start", format_number(s.axis1.start));
    kv("sweep.stop", format_number(s.axis1.stop));
    kv("sweep.points", std::to_string(s.axis1.points));
    if (s.axis2) {
        kv("sweep.axis2", s.axis2->name);
        kv("sweep.start2", format_number(s.axis2->start));
        kv("sweep.stop2", format_number(s.axis2->stop));
        kv("sweep.points2", std::to_string(s.axis2->points));
    }
    kv("sweep.p0_threshold", format_number(s.p0_threshold));
    kv("sweep.ratio_threshold", format_number(s.ratio_threshold));
    kv("result.points", std::to_string(result.points.size()));
    kv("result.failed_points", std::to_string(failed));
    kv("result.jumps", std::to_string(result.jumps.size()));
    kv("result.seconds", fmt::format("{:.3f}", result.seconds));
    kv("units", "energies in h_x, hbar = k_B = 1; intensities in gamma h_x^2");
    kv("note.I_0", "unshifted-line intensity from the diagonal n=-1 channels (extension)");
}

OutputFiles write_sweep(const SweepResult& result, const std::filesystem::path& prefix) {
    if (prefix.has_parent_path()) std::filesystem::create_directories(prefix.parent_path());
    OutputFiles files{prefix.string() + ".csv", prefix.string() + "_jumps.csv",
                      prefix.string() + ".meta"};
    {
        auto f = open_for_writing(files.points);
        write_points_csv(f, result.points, result.spec.options.analytic);
    }
    {
        auto f = open_for_writing(files.jumps);
        write_jumps_csv(f, result.jumps);
    }
    {
        auto f = open_for_writing(files.metadata);
        write_metadata(f, result);
    }
    return files;
}

} // namespace fsb
