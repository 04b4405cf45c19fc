#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fsb/config.hpp"
#include "fsb/errors.hpp"
#include "fsb/output.hpp"

using namespace fsb;

namespace {

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "fsb_test_config_output";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("quantities with a pi suffix") {
    CHECK(parse_quantity("40") == 40.0);
    CHECK(parse_quantity(" 2.5e-1 ") == 0.25);
    CHECK(parse_quantity("+3") == 3.0);
    CHECK(parse_quantity("0.5pi") == doctest::Approx(kPi / 2));
    CHECK(parse_quantity("0.3*pi") == doctest::Approx(0.3 * kPi));
    CHECK(parse_quantity("pi") == kPi);
    CHECK(parse_quantity("-pi") == -kPi);
    CHECK_THROWS_AS(parse_quantity(""), ConfigError);
    CHECK_THROWS_AS(parse_quantity("4x"), ConfigError);
    CHECK_THROWS_AS(parse_quantity("pie"), ConfigError);
}

TEST_CASE("settings map one-to-one onto the run configuration") {
    RunConfig c;
    apply_setting(c, "system.h_z1", "96.2");
    apply_setting(c, "system.theta", "0.25pi");
    apply_setting(c, "bath.temperature", "1.5");
    apply_setting(c, "numerics.n_steps", "4096");
    apply_setting(c, "numerics.analytic", "true");
    apply_setting(c, "sweep.axis", "h_z1");
    apply_setting(c, "sweep.points", "31");
    apply_setting(c, "sweep.axis2", "theta");
    apply_setting(c, "sweep.points2", "7");
    CHECK(c.system.h_z1 == 96.2);
    CHECK(c.system.theta == doctest::Approx(kPi / 4));
    CHECK(c.bath.temperature == 1.5);
    CHECK(c.options.n_steps == 4096);
    CHECK(c.options.analytic);
    const auto spec = c.sweep_spec();
    CHECK(spec.axis1.name == "h_z1");
    CHECK(spec.axis1.points == 31);
    REQUIRE(spec.axis2.has_value());
    CHECK(spec.axis2->points == 7);
    apply_setting(c, "sweep.axis2", "none");
    CHECK(!c.axis2.has_value());

    for (const auto& key : config_keys()) CHECK(key.find('.') != std::string::npos);
    CHECK_THROWS_AS(apply_setting(c, "system.bogus", "1"), ConfigError);
    CHECK_THROWS_AS(apply_setting(c, "numerics.n_steps", "-4"), ConfigError);
    CHECK_THROWS_AS(apply_setting(c, "numerics.analytic", "maybe"), ConfigError);
}

TEST_CASE("INI files load section by section") {
    const auto path = scratch("run.ini");
    {
        std::ofstream f(path);
        f << "[system]\nh_z1 = 80\ntheta = 0.5pi\n\n[bath]\ngamma = 0.02\n\n"
             "[sweep]\naxis = h_z1_over_omega\nstart = 0\nstop = 6\npoints = 50\n";
    }
    const auto c = load_config(path);
    CHECK(c.system.h_z1 == 80.0);
    CHECK(c.system.theta == doctest::Approx(kPi / 2));
    CHECK(c.bath.gamma == 0.02);
    CHECK(c.axis1.points == 50);

    const auto bad = scratch("bad.ini");
    {
        std::ofstream f(bad);
        f << "[system]\nh_q = 3\n";
    }
    CHECK_THROWS_AS(load_config(bad), ConfigError);
    const auto section = scratch("section.ini");
    {
        std::ofstream f(section);
        f << "[plotting]\ncolor = red\n";
    }
    CHECK_THROWS_AS(load_config(section), ConfigError);
    CHECK_THROWS_AS(load_config(scratch("missing.ini")), ConfigError);
}

TEST_CASE("number formatting") {
    CHECK(format_number(0.1) == "0.10000000000000001");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(-2.5e-20) == "-2.4999999999999999e-20");
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(format_number(-std::nan("")) == "nan");
    CHECK(std::stod(format_number(kPi)) == kPi);
}

TEST_CASE("point table layout") {
    const auto cols = csv_columns(false);
    CHECK(cols[0] == "h_z1");
    CHECK(cols[1] == "theta");
    for (const char* name : {"eps0", "eps1", "gap", "p0", "p1", "a2_n-1_10", "a2_n-1_01", "I_b", "I_r", "I_0",
                             "ratio", "ratio_defined", "status"}) {
        CHECK(std::find(cols.begin(), cols.end(), name) != cols.end());
    }
    CHECK(csv_columns(true).size() > cols.size());

    SystemParams s; // h_z1 = 0: ratio undefined
    s.theta = 1.0;
    const auto r = run_point(s, BathParams{});
    std::ostringstream out;
    write_points_csv(out, {r}, false);
    const std::string text = out.str();
    CHECK(text.find('\r') == std::string::npos);
    std::istringstream lines(text);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    std::vector<std::string> cells;
    std::stringstream split(row);
    for (std::string cell; std::getline(split, cell, ',');) cells.push_back(cell);
    REQUIRE(cells.size() == cols.size());
    const auto at = [&](const char* name) {
        return cells[static_cast<std::size_t>(std::find(cols.begin(), cols.end(), name) - cols.begin())];
    };
    CHECK(at("ratio") == "nan");
    CHECK(at("ratio_defined") == "0");
    CHECK(at("status") == "ok");
    CHECK(at("h_z1") == "0");
}

TEST_CASE("sweep files and metadata") {
    SweepSpec spec;
    spec.axis1 = Axis{"h_z1_over_omega", 0.0, 3.0, 9};
    const auto result = run_sweep(spec);
    const auto files = write_sweep(result, scratch("sweep/out"));
    const std::string meta = slurp(files.metadata);
    for (const char* key : {"tool_version=", "system.omega=40", "bath.temperature=3", "numerics.n_steps=2048",
                            "sweep.axis=h_z1_over_omega", "sweep.points=9", "result.points=9", "note.I_0="}) {
        CHECK(meta.find(key) != std::string::npos);
    }
    const std::string csv = slurp(files.points);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 10);
    CHECK(slurp(files.jumps).rfind("observable,row,location", 0) == 0);
}

TEST_CASE("worker count from the environment") {
    ::setenv("FSB_NUM_WORKERS", "2", 1);
    CHECK(configure_workers_from_env() == 2);
    ::setenv("FSB_NUM_WORKERS", "zero", 1);
    CHECK_THROWS_AS(configure_workers_from_env(), ConfigError);
    ::unsetenv("FSB_NUM_WORKERS");
}
