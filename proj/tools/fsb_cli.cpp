// fsb — driven spin-boson Floquet rates: single points, sweeps, spectra, analytics, acceptance

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "fsb/acceptance.hpp"
#include "fsb/config.hpp"
#include "fsb/errors.hpp"
#include "fsb/hf_analytics.hpp"
#include "fsb/output.hpp"
#include "fsb/sweep.hpp"

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += (c == '\n') ? ' ' : c;
    }
    return out;
}

int fail(const std::string& kind, const std::string& message, int code = 2) {
    std::cerr << "error: kind=" << kind << " message=\"" << escape(message) << "\"\n";
    return code;
}

void print_point(const fsb::PointResult& r) {
    const auto f = fsb::format_number;
    fmt::print("eps0={}\neps1={}\ngap={}\ndegenerate={}\n", f(r.quasienergies[0]),
               f(r.quasienergies[1]), f(r.gap()), r.degenerate ? 1 : 0);
    if (!r.has_rates) return;
    fmt::print("p0={}\np1={}\nW_01={}\nW_10={}\n", f(r.populations[0]), f(r.populations[1]),
               f(r.totals[0][1]), f(r.totals[1][0]));
    fmt::print("a2_n0_10={}\na2_n-1_10={}\na2_n-1_01={}\n", f(r.a2_n0_10), f(r.a2_nm1_10), f(r.a2_nm1_01));
    fmt::print("I_b={}\nI_r={}\nI_0={}\nratio={}\n", f(r.emission.intensity_blue),
               f(r.emission.intensity_red), f(r.emission.intensity_unshifted),
               r.emission.ratio ? f(*r.emission.ratio) : "nan");
    if (r.analytic) {
        fmt::print("an_eps0={}\nan_eps1={}\nan_max_dev={}\n", f(r.analytic->quasienergies[0]),
                   f(r.analytic->quasienergies[1]), f(r.analytic->max_deviation));
    }
}

void print_analytic(const fsb::RunConfig& c) {
    const auto f = fsb::format_number;
    const auto h = fsb::effective_hamiltonian(c.system);
    fmt::print("h_eff.coeff_x={}\nh_eff.coeff_z={}\neps0={}\neps1={}\n", f(h.coeff_x), f(h.coeff_z),
               f(h.quasienergies[0]), f(h.quasienergies[1]));
    for (int n = -c.options.n_max; n <= c.options.n_max; ++n) {
        const auto s = fsb::s_coefficients(c.system, n);
        fmt::print("S[{}]={} {} {}\n", n, f(s.s_x), f(s.s_y), f(s.s_z));
        const fsb::Mat2 a = fsb::analytic_transition_elements(c.system, n);
        fmt::print("a2[{}]={} {} {} {}\n", n, f(std::norm(a(0, 0))), f(std::norm(a(0, 1))),
                   f(std::norm(a(1, 0))), f(std::norm(a(1, 1))));
        if (s.outside_high_frequency_regime && n == 0) {
            std::cerr << "warning: omega < 5 h_x, the high-frequency expansion is unreliable\n";
        }
    }
    try {
        const auto j = fsb::ratio_jump_prediction(c.system);
        fmt::print("ratio_jump.root_index={}\nratio_jump.root={}\nratio_jump.left={}\n"
                   "ratio_jump.right={}\nratio_jump.magnitude={}\n",
                   j.root_index, f(j.root), f(j.ratio_left), f(j.ratio_right), f(j.jump));
    } catch (const fsb::DomainError& e) {
        fmt::print("ratio_jump=none ({})\n", e.what());
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Floquet-Redfield rates and Mollow intensities for a driven spin-boson system"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::string out_prefix;
    app.add_option("--config", config_path, "INI file with [system], [bath], [numerics], [sweep]");
    app.add_option("--out", out_prefix, "output prefix; writes <prefix>.csv, <prefix>_jumps.csv, <prefix>.meta");

    // One flag per configuration key, applied after the file.
    std::map<std::string, std::string> overrides;
    std::vector<std::pair<std::string, CLI::Option*>> key_options;
    for (const auto& key : fsb::config_keys()) {
        key_options.emplace_back(key, app.add_option("--" + key, overrides[key], "overrides " + key));
    }

    auto* point = app.add_subcommand("point", "full pipeline at one parameter point");
    auto* sweep = app.add_subcommand("sweep", "grid over sweep.axis (and sweep.axis2)");
    auto* spectrum = app.add_subcommand("spectrum", "quasienergies only over the sweep grid");
    auto* analytic = app.add_subcommand("analytic", "high-frequency predictions at one point");
    auto* validate = app.add_subcommand("validate", "run the acceptance checks");
    std::vector<int> criteria;
    validate->add_option("--criterion", criteria, "criterion index (repeatable); all when absent")
        ->check(CLI::Range(1, fsb::kCriterionCount));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what(), e.get_exit_code() ? e.get_exit_code() : 2);
    }

    try {
        fsb::configure_workers_from_env();
        fsb::RunConfig config;
        if (!config_path.empty()) config = fsb::load_config(config_path);
        for (const auto& [key, opt] : key_options) {
            if (opt->count()) fsb::apply_setting(config, key, overrides[key]);
        }

        if (*point) {
            const auto r = fsb::run_point(config.system, config.bath, config.options);
            print_point(r);
            if (!out_prefix.empty()) {
                fsb::SweepResult single;
                single.spec = config.sweep_spec();
                single.points = {r};
                fsb::write_sweep(single, out_prefix);
            }
        } else if (*sweep || *spectrum) {
            auto spec = config.sweep_spec();
            spec.options.spectrum_only = static_cast<bool>(*spectrum);
            const auto result = fsb::run_sweep(spec);
            const std::string prefix = out_prefix.empty() ? (*spectrum ? "fsb_spectrum" : "fsb_sweep") : out_prefix;
            const auto files = fsb::write_sweep(result, prefix);
            std::size_t failed = 0;
            for (const auto& p : result.points) failed += p.ok() ? 0 : 1;
            fmt::print("points={}\nfailed={}\njumps={}\nseconds={:.2f}\ncsv={}\n", result.points.size(), failed,
                       result.jumps.size(), result.seconds, files.points.string());
            for (const auto& j : result.jumps) {
                fmt::print("jump {} row={} at={} magnitude={} nearest_root={}\n", j.observable,
                           fsb::format_number(j.row), fsb::format_number(j.location),
                           fsb::format_number(j.magnitude),
                           j.root_index ? fsb::format_number(j.nearest_root) : "nan");
            }
        } else if (*analytic) {
            print_analytic(config);
        } else if (*validate) {
            fsb::AcceptanceOptions opt;
            if (!out_prefix.empty()) opt.artifact_dir = out_prefix;
            if (criteria.empty()) {
                for (int k = 1; k <= fsb::kCriterionCount; ++k) criteria.push_back(k);
            }
            bool all = true;
            for (int k : criteria) {
                const auto r = fsb::run_criterion(k, opt);
                std::cout << fsb::format_result(r) << std::endl;
                all = all && r.passed;
            }
            return all ? 0 : 1;
        }
    } catch (const fsb::Error& e) {
        return fail(e.kind(), e.what());
    } catch (const std::exception& e) {
        return fail("internal", e.what(), 3);
    }
    return 0;
}
