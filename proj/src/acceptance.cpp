#include "fsb/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>

#include <boost/math/tools/minima.hpp>
#include <fmt/format.h>

#include "fsb/bath.hpp"
#include "fsb/bessel.hpp"
#include "fsb/errors.hpp"
#include "fsb/floquet.hpp"
#include "fsb/output.hpp"
#include "fsb/stationary.hpp"
#include "fsb/sweep.hpp"

namespace fsb {

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool passed{false};
    std::string detail;
};

std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = (i + 1 == n) ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return v;
}

SystemParams driven(double omega, double z, double theta) {
    SystemParams s;
    s.omega = omega;
    s.h_z1 = z * omega;
    s.theta = theta;
    return s;
}

StroboscopicState strobe(const SystemParams& s, std::size_t n = kDefaultSteps) {
    return stroboscopic_states(propagate_monodromy(s, n), s.omega, n);
}

struct FullPoint {
    FloquetSolution solution;
    TransitionTable table;
    StationaryState state;
};

FullPoint full_point(const SystemParams& s, const BathParams& b, std::size_t n = kDefaultSteps) {
    FullPoint p;
    p.solution = solve_floquet(s, n);
    p.table = rates(fourier_coefficients(p.solution, s.theta), b, p.solution);
    p.state = solve_stationary(p.table);
    return p;
}

Verdict static_gibbs() {
    const auto t0 = Clock::now();
    SystemParams s;
    s.theta = kPi / 4;
    BathParams b;
    const auto r = run_point(s, b);
    const double ratio = r.populations[1] / r.populations[0];
    const double expected = std::exp(-1.0 / 3.0);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool ok = std::abs(ratio - expected) <= 1e-3 && secs < 1.0;
    return {ok, fmt::format("p1/p0 = {:.6f}, exp(-1/3) = {:.6f}, {:.3f} s", ratio, expected, secs)};
}

Verdict quasienergy_law() {
    const auto t0 = Clock::now();
    const double omega = 40.0;
    double dev = 0.0;
    for (double z : linspace(0.0, 6.0, 300)) {
        const auto st = strobe(driven(omega, z, kPi / 2));
        const double half = 0.5 * std::abs(bessel_j(0, z));
        dev = std::max({dev, std::abs(st.quasienergies[0] + half), std::abs(st.quasienergies[1] - half)});
    }

    // Gap minima on the same step, extended far enough to reach the third zero.
    const double step = 6.0 / 299.0;
    auto gap = [&](double z) { return strobe(driven(omega, z, kPi / 2)).gap(); };
    std::vector<double> zs, gaps;
    for (double z = 0.0; z <= 9.0; z += step) {
        zs.push_back(z);
        gaps.push_back(gap(z));
    }
    std::vector<double> minima;
    for (std::size_t i = 1; i + 1 < zs.size(); ++i) {
        if (gaps[i] < gaps[i - 1] && gaps[i] <= gaps[i + 1] && gaps[i] < 0.05) {
            const auto [zmin, gmin] = boost::math::tools::brent_find_minima(gap, zs[i - 1], zs[i + 1], 40);
            (void)gmin;
            minima.push_back(zmin);
        }
    }
    double worst = 0.0;
    std::string where;
    bool found = minima.size() >= 3;
    for (std::size_t k = 0; k < std::min<std::size_t>(3, minima.size()); ++k) {
        const double root = bessel_root(static_cast<int>(k) + 1);
        const double rel = std::abs(minima[k] - root) / root;
        worst = std::max(worst, rel);
        where += fmt::format(" z{}: {:.6f} vs {:.6f};", k + 1, minima[k], root);
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool ok = dev <= 0.01 && found && worst <= 2e-3 && secs < 30.0;
    return {ok, fmt::format("max |eps -+ J0/2| = {:.3e}; {} gap minima, worst relative offset {:.2e};{} {:.1f} s",
                            dev, minima.size(), worst, where, secs)};
}

Verdict detailed_balance() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    std::size_t channels = 0;
    for (int k = 0; k < 50; ++k) {
        SystemParams s;
        s.h_z0 = -1.0 + 2.0 * u(rng);
        s.omega = 10.0 + 70.0 * u(rng);
        s.h_z1 = 6.0 * u(rng) * s.omega;
        s.theta = kPi * u(rng);
        BathParams b;
        b.temperature = 1.0 + 4.0 * u(rng);
        b.gamma = 0.001 + 0.099 * u(rng);
        b.omega_c = 2.0 + 18.0 * u(rng);
        const auto sol = solve_floquet(s);
        const auto table = rates(fourier_coefficients(sol, s.theta), b, sol);
        for (int n = -table.n_max(); n <= table.n_max(); ++n) {
            for (int l = 0; l < 2; ++l) {
                for (int m = 0; m < 2; ++m) {
                    const double lhs = table.rate(n, l, m);
                    const double rhs = table.rate(-n, m, l) * std::exp(table.energy_gap(n, l, m) / b.temperature);
                    const double scale = std::max(std::abs(lhs), std::abs(rhs));
                    if (scale == 0.0) continue;
                    worst = std::max(worst, std::abs(lhs - rhs) / scale);
                    ++channels;
                }
            }
        }
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    return {worst <= 1e-8 && secs < 30.0,
            fmt::format("{} channels, worst relative defect {:.2e}, {:.1f} s", channels, worst, secs)};
}

Verdict generalized_parity() {
    double worst = 0.0;
    for (double z : linspace(0.0, 6.0, 121)) {
        const auto s = driven(40.0, z, kPi / 2);
        const auto sol = solve_floquet(s);
        const auto table = fourier_coefficients(sol, s.theta);
        worst = std::max(worst, std::abs(table.coefficient(0, 1, 0)));
    }
    return {worst < 1e-8, fmt::format("max |a^(0)_10| = {:.2e}", worst)};
}

Verdict inversion_and_jump() {
    const double omega = 40.0;
    const BathParams b;
    bool inverted = true;
    double worst_margin = 1.0;
    for (int i = 0; i < 40; ++i) {
        const double z = 0.2 + 2.0 * (i + 0.5) / 40.0;
        const auto r = run_point(driven(omega, z, kPi / 2), b);
        worst_margin = std::min(worst_margin, r.populations[1] - r.populations[0]);
        inverted = inverted && r.populations[1] > r.populations[0];
    }

    const double z1 = bessel_root(1);
    const auto below = full_point(driven(omega, z1 - 0.01, kPi / 2), b);
    const auto above = full_point(driven(omega, z1 + 0.01, kPi / 2), b);
    const double jump = std::abs(above.state.populations[0] - below.state.populations[0]);
    const double swap = std::abs(above.state.populations[0] - below.state.populations[1]);
    double rho_diff = 0.0;
    for (std::size_t j = 0; j <= below.solution.n_steps; ++j) {
        const Mat2 d = density_matrix_at(above.state, above.solution, j) -
                       density_matrix_at(below.state, below.solution, j);
        rho_diff = std::max(rho_diff, d.norm());
    }
    const bool ok = inverted && jump > 0.1 && swap <= 0.02 && rho_diff <= 0.02;
    return {ok, fmt::format("inversion {} (min p1-p0 = {:.4f}); |p0 jump| = {:.4f} (needs > 0.1); "
                            "swap defect {:.2e}; max ||rho+ - rho-|| = {:.2e}",
                            inverted ? "holds" : "fails", worst_margin, jump, swap, rho_diff)};
}

// Ratio jump detected on a 40-point h_z1/omega grid centred on z_1.
double detected_ratio_jump(double omega, std::string& note) {
    const double z1 = bessel_root(1);
    SweepSpec spec;
    spec.axis1 = Axis{"h_z1_over_omega", z1 - 0.0975, z1 + 0.0975, 40};
    spec.system = driven(omega, 0.0, kPi / 4);
    spec.bath.omega_c = 10.0;
    spec.bath.temperature = 3.0;
    const auto result = run_sweep(spec);
    double best = std::nan("");
    for (const auto& j : result.jumps) {
        if (j.observable == "ratio" && j.root_index == 1 && std::abs(j.location - z1) < 0.01) {
            best = j.magnitude;
            note += fmt::format(" omega={}: {:.4f} -> {:.4f};", omega, j.left_value, j.right_value);
        }
    }
    return best;
}

Verdict ratio_jump() {
    std::string note;
    const double j40 = detected_ratio_jump(40.0, note);
    const double j80 = detected_ratio_jump(80.0, note);
    const double half = j80 / j40;
    const bool ok = std::abs(j40 - 0.10) <= 0.05 && std::abs(half - 0.5) <= 0.5 * 0.15;
    return {ok, fmt::format("jump {:.4f} at omega=40, {:.4f} at omega=80, ratio {:.3f};{}", j40, j80, half, note)};
}

Verdict floquet_gibbs() {
    const BathParams b;
    double worst = 0.0;
    double intensity = 0.0;
    const double omega = 40.0;
    for (double z : linspace(0.0, 6.0, 121)) {
        const auto r = run_point(driven(omega, z, 0.0), b);
        const double gibbs = std::exp(r.gap() / b.temperature);
        worst = std::max(worst, std::abs(r.populations[0] / r.populations[1] - gibbs));
        intensity = std::max({intensity, r.emission.intensity_blue, r.emission.intensity_red});
    }
    const double bound = 1e-6 * b.gamma * omega;
    return {worst <= 0.02 && intensity < bound,
            fmt::format("max |p0/p1 - exp(gap/T)| = {:.2e}; max I_b, I_r = {:.2e} (bound {:.1e})",
                        worst, intensity, bound)};
}

double max_coefficient_deviation(double omega) {
    double dev = 0.0;
    for (double theta : {0.0, kPi / 4, kPi / 2}) {
        for (double z : linspace(0.0, 6.0, 121)) {
            const SystemParams s = driven(omega, z, theta);
            const auto table = fourier_coefficients(solve_floquet(s, kDefaultSteps), theta);
            dev = std::max(dev, analytic_columns(s, table).max_deviation);
        }
    }
    return dev;
}

Verdict analytic_agreement() {
    const double d40 = max_coefficient_deviation(40.0);
    const double d80 = max_coefficient_deviation(80.0);
    const double factor = d40 / d80;
    const bool ok = d40 <= 5e-3 && factor >= 1.5 && factor <= 3.0;
    return {ok, fmt::format("max deviation {:.3e} at omega=40, {:.3e} at omega=80, factor {:.2f} (needs 1.5..3)",
                            d40, d80, factor)};
}

Verdict property_suite() {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double unitarity = 0.0, ortho = 0.0, periodic = 0.0, parseval = 0.0, rescale = 0.0, doubling = 0.0;
    for (int k = 0; k < 8; ++k) {
        SystemParams s;
        s.h_z0 = -1.0 + 2.0 * u(rng);
        s.omega = 20.0 + 60.0 * u(rng);
        s.h_z1 = 6.0 * u(rng) * s.omega;
        s.theta = kPi * u(rng);
        const std::size_t n = 1024;

        const auto grid = propagate_period(s, n);
        for (const auto& p : grid.propagators) unitarity = std::max(unitarity, unitarity_defect(p));
        const auto sol = diagonalize_monodromy(grid, s.omega);
        for (std::size_t j = 0; j <= n; ++j) {
            for (int a = 0; a < 2; ++a) {
                for (int c = 0; c < 2; ++c) {
                    const double target = a == c ? 1.0 : 0.0;
                    ortho = std::max(ortho, std::abs(sol.modes[a][j].dot(sol.modes[c][j]) - target));
                }
            }
        }
        for (int a = 0; a < 2; ++a) {
            periodic = std::max(periodic, (sol.modes[a][n] - sol.modes[a][0]).norm());
        }

        // Parseval over the full set of N Fourier orders.
        const auto series = matrix_element_series(sol, s.theta);
        std::vector<std::complex<double>> twiddle(n);
        for (std::size_t j = 0; j < n; ++j) twiddle[j] = std::polar(1.0, -2.0 * kPi * static_cast<double>(j) / n);
        for (int a = 0; a < 2; ++a) {
            for (int c = 0; c < 2; ++c) {
                const auto& x = series[a][c];
                double time_side = 0.0;
                for (const auto& v : x) time_side += std::norm(v);
                time_side /= static_cast<double>(n);
                double freq_side = 0.0;
                for (std::size_t m = 0; m < n; ++m) {
                    std::complex<double> acc = 0.0;
                    for (std::size_t j = 0; j < n; ++j) acc += x[j] * twiddle[(m * j) % n];
                    freq_side += std::norm(acc / static_cast<double>(n));
                }
                parseval = std::max(parseval, std::abs(freq_side - time_side));
            }
        }

        BathParams b;
        const auto table = fourier_coefficients(sol, s.theta);
        const auto p1 = solve_stationary(rates(table, b, sol)).populations;
        b.gamma *= 7.3;
        const auto p2 = solve_stationary(rates(table, b, sol)).populations;
        rescale = std::max(rescale, std::abs(p1[0] - p2[0]));

        const auto coarse = strobe(s, 2048);
        const auto fine = strobe(s, 4096);
        for (int a = 0; a < 2; ++a) {
            doubling = std::max(doubling, std::abs(coarse.quasienergies[a] - fine.quasienergies[a]));
        }
    }
    const bool ok = unitarity <= 1e-10 && ortho <= 1e-8 && periodic <= 1e-8 && parseval <= 1e-10 &&
                    rescale <= 1e-12 && doubling <= 1e-8;
    return {ok, fmt::format("unitarity {:.1e}, orthonormality {:.1e}, periodicity {:.1e}, parseval {:.1e}, "
                            "gamma rescaling {:.1e}, grid doubling {:.1e}",
                            unitarity, ortho, periodic, parseval, rescale, doubling)};
}

Verdict figure_maps(const AcceptanceOptions& options) {
    const auto t0 = Clock::now();
    const double omega = 40.0;
    SweepSpec spec;
    spec.axis1 = Axis{"h_z1", 0.0, 6.0 * omega, 200};
    spec.axis2 = Axis{"theta", 0.0, kPi / 2, 200};
    spec.system.omega = omega;
    const auto result = run_sweep(spec);

    std::filesystem::path dir = options.artifact_dir;
    if (dir.empty()) dir = std::filesystem::temp_directory_path() / "fsb_acceptance";
    const auto files = write_sweep(result, dir / "theta_h_z1_map");

    const std::size_t n1 = spec.axis1.points;
    const std::size_t last = spec.axis2->points - 1;
    // sigma_x coupling without drive commutes with H: no relaxation there by construction
    std::size_t failed = 0, decoupled = 0;
    for (const auto& p : result.points) {
        if (p.ok()) continue;
        const bool corner = p.status == "no-relaxation" && p.system.h_z1 == 0.0 &&
                            std::abs(p.system.theta - kPi / 2) < 1e-12;
        (corner ? decoupled : failed) += 1;
    }

    // Inversion at theta = pi/2 for small drive.
    bool inversion = true;
    std::size_t inverted_points = 0;
    for (std::size_t i = 0; i < n1; ++i) {
        const auto& p = result.at(i, last);
        const double z = p.system.h_z1 / omega;
        if (z > 0.2 && z < 2.2) {
            inversion = inversion && p.populations[0] < 0.5;
            ++inverted_points;
        }
    }

    // p0 ridges at z_1 and z_2 on the theta = pi/2 row.
    const double step = spec.axis1.value(1) - spec.axis1.value(0);
    bool ridges = true;
    std::string ridge_note;
    for (int k = 1; k <= 2; ++k) {
        const double target = bessel_root(k) * omega;
        bool hit = false;
        for (const auto& j : result.jumps) {
            if (j.observable == "p0" && j.row == spec.axis2->value(last) && std::abs(j.location - target) <= step) {
                hit = true;
                ridge_note += fmt::format(" z{} ridge {:.4f} at {:.3f};", k, j.magnitude, j.location / omega);
            }
        }
        ridges = ridges && hit;
    }

    // Size of the I_b - I_r discontinuity at z_1 per theta row, with the local
    // slope removed.
    const double z1 = bessel_root(1) * omega;
    std::size_t cell = 0;
    while (cell + 1 < n1 && spec.axis1.value(cell + 1) < z1) ++cell;
    double best = -1.0, best_theta = 0.0;
    for (std::size_t i2 = 0; i2 <= last; ++i2) {
        auto d = [&](std::size_t i) { return result.at(i, i2).emission.difference(); };
        const double across = d(cell + 1) - d(cell);
        const double slope = 0.5 * ((d(cell) - d(cell - 1)) + (d(cell + 2) - d(cell + 1)));
        const double jump = std::abs(across - slope);
        if (jump > best) {
            best = jump;
            best_theta = spec.axis2->value(i2);
        }
    }
    const bool peak_ok = best_theta >= 0.25 * kPi && best_theta <= 0.35 * kPi;
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool ok = failed == 0 && inversion && inverted_points > 0 && ridges && peak_ok && secs < 600.0;
    return {ok, fmt::format("{} points ({} failed, {} decoupled); inversion {};{} ridges {}; I_b-I_r jump peaks at "
                            "theta = {:.3f} pi ({:.3e}); {:.1f} s; csv {}",
                            result.points.size(), failed, decoupled, inversion ? "holds" : "fails", ridge_note,
                            ridges ? "found" : "missing", best_theta / kPi, best, secs,
                            files.points.string())};
}

const char* criterion_name(int index) {
    static const char* names[] = {"static-gibbs",       "quasienergy-law",   "detailed-balance",
                                  "generalized-parity", "inversion-and-jump", "ratio-jump",
                                  "floquet-gibbs",      "analytic-agreement", "property-suite",
                                  "figure-maps"};
    return names[index - 1];
}

} // namespace

CriterionResult run_criterion(int index, const AcceptanceOptions& options) {
    if (index < 1 || index > kCriterionCount) {
        throw ConfigError(fmt::format("criterion index must be 1..{}, got {}", kCriterionCount, index));
    }
    CriterionResult r;
    r.index = index;
    r.name = criterion_name(index);
    const auto t0 = Clock::now();
    Verdict v;
    try {
        switch (index) {
        case 1: v = static_gibbs(); break;
        case 2: v = quasienergy_law(); break;
        case 3: v = detailed_balance(); break;
        case 4: v = generalized_parity(); break;
        case 5: v = inversion_and_jump(); break;
        case 6: v = ratio_jump(); break;
        case 7: v = floquet_gibbs(); break;
        case 8: v = analytic_agreement(); break;
        case 9: v = property_suite(); break;
        default: v = figure_maps(options); break;
        }
    } catch (const Error& e) {
        v = {false, fmt::format("error kind={} message=\"{}\"", e.kind(), e.what())};
    }
    r.passed = v.passed;
    r.detail = v.detail;
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
    std::vector<CriterionResult> out;
    for (int k = 1; k <= kCriterionCount; ++k) out.push_back(run_criterion(k, options));
    return out;
}

std::string format_result(const CriterionResult& r) {
    return fmt::format("{} {:2d} {}: {}", r.passed ? "PASS" : "FAIL", r.index, r.name, r.detail);
}

} // namespace fsb
