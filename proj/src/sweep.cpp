#include "fsb/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "fsb/errors.hpp"
#include "fsb/hf_analytics.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fsb {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string describe(const SystemParams& s, const BathParams& b) {
    return fmt::format("h_x={:.17g} h_z0={:.17g} h_z1={:.17g} omega={:.17g} theta={:.17g} "
                       "gamma={:.17g} omega_c={:.17g} temperature={:.17g}",
                       s.h_x, s.h_z0, s.h_z1, s.omega, s.theta, b.gamma, b.omega_c, b.temperature);
}

PointResult failed_point(const SystemParams& s, const BathParams& b, const std::string& kind) {
    PointResult r;
    r.system = s;
    r.bath = b;
    r.quasienergies = {kNaN, kNaN};
    r.populations = {kNaN, kNaN};
    r.totals = {{{kNaN, kNaN}, {kNaN, kNaN}}};
    r.a2_n0_10 = r.a2_nm1_10 = r.a2_nm1_01 = kNaN;
    r.emission.intensity_blue = r.emission.intensity_red = kNaN;
    r.emission.intensity_unshifted = r.emission.splitting = kNaN;
    r.status = kind;
    return r;
}

struct Grid {
    std::vector<SystemParams> system;
    std::vector<BathParams> bath;
};

Grid build_grid(const SweepSpec& spec) {
    Grid g;
    const std::size_t n1 = spec.axis1.points;
    const std::size_t n2 = spec.axis2 ? spec.axis2->points : 1;
    g.system.reserve(n1 * n2);
    g.bath.reserve(n1 * n2);
    for (std::size_t i2 = 0; i2 < n2; ++i2) {
        for (std::size_t i1 = 0; i1 < n1; ++i1) {
            SystemParams s = spec.system;
            BathParams b = spec.bath;
            // axis2 first so that h_z1_over_omega on axis1 sees a swept omega
            if (spec.axis2) apply_axis(spec.axis2->name, spec.axis2->value(i2), s, b);
            apply_axis(spec.axis1.name, spec.axis1.value(i1), s, b);
            g.system.push_back(s);
            g.bath.push_back(b);
        }
    }
    return g;
}

// Zeros of J_0 sit at z_k * omega on an h_z1 axis, at z_k on an h_z1/omega axis.
std::optional<double> root_scale_for(const SweepSpec& spec, const SystemParams& row_params) {
    if (spec.axis1.name == "h_z1") return row_params.omega;
    if (spec.axis1.name == "h_z1_over_omega") return 1.0;
    return std::nullopt;
}

// Jump detection on p0 and ratio, row by row.
std::vector<JumpRecord> find_jumps(const SweepSpec& spec, const std::vector<PointResult>& points) {
    std::vector<JumpRecord> out;
    const std::size_t n1 = spec.axis1.points;
    const std::size_t n2 = spec.axis2 ? spec.axis2->points : 1;

    for (std::size_t i2 = 0; i2 < n2; ++i2) {
        const double row = spec.axis2 ? spec.axis2->value(i2) : 0.0;
        const auto scale = root_scale_for(spec, points[i2 * n1].system);
        std::vector<double> xp, yp, xr, yr;
        for (std::size_t i1 = 0; i1 < n1; ++i1) {
            const PointResult& p = points[i2 * n1 + i1];
            if (!p.ok() || !p.has_rates) continue;
            xp.push_back(spec.axis1.value(i1));
            yp.push_back(p.populations[0]);
            if (p.emission.ratio && std::isfinite(*p.emission.ratio)) {
                xr.push_back(spec.axis1.value(i1));
                yr.push_back(*p.emission.ratio);
            }
        }
        auto add = [&](const std::vector<double>& x, const std::vector<double>& y, double thr,
                       const char* name) {
            if (x.size() < 8) return;
            for (auto rec : detect_jumps(x, y, thr, name, scale)) {
                rec.row = row;
                out.push_back(rec);
            }
        };
        add(xp, yp, spec.p0_threshold, "p0");
        add(xr, yr, spec.ratio_threshold, "ratio");
    }
    return out;
}

SweepResult sweep_impl(const SweepSpec& spec, bool parallel) {
    spec.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const Grid grid = build_grid(spec);
    const std::size_t total = grid.system.size();
    const std::size_t n1 = spec.axis1.points;
    const std::size_t n2 = spec.axis2 ? spec.axis2->points : 1;
    const std::size_t n_steps = spec.options.n_steps;

    // Stage one: stroboscopic states.
    std::vector<StroboscopicState> strobe(total);
    std::vector<std::string> stage_error(total);
    const auto n_total = static_cast<std::ptrdiff_t>(total);
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
    for (std::ptrdiff_t k = 0; k < n_total; ++k) {
        const auto i = static_cast<std::size_t>(k);
        try {
            grid.system[i].validate();
            grid.bath[i].validate();
            strobe[i] = stroboscopic_states(propagate_monodromy(grid.system[i], n_steps),
                                            grid.system[i].omega, n_steps);
        } catch (const Error& e) {
            stage_error[i] = e.kind();
        }
    }

    // Stage two: label continuation along axis1. Points on different omega
    // grids cannot be compared and start a fresh chain.
    std::vector<LabelDecision> labels(total);
    for (std::size_t i2 = 0; i2 < n2; ++i2) {
        const StroboscopicState* previous = nullptr;
        for (std::size_t i1 = 0; i1 < n1; ++i1) {
            const std::size_t i = i2 * n1 + i1;
            if (!stage_error[i].empty()) continue;
            if (previous && previous->omega == strobe[i].omega) {
                labels[i] = decide_labels(*previous, strobe[i]);
                if (labels[i].permute) swap_labels(strobe[i]);
            }
            previous = &strobe[i];
        }
    }

    // Stage three: full pipeline.
    SweepResult result;
    result.spec = spec;
    result.points.resize(total);
#pragma omp parallel for schedule(dynamic, 2) if (parallel)
    for (std::ptrdiff_t k = 0; k < n_total; ++k) {
        const auto i = static_cast<std::size_t>(k);
        if (!stage_error[i].empty()) {
            result.points[i] = failed_point(grid.system[i], grid.bath[i], stage_error[i]);
            continue;
        }
        try {
            result.points[i] = run_point(grid.system[i], grid.bath[i], spec.options, labels[i].permute);
            result.points[i].swapped = labels[i].swapped;
        } catch (const Error& e) {
            result.points[i] = failed_point(grid.system[i], grid.bath[i], e.kind());
        }
    }

    if (!spec.options.spectrum_only) result.jumps = find_jumps(spec, result.points);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

} // namespace

AnalyticColumns analytic_columns(const SystemParams& system, const TransitionTable& table) {
    AnalyticColumns a;
    a.quasienergies = effective_hamiltonian(system).quasienergies;
    const Mat2 e0 = analytic_transition_elements(system, 0);
    const Mat2 em1 = analytic_transition_elements(system, -1);
    a.a2_n0_10 = std::norm(e0(1, 0));
    a.a2_nm1_10 = std::norm(em1(1, 0));
    a.a2_nm1_01 = std::norm(em1(0, 1));
    for (int l = 0; l < 2; ++l) {
        for (int m = 0; m < 2; ++m) {
            a.max_deviation = std::max({a.max_deviation,
                                        std::abs(e0(l, m) - table.coefficient(0, l, m)),
                                        std::abs(em1(l, m) - table.coefficient(-1, l, m))});
        }
    }
    return a;
}

PointResult run_point(const SystemParams& system, const BathParams& bath,
                      const RunOptions& options, bool permute) {
    try {
        system.validate();
        bath.validate();
        PointResult r;
        r.system = system;
        r.bath = bath;

        FloquetSolution sol = solve_floquet(system, options.n_steps);
        if (permute) swap_labels(sol);
        r.quasienergies = sol.quasienergies;
        r.degenerate = sol.degenerate;
        if (options.spectrum_only) {
            r.populations = {kNaN, kNaN};
            r.totals = {{{kNaN, kNaN}, {kNaN, kNaN}}};
            r.a2_n0_10 = r.a2_nm1_10 = r.a2_nm1_01 = kNaN;
            r.emission.intensity_blue = r.emission.intensity_red = kNaN;
            r.emission.intensity_unshifted = kNaN;
            r.emission.splitting = sol.gap();
            return r;
        }

        const TransitionTable table =
            rates(fourier_coefficients(sol, system.theta, options.n_max), bath, sol);
        const StationaryState state = solve_stationary(table);
        r.populations = state.populations;
        r.totals = state.totals;
        r.a2_n0_10 = std::norm(table.coefficient(0, 1, 0));
        r.a2_nm1_10 = std::norm(table.coefficient(-1, 1, 0));
        r.a2_nm1_01 = std::norm(table.coefficient(-1, 0, 1));
        r.emission = emission(state, table, sol);
        r.has_rates = true;
        if (options.analytic) r.analytic = analytic_columns(system, table);
        return r;
    } catch (const PointError&) {
        throw;
    } catch (const Error& e) {
        throw PointError(e, describe(system, bath));
    }
}

const std::vector<std::string>& axis_names() {
    static const std::vector<std::string> names = {
        "h_z1", "h_z1_over_omega", "h_z0", "theta", "omega", "temperature", "gamma", "omega_c", "h_x"};
    return names;
}

double Axis::value(std::size_t i) const {
    if (points < 2) return start;
    if (i + 1 == points) return stop;
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(points - 1);
}

void apply_axis(const std::string& name, double value, SystemParams& system, BathParams& bath) {
    if (name == "h_z1") system.h_z1 = value;
    else if (name == "h_z1_over_omega") system.h_z1 = value * system.omega;
    else if (name == "h_z0") system.h_z0 = value;
    else if (name == "theta") system.theta = value;
    else if (name == "omega") system.omega = value;
    else if (name == "h_x") system.h_x = value;
    else if (name == "temperature") bath.temperature = value;
    else if (name == "gamma") bath.gamma = value;
    else if (name == "omega_c") bath.omega_c = value;
    else throw ConfigError("unknown sweep axis '" + name + "'");
}

void SweepSpec::validate() const {
    auto check = [](const Axis& a) {
        const auto& names = axis_names();
        if (std::find(names.begin(), names.end(), a.name) == names.end()) {
            throw ConfigError("unknown sweep axis '" + a.name + "'");
        }
        if (a.points < 2) throw ConfigError("axis " + a.name + " needs at least 2 points");
        if (!std::isfinite(a.start) || !std::isfinite(a.stop)) {
            throw ConfigError("axis " + a.name + " has a non-finite range");
        }
    };
    check(axis1);
    if (axis2) {
        check(*axis2);
        auto family = [](const std::string& n) { return n == "h_z1_over_omega" ? std::string("h_z1") : n; };
        if (family(axis1.name) == family(axis2->name)) {
            throw ConfigError("sweep axes must be distinct parameters");
        }
    }
    if (options.n_max < 1) throw ConfigError("n_max must be at least 1");
    if (!(p0_threshold > 0.0) || !(ratio_threshold > 0.0)) {
        throw ConfigError("jump thresholds must be positive");
    }
}

SweepResult run_sweep(const SweepSpec& spec) { return sweep_impl(spec, true); }

SweepResult run_sweep_serial(const SweepSpec& spec) { return sweep_impl(spec, false); }

int configure_workers_from_env() {
    if (const char* env = std::getenv("FSB_NUM_WORKERS"); env && *env) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (*end != '\0' || n < 1 || n > 4096) {
            throw ConfigError(std::string("FSB_NUM_WORKERS must be a positive integer, got '") + env + "'");
        }
#ifdef _OPENMP
        omp_set_num_threads(static_cast<int>(n));
#endif
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace fsb
