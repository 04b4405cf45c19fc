// sweep.hpp — Single-point pipeline and label-continued parameter grids

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fsb/bath.hpp"
#include "fsb/floquet.hpp"
#include "fsb/jumps.hpp"
#include "fsb/model.hpp"
#include "fsb/stationary.hpp"

namespace fsb {

struct RunOptions {
    std::size_t n_steps{kDefaultSteps};
    int n_max{kDefaultNMax};
    bool analytic{false};      // attach high-frequency predictions
    bool spectrum_only{false}; // quasienergies only, skip rates
};

struct AnalyticColumns {
    std::array<double, 2> quasienergies{};
    double a2_n0_10{0.0};
    double a2_nm1_10{0.0};
    double a2_nm1_01{0.0};
    double max_deviation{0.0}; // max |a_analytic - a_numeric| over n in {0, -1}
};

AnalyticColumns analytic_columns(const SystemParams& system, const TransitionTable& table);

struct PointResult {
    SystemParams system;
    BathParams bath;
    std::array<double, 2> quasienergies{};
    bool degenerate{false};
    bool swapped{false};
    bool has_rates{false};
    std::array<double, 2> populations{};
    std::array<std::array<double, 2>, 2> totals{};
    double a2_n0_10{0.0};
    double a2_nm1_10{0.0};
    double a2_nm1_01{0.0};
    EmissionReport emission;
    std::optional<AnalyticColumns> analytic;
    std::string status{"ok"}; // error kind when the point failed

    double gap() const { return quasienergies[1] - quasienergies[0]; }
    bool ok() const { return status == "ok"; }
};

/// Full pipeline at one parameter point. `permute` exchanges the Floquet labels
/// before any rates are computed (set by the sweep's continuation pass).
PointResult run_point(const SystemParams& system, const BathParams& bath,
                      const RunOptions& options = {}, bool permute = false);

/// Names accepted for sweep axes.
const std::vector<std::string>& axis_names();

struct Axis {
    std::string name;
    double start{0.0};
    double stop{0.0};
    std::size_t points{2};

    double value(std::size_t i) const;
};

/// Writes `value` for the named axis into the parameter sets.
void apply_axis(const std::string& name, double value, SystemParams& system, BathParams& bath);

struct SweepSpec {
    Axis axis1;
    std::optional<Axis> axis2;
    SystemParams system;
    BathParams bath;
    RunOptions options;
    double p0_threshold{0.01};
    double ratio_threshold{0.02};

    void validate() const;
    std::size_t size() const { return axis1.points * (axis2 ? axis2->points : 1); }
};

struct SweepResult {
    SweepSpec spec;
    std::vector<PointResult> points; // axis1 fastest
    std::vector<JumpRecord> jumps;
    double seconds{0.0};

    const PointResult& at(std::size_t i1, std::size_t i2 = 0) const {
        return points[i2 * spec.axis1.points + i1];
    }
};

/// Grid evaluation. Stage one computes stroboscopic states for every point in
/// parallel, stage two continues labels sequentially along axis1, stage three
/// runs the full pipeline in parallel. Output is independent of thread count.
SweepResult run_sweep(const SweepSpec& spec);

/// Same three stages on one thread.
SweepResult run_sweep_serial(const SweepSpec& spec);

/// Applies FSB_NUM_WORKERS (positive integer) to the OpenMP thread pool when set.
/// Returns the worker count in effect.
int configure_workers_from_env();

} // namespace fsb
