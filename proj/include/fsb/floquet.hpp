// floquet.hpp — One-period propagator, quasienergies, Floquet modes and label continuation

#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "fsb/model.hpp"

namespace fsb {

inline constexpr std::size_t kDefaultSteps = 2048;
inline constexpr double kDegeneracyTolerance = 1e-9; // relative to omega

// U(t_j, 0) on t_j = j * period / n_steps, j = 0..n_steps.
struct PropagatorGrid {
    std::size_t n_steps{0};
    double period{0.0};
    std::vector<Mat2> propagators;

    double time(std::size_t j) const {
        return period * static_cast<double>(j) / static_cast<double>(n_steps);
    }
    const Mat2& monodromy() const { return propagators.back(); }
};

// Quasienergies and the t = 0 Floquet states only; enough for labeling passes.
struct StroboscopicState {
    std::array<double, 2> quasienergies{};
    std::array<Vec2, 2> states{};
    bool degenerate{false};
    std::size_t n_steps{0};
    double omega{0.0};

    double gap() const { return quasienergies[1] - quasienergies[0]; }
};

struct FloquetSolution {
    std::size_t n_steps{0};
    double omega{0.0};
    std::array<double, 2> quasienergies{}; // ascending, in (-omega/2, omega/2]
    std::array<std::vector<Vec2>, 2> modes; // |phi_lambda(t_j)>, j = 0..n_steps
    bool degenerate{false};

    double period() const { return 2.0 * kPi / omega; }
    double time(std::size_t j) const {
        return period() * static_cast<double>(j) / static_cast<double>(n_steps);
    }
    double gap() const { return quasienergies[1] - quasienergies[0]; }
    StroboscopicState stroboscopic() const;
};

/// exp(-i dt K) for a Hermitian 2x2 K, in closed form.
Mat2 expm_hermitian(const Mat2& k, double dt);

/// Integrates U(t, 0) over one period with the 4th-order commutator-free
/// Magnus scheme (two exact SU(2) exponentials per step).
/// Requires n_steps >= 64 and even.
PropagatorGrid propagate_period(const SystemParams& params, std::size_t n_steps = kDefaultSteps);

/// Same integration, keeping only U(period, 0).
Mat2 propagate_monodromy(const SystemParams& params, std::size_t n_steps = kDefaultSteps);

/// Largest absolute entry of U^dagger U - I.
double unitarity_defect(const Mat2& u);

/// Eigen-decomposition of a one-period propagator. Quasienergies are folded into
/// (-omega/2, omega/2] and sorted ascending; inside the degeneracy window the
/// sigma_x eigenbasis is used (label 0 = |-1>_x).
StroboscopicState stroboscopic_states(const Mat2& monodromy, double omega, std::size_t n_steps);

FloquetSolution diagonalize_monodromy(const PropagatorGrid& grid, double omega);

/// propagate_period followed by diagonalize_monodromy.
FloquetSolution solve_floquet(const SystemParams& params, std::size_t n_steps = kDefaultSteps);

/// Phase gauge used throughout: the larger of <+1_x|v>, <-1_x|v> is made real positive.
void fix_phase(Vec2& v);

/// Folds a quasienergy into (-omega/2, omega/2].
double fold_quasienergy(double eps, double omega);

struct LabelDecision {
    bool swapped{false}; // overlap continuation pairs prev label 0 with curr label 1
    bool permute{false}; // labels of curr must be exchanged
};

LabelDecision decide_labels(const StroboscopicState& previous, const StroboscopicState& current);

struct LabelContinuation {
    FloquetSolution solution;
    bool swapped{false};
};

/// Labels stay quasienergy-ascending; `swapped` reports that the Floquet states
/// exchanged character between the two sweep points (a crossing). Inside the
/// degeneracy window the labels follow the overlap with `previous`.
LabelContinuation continue_labels(const FloquetSolution& previous, const FloquetSolution& current);

/// Exchanges labels 0 and 1.
void swap_labels(FloquetSolution& solution);
void swap_labels(StroboscopicState& state);

} // namespace fsb
