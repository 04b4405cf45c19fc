// stationary.hpp — Stationary Floquet populations, periodic density matrix and Mollow-triplet intensities

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "fsb/bath.hpp"
#include "fsb/floquet.hpp"

namespace fsb {

struct StationaryState {
    std::array<double, 2> populations{};
    std::vector<Mat2> density_matrix; // rho_s(t_j), filled by density_matrix()
    double gamma_used{0.0};
    std::array<std::array<double, 2>, 2> totals{}; // W_{lambda<-mu}

    double relaxation_rate() const { return totals[0][1] + totals[1][0]; }
};

/// p_0 = W_{0<-1} / (W_{0<-1} + W_{1<-0}), p_1 = 1 - p_0.
StationaryState solve_stationary(const TransitionTable& table);

/// Right-hand side of the two-state rate equation at populations p.
std::array<double, 2> population_derivative(const StationaryState& state,
                                            const std::array<double, 2>& p);

/// Exponential relaxation p(t) = p_inf + (p(0) - p_inf) exp(-(W_{0<-1}+W_{1<-0}) t).
std::array<double, 2> relax_populations(const StationaryState& state,
                                        const std::array<double, 2>& initial, double t);

/// rho_s(t_j) = sum_lambda p_lambda |phi_lambda(t_j)><phi_lambda(t_j)|.
StationaryState density_matrix(StationaryState state, const FloquetSolution& solution);

/// rho_s(t_j) at a single grid index, without storing the full series.
Mat2 density_matrix_at(const StationaryState& state, const FloquetSolution& solution,
                       std::size_t j);

// Energy flux per channel, in units of gamma h_x^2. intensity_unshifted is an
// extension (diagonal n = -1 channels), not a formula from the source model.
struct EmissionReport {
    double intensity_blue{0.0};
    double intensity_red{0.0};
    double intensity_unshifted{0.0};
    double splitting{0.0};
    std::optional<double> ratio; // I_r / I_b; empty when I_b = 0

    double difference() const { return intensity_blue - intensity_red; }
};

EmissionReport emission(const StationaryState& state, const TransitionTable& table,
                        const FloquetSolution& solution);

} // namespace fsb
