#include "fsb/stationary.hpp"

#include <cmath>

#include "fsb/errors.hpp"

namespace fsb {

namespace {
// |a|^2 below this is DFT rounding of a channel that is zero by symmetry
constexpr double kChannelFloor = 1e-24;
// inter-level totals this far below the dephasing totals are rounding noise
constexpr double kRelaxationFloor = 1e-20;
} // namespace

StationaryState solve_stationary(const TransitionTable& table) {
    if (!table.has_rates()) {
        throw InvariantError("transition table has no rates; call rates() first");
    }
    StationaryState state;
    for (int l = 0; l < 2; ++l) {
        for (int m = 0; m < 2; ++m) state.totals[l][m] = table.total(l, m);
    }
    const double into_0 = state.totals[0][1];
    const double into_1 = state.totals[1][0];
    const double dephasing = state.totals[0][0] + state.totals[1][1];
    if (!(into_0 + into_1 > kRelaxationFloor * dephasing) || !(into_0 + into_1 > 0.0)) {
        throw NoRelaxationError("both transition totals vanish; stationary state undefined");
    }
    state.populations[0] = into_0 / (into_0 + into_1);
    state.populations[1] = 1.0 - state.populations[0];
    state.gamma_used = table.gamma();
    return state;
}

std::array<double, 2> population_derivative(const StationaryState& state,
                                            const std::array<double, 2>& p) {
    const double flow = state.totals[0][1] * p[1] - state.totals[1][0] * p[0];
    return {flow, -flow};
}

std::array<double, 2> relax_populations(const StationaryState& state,
                                        const std::array<double, 2>& initial, double t) {
    const double decay = std::exp(-state.relaxation_rate() * t);
    const double p0 = state.populations[0] + (initial[0] - state.populations[0]) * decay;
    return {p0, 1.0 - p0};
}

Mat2 density_matrix_at(const StationaryState& state, const FloquetSolution& solution,
                       std::size_t j) {
    Mat2 rho = Mat2::Zero();
    for (int l = 0; l < 2; ++l) {
        const Vec2& phi = solution.modes[l][j];
        rho += state.populations[l] * (phi * phi.adjoint());
    }
    return rho;
}

StationaryState density_matrix(StationaryState state, const FloquetSolution& solution) {
    state.density_matrix.resize(solution.n_steps + 1);
    for (std::size_t j = 0; j <= solution.n_steps; ++j) {
        state.density_matrix[j] = density_matrix_at(state, solution, j);
    }
    return state;
}

EmissionReport emission(const StationaryState& state, const TransitionTable& table,
                        const FloquetSolution& solution) {
    if (table.n_max() < 1) throw ConfigError("emission needs n_max >= 1");
    const double omega = solution.omega;
    const double split = solution.quasienergies[1] - solution.quasienergies[0];
    const auto& p = state.populations;

    EmissionReport r;
    r.splitting = split;
    r.intensity_blue = (omega + split) * table.rate(-1, 0, 1) * p[1];
    r.intensity_red = (omega - split) * table.rate(-1, 1, 0) * p[0];
    r.intensity_unshifted = omega * (table.rate(-1, 0, 0) * p[0] + table.rate(-1, 1, 1) * p[1]);
    if (r.intensity_blue > 0.0 && std::norm(table.coefficient(-1, 0, 1)) > kChannelFloor) r.ratio = r.intensity_red / r.intensity_blue;
    return r;
}

} // namespace fsb
