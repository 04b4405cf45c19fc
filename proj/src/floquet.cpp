#include "fsb/floquet.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include "fsb/errors.hpp"

namespace fsb {

namespace {

using cd = std::complex<double>;

// Commutator-free Magnus, order 4 (Gauss-Legendre nodes).
const double kSqrt3 = std::sqrt(3.0);
const double kNode1 = 0.5 - kSqrt3 / 6.0;
const double kNode2 = 0.5 + kSqrt3 / 6.0;
const double kWeight1 = (3.0 - 2.0 * kSqrt3) / 12.0;
const double kWeight2 = (3.0 + 2.0 * kSqrt3) / 12.0;

constexpr double kUnitarityTolerance = 1e-10;

void check_steps(std::size_t n_steps) {
    if (n_steps < 64 || n_steps % 2 != 0) {
        throw ConfigError("n_steps must be even and >= 64, got " + std::to_string(n_steps));
    }
}

Mat2 cf4_step(const SystemParams& params, std::size_t j, std::size_t n_steps, double dt) {
    const Mat2 h1 = hamiltonian_on_grid(params, j, n_steps, kNode1);
    const Mat2 h2 = hamiltonian_on_grid(params, j, n_steps, kNode2);
    const Mat2 first = expm_hermitian(kWeight2 * h1 + kWeight1 * h2, dt);
    const Mat2 second = expm_hermitian(kWeight1 * h1 + kWeight2 * h2, dt);
    return second * first;
}

void check_finite(const Mat2& u, std::size_t step) {
    if (!u.allFinite()) {
        throw IntegrationError("non-finite propagator entry at step " + std::to_string(step), step);
    }
}

// Eigenvector of n.sigma with eigenvalue +1 for a unit vector n.
Vec2 spin_up_along(double nx, double ny, double nz) {
    Vec2 v;
    if (nz >= 0.0) {
        const double norm = std::sqrt(2.0 * (1.0 + nz));
        v << cd(1.0 + nz, 0.0) / norm, cd(nx, ny) / norm;
    } else {
        const double norm = std::sqrt(2.0 * (1.0 - nz));
        v << cd(nx, -ny) / norm, cd(1.0 - nz, 0.0) / norm;
    }
    return v;
}

// The orthogonal partner (-conj(b), conj(a)) has eigenvalue -1.
Vec2 partner(const Vec2& v) {
    Vec2 w;
    w << -std::conj(v(1)), std::conj(v(0));
    return w;
}

Vec2 sigma_x_state(int sign) {
    const double r = 1.0 / std::sqrt(2.0);
    Vec2 v;
    v << r, sign * r;
    return v;
}

} // namespace

Mat2 expm_hermitian(const Mat2& k, double dt) {
    const double k0 = 0.5 * (k(0, 0).real() + k(1, 1).real());
    const double kz = 0.5 * (k(0, 0).real() - k(1, 1).real());
    const cd off = k(1, 0); // kx + i ky
    const double norm = std::sqrt(kz * kz + std::norm(off));
    const double angle = norm * dt;
    const double c = std::cos(angle);
    const double s = norm > 0.0 ? std::sin(angle) / norm : dt;
    const cd minus_is(0.0, -s);
    Mat2 u;
    u << cd(c, 0.0) + minus_is * kz, minus_is * std::conj(off),
         minus_is * off,              cd(c, 0.0) - minus_is * kz;
    if (k0 != 0.0) u *= std::polar(1.0, -k0 * dt);
    return u;
}

PropagatorGrid propagate_period(const SystemParams& params, std::size_t n_steps) {
    check_steps(n_steps);
    PropagatorGrid grid;
    grid.n_steps = n_steps;
    grid.period = params.period();
    grid.propagators.reserve(n_steps + 1);
    grid.propagators.push_back(Mat2::Identity());
    const double dt = grid.period / static_cast<double>(n_steps);
    for (std::size_t j = 0; j < n_steps; ++j) {
        Mat2 next = cf4_step(params, j, n_steps, dt) * grid.propagators.back();
        check_finite(next, j);
        grid.propagators.push_back(next);
    }
    return grid;
}

Mat2 propagate_monodromy(const SystemParams& params, std::size_t n_steps) {
    check_steps(n_steps);
    const double dt = params.period() / static_cast<double>(n_steps);
    Mat2 u = Mat2::Identity();
    for (std::size_t j = 0; j < n_steps; ++j) {
        u = cf4_step(params, j, n_steps, dt) * u;
        check_finite(u, j);
    }
    return u;
}

double unitarity_defect(const Mat2& u) {
    return (u.adjoint() * u - Mat2::Identity()).cwiseAbs().maxCoeff();
}

double fold_quasienergy(double eps, double omega) {
    double folded = std::remainder(eps, omega); // in [-omega/2, omega/2]
    if (folded <= -0.5 * omega) folded += omega;
    return folded;
}

void fix_phase(Vec2& v) {
    const double r = 1.0 / std::sqrt(2.0);
    const cd plus = r * (v(0) + v(1));
    const cd minus = r * (v(0) - v(1));
    const cd c = std::abs(plus) >= std::abs(minus) ? plus : minus;
    const double mag = std::abs(c);
    if (mag > 0.0) v *= std::conj(c) / mag;
}

StroboscopicState stroboscopic_states(const Mat2& monodromy, double omega, std::size_t n_steps) {
    if (!(unitarity_defect(monodromy) <= kUnitarityTolerance)) {
        throw InvariantError("monodromy is not unitary (defect " +
                             std::to_string(unitarity_defect(monodromy)) + ")");
    }
    const double period = 2.0 * kPi / omega;

    // U = e^{i g} (c I - i s n.sigma)
    const cd det = monodromy.determinant();
    const double g = 0.5 * std::arg(det);
    const Mat2 v = monodromy * std::polar(1.0, -g);
    const double c = 0.5 * (v(0, 0) + v(1, 1)).real();
    const cd half_i(0.0, 0.5);
    const double snx = (half_i * (v(0, 1) + v(1, 0))).real();
    const double sny = (-0.5 * (v(0, 1) - v(1, 0))).real();
    const double snz = (half_i * (v(0, 0) - v(1, 1))).real();
    const double s = std::sqrt(snx * snx + sny * sny + snz * snz);
    const double a = std::atan2(s, c);

    const double eps_up = fold_quasienergy((a - g) / period, omega);
    const double eps_down = fold_quasienergy((-a - g) / period, omega);
    double distance = std::abs(eps_up - eps_down);
    distance = std::min(distance, omega - distance);

    StroboscopicState out;
    out.n_steps = n_steps;
    out.omega = omega;
    out.degenerate = distance < kDegeneracyTolerance * omega || s == 0.0;

    if (!out.degenerate) {
        const Vec2 up = spin_up_along(snx / s, sny / s, snz / s);
        const Vec2 down = partner(up);
        if (eps_down <= eps_up) {
            out.quasienergies = {eps_down, eps_up};
            out.states = {down, up};
        } else {
            out.quasienergies = {eps_up, eps_down};
            out.states = {up, down};
        }
    } else {
        out.states = {sigma_x_state(-1), sigma_x_state(+1)};
        for (int l = 0; l < 2; ++l) {
            const cd phase = out.states[l].dot(monodromy * out.states[l]);
            out.quasienergies[l] = fold_quasienergy(-std::arg(phase) / period, omega);
        }
        if (out.quasienergies[0] > out.quasienergies[1]) {
            std::swap(out.quasienergies[0], out.quasienergies[1]);
        }
    }
    for (auto& state : out.states) fix_phase(state);
    return out;
}

StroboscopicState FloquetSolution::stroboscopic() const {
    StroboscopicState s;
    s.quasienergies = quasienergies;
    s.states = {modes[0].front(), modes[1].front()};
    s.degenerate = degenerate;
    s.n_steps = n_steps;
    s.omega = omega;
    return s;
}

FloquetSolution diagonalize_monodromy(const PropagatorGrid& grid, double omega) {
    if (grid.propagators.size() != grid.n_steps + 1) {
        throw InvariantError("propagator grid has inconsistent size");
    }
    for (std::size_t j = 0; j < grid.propagators.size(); ++j) {
        if (!(unitarity_defect(grid.propagators[j]) <= kUnitarityTolerance)) {
            throw InvariantError("propagator at grid index " + std::to_string(j) +
                                 " is not unitary");
        }
    }
    const StroboscopicState strobe = stroboscopic_states(grid.monodromy(), omega, grid.n_steps);

    FloquetSolution sol;
    sol.n_steps = grid.n_steps;
    sol.omega = omega;
    sol.quasienergies = strobe.quasienergies;
    sol.degenerate = strobe.degenerate;
    for (int l = 0; l < 2; ++l) {
        auto& mode = sol.modes[l];
        mode.resize(grid.n_steps + 1);
        for (std::size_t j = 0; j <= grid.n_steps; ++j) {
            mode[j] = std::polar(1.0, strobe.quasienergies[l] * grid.time(j)) *
                      (grid.propagators[j] * strobe.states[l]);
        }
        mode[0] = strobe.states[l];
    }
    return sol;
}

FloquetSolution solve_floquet(const SystemParams& params, std::size_t n_steps) {
    params.validate();
    return diagonalize_monodromy(propagate_period(params, n_steps), params.omega);
}

LabelDecision decide_labels(const StroboscopicState& previous, const StroboscopicState& current) {
    if (previous.n_steps != current.n_steps || previous.omega != current.omega) {
        throw ConfigError("label continuation needs solutions on identical time grids");
    }
    double overlap[2][2];
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            overlap[a][b] = std::norm(previous.states[a].dot(current.states[b]));
        }
    }
    const bool cross = overlap[0][1] + overlap[1][0] > overlap[0][0] + overlap[1][1];
    LabelDecision d;
    if (current.degenerate) {
        d.permute = cross;
    } else {
        d.swapped = cross;
    }
    return d;
}

void swap_labels(FloquetSolution& solution) {
    std::swap(solution.quasienergies[0], solution.quasienergies[1]);
    std::swap(solution.modes[0], solution.modes[1]);
}

void swap_labels(StroboscopicState& state) {
    std::swap(state.quasienergies[0], state.quasienergies[1]);
    std::swap(state.states[0], state.states[1]);
}

LabelContinuation continue_labels(const FloquetSolution& previous, const FloquetSolution& current) {
    if (previous.n_steps != current.n_steps) {
        throw ConfigError("label continuation needs solutions on identical time grids");
    }
    const LabelDecision d = decide_labels(previous.stroboscopic(), current.stroboscopic());
    LabelContinuation out{current, d.swapped};
    if (d.permute) swap_labels(out.solution);
    return out;
}

} // namespace fsb
