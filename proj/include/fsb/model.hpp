// model.hpp — Driven two-level system, Ohmic bath and Pauli algebra

#pragma once

#include <cstddef>
#include <numbers>

#include <Eigen/Dense>

namespace fsb {

using Mat2 = Eigen::Matrix2cd;
using Vec2 = Eigen::Vector2cd;
using SpinOperator = Mat2;

inline constexpr double kPi = std::numbers::pi;

// Energies are in units of h_x by default; hbar = k_B = 1.
struct SystemParams {
    double h_x{1.0};    // tunneling amplitude
    double h_z0{0.0};   // static bias
    double h_z1{0.0};   // drive amplitude
    double omega{40.0}; // drive angular frequency
    double theta{kPi / 2}; // coupling angle of sigma_theta

    double period() const { return 2.0 * kPi / omega; }
    void validate() const;
};

struct BathParams {
    double gamma{0.01};      // coupling strength
    double omega_c{10.0};    // cutoff frequency
    double temperature{3.0};

    void validate() const;
};

namespace pauli {
Mat2 identity();
Mat2 x();
Mat2 y();
Mat2 z();
} // namespace pauli

/// H(t) = (h_x/2) sigma_x + (h_z(t)/2) sigma_z, with h_z(t) = h_z0 + h_z1 cos(omega t).
SpinOperator hamiltonian_at(const SystemParams& params, double t);

/// Hamiltonian at t = (j + frac) * period / n_steps. The index j is reduced
/// modulo n_steps first, so H on grid points is bit-identical across periods.
SpinOperator hamiltonian_on_grid(const SystemParams& params,
                                 std::size_t j,
                                 std::size_t n_steps,
                                 double frac = 0.0);

/// sigma_theta = sin(theta) sigma_x + cos(theta) sigma_z. Any theta is accepted.
SpinOperator coupling_operator(double theta);

/// Largest absolute entry of A - A^dagger.
double hermiticity_defect(const Mat2& a);

} // namespace fsb
