// hf_analytics.hpp — High-frequency (first order in 1/omega) Floquet states and transition coefficients

#pragma once

#include <array>
#include <vector>

#include "fsb/floquet.hpp"
#include "fsb/model.hpp"

namespace fsb {

// Fourier coefficient of the coupling operator in the rotating frame,
// X^{(n)} = raw_x sigma_x + i raw_y sigma_y + raw_z sigma_z, and the same
// operator expressed along the axis of the effective Hamiltonian (s_*).
struct HfCoefficients {
    int order{0};
    double s_x{0.0};
    double s_y{0.0};
    double s_z{0.0};
    double raw_x{0.0};
    double raw_y{0.0};
    double raw_z{0.0};
    std::vector<double> l;  // l[m-1] = (h_x / (m omega)) J_m(h_z1/omega), m = 1..M
    double alpha_x{0.0};    // sum_m l_m [J_{n+m} - (-1)^m J_{n-m}]
    double g_x{0.0};        // sin(theta)
    double g_z{0.0};        // cos(theta)
    double basis_angle{0.0}; // tilt of the effective field from x towards z
    int orientation{1};     // sign of the effective sigma_x coefficient; label 0 = |-orientation>
    bool outside_high_frequency_regime{false}; // omega < 5 h_x
};

HfCoefficients s_coefficients(const SystemParams& params, int n);

// H_F ~ coeff_x sigma_x + coeff_z sigma_z, stroboscopic gauge at t = 0.
struct EffectiveHamiltonian {
    double coeff_x{0.0};
    double coeff_z{0.0};
    std::array<double, 2> quasienergies{}; // ascending, folded

    Mat2 matrix() const;
    double basis_angle() const;
    int orientation() const { return coeff_x >= 0.0 ? 1 : -1; }
};

EffectiveHamiltonian effective_hamiltonian(const SystemParams& params);

/// Eigenstates of the effective Hamiltonian in the lab frame at t = 0,
/// quasienergy-ascending, with the standard phase gauge.
StroboscopicState analytic_floquet_states(const SystemParams& params);

/// a^{(n)}_{lambda<-mu} predicted by the high-frequency expansion, label-ordered.
Mat2 analytic_transition_elements(const SystemParams& params, int n);

/// Matrix elements of X^{(n)} between |-1>, |+1> along the effective axis:
/// [[-s_x, s_y + s_z], [-s_y + s_z, s_x]].
Eigen::Matrix2d sigma_x_table(const HfCoefficients& c);

struct RatioJumpPrediction {
    int root_index{0};
    double root{0.0};        // z_k
    double ratio_left{0.0};  // I_r / I_b just below h_z1 = z_k omega
    double ratio_right{0.0}; // just above
    double jump{0.0};        // |ratio_left - ratio_right|
    double alpha_x{0.0};     // alpha at n = -1 on the root
};

/// Predicted discontinuity of I_r / I_b when h_z1/omega crosses a zero of J_0.
/// Throws DomainError unless h_z1/omega is within 0.1 of a zero.
RatioJumpPrediction ratio_jump_prediction(const SystemParams& params);

} // namespace fsb
