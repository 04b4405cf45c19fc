#include "fsb/hf_analytics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include <fmt/format.h>

#include "fsb/bessel.hpp"
#include "fsb/errors.hpp"

namespace fsb {

namespace {

using cd = std::complex<double>;

constexpr double kTailCutoff = 1e-14;
constexpr int kMaxHarmonic = 190;

// sum over odd m >= 1 of J_m(z)/m
double odd_bessel_sum(const std::vector<double>& j) {
    double sum = 0.0;
    for (std::size_t m = 1; m < j.size(); m += 2) sum += j[m] / static_cast<double>(m);
    return sum;
}

std::vector<double> bessel_orders(double z) {
    const int n = std::min(kMaxHarmonic + 8, static_cast<int>(std::abs(z)) + 60);
    return bessel_j_table(n, z);
}

double j_signed(const std::vector<double>& j, int n) {
    const int a = std::abs(n);
    if (a >= static_cast<int>(j.size())) return 0.0;
    const double v = j[static_cast<std::size_t>(a)];
    return (n < 0 && a % 2 == 1) ? -v : v;
}

} // namespace

Mat2 EffectiveHamiltonian::matrix() const {
    return coeff_x * pauli::x() + coeff_z * pauli::z();
}

double EffectiveHamiltonian::basis_angle() const {
    if (coeff_x == 0.0) {
        if (coeff_z == 0.0) return 0.0;
        return coeff_z > 0.0 ? kPi / 2 : -kPi / 2;
    }
    return std::atan(coeff_z / coeff_x);
}

EffectiveHamiltonian effective_hamiltonian(const SystemParams& params) {
    params.validate();
    const double z = params.h_z1 / params.omega;
    const auto j = bessel_orders(z);
    const double odd = odd_bessel_sum(j);

    EffectiveHamiltonian h;
    h.coeff_x = 0.5 * params.h_x * j[0] + params.h_x * params.h_z0 / params.omega * odd;
    h.coeff_z = 0.5 * params.h_z0 - params.h_x * params.h_x / params.omega * j[0] * odd;
    const double b = std::hypot(h.coeff_x, h.coeff_z);
    double lo = fold_quasienergy(-b, params.omega);
    double hi = fold_quasienergy(b, params.omega);
    if (lo > hi) std::swap(lo, hi);
    h.quasienergies = {lo, hi};
    return h;
}

HfCoefficients s_coefficients(const SystemParams& params, int n) {
    params.validate();
    if (std::abs(n) > kMaxHarmonic) {
        throw DomainError("s_coefficients order " + std::to_string(n) + " out of range");
    }
    const double z = params.h_z1 / params.omega;
    const auto j = bessel_orders(z);

    HfCoefficients c;
    c.order = n;
    c.g_x = std::sin(params.theta);
    c.g_z = std::cos(params.theta);
    c.outside_high_frequency_regime = params.omega < 5.0 * params.h_x;

    const double r = params.h_x / params.omega;
    for (int m = 1; m <= kMaxHarmonic; ++m) {
        const double lm = r * j_signed(j, m) / m;
        if (m > std::abs(z) + 1.0 && std::abs(lm) < kTailCutoff) break;
        c.l.push_back(lm);
    }
    auto l_at = [&](int m) {
        return m >= 1 && m <= static_cast<int>(c.l.size()) ? c.l[static_cast<std::size_t>(m - 1)] : 0.0;
    };

    double odd_l = 0.0;
    for (std::size_t m = 1; m <= c.l.size(); m += 2) odd_l += c.l[m - 1];

    for (int m = 1; m <= static_cast<int>(c.l.size()); ++m) {
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        c.alpha_x += l_at(m) * (j_signed(j, n + m) - sign * j_signed(j, n - m));
    }

    const double jn = j_signed(j, n);
    const bool even = (n % 2 == 0);
    const int a = std::abs(n);
    const double sgn = (n > 0) - (n < 0);
    if (even) {
        c.raw_x = c.g_x * jn + (n == 0 ? 2.0 * c.g_z * odd_l : 0.0);
        c.raw_y = -c.g_z * sgn * l_at(a);
        c.raw_z = (n == 0 ? c.g_z : 0.0) - 2.0 * c.g_x * jn * odd_l;
    } else {
        c.raw_x = -c.g_z * l_at(a);
        c.raw_y = c.g_x * jn;
        c.raw_z = c.g_x * c.alpha_x;
    }

    const auto h = effective_hamiltonian(params);
    c.basis_angle = h.basis_angle();
    c.orientation = h.orientation();
    const double cs = std::cos(c.basis_angle);
    const double sn = std::sin(c.basis_angle);
    c.s_x = c.raw_x * cs + c.raw_z * sn;
    c.s_y = c.raw_y;
    c.s_z = -c.raw_x * sn + c.raw_z * cs;
    return c;
}

StroboscopicState analytic_floquet_states(const SystemParams& params) {
    const auto h = effective_hamiltonian(params);
    StroboscopicState out;
    out.omega = params.omega;
    out.quasienergies = h.quasienergies;

    double distance = h.quasienergies[1] - h.quasienergies[0];
    distance = std::min(distance, params.omega - distance);
    out.degenerate = distance < kDegeneracyTolerance * params.omega;

    // |+-> along n = (cos chi, 0, sin chi); label 0 is the lower state of H_F.
    const double chi = h.basis_angle();
    const int s = h.orientation();
    auto along = [&](int sign) {
        const double half = 0.5 * (kPi / 2 - chi); // polar angle / 2
        Vec2 v;
        if (sign > 0) v << std::cos(half), std::sin(half);
        else v << -std::sin(half), std::cos(half);
        return v;
    };
    if (out.degenerate) {
        const double r = 1.0 / std::sqrt(2.0);
        out.states[0] << r, -r;
        out.states[1] << r, r;
    } else {
        out.states[0] = along(-s);
        out.states[1] = along(s);
        // Folding can reorder the pair when |H_F| exceeds omega/2.
        if (fold_quasienergy(-std::hypot(h.coeff_x, h.coeff_z), params.omega) > out.quasienergies[0]) {
            std::swap(out.states[0], out.states[1]);
        }
    }
    for (auto& v : out.states) fix_phase(v);
    return out;
}

Mat2 analytic_transition_elements(const SystemParams& params, int n) {
    const auto c = s_coefficients(params, n);
    const Mat2 x = c.raw_x * pauli::x() + cd(0.0, c.raw_y) * pauli::y() + c.raw_z * pauli::z();
    const auto states = analytic_floquet_states(params);
    Mat2 a;
    for (int l = 0; l < 2; ++l) {
        for (int m = 0; m < 2; ++m) a(l, m) = states.states[l].dot(x * states.states[m]);
    }
    return a;
}

Eigen::Matrix2d sigma_x_table(const HfCoefficients& c) {
    Eigen::Matrix2d t;
    t << -c.s_x, c.s_y + c.s_z,
         -c.s_y + c.s_z, c.s_x;
    return t;
}

RatioJumpPrediction ratio_jump_prediction(const SystemParams& params) {
    params.validate();
    const double z = params.h_z1 / params.omega;
    int best = 1;
    double best_root = bessel_root(1);
    for (int k = 2; k < 200; ++k) {
        const double root = bessel_root(k);
        if (std::abs(root - z) < std::abs(best_root - z)) {
            best = k;
            best_root = root;
        }
        if (root > z + 4.0) break;
    }
    if (std::abs(best_root - z) > 0.1) {
        throw DomainError(fmt::format("h_z1/omega = {:.6g} is not within 0.1 of a zero of J_0; "
                                      "nearest is z_{} = {:.10g}",
                                      z, best, best_root));
    }

    SystemParams at_root = params;
    at_root.h_z1 = best_root * params.omega;
    const auto c = s_coefficients(at_root, -1);

    const double q = std::pow((c.s_y - c.s_z) / (c.s_y + c.s_z), 2);
    // J_0 is positive below z_1, negative below z_2, ...
    const bool positive_left = (best % 2 == 1);

    RatioJumpPrediction out;
    out.root_index = best;
    out.root = best_root;
    out.ratio_left = positive_left ? q : 1.0 / q;
    out.ratio_right = 1.0 / out.ratio_left;
    out.jump = std::abs(out.ratio_left - out.ratio_right);
    out.alpha_x = c.alpha_x;
    return out;
}

} // namespace fsb
