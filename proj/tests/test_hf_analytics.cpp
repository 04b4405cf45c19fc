#include <doctest.h>

#include <cmath>

#include "fsb/bath.hpp"
#include "fsb/bessel.hpp"
#include "fsb/errors.hpp"
#include "fsb/hf_analytics.hpp"

using namespace fsb;

namespace {

SystemParams drive(double z, double theta, double omega = 40.0) {
    SystemParams p;
    p.omega = omega;
    p.h_z1 = z * omega;
    p.theta = theta;
    return p;
}

} // namespace

TEST_CASE("S coefficients at theta = pi/2, n = 0") {
    for (double z : {0.0, 0.5, 1.7, 3.2, 5.9}) {
        const auto c = s_coefficients(drive(z, kPi / 2), 0);
        CHECK(c.raw_x == doctest::Approx(bessel_j(0, z)).epsilon(1e-14));
        CHECK(std::abs(c.raw_y) < 1e-15);
        // the sigma_z part is the basis tilt; it vanishes along the Floquet axis
        CHECK(std::abs(c.s_z) < 1e-15);
        CHECK(std::abs(c.s_y) < 1e-15);
    }
}

TEST_CASE("S coefficients without drive") {
    for (double theta : {0.0, 0.4, kPi / 2, 2.5}) {
        const auto c0 = s_coefficients(drive(0.0, theta), 0);
        CHECK(c0.s_x == doctest::Approx(std::sin(theta)));
        CHECK(c0.s_z == doctest::Approx(std::cos(theta)));
        CHECK(c0.s_y == 0.0);
        CHECK(c0.basis_angle == 0.0);
        for (int n : {-3, -2, -1, 1, 2, 3}) {
            const auto c = s_coefficients(drive(0.0, theta), n);
            CHECK(c.s_x == 0.0);
            CHECK(c.s_y == 0.0);
            CHECK(c.s_z == 0.0);
        }
    }
}

TEST_CASE("n = -1 at theta = pi/2 is dominated by S_y = J_{-1}") {
    for (double z : {0.5, 1.0, 2.0, 4.5}) {
        const auto c = s_coefficients(drive(z, kPi / 2), -1);
        CHECK(c.s_y == doctest::Approx(bessel_j(-1, z)).epsilon(1e-14));
        CHECK(std::abs(c.s_z) <= 2.0 / 40.0);
        CHECK(std::abs(c.s_y) > 5.0 * std::abs(c.s_z));
        CHECK(c.alpha_x != 0.0);
    }
}

TEST_CASE("parity selection rules") {
    for (int n = -4; n <= 4; ++n) {
        const auto c = s_coefficients(drive(1.3, kPi / 2), n);
        // cos(pi/2) is 6e-17 in floating point
        if (n % 2 == 0) CHECK(std::abs(c.raw_y) < 1e-15); // g_x term only for odd n
        else CHECK(std::abs(c.raw_x) < 1e-15);            // g_x term only for even n
        const auto d = s_coefficients(drive(1.3, 0.0), n);
        if (n % 2 != 0) CHECK(d.raw_y == 0.0);            // g_z term only for even n
    }
}

TEST_CASE("l series truncation") {
    for (double z : {0.5, 3.0, 6.0}) {
        const auto c = s_coefficients(drive(z, 1.0), -1);
        REQUIRE(!c.l.empty());
        CHECK(c.l.size() <= 40);
        const int next = static_cast<int>(c.l.size()) + 1;
        CHECK(std::abs(bessel_j(next, z) / (40.0 * next)) < 1e-14);
        CHECK(c.l[0] == doctest::Approx(bessel_j(1, z) / 40.0));
    }
}

TEST_CASE("high-frequency warning flag") {
    CHECK(!s_coefficients(drive(1.0, 1.0, 40.0), 0).outside_high_frequency_regime);
    CHECK(s_coefficients(drive(1.0, 1.0, 3.0), 0).outside_high_frequency_regime);
}

TEST_CASE("conjugate symmetry of the analytic table") {
    for (double theta : {0.0, 0.7, kPi / 2}) {
        const auto p = drive(2.1, theta);
        for (int n = 0; n <= 3; ++n) {
            const Mat2 a = analytic_transition_elements(p, n);
            const Mat2 b = analytic_transition_elements(p, -n);
            CHECK((a - b.adjoint()).cwiseAbs().maxCoeff() <= 1e-14);
        }
    }
}

TEST_CASE("sigma_x table matches the label-ordered elements") {
    for (double z : {0.8, 3.0, 4.9}) {
        const auto p = drive(z, kPi / 4);
        for (int n : {0, -1}) {
            const auto c = s_coefficients(p, n);
            Eigen::Matrix2d t = sigma_x_table(c);
            if (c.orientation < 0) {
                t = (Eigen::Matrix2d() << t(1, 1), t(1, 0), t(0, 1), t(0, 0)).finished();
            }
            const Mat2 a = analytic_transition_elements(p, n);
            for (int l = 0; l < 2; ++l) {
                for (int m = 0; m < 2; ++m) CHECK(std::abs(a(l, m)) == doctest::Approx(std::abs(t(l, m))).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("static limit matches the numerics exactly") {
    const auto p = drive(0.0, kPi / 2);
    const Mat2 a = analytic_transition_elements(p, 0);
    const auto sol = solve_floquet(p);
    const auto t = fourier_coefficients(sol, p.theta);
    CHECK(std::abs(a(0, 0) + 1.0) < 1e-14);
    CHECK(std::abs(a(1, 1) - 1.0) < 1e-14);
    for (int l = 0; l < 2; ++l) {
        for (int m = 0; m < 2; ++m) CHECK(std::abs(a(l, m) - t.coefficient(0, l, m)) < 1e-12);
    }
}

TEST_CASE("analytic vs numeric coefficients at omega = 40, n = -1, theta = pi/2") {
    double dev = 0.0;
    for (int i = 0; i <= 60; ++i) {
        const auto p = drive(0.1 * i, kPi / 2);
        const auto sol = solve_floquet(p);
        const auto t = fourier_coefficients(sol, p.theta);
        const Mat2 a = analytic_transition_elements(p, -1);
        for (int l = 0; l < 2; ++l) {
            for (int m = 0; m < 2; ++m) dev = std::max(dev, std::abs(a(l, m) - t.coefficient(-1, l, m)));
        }
    }
    CHECK(dev <= 5e-3);
}

TEST_CASE("a^(0) is Hermitian in structure, a^(-1) is not") {
    const auto p = drive(1.0, kPi / 4);
    const auto sol = solve_floquet(p);
    const auto t = fourier_coefficients(sol, p.theta);
    CHECK(std::abs(t.coefficient(0, 0, 1) - std::conj(t.coefficient(0, 1, 0))) < 1e-12);
    CHECK(std::abs(std::abs(t.coefficient(-1, 0, 1)) - std::abs(t.coefficient(-1, 1, 0))) > 1e-3);
}

TEST_CASE("effective Hamiltonian") {
    const auto h0 = effective_hamiltonian(drive(0.0, 1.0));
    CHECK(h0.quasienergies[0] == doctest::Approx(-0.5));
    CHECK(h0.quasienergies[1] == doctest::Approx(0.5));
    CHECK(h0.coeff_z == 0.0);

    const auto h1 = effective_hamiltonian(drive(bessel_root(1), 1.0));
    CHECK(std::abs(h1.coeff_x) < 1e-15);
    CHECK(h1.quasienergies[1] - h1.quasienergies[0] == doctest::Approx(2.0 * std::abs(h1.coeff_z)));
}

TEST_CASE("effective Hamiltonian predicts the engine quasienergies") {
    for (double h_z0 : {0.0, 0.3}) {
        double dev = 0.0;
        for (int i = 0; i <= 60; ++i) {
            auto p = drive(0.1 * i, 1.0);
            p.h_z0 = h_z0;
            const auto st = stroboscopic_states(propagate_monodromy(p), p.omega, kDefaultSteps);
            const auto h = effective_hamiltonian(p);
            for (int l = 0; l < 2; ++l) dev = std::max(dev, std::abs(st.quasienergies[l] - h.quasienergies[l]));
        }
        CHECK(dev <= 0.01);
        CHECK(dev <= 2e-3); // first-order residual is O(h_x^3/omega^2)
    }
}

TEST_CASE("analytic Floquet states agree with the engine") {
    for (double z : {0.6, 1.9, 3.1, 4.4}) {
        auto p = drive(z, 1.0);
        p.h_z0 = 0.2;
        const auto num = stroboscopic_states(propagate_monodromy(p), p.omega, kDefaultSteps);
        const auto an = analytic_floquet_states(p);
        for (int l = 0; l < 2; ++l) CHECK(std::abs(num.states[l].dot(an.states[l])) > 0.999);
    }
}

TEST_CASE("ratio jump prediction") {
    const double z1 = bessel_root(1);
    const auto j40 = ratio_jump_prediction(drive(z1 + 0.05, kPi / 4, 40.0));
    const auto j80 = ratio_jump_prediction(drive(z1 - 0.05, kPi / 4, 80.0));
    CHECK(j40.root_index == 1);
    CHECK(j40.root == doctest::Approx(z1));
    CHECK(j40.ratio_right == doctest::Approx(1.0 / j40.ratio_left));
    // "about 10%": the first-order prediction is of that size
    CHECK(j40.jump > 0.05);
    CHECK(j40.jump < 0.2);
    CHECK(j80.jump / j40.jump == doctest::Approx(0.5).epsilon(0.15));
    const auto j_inf = ratio_jump_prediction(drive(z1, kPi / 4, 1e6));
    CHECK(j_inf.jump < 1e-4);

    const auto j2 = ratio_jump_prediction(drive(bessel_root(2), kPi / 4, 40.0));
    CHECK(j2.root_index == 2);
    CHECK(j2.ratio_left > 1.0); // J_0 < 0 below z_2

    try {
        ratio_jump_prediction(drive(1.0, kPi / 4));
        FAIL("expected a domain error");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("z_1") != std::string::npos);
    }
}
