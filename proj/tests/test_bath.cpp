#include <doctest.h>

#include <cmath>
#include <random>

#include "fsb/bath.hpp"
#include "fsb/bessel.hpp"
#include "fsb/errors.hpp"

using namespace fsb;

namespace {

using cd = std::complex<double>;

SystemParams drive(double z, double theta, double omega = 40.0) {
    SystemParams p;
    p.omega = omega;
    p.h_z1 = z * omega;
    p.theta = theta;
    return p;
}

SystemParams random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    SystemParams p = drive(6.0 * u(rng), kPi * u(rng), 10.0 + 70.0 * u(rng));
    p.h_z0 = 2.0 * u(rng) - 1.0;
    return p;
}

} // namespace

TEST_CASE("spectral density examples") {
    BathParams b;
    CHECK(spectral_density(0.0, b) == 0.0);
    CHECK(spectral_density(b.omega_c, b) == doctest::Approx(b.gamma / (2 * b.omega_c)));
    CHECK(spectral_density(-b.omega_c, b) == doctest::Approx(-b.gamma / (2 * b.omega_c)));
    for (double w : {0.1, 1.0, 7.0, 50.0}) CHECK(spectral_density(-w, b) == -spectral_density(w, b));
}

TEST_CASE("Bose occupation examples") {
    const double t = 3.0;
    CHECK(bose_occupation(t * std::log(2.0), t) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(bose_occupation(1e4, t) < 1e-300);
    CHECK(bose_occupation(-1.0, t) < 0.0);
    CHECK_THROWS_AS(bose_occupation(0.0, t), DomainError);

    BathParams b;
    const double lhs = spectral_density(-1.0, b) * (bose_occupation(-1.0, 3.0) + 1.0);
    const double rhs = spectral_density(1.0, b) * bose_occupation(1.0, 3.0);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
    CHECK(emission_prefactor(-1.0, b) == doctest::Approx(rhs).epsilon(1e-14));
}

TEST_CASE("emission prefactor has the finite zero-frequency limit") {
    BathParams b;
    const double limit = b.gamma * b.temperature / (b.omega_c * b.omega_c);
    CHECK(emission_prefactor(0.0, b) == doctest::Approx(limit).epsilon(1e-15));
    CHECK(emission_prefactor(1e-9, b) == doctest::Approx(limit).epsilon(1e-8));
    CHECK(emission_prefactor(-1e-9, b) == doctest::Approx(limit).epsilon(1e-8));
}

TEST_CASE("static coefficients at theta = pi/2") {
    const auto sol = solve_floquet(drive(0.0, kPi / 2));
    const auto t = fourier_coefficients(sol, kPi / 2);
    CHECK(std::abs(t.coefficient(0, 0, 0) - cd(-1.0)) < 1e-12);
    CHECK(std::abs(t.coefficient(0, 1, 1) - cd(1.0)) < 1e-12);
    for (int n = -3; n <= 3; ++n) {
        for (int l = 0; l < 2; ++l) {
            for (int m = 0; m < 2; ++m) {
                if (n == 0 && l == m) continue;
                CHECK(std::abs(t.coefficient(n, l, m)) < 1e-12);
            }
        }
    }
}

TEST_CASE("red side band dominates below the first zero at theta = pi/2") {
    const double z1 = bessel_root(1);
    for (double z : {0.3, 0.8, 1.4, 2.0, 2.3}) {
        const auto sol = solve_floquet(drive(z, kPi / 2));
        const auto t = fourier_coefficients(sol, kPi / 2);
        const double up = std::norm(t.coefficient(-1, 1, 0));
        const double down = std::norm(t.coefficient(-1, 0, 1));
        CHECK(up > down);
        // J_1-like envelope
        CHECK(0.5 * (up + down) == doctest::Approx(std::pow(bessel_j(1, z), 2)).epsilon(0.05));
    }
    (void)z1;
}

TEST_CASE("generalized parity: a^(0)_10 vanishes at theta = pi/2, h_z0 = 0") {
    for (int i = 0; i <= 60; ++i) {
        const auto sol = solve_floquet(drive(0.1 * i, kPi / 2));
        CHECK(std::abs(fourier_coefficients(sol, kPi / 2).coefficient(0, 1, 0)) < 1e-8);
    }
}

TEST_CASE("conjugate symmetry, kernel vs reference, theta linearity") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 10; ++k) {
        const auto p = random_point(rng);
        const auto sol = solve_floquet(p);
        const auto t = fourier_coefficients(sol, p.theta, 5);
        const auto r = reference::fourier_coefficients(sol, p.theta, 5);
        const auto tx = fourier_coefficients(sol, kPi / 2, 5);
        const auto tz = fourier_coefficients(sol, 0.0, 5);
        const auto tq = fourier_coefficients(sol, kPi / 4, 5);
        for (int n = -5; n <= 5; ++n) {
            for (int l = 0; l < 2; ++l) {
                for (int m = 0; m < 2; ++m) {
                    CHECK(std::abs(t.coefficient(n, l, m) - std::conj(t.coefficient(-n, m, l))) <= 1e-10);
                    CHECK(std::abs(t.coefficient(n, l, m) - r.coefficient(n, l, m)) <= 1e-12);
                    const cd combo = (tx.coefficient(n, l, m) + tz.coefficient(n, l, m)) / std::sqrt(2.0);
                    CHECK(std::abs(tq.coefficient(n, l, m) - combo) <= 1e-10);
                }
            }
        }
    }
}

TEST_CASE("Parseval over the full DFT window") {
    std::mt19937_64 rng(4);
    for (int k = 0; k < 3; ++k) {
        const auto p = random_point(rng);
        const std::size_t n = 256;
        const auto sol = solve_floquet(p, n);
        const auto series = matrix_element_series(sol, p.theta);
        for (int l = 0; l < 2; ++l) {
            for (int m = 0; m < 2; ++m) {
                double mean = 0.0;
                for (const auto& v : series[l][m]) mean += std::norm(v);
                mean /= static_cast<double>(n);
                double total = 0.0;
                for (std::size_t f = 0; f < n; ++f) {
                    cd acc = 0.0;
                    for (std::size_t j = 0; j < n; ++j) {
                        acc += series[l][m][j] * std::polar(1.0, -2.0 * kPi * static_cast<double>((f * j) % n) / n);
                    }
                    total += std::norm(acc / static_cast<double>(n));
                }
                CHECK(std::abs(total - mean) <= 1e-10);
            }
        }
    }
}

TEST_CASE("Fourier window limits") {
    const auto sol = solve_floquet(drive(1.0, 1.0), 256);
    CHECK_NOTHROW(fourier_coefficients(sol, 1.0, 64));
    CHECK_THROWS_AS(fourier_coefficients(sol, 1.0, 65), ConfigError);
    CHECK_THROWS_AS(reference::fourier_coefficients(sol, 1.0, 65), ConfigError);
    const auto t = fourier_coefficients(sol, 1.0, 2);
    CHECK_THROWS_AS(t.coefficient(3, 0, 0), DomainError);
    CHECK_THROWS_AS(t.rate(0, 0, 0), InvariantError);
}

TEST_CASE("static rates: only n = 0 channels, ratio exp(1/3)") {
    const auto sol = solve_floquet(drive(0.0, kPi / 4));
    const auto t = rates(fourier_coefficients(sol, kPi / 4), BathParams{}, sol);
    for (int n = -3; n <= 3; ++n) {
        if (n == 0) continue;
        for (int l = 0; l < 2; ++l) {
            for (int m = 0; m < 2; ++m) CHECK(t.rate(n, l, m) < 1e-20);
        }
    }
    CHECK(t.rate(0, 0, 1) / t.rate(0, 1, 0) == doctest::Approx(std::exp(1.0 / 3.0)).epsilon(1e-10));
}

TEST_CASE("detailed balance in every channel, non-negative rates, linear in gamma") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 20; ++k) {
        const auto p = random_point(rng);
        BathParams b;
        b.temperature = 0.5 + 5.0 * u(rng);
        b.omega_c = 1.0 + 20.0 * u(rng);
        const auto sol = solve_floquet(p);
        const auto coeffs = fourier_coefficients(sol, p.theta);
        const auto t = rates(coeffs, b, sol);
        BathParams b2 = b;
        b2.gamma *= 2.0;
        const auto t2 = rates(coeffs, b2, sol);
        for (int n = -3; n <= 3; ++n) {
            for (int l = 0; l < 2; ++l) {
                for (int m = 0; m < 2; ++m) {
                    const double a = t.rate(n, l, m);
                    CHECK(std::isfinite(a));
                    CHECK(a >= 0.0);
                    CHECK(t2.rate(n, l, m) == 2.0 * a);
                    const double back = t.rate(-n, m, l) * std::exp(t.energy_gap(n, l, m) / b.temperature);
                    if (a > 0.0 || back > 0.0) CHECK(std::abs(a - back) <= 1e-8 * std::max(a, back));
                }
            }
        }
    }
}

TEST_CASE("n > 0 channels are negligible at omega = 40, T = 3") {
    const auto p = drive(1.0, kPi / 2);
    const auto sol = solve_floquet(p);
    const auto t = rates(fourier_coefficients(sol, p.theta), BathParams{}, sol);
    for (int l = 0; l < 2; ++l) {
        for (int m = 0; m < 2; ++m) {
            if (l == m) continue;
            double up = 0.0, all = 0.0;
            for (int n = -3; n <= 3; ++n) {
                all += t.rate(n, l, m);
                if (n > 0) up += t.rate(n, l, m);
            }
            CHECK(up / all < 1e-4);
            CHECK(all == doctest::Approx(t.total(l, m)).epsilon(1e-14));
        }
    }
}
