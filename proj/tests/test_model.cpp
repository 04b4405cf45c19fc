#include <doctest.h>

#include <cmath>
#include <random>

#include "fsb/errors.hpp"
#include "fsb/model.hpp"

using namespace fsb;

namespace {

double max_abs(const Mat2& m) { return m.cwiseAbs().maxCoeff(); }

} // namespace

TEST_CASE("hamiltonian_at examples") {
    SystemParams p;
    p.h_z1 = 0.0;
    CHECK(max_abs(hamiltonian_at(p, 0.0) - 0.5 * pauli::x()) == 0.0);

    p.h_z1 = 2.0;
    p.omega = 40.0;
    CHECK(max_abs(hamiltonian_at(p, 0.0) - (0.5 * pauli::x() + pauli::z())) < 1e-15);
    CHECK(max_abs(hamiltonian_at(p, p.period() / 4) - 0.5 * pauli::x()) < 1e-15);
}

TEST_CASE("hamiltonian is Hermitian and periodic on the grid") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int k = 0; k < 50; ++k) {
        SystemParams p;
        p.h_z0 = u(rng);
        p.h_z1 = 20.0 * u(rng);
        p.omega = 10.0 + std::abs(10.0 * u(rng));
        const double t = std::abs(u(rng));
        CHECK(hermiticity_defect(hamiltonian_at(p, t)) <= 1e-14);

        const std::size_t n = 2048;
        const std::size_t j = static_cast<std::size_t>(std::abs(u(rng)) * 600);
        CHECK(hamiltonian_on_grid(p, j, n) == hamiltonian_on_grid(p, j + n, n));
        CHECK(hamiltonian_on_grid(p, j, n, 0.3) == hamiltonian_on_grid(p, j + 3 * n, n, 0.3));
    }
}

TEST_CASE("coupling operator examples") {
    CHECK(max_abs(coupling_operator(0.0) - pauli::z()) < 1e-16);
    CHECK(max_abs(coupling_operator(kPi / 2) - pauli::x()) < 1e-16);
    CHECK(max_abs(coupling_operator(kPi / 4) - (pauli::x() + pauli::z()) / std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("coupling operator squares to identity with eigenvalues +-1 for any angle") {
    for (double theta : {-7.0, -1.0, 0.0, 0.3, 1.2, kPi, 4.0, 11.0}) {
        const Mat2 s = coupling_operator(theta);
        CHECK(hermiticity_defect(s) <= 1e-12);
        CHECK(std::abs(s.trace()) < 1e-15);
        CHECK(std::abs(s.determinant() + 1.0) < 1e-15);
        CHECK(max_abs(s * s - pauli::identity()) < 1e-15);
    }
}

TEST_CASE("Pauli algebra") {
    const std::complex<double> i(0.0, 1.0);
    CHECK(max_abs(pauli::x() * pauli::y() - i * pauli::z()) == 0.0);
    CHECK(max_abs(pauli::y() * pauli::z() - i * pauli::x()) == 0.0);
    CHECK(max_abs(pauli::z() * pauli::x() - i * pauli::y()) == 0.0);
}

TEST_CASE("parameter validation") {
    SystemParams p;
    CHECK_NOTHROW(p.validate());
    CHECK(p.period() == doctest::Approx(2.0 * kPi / 40.0));
    p.omega = 0.0;
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p = SystemParams{};
    p.h_x = -1.0;
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p = SystemParams{};
    p.h_z1 = std::nan("");
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p = SystemParams{};
    p.theta = 5.0; // outside [0, pi] is accepted
    CHECK_NOTHROW(p.validate());

    BathParams b;
    CHECK_NOTHROW(b.validate());
    for (double BathParams::*field : {&BathParams::gamma, &BathParams::omega_c, &BathParams::temperature}) {
        BathParams bad;
        bad.*field = 0.0;
        CHECK_THROWS_AS(bad.validate(), ConfigError);
    }
}
