#include "fsb/model.hpp"

#include <cmath>
#include <string>

#include "fsb/errors.hpp"

namespace fsb {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw ConfigError(what);
}

} // namespace

void SystemParams::validate() const {
    require(std::isfinite(h_x) && h_x > 0.0, "system.h_x must be finite and > 0");
    require(std::isfinite(omega) && omega > 0.0, "system.omega must be finite and > 0");
    require(std::isfinite(h_z0), "system.h_z0 must be finite");
    require(std::isfinite(h_z1), "system.h_z1 must be finite");
    require(std::isfinite(theta), "system.theta must be finite");
}

void BathParams::validate() const {
    require(std::isfinite(gamma) && gamma > 0.0, "bath.gamma must be finite and > 0");
    require(std::isfinite(omega_c) && omega_c > 0.0, "bath.omega_c must be finite and > 0");
    require(std::isfinite(temperature) && temperature > 0.0,
            "bath.temperature must be finite and > 0");
}

namespace pauli {

Mat2 identity() { return Mat2::Identity(); }

Mat2 x() {
    Mat2 m;
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

Mat2 y() {
    using namespace std::complex_literals;
    Mat2 m;
    m << 0.0, -1i, 1i, 0.0;
    return m;
}

Mat2 z() {
    Mat2 m;
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

} // namespace pauli

namespace {

Mat2 two_level(double h_x, double h_z) {
    Mat2 m;
    m << 0.5 * h_z, 0.5 * h_x, 0.5 * h_x, -0.5 * h_z;
    return m;
}

} // namespace

SpinOperator hamiltonian_at(const SystemParams& params, double t) {
    const double h_z = params.h_z0 + params.h_z1 * std::cos(params.omega * t);
    return two_level(params.h_x, h_z);
}

SpinOperator hamiltonian_on_grid(const SystemParams& params,
                                 std::size_t j,
                                 std::size_t n_steps,
                                 double frac) {
    const double phase =
        2.0 * kPi * (static_cast<double>(j % n_steps) + frac) / static_cast<double>(n_steps);
    const double h_z = params.h_z0 + params.h_z1 * std::cos(phase);
    return two_level(params.h_x, h_z);
}

SpinOperator coupling_operator(double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    Mat2 m;
    m << c, s, s, -c;
    return m;
}

double hermiticity_defect(const Mat2& a) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

} // namespace fsb
