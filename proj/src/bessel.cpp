#include "fsb/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fsb/errors.hpp"
#include "fsb/model.hpp"

namespace fsb {

namespace {

constexpr int kMaxOrder = 200;
constexpr double kMaxArgument = 1e3;
constexpr double kRescaleAbove = 1e250;

void check_domain(int n, double x) {
    if (std::abs(n) > kMaxOrder || !(std::abs(x) <= kMaxArgument)) {
        throw DomainError("bessel_j(" + std::to_string(n) + ", " + std::to_string(x) +
                          ") outside |n| <= 200, |x| <= 1e3");
    }
}

// Non-negative x > 0, orders 0..n_max.
std::vector<double> miller(int n_max, double x) {
    const double reach = std::max(static_cast<double>(n_max), x);
    int start = static_cast<int>(reach + 30.0 + std::sqrt(60.0 * reach));
    start += start % 2; // even, so the normalisation sum closes on J_0

    std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
    double above = 0.0;
    double current = 1e-30;
    double norm = 0.0;
    const double two_over_x = 2.0 / x;
    for (int k = start; k >= 0; --k) {
        if (k <= n_max) out[static_cast<std::size_t>(k)] = current;
        if (k % 2 == 0) norm += (k == 0 ? 1.0 : 2.0) * current;
        if (k == 0) break;
        const double below = k * two_over_x * current - above;
        above = current;
        current = below;
        if (std::abs(current) > kRescaleAbove) {
            current /= kRescaleAbove;
            above /= kRescaleAbove;
            norm /= kRescaleAbove;
            for (auto& v : out) v /= kRescaleAbove;
        }
    }
    for (auto& v : out) v /= norm;
    return out;
}

} // namespace

std::vector<double> bessel_j_table(int n_max, double x) {
    check_domain(n_max, x);
    if (n_max < 0) throw DomainError("bessel_j_table needs n_max >= 0");
    if (x == 0.0) {
        std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
        out[0] = 1.0;
        return out;
    }
    auto out = miller(n_max, std::abs(x));
    if (x < 0.0) {
        for (int k = 1; k <= n_max; k += 2) out[static_cast<std::size_t>(k)] *= -1.0;
    }
    return out;
}

double bessel_j(int n, double x) {
    check_domain(n, x);
    const int order = std::abs(n);
    const double value = bessel_j_table(order, x)[static_cast<std::size_t>(order)];
    return (n < 0 && order % 2 == 1) ? -value : value;
}

double bessel_root(int k) {
    if (k < 1) throw DomainError("bessel_root needs k >= 1, got " + std::to_string(k));
    const double beta = (k - 0.25) * kPi;
    double z = beta + 1.0 / (8.0 * beta) - 31.0 / (384.0 * beta * beta * beta);
    for (int it = 0; it < 50; ++it) {
        const auto j = bessel_j_table(1, z);
        const double step = j[0] / j[1]; // J_0' = -J_1
        z += step;
        if (std::abs(step) <= 1e-15 * z) break;
    }
    return z;
}

} // namespace fsb
