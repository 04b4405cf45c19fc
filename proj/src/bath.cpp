#include "fsb/bath.hpp"

#include <cmath>
#include <string>

#include "fsb/errors.hpp"

namespace fsb {

using cd = std::complex<double>;

double spectral_density(double omega, const BathParams& bath) {
    return bath.gamma * omega / (omega * omega + bath.omega_c * bath.omega_c);
}

double bose_occupation(double omega, double temperature) {
    if (omega == 0.0) throw DomainError("Bose occupation is singular at omega = 0");
    return 1.0 / std::expm1(omega / temperature);
}

double emission_prefactor(double omega, const BathParams& bath) {
    if (omega == 0.0) {
        return bath.gamma * bath.temperature / (bath.omega_c * bath.omega_c);
    }
    const double x = std::abs(omega) / bath.temperature;
    const double density = spectral_density(std::abs(omega), bath);
    // n_B + 1 = 1 / (1 - e^{-x}) for emission; for absorption Gamma(-w)[n_B(-w)+1] = Gamma(w) n_B(w).
    if (omega > 0.0) return density / -std::expm1(-x);
    return density / std::expm1(x);
}

TransitionTable::TransitionTable(int n_max, double omega, std::array<double, 2> quasienergies)
    : n_max_(n_max),
      omega_(omega),
      quasienergies_(quasienergies),
      coefficients_(static_cast<std::size_t>(2 * n_max + 1), Mat2::Zero()),
      rates_(static_cast<std::size_t>(2 * n_max + 1), Eigen::Matrix2d::Zero()) {}

std::size_t TransitionTable::index(int n) const {
    if (n < -n_max_ || n > n_max_) {
        throw DomainError("Brillouin index " + std::to_string(n) + " outside window +-" +
                          std::to_string(n_max_));
    }
    return static_cast<std::size_t>(n + n_max_);
}

cd& TransitionTable::coefficient(int n, int lambda, int mu) {
    return coefficients_[index(n)](lambda, mu);
}

cd TransitionTable::coefficient(int n, int lambda, int mu) const {
    return coefficients_[index(n)](lambda, mu);
}

double TransitionTable::energy_gap(int n, int lambda, int mu) const {
    return (quasienergies_[mu] - quasienergies_[lambda]) - n * omega_;
}

double TransitionTable::rate(int n, int lambda, int mu) const {
    if (!has_rates_) throw InvariantError("transition table has no rates; call rates() first");
    return rates_[index(n)](lambda, mu);
}

std::array<std::array<std::vector<cd>, 2>, 2>
matrix_element_series(const FloquetSolution& solution, double theta) {
    const Mat2 coupling = coupling_operator(theta);
    const std::size_t n = solution.n_steps;
    std::array<std::array<std::vector<cd>, 2>, 2> series;
    for (auto& row : series) {
        for (auto& s : row) s.resize(n);
    }
    for (std::size_t j = 0; j < n; ++j) {
        const Vec2& p0 = solution.modes[0][j];
        const Vec2& p1 = solution.modes[1][j];
        const Vec2 c0 = coupling * p0;
        const Vec2 c1 = coupling * p1;
        series[0][0][j] = cd(p0.dot(c0).real(), 0.0);
        series[1][1][j] = cd(p1.dot(c1).real(), 0.0);
        series[0][1][j] = p0.dot(c1);
        series[1][0][j] = std::conj(series[0][1][j]);
    }
    return series;
}

namespace {

void check_window(const FloquetSolution& solution, int n_max) {
    if (n_max < 0 || static_cast<std::size_t>(4 * n_max) > solution.n_steps) {
        throw ConfigError("n_max = " + std::to_string(n_max) + " exceeds n_steps/4 = " +
                          std::to_string(solution.n_steps / 4));
    }
}

// Negative orders follow from a^{(-n)}_{lambda<-mu} = conj(a^{(n)}_{mu<-lambda}).
void mirror_negative_orders(TransitionTable& table) {
    for (int n = 1; n <= table.n_max(); ++n) {
        for (int l = 0; l < 2; ++l) {
            for (int m = 0; m < 2; ++m) {
                table.coefficient(-n, l, m) = std::conj(table.coefficient(n, m, l));
            }
        }
    }
}

} // namespace

TransitionTable fourier_coefficients(const FloquetSolution& solution, double theta, int n_max) {
    check_window(solution, n_max);
    const auto series = matrix_element_series(solution, theta);
    const std::size_t n_steps = solution.n_steps;

    std::vector<cd> twiddle(n_steps);
    for (std::size_t k = 0; k < n_steps; ++k) {
        twiddle[k] = std::polar(1.0, -2.0 * kPi * static_cast<double>(k) /
                                         static_cast<double>(n_steps));
    }

    TransitionTable table(n_max, solution.omega, solution.quasienergies);
    std::vector<Mat2> orders(static_cast<std::size_t>(n_max + 1), Mat2::Zero());
    const double inv_n = 1.0 / static_cast<double>(n_steps);

#pragma omp parallel for schedule(static)
    for (int n = 0; n <= n_max; ++n) {
        Mat2 acc = Mat2::Zero();
        std::size_t k = 0; // n * j mod N
        for (std::size_t j = 0; j < n_steps; ++j) {
            const cd w = twiddle[k];
            acc(0, 0) += series[0][0][j] * w;
            acc(0, 1) += series[0][1][j] * w;
            acc(1, 0) += series[1][0][j] * w;
            acc(1, 1) += series[1][1][j] * w;
            k += static_cast<std::size_t>(n);
            if (k >= n_steps) k -= n_steps;
        }
        orders[static_cast<std::size_t>(n)] = acc * inv_n;
    }

    for (int n = 0; n <= n_max; ++n) {
        for (int l = 0; l < 2; ++l) {
            for (int m = 0; m < 2; ++m) {
                table.coefficient(n, l, m) = orders[static_cast<std::size_t>(n)](l, m);
            }
        }
    }
    mirror_negative_orders(table);
    return table;
}

namespace reference {

TransitionTable fourier_coefficients(const FloquetSolution& solution, double theta, int n_max) {
    check_window(solution, n_max);
    const Mat2 coupling = coupling_operator(theta);
    TransitionTable table(n_max, solution.omega, solution.quasienergies);
    const double n_steps = static_cast<double>(solution.n_steps);
    for (int n = -n_max; n <= n_max; ++n) {
        for (int l = 0; l < 2; ++l) {
            for (int m = 0; m < 2; ++m) {
                cd acc = 0.0;
                for (std::size_t j = 0; j < solution.n_steps; ++j) {
                    const cd x = solution.modes[l][j].dot(coupling * solution.modes[m][j]);
                    acc += x * std::polar(1.0, -n * solution.omega * solution.time(j));
                }
                table.coefficient(n, l, m) = acc / n_steps;
            }
        }
    }
    return table;
}

} // namespace reference

TransitionTable rates(TransitionTable table, const BathParams& bath,
                      const FloquetSolution& solution) {
    bath.validate();
    table.quasienergies_ = solution.quasienergies;
    table.totals_ = {};
    for (int n = -table.n_max_; n <= table.n_max_; ++n) {
        Eigen::Matrix2d& r = table.rates_[table.index(n)];
        for (int l = 0; l < 2; ++l) {
            for (int m = 0; m < 2; ++m) {
                const double gap = table.energy_gap(n, l, m);
                const double value =
                    emission_prefactor(gap, bath) * std::norm(table.coefficient(n, l, m));
                r(l, m) = value;
                table.totals_[l][m] += value;
            }
        }
    }
    table.gamma_ = bath.gamma;
    table.has_rates_ = true;
    return table;
}

} // namespace fsb
