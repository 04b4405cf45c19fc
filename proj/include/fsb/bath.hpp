// bath.hpp — Spectral density, Bose factor, Fourier transition coefficients and secular rates

#pragma once

#include <array>
#include <complex>
#include <vector>

#include "fsb/floquet.hpp"
#include "fsb/model.hpp"

namespace fsb {

inline constexpr int kDefaultNMax = 3;

/// Gamma(w) = gamma w / (w^2 + omega_c^2), odd in w.
double spectral_density(double omega, const BathParams& bath);

/// 1 / (exp(w/T) - 1); negative w gives the analytic continuation. Throws at w = 0.
double bose_occupation(double omega, double temperature);

/// Gamma(w) [n_B(w) + 1], with the finite w -> 0 limit gamma T / omega_c^2.
double emission_prefactor(double omega, const BathParams& bath);

// Coefficients a^{(n)}_{lambda<-mu} for n in [-n_max, n_max] and, once rates()
// has run, the secular rates A^{(n)}_{lambda<-mu} and totals W_{lambda<-mu}.
class TransitionTable {
public:
    TransitionTable() = default;
    TransitionTable(int n_max, double omega, std::array<double, 2> quasienergies);

    int n_max() const { return n_max_; }
    double omega() const { return omega_; }
    const std::array<double, 2>& quasienergies() const { return quasienergies_; }
    bool has_rates() const { return has_rates_; }
    double gamma() const { return gamma_; }

    std::complex<double>& coefficient(int n, int lambda, int mu);
    std::complex<double> coefficient(int n, int lambda, int mu) const;
    /// Delta^{(n)}_{lambda mu} = eps_mu - eps_lambda - n omega
    double energy_gap(int n, int lambda, int mu) const;
    double rate(int n, int lambda, int mu) const;
    /// W_{lambda<-mu} = sum_n A^{(n)}_{lambda<-mu}
    double total(int lambda, int mu) const { return totals_[lambda][mu]; }

    friend TransitionTable rates(TransitionTable table, const BathParams& bath,
                                 const FloquetSolution& solution);

private:
    std::size_t index(int n) const;

    int n_max_{0};
    double omega_{0.0};
    std::array<double, 2> quasienergies_{};
    std::vector<Mat2> coefficients_;
    std::vector<Eigen::Matrix2d> rates_;
    std::array<std::array<double, 2>, 2> totals_{};
    double gamma_{0.0};
    bool has_rates_{false};
};

/// <phi_lambda(t_j)| sigma_theta |phi_mu(t_j)> for j = 0..n_steps-1, one entry per
/// (lambda, mu). The (1,0) series is the exact conjugate of (0,1).
std::array<std::array<std::vector<std::complex<double>>, 2>, 2>
matrix_element_series(const FloquetSolution& solution, double theta);

/// Discrete Fourier transform of the stored matrix-element series,
/// a^{(n)} = (1/N) sum_j X(t_j) exp(-i n omega t_j). Requires n_max <= N/4.
/// Parallel over n with a shared twiddle table.
TransitionTable fourier_coefficients(const FloquetSolution& solution, double theta,
                                     int n_max = kDefaultNMax);

namespace reference {
/// Serial direct-summation version of fourier_coefficients, one exponential per sample.
TransitionTable fourier_coefficients(const FloquetSolution& solution, double theta,
                                     int n_max = kDefaultNMax);
} // namespace reference

/// Fills A^{(n)}_{lambda<-mu} = Gamma(Delta)[n_B(Delta)+1] |a^{(n)}|^2 and the totals.
TransitionTable rates(TransitionTable table, const BathParams& bath,
                      const FloquetSolution& solution);

} // namespace fsb
