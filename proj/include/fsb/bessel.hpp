// bessel.hpp — Integer-order Bessel functions of the first kind and zeros of J_0

#pragma once

#include <vector>

namespace fsb {

/// J_n(x) for |n| <= 200, |x| <= 1e3 by Miller's downward recurrence,
/// normalised with J_0 + 2 sum_k J_{2k} = 1. Absolute error below 1e-12.
double bessel_j(int n, double x);

/// J_0(x) .. J_{n_max}(x) from a single recurrence sweep.
std::vector<double> bessel_j_table(int n_max, double x);

/// k-th positive zero of J_0 (k >= 1), Newton-refined from McMahon's expansion.
double bessel_root(int k);

} // namespace fsb
