#pragma once

#include <vector>

namespace mosh2d {

// Generalized Laguerre polynomial L_n^alpha(x) by the upward three-term
// recurrence (n+1) L_{n+1} = (2n+1+alpha-x) L_n - (n+alpha) L_{n-1}.
double laguerre(int n, double alpha, double x);

// L_0 .. L_{n_max} in one recurrence pass.
std::vector<double> laguerre_sequence(int n_max, double alpha, double x);

// Exponentially scaled modified Bessel function e^{-x} I_l(x), finite for
// all x >= 0 (I_l alone overflows near x ~ 700).  Negative l maps to |l|.
double bessel_i_scaled(int l, double x);

namespace detail {
// Ascending power series; accurate for x <= ~35.
double bessel_i_scaled_series(int l, double x);
// Miller downward recurrence normalized by e^{-x}(I_0 + 2 sum_k I_k) = 1.
double bessel_i_scaled_miller(int l, double x);
}  // namespace detail

}  // namespace mosh2d
