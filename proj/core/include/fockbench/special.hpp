#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fockbench/types.hpp"

namespace fock {

double log_factorial(int n);

// e_n(z) = z^n / sqrt(n!), evaluated in log-magnitude/phase form.
cplx monomial_basis_eval(int n, cplx z);

// K_z(w) = exp(w conj(z)).
cplx kernel_eval(cplx w, cplx z);

// Coefficients of k_z in the monomial basis: exp(-|z|^2/2) conj(z)^n / sqrt(n!).
Eigen::VectorXcd normalized_kernel_coeffs(cplx z, int N);

// Laguerre polynomial L_j = L_j^0.
double laguerre_poly(int j, double x);

// Generalized Laguerre polynomial L_n^{(alpha)}, alpha >= 0.
double laguerre_generalized(int n, int alpha, double x);

// h_n(x) = (2/pi)^{1/4} (2^n n!)^{-1/2} H_n(sqrt(2) x) exp(-x^2).
double hermite_function(int n, double x);

// h_0(x), ..., h_nmax(x) in one recurrence sweep.
std::vector<double> hermite_functions(int nmax, double x);

}  // namespace fock
