#pragma once

#include <vector>

#include "fockbench/quadrature.hpp"
#include "fockbench/symbols.hpp"
#include "fockbench/truncated_operator.hpp"

namespace fock {

// Toeplitz T_f: entries(m, n) = int f e_n conj(e_m) d mu. Radial and angular
// symbols are resolved exactly; vertical symbols use a Cartesian
// Gauss-Hermite x composite-Legendre rule (the polar rule resolves jumps in
// Im z poorly); everything else goes through the planar rule ring by ring.
TruncatedOperator toeplitz_matrix(const SymbolSpec& f, int N,
                                  const QuadratureRule& rule = default_planar_rule());

// a_n = (1/n!) int_0^inf g(sqrt s) s^n e^{-s} ds.
std::vector<cplx> toeplitz_radial_eigenvalues(const SymbolSpec& g, int N,
                                              const QuadratureRule& rule = default_radial_rule());

// W_z f(w) = k_z(w) f(w - z), closed-form Laguerre entries.
TruncatedOperator weyl_matrix(cplx z, int N);

// Radial factor P of the polynomial part of W_z:
//   <W_z e_k, e_m> = exp(-s/2) P(m, k) exp(-i (m - k) arg z), s = |z|^2.
Eigen::MatrixXd weyl_radial_part(double s, int N);

// W_{psi, phi} f = psi * (f o phi), phi(w) = a + lambda w.
TruncatedOperator weighted_composition_matrix(const AnalyticSpec& psi, cplx a, cplx lambda, int N);

struct PhiOptions {
  double safe_re_radius = 5.0;  // cancellation grows like exp((Re z)^2 / 2)
};

// phi(z) = sqrt(2/pi) int m(x) exp(-2 (x - i z / 2)^2) dx.
Flagged<cplx> phi_from_multiplier(const LineProfile& m, cplx z, const PhiOptions& opt = {});

// Taylor coefficients of phi through z^degree.
std::vector<cplx> phi_taylor_coefficients(const LineProfile& m, int degree);

// S_phi from its integral kernel phi(z - conj w) e^{z conj w}; the double
// Gaussian integral is carried out on the Taylor coefficients of phi.
TruncatedOperator singular_integral_matrix_direct(const LineProfile& m, int N);

struct MultiplierReport {
  double fourier_residual = 0.0;  // max |F h_n - (-i)^n h_n| on the grid
  bool flagged = false;
};

// S_phi = B F^{-1} M_m F B*, with F applied numerically to the Hermite functions.
TruncatedOperator singular_integral_matrix_multiplier(const LineProfile& m, int N,
                                                      MultiplierReport* report = nullptr);

// V_{(g, phi)} f(z) = int_0^z (f o phi)(w) g'(w) dw.
TruncatedOperator volterra_matrix(const AnalyticSpec& gprime, cplx a, cplx lambda, int N);

// A^{[k]} e_n = ((n+1)...(n+k))^{-1/2} e_{n+k}.
TruncatedOperator shift_A_k_matrix(int k, int N);

// T_f^{(j)} = (1/pi) f * (e_j (x) e_j).
TruncatedOperator toeplitz_type_matrix(const SymbolSpec& f, int j, int N,
                                       const QuadratureRule& rule = default_planar_rule());

// H_rho f(z) = int f(z/t) (1/t) d rho(t); diagonal with the moments of rho.
TruncatedOperator hausdorff_matrix(const MeasureSpec& rho, int N);

// R f(z) = f(-z).
TruncatedOperator parity_matrix(int N);

}  // namespace fock
