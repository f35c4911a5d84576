#pragma once

#include <functional>
#include <vector>

#include "fockbench/operators.hpp"

namespace fock {

// sqrt(N)/2: beyond it the Poisson tail of |c_n(z)|^2 past N is no longer negligible.
double reliable_radius(int N);

struct GridFunction {
  std::vector<cplx> points;
  std::vector<cplx> values;
  std::vector<bool> flagged;
};

// A~(z) = <A k_z, k_z>.
Flagged<cplx> berezin(const TruncatedOperator& A, cplx z);
// A~(w, z) = <A k_w, k_z>.
Flagged<cplx> bivariate_berezin(const TruncatedOperator& A, cplx w, cplx z);
// K_A(w, z) = <A K_w, K_z>; flagged beyond |z|, |w| > 6 as well.
Flagged<cplx> canonical_kernel(const TruncatedOperator& A, cplx w, cplx z);

GridFunction sample_berezin(const TruncatedOperator& A, const std::vector<cplx>& points);

struct CompositionCheck {
  cplx lhs;  // (AB)~(w, z)
  cplx rhs;  // (1/pi) int B~(w, xi) A~(xi, z) d xi
  bool flagged = false;
};
CompositionCheck compose_berezin_check(const TruncatedOperator& A, const TruncatedOperator& B, cplx w,
                                       cplx z, const QuadratureRule& rule = default_planar_rule());

// (f * g_t)(w) with g_t(z) = exp(-|z|^2 / t) / (pi t).
cplx heat_transform(const SymbolSpec& f, double t, cplx w,
                    const QuadratureRule& rule = default_planar_rule());
cplx heat_transform(const std::function<cplx(cplx)>& f, double t, cplx w,
                    const QuadratureRule& rule = default_planar_rule());

// R A R.
TruncatedOperator parity_conjugate(const TruncatedOperator& A);

struct ShiftResult {
  TruncatedOperator op;
  bool flagged = false;
};
// alpha_z(A) = W_z A W_z^*.
ShiftResult shift_operator(const TruncatedOperator& A, cplx z, double reliable = 1.5);

// f * A = int f(z) alpha_z(A) dz over Lebesgue measure.
TruncatedOperator qha_convolve_function_operator(const SymbolSpec& f, const TruncatedOperator& A,
                                                 const QuadratureRule& rule = default_planar_rule());

// A * B (z) = tr(A alpha_z(R B R)).
Flagged<cplx> qha_convolve_operator_operator(const TruncatedOperator& A, const TruncatedOperator& B,
                                             cplx z);

struct TraceResult {
  cplx value;
  cplx tail;  // contribution of the last N/4 diagonal entries
  bool flagged = false;
};
// F_W(A)(xi) = tr(A W_{-xi}).
TraceResult fourier_weyl(const TruncatedOperator& A, cplx xi);

// (2/pi)^{1/4} int f(x) exp(2 x z - x^2 - z^2/2) dx.
cplx bargmann_transform(const std::function<cplx(double)>& f, cplx z, const QuadratureRule& rule);
cplx bargmann_transform(const std::function<cplx(double)>& f, cplx z);
cplx bargmann_transform(const LineProfile& f, cplx z);

}  // namespace fock
