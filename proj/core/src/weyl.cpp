#include <cmath>

#include "detail.hpp"
#include "fockbench/operators.hpp"
#include "fockbench/special.hpp"

namespace fock {

Eigen::MatrixXd weyl_radial_part(double s, int N) {
  if (N < 1) throw PreconditionError("N >= 1", "weyl_radial_part");
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(N, N);
  if (s == 0.0) {
    P.setIdentity();
    return P;
  }
  const double ls = std::log(s);
  std::vector<double> lf(N);
  for (int n = 0; n < N; ++n) lf[n] = log_factorial(n);
  // L[k] = L_k^{(alpha)}(s) for k + alpha <= N - 1, generated by the upward recurrence.
  std::vector<double> L(N);
  for (int alpha = 0; alpha < N; ++alpha) {
    const int kmax = N - 1 - alpha;
    L[0] = 1.0;
    if (kmax >= 1) L[1] = 1.0 + alpha - s;
    for (int k = 1; k < kmax; ++k)
      L[k + 1] = ((2.0 * k + 1.0 + alpha - s) * L[k] - (k + alpha) * L[k - 1]) / (k + 1.0);
    const double sign = (alpha % 2) ? -1.0 : 1.0;
    for (int k = 0; k <= kmax; ++k) {
      const int hi = k + alpha;
      const double mag = std::exp(0.5 * (lf[k] - lf[hi]) + 0.5 * alpha * ls);
      P(hi, k) = mag * L[k];                         // m >= k branch, conj(z)^alpha
      if (alpha > 0) P(k, hi) = sign * mag * L[k];   // m < k branch, (-z)^alpha
    }
  }
  return P;
}

TruncatedOperator weyl_matrix(cplx z, int N) {
  require_finite(z, "z");
  if (N < 1) throw PreconditionError("N >= 1", "weyl_matrix");
  const double s = std::norm(z);
  const double th = std::arg(z);
  const Eigen::MatrixXd P = weyl_radial_part(s, N);
  const double g = std::exp(-0.5 * s);
  Eigen::MatrixXcd W(N, N);
  for (int k = 0; k < N; ++k)
    for (int m = 0; m < N; ++m) W(m, k) = g * P(m, k) * std::polar(1.0, -(m - k) * th);
  // W_z is unitary, so the dropped part of column k has norm sqrt(1 - |col_k|^2).
  double tail = 0.0;
  for (int k = 0; k < N; ++k) tail = std::max(tail, std::sqrt(std::max(0.0, 1.0 - W.col(k).squaredNorm())));
  return TruncatedOperator(std::move(W), "weyl[" + detail::fmt(z) + "]", tail);
}

TruncatedOperator parity_matrix(int N) {
  if (N < 1) throw PreconditionError("N >= 1", "parity_matrix");
  Eigen::MatrixXcd R = Eigen::MatrixXcd::Zero(N, N);
  for (int n = 0; n < N; ++n) R(n, n) = (n % 2) ? -1.0 : 1.0;
  return TruncatedOperator(std::move(R), "parity");
}

TruncatedOperator shift_A_k_matrix(int k, int N) {
  if (k < 0) throw PreconditionError("k >= 0", "shift_A_k_matrix");
  if (N < 1) throw PreconditionError("N >= 1", "shift_A_k_matrix");
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(N, N);
  for (int n = 0; n + k < N; ++n)
    A(n + k, n) = std::exp(-0.5 * (log_factorial(n + k) - log_factorial(n)));
  return TruncatedOperator(std::move(A), "A[" + std::to_string(k) + "]");
}

}  // namespace fock
