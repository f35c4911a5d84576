#include <cmath>

#include "detail.hpp"
#include "fockbench/operators.hpp"
#include "fockbench/special.hpp"

namespace fock {

using detail::lcplx;
using detail::Series;

namespace {

constexpr int kTailDegrees = 48;

void require_affine(cplx a, cplx lambda) {
  require_finite(a, "a");
  require_finite(lambda, "lambda");
  if (std::abs(lambda) > 1.0 + 1e-15)
    throw PreconditionError("|lambda| <= 1", "lambda = " + detail::fmt(lambda));
}

// Column coefficients c[n][m] of z^m, m <= D, for the functions
// q(z) (a + lambda z)^n / sqrt(n!), n < N.
std::vector<Series> affine_power_columns(const Series& q, cplx a, cplx lambda, int N, int D) {
  std::vector<Series> cols;
  Series p(static_cast<size_t>(D) + 1, 0.0L);
  p[0] = 1.0L;
  for (int n = 0; n < N; ++n) {
    if (n > 0) {
      detail::series_mul_affine(p, detail::to_l(a), detail::to_l(lambda), D);
      const long double inv = 1.0L / std::sqrt(static_cast<long double>(n));
      for (auto& v : p) v *= inv;
    }
    cols.push_back(detail::series_mul(q, p, D));
  }
  return cols;
}

// Build the matrix from monomial coefficients: entry(m, n) = coef_m sqrt(m!).
TruncatedOperator from_coefficients(const std::vector<Series>& cols, int N, const std::string& label) {
  Eigen::MatrixXcd M(N, N);
  double tail = 0.0;
  for (int n = 0; n < N; ++n) {
    long double t2 = 0.0L;
    for (size_t m = 0; m < cols[n].size(); ++m) {
      const long double sf = std::exp(0.5L * std::lgamma(static_cast<long double>(m) + 1.0L));
      const lcplx v = cols[n][m] * sf;
      if (static_cast<int>(m) < N)
        M(static_cast<Eigen::Index>(m), n) = detail::to_d(v);
      else
        t2 += std::norm(v);
    }
    tail = std::max(tail, static_cast<double>(std::sqrt(t2)));
  }
  return TruncatedOperator(std::move(M), label, tail);
}

}  // namespace

TruncatedOperator weighted_composition_matrix(const AnalyticSpec& psi, cplx a, cplx lambda, int N) {
  require_affine(a, lambda);
  if (N < 1) throw PreconditionError("N >= 1", "weighted_composition_matrix");
  const int D = N - 1 + kTailDegrees;
  const auto cols = affine_power_columns(psi.taylor(D), a, lambda, N, D);
  return from_coefficients(cols, N,
                           "wco[" + psi.describe() + ",a=" + detail::fmt(a) +
                               ",lambda=" + detail::fmt(lambda) + "]");
}

TruncatedOperator volterra_matrix(const AnalyticSpec& gprime, cplx a, cplx lambda, int N) {
  require_affine(a, lambda);
  if (N < 1) throw PreconditionError("N >= 1", "volterra_matrix");
  const int D = N - 1 + kTailDegrees;
  auto cols = affine_power_columns(gprime.taylor(D), a, lambda, N, D - 1);
  for (auto& c : cols) {
    // term-by-term antiderivative from 0
    Series anti(static_cast<size_t>(D) + 1, 0.0L);
    for (size_t k = 0; k < c.size() && k + 1 <= static_cast<size_t>(D); ++k)
      anti[k + 1] = c[k] / static_cast<long double>(k + 1);
    c = std::move(anti);
  }
  return from_coefficients(cols, N,
                           "volterra[" + gprime.describe() + ",a=" + detail::fmt(a) +
                               ",lambda=" + detail::fmt(lambda) + "]");
}

}  // namespace fock
