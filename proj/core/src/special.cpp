#include "fockbench/special.hpp"

#include <cmath>
#include <numbers>

namespace fock {

void require_finite(cplx z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw PreconditionError(std::string(what) + " finite", "got non-finite complex value");
}

void require_finite(double x, const char* what) {
  if (!std::isfinite(x))
    throw PreconditionError(std::string(what) + " finite", "got non-finite value");
}

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

cplx monomial_basis_eval(int n, cplx z) {
  if (n == 0) return 1.0;
  const double r = std::abs(z);
  if (r == 0.0) return 0.0;
  const double logmag = n * std::log(r) - 0.5 * log_factorial(n);
  return std::polar(std::exp(logmag), n * std::arg(z));
}

cplx kernel_eval(cplx w, cplx z) { return std::exp(w * std::conj(z)); }

Eigen::VectorXcd normalized_kernel_coeffs(cplx z, int N) {
  if (N < 1) throw PreconditionError("N >= 1", "kernel coefficient length");
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(N);
  const double s = std::norm(z);
  const double r = std::sqrt(s);
  c(0) = std::exp(-0.5 * s);
  if (r == 0.0) return c;
  const double lr = std::log(r);
  const double th = -std::arg(z);
  for (int n = 1; n < N; ++n) {
    const double logmag = -0.5 * s + n * lr - 0.5 * log_factorial(n);
    c(n) = std::polar(std::exp(logmag), n * th);
  }
  return c;
}

double laguerre_poly(int j, double x) { return laguerre_generalized(j, 0, x); }

double laguerre_generalized(int n, int alpha, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> hermite_functions(int nmax, double x) {
  // h_n(x) = 2^{1/4} psi_n(sqrt(2) x) with psi_n the orthonormal Hermite functions.
  std::vector<double> h(static_cast<size_t>(nmax) + 1, 0.0);
  const double t = std::numbers::sqrt2 * x;
  const double scale = std::pow(2.0, 0.25);
  double pm1 = 0.0;
  double p = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * t * t);
  h[0] = scale * p;
  for (int n = 0; n < nmax; ++n) {
    const double next =
        std::sqrt(2.0 / (n + 1.0)) * t * p - std::sqrt(n / (n + 1.0)) * pm1;
    pm1 = p;
    p = next;
    h[static_cast<size_t>(n) + 1] = scale * p;
  }
  return h;
}

double hermite_function(int n, double x) { return hermite_functions(n, x).back(); }

}  // namespace fock
