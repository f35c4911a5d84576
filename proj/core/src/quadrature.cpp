#include "fockbench/quadrature.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cfloat>
#include <cmath>
#include <complex>
#include <numbers>

namespace fock {

const char* to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::RadialLaguerre: return "radial-laguerre";
    case RuleKind::AngularUniform: return "angular-uniform";
    case RuleKind::LineHermite: return "line-hermite";
    case RuleKind::PlanarPolar: return "planar-polar";
    case RuleKind::LineComposite: return "line-composite";
  }
  return "unknown";
}

namespace {

Eigen::VectorXd jacobi_eigenvalues(const Eigen::VectorXd& diag, const Eigen::VectorXd& off) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

// L_n and L_{n-1} at x.
void laguerre_pair(int n, long double x, long double& ln, long double& lnm1) {
  long double prev = 1.0L, cur = 1.0L - x;
  if (n == 1) {
    ln = cur;
    lnm1 = prev;
    return;
  }
  for (int k = 1; k < n; ++k) {
    const long double next = ((2.0L * k + 1.0L - x) * cur - k * prev) / (k + 1.0L);
    prev = cur;
    cur = next;
  }
  ln = cur;
  lnm1 = prev;
}

void gauss_laguerre(int n, std::vector<double>& x, std::vector<double>& w) {
  Eigen::VectorXd diag(n), off(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) diag(k) = 2.0 * k + 1.0;
  for (int k = 0; k + 1 < n; ++k) off(k) = k + 1.0;
  const Eigen::VectorXd ev = jacobi_eigenvalues(diag, off);
  x.clear();
  w.clear();
  for (int i = 0; i < n; ++i) {
    long double xi = ev(i);
    long double ln = 0, lnm1 = 0;
    for (int it = 0; it < 4; ++it) {
      laguerre_pair(n, xi, ln, lnm1);
      const long double d = n * (ln - lnm1) / xi;
      const long double step = ln / d;
      xi -= step;
      if (std::fabs(step) <= 1e-19L * std::max(1.0L, xi)) break;
    }
    laguerre_pair(n, xi, ln, lnm1);
    // w_i = x_i / (n^2 L_{n-1}(x_i)^2)
    const long double logw = std::log(xi) - 2.0L * std::log(static_cast<long double>(n)) -
                             2.0L * std::log(std::fabs(lnm1));
    const double wi = static_cast<double>(std::exp(logw));
    if (!(wi >= DBL_MIN)) continue;  // underflowed: contributes nothing in double
    x.push_back(static_cast<double>(xi));
    w.push_back(wi);
  }
}

// Orthonormal Hermite functions psi_0..psi_{n} at x (weight already included).
void hermite_psi(int n, long double x, long double& pn, long double& pnm1, long double& sumsq) {
  long double prev = 0.0L;
  long double cur = std::pow(std::numbers::pi_v<long double>, -0.25L) * std::exp(-0.5L * x * x);
  sumsq = 0.0L;
  for (int k = 0; k < n; ++k) {
    sumsq += cur * cur;
    const long double next =
        std::sqrt(2.0L / (k + 1.0L)) * x * cur - std::sqrt(k / (k + 1.0L)) * prev;
    prev = cur;
    cur = next;
  }
  pn = cur;
  pnm1 = prev;
}

void gauss_hermite(int n, std::vector<double>& x, std::vector<double>& w) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n), off(std::max(n - 1, 0));
  for (int k = 0; k + 1 < n; ++k) off(k) = std::sqrt((k + 1.0) / 2.0);
  const Eigen::VectorXd ev = jacobi_eigenvalues(diag, off);
  x.clear();
  w.clear();
  for (int i = 0; i < n; ++i) {
    long double xi = ev(i);
    long double pn = 0, pnm1 = 0, ss = 0;
    for (int it = 0; it < 4; ++it) {
      hermite_psi(n, xi, pn, pnm1, ss);
      const long double d = std::sqrt(2.0L * n) * pnm1 - xi * pn;
      if (d == 0.0L) break;
      const long double step = pn / d;
      xi -= step;
      if (std::fabs(step) <= 1e-19L * std::max(1.0L, std::fabs(xi))) break;
    }
    hermite_psi(n, xi, pn, pnm1, ss);
    const double wi = static_cast<double>(std::exp(-xi * xi) / ss);
    if (!(wi >= DBL_MIN)) continue;
    x.push_back(static_cast<double>(xi));
    w.push_back(wi);
  }
}

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    long double xi = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
    long double dp = 1.0L;
    for (int it = 0; it < 100; ++it) {
      long double p0 = 1.0L, p1 = xi;
      for (int k = 2; k <= n; ++k) {
        const long double p2 = ((2.0L * k - 1.0L) * xi * p1 - (k - 1.0L) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0L;
      dp = n * (xi * p1 - p0) / (xi * xi - 1.0L);
      const long double step = p1 / dp;
      xi -= step;
      if (std::fabs(step) < 1e-19L) break;
    }
    x[i] = static_cast<double>(xi);
    w[i] = static_cast<double>(2.0L / ((1.0L - xi * xi) * dp * dp));
  }
}

void require_sizes(std::span<const int> sizes, std::size_t count, const char* kind) {
  if (sizes.size() != count)
    throw PreconditionError(std::string(kind) + " takes " + std::to_string(count) + " size(s)",
                            "got " + std::to_string(sizes.size()));
  for (int s : sizes)
    if (s < 1) throw PreconditionError("quadrature sizes positive", kind);
}

}  // namespace

QuadratureRule make_rule(RuleKind kind, std::span<const int> sizes) {
  QuadratureRule rule;
  rule.kind = kind;
  std::vector<double> x, w;
  switch (kind) {
    case RuleKind::RadialLaguerre:
    case RuleKind::LineHermite:
      require_sizes(sizes, 1, to_string(kind));
      if (kind == RuleKind::RadialLaguerre)
        gauss_laguerre(sizes[0], x, w);
      else
        gauss_hermite(sizes[0], x, w);
      for (std::size_t i = 0; i < x.size(); ++i) rule.nodes.emplace_back(x[i], 0.0);
      rule.weights = w;
      break;
    case RuleKind::AngularUniform: {
      require_sizes(sizes, 1, to_string(kind));
      const int nt = sizes[0];
      for (int k = 0; k < nt; ++k) {
        rule.nodes.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / nt));
        rule.weights.push_back(2.0 * std::numbers::pi / nt);
      }
      rule.n_theta = nt;
      break;
    }
    case RuleKind::PlanarPolar: {
      require_sizes(sizes, 2, to_string(kind));
      gauss_laguerre(sizes[0], x, w);
      const int nt = sizes[1];
      rule.radial_nodes = x;
      rule.radial_weights = w;
      rule.n_theta = nt;
      rule.nodes.reserve(x.size() * nt);
      for (std::size_t r = 0; r < x.size(); ++r) {
        const double rad = std::sqrt(x[r]);
        for (int k = 0; k < nt; ++k) {
          rule.nodes.push_back(std::polar(rad, 2.0 * std::numbers::pi * k / nt));
          rule.weights.push_back(w[r] / nt);
        }
      }
      break;
    }
    case RuleKind::LineComposite:
      throw PreconditionError("line-composite rules built by make_line_rule", "");
  }
  return rule;
}

QuadratureRule make_rule(RuleKind kind, std::initializer_list<int> sizes) {
  return make_rule(kind, std::span<const int>(sizes.begin(), sizes.size()));
}

QuadratureRule make_line_rule(double lo, double hi, std::span<const double> breakpoints,
                              int panels, int order) {
  if (!(hi > lo) || panels < 1 || order < 1)
    throw PreconditionError("hi > lo, panels >= 1, order >= 1", "line rule");
  std::vector<double> edges;
  for (int p = 0; p <= panels; ++p) edges.push_back(lo + (hi - lo) * p / panels);
  for (double b : breakpoints)
    if (b > lo && b < hi) edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](double a, double b) { return std::fabs(a - b) < 1e-14; }),
              edges.end());
  std::vector<double> gx, gw;
  gauss_legendre(order, gx, gw);
  QuadratureRule rule;
  rule.kind = RuleKind::LineComposite;
  for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
    const double a = edges[e], b = edges[e + 1];
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < order; ++i) {
      rule.nodes.emplace_back(mid + half * gx[i], 0.0);
      rule.weights.push_back(half * gw[i]);
    }
  }
  return rule;
}

const QuadratureRule& default_planar_rule() {
  static const QuadratureRule rule = make_rule(RuleKind::PlanarPolar, {200, 256});
  return rule;
}

const QuadratureRule& default_radial_rule() {
  static const QuadratureRule rule = make_rule(RuleKind::RadialLaguerre, {200});
  return rule;
}

const QuadratureRule& default_line_hermite_rule() {
  static const QuadratureRule rule = make_rule(RuleKind::LineHermite, {200});
  return rule;
}

cplx integrate_gaussian(const std::function<cplx(cplx)>& F, const QuadratureRule& rule) {
  if (rule.kind != RuleKind::PlanarPolar)
    throw PreconditionError("rule kind is planar-polar", std::string("got ") + to_string(rule.kind));
  std::complex<long double> acc = 0.0L;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const cplx v = rule.weights[i] * F(rule.nodes[i]);
    acc += std::complex<long double>(v.real(), v.imag());
  }
  return cplx(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
}

cplx integrate_hermite(const std::function<cplx(double)>& F, const QuadratureRule& rule) {
  if (rule.kind != RuleKind::LineHermite)
    throw PreconditionError("rule kind is line-hermite", std::string("got ") + to_string(rule.kind));
  std::complex<long double> acc = 0.0L;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const cplx v = rule.weights[i] * F(rule.nodes[i].real());
    acc += std::complex<long double>(v.real(), v.imag());
  }
  return cplx(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
}

cplx integrate_line(const std::function<cplx(double)>& F, const QuadratureRule& rule) {
  if (rule.kind != RuleKind::LineComposite)
    throw PreconditionError("rule kind is line-composite", std::string("got ") + to_string(rule.kind));
  std::complex<long double> acc = 0.0L;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const cplx v = rule.weights[i] * F(rule.nodes[i].real());
    acc += std::complex<long double>(v.real(), v.imag());
  }
  return cplx(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
}

}  // namespace fock
