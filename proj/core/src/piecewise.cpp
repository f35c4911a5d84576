#include <algorithm>
#include <cmath>
#include <numbers>

#include "detail.hpp"
#include "fockbench/special.hpp"
#include "piecewise.hpp"

namespace fock::detail {

namespace {

// I_0(x) e^{-x}
double scaled_i0(double x) {
  if (x < 500.0) return std::cyl_bessel_i(0.0, x) * std::exp(-x);
  const double u = 1.0 / (8.0 * x);
  return (1.0 + u * (1.0 + 4.5 * u * (1.0 + 25.0 / 3.0 * u))) / std::sqrt(2.0 * std::numbers::pi * x);
}

// sum_{k >= lo} e^{-x} x^k / k!, only used where the terms decay.
long double poisson_tail(int lo, long double x) {
  if (x == 0.0L) return lo == 0 ? 1.0L : 0.0L;
  long double term = std::exp(lo * std::log(x) - x - std::lgamma(lo + 1.0L));
  long double s = 0.0L;
  for (int k = lo; k < lo + 100000; ++k) {
    s += term;
    if (term < 1e-22L * s) break;
    term *= x / (k + 1.0L);
  }
  return s;
}

}  // namespace

void split_radial_rule(const std::vector<double>& radii, int N, std::vector<double>& s,
                       std::vector<double>& w) {
  std::vector<double> bps;
  double top = 0.0;
  for (double r : radii) {
    bps.push_back(r * r);
    top = std::max(top, r * r);
  }
  const double S = top + 2.0 * N + 80.0;
  const QuadratureRule line = make_line_rule(0.0, S, bps, static_cast<int>(std::ceil(S)), 16);
  s.clear();
  w.clear();
  for (size_t i = 0; i < line.size(); ++i) {
    const double x = line.nodes[i].real();
    s.push_back(x);
    w.push_back(line.weights[i] * std::exp(-x));
  }
}

void radial_rule_for(const SymbolSpec& f, int N, const QuadratureRule& rule, std::vector<double>& s,
                     std::vector<double>& w) {
  const auto bps = f.radial_breakpoints();
  if (bps.empty()) {
    s = rule.radial_nodes;
    w = rule.radial_weights;
  } else {
    split_radial_rule(bps, N, s, w);
  }
}

void poisson_split(int n, double x, double& P, double& Q) {
  // P = P(n + 1, x), Q = 1 - P; the smaller one is summed directly.
  if (x < n + 1.0) {
    const long double p = poisson_tail(n + 1, x);
    P = static_cast<double>(p);
    Q = static_cast<double>(1.0L - p);
    return;
  }
  long double term = std::exp(-static_cast<long double>(x)), q = 0.0L;
  for (int k = 0; k <= n; ++k) {
    q += term;
    term *= x / (k + 1.0L);
  }
  Q = static_cast<double>(q);
  P = static_cast<double>(1.0L - q);
}

cplx heat_radial_piecewise(const SymbolSpec& f, double t, cplx w) {
  const double rho = std::abs(w), st = std::sqrt(t);
  const double lo = std::max(0.0, rho - 12.0 * st), hi = rho + 12.0 * st;
  const auto bps = f.radial_breakpoints();
  const int panels = std::max(8, static_cast<int>(std::ceil((hi - lo) / (0.25 * st))));
  const QuadratureRule rule = make_line_rule(lo, hi, bps, panels, 20);
  std::complex<long double> acc = 0.0L;
  for (size_t i = 0; i < rule.size(); ++i) {
    const double r = rule.nodes[i].real();
    const double k = r * std::exp(-(r - rho) * (r - rho) / t) * scaled_i0(2.0 * r * rho / t);
    const cplx v = rule.weights[i] * k * f.radial(r);
    acc += std::complex<long double>(v.real(), v.imag());
  }
  return (2.0 / t) * cplx(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
}

cplx heat_vertical(const VerticalSymbol& v, double t, cplx w) {
  // Marginal of the heat kernel in Im z: e^{-y^2/t} / sqrt(pi t).
  const double st = std::sqrt(t);
  std::vector<double> bps;
  for (double b : v.m0.breakpoints()) bps.push_back((v.sign * b - w.imag()) / st);
  const QuadratureRule rule = make_line_rule(-12.0, 12.0, bps, 96, 20);
  return integrate_line(
             [&](double y) { return v.m0(v.sign * (w.imag() + st * y)) * std::exp(-y * y); }, rule) /
         std::sqrt(std::numbers::pi);
}

void grid_cells(const GridSamplesSymbol& g, double h, int order, std::vector<cplx>& z,
                std::vector<double>& wt) {
  const double X = g.dx * (g.nx - 1), Y = g.dy * (g.ny - 1);
  const int px = std::max(g.nx - 1, static_cast<int>(std::ceil(X / h)));
  const int py = std::max(g.ny - 1, static_cast<int>(std::ceil(Y / h)));
  std::vector<double> xb, yb;
  for (int i = 0; i < g.nx; ++i) xb.push_back(g.x0 + i * g.dx);
  for (int j = 0; j < g.ny; ++j) yb.push_back(g.y0 + j * g.dy);
  const QuadratureRule rx = make_line_rule(g.x0, g.x0 + X, xb, px, order);
  const QuadratureRule ry = make_line_rule(g.y0, g.y0 + Y, yb, py, order);
  z.clear();
  wt.clear();
  for (size_t j = 0; j < ry.size(); ++j)
    for (size_t i = 0; i < rx.size(); ++i) {
      z.emplace_back(rx.nodes[i].real(), ry.nodes[j].real());
      wt.push_back(rx.weights[i] * ry.weights[j]);
    }
}

cplx heat_grid(const SymbolSpec& f, const GridSamplesSymbol& g, double t, cplx w) {
  std::vector<cplx> z;
  std::vector<double> wt;
  grid_cells(g, 0.25 * std::min(1.0, std::sqrt(t)), 12, z, wt);
  std::complex<long double> acc = 0.0L;
  for (size_t i = 0; i < z.size(); ++i) {
    const cplx v = wt[i] * std::exp(-std::norm(z[i] - w) / t) * (f(z[i]) - g.outside);
    acc += std::complex<long double>(v.real(), v.imag());
  }
  return g.outside + cplx(static_cast<double>(acc.real()), static_cast<double>(acc.imag())) /
                         (std::numbers::pi * t);
}

}  // namespace fock::detail
