#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fockbench/types.hpp"

namespace fock {

enum class RuleKind { RadialLaguerre, AngularUniform, LineHermite, PlanarPolar, LineComposite };

const char* to_string(RuleKind kind);

// Nodes and weights. Real rules store their nodes on the real axis.
//   radial-laguerre : int_0^inf F(s) e^{-s} ds
//   angular-uniform : int_0^{2 pi} F(theta) d theta, nodes e^{i theta}
//   line-hermite    : int_R F(x) e^{-x^2} dx
//   planar-polar    : int_C F d mu, nodes sqrt(s) e^{i theta}, radial-major order
//   line-composite  : int_a^b F(x) dx, Gauss-Legendre panels
struct QuadratureRule {
  RuleKind kind = RuleKind::PlanarPolar;
  std::vector<cplx> nodes;
  std::vector<double> weights;

  // Planar rules keep their factors so structured integrands can
  // do the angular sums by FFT-like mode extraction.
  std::vector<double> radial_nodes;
  std::vector<double> radial_weights;
  int n_theta = 0;

  std::size_t size() const { return nodes.size(); }
};

// sizes: radial {n_r}, angular {n_theta}, line-hermite {n}, planar {n_r, n_theta}.
// Gauss-Laguerre nodes whose weight underflows double precision are dropped.
QuadratureRule make_rule(RuleKind kind, std::span<const int> sizes);
QuadratureRule make_rule(RuleKind kind, std::initializer_list<int> sizes);

// Composite Gauss-Legendre on [lo, hi]; panel edges also placed at every
// breakpoint inside the interval.
QuadratureRule make_line_rule(double lo, double hi, std::span<const double> breakpoints,
                              int panels, int order);

// Default sizes: 200 radial, 256 angular, 200 Hermite.
const QuadratureRule& default_planar_rule();
const QuadratureRule& default_radial_rule();
const QuadratureRule& default_line_hermite_rule();

cplx integrate_gaussian(const std::function<cplx(cplx)>& F, const QuadratureRule& rule);

// int_R F(x) e^{-x^2} dx on a line-hermite rule.
cplx integrate_hermite(const std::function<cplx(double)>& F, const QuadratureRule& rule);

// int F(x) dx on a line-composite rule.
cplx integrate_line(const std::function<cplx(double)>& F, const QuadratureRule& rule);

}  // namespace fock
