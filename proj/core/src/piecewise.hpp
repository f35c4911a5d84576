#pragma once

#include <vector>

#include "fockbench/quadrature.hpp"
#include "fockbench/symbols.hpp"

namespace fock::detail {

// Radial nodes s = |z|^2 and weights for int g(s) e^{-s} ds, split at the given radii.
void split_radial_rule(const std::vector<double>& radii, int N, std::vector<double>& s,
                       std::vector<double>& w);

// The planar rule's radial part, or the split rule when f jumps.
void radial_rule_for(const SymbolSpec& f, int N, const QuadratureRule& rule, std::vector<double>& s,
                     std::vector<double>& w);

// Regularized incomplete gamma pair P(n + 1, x), Q(n + 1, x).
void poisson_split(int n, double x, double& P, double& Q);

// Heat transforms for symbols with jumps.
cplx heat_radial_piecewise(const SymbolSpec& f, double t, cplx w);
cplx heat_vertical(const VerticalSymbol& v, double t, cplx w);
cplx heat_grid(const SymbolSpec& f, const GridSamplesSymbol& g, double t, cplx w);

// Tensor Gauss-Legendre nodes over the sampled rectangle, cells no wider than h.
void grid_cells(const GridSamplesSymbol& g, double h, int order, std::vector<cplx>& z,
                std::vector<double>& wt);

}  // namespace fock::detail
