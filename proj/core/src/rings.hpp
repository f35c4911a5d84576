#pragma once

#include <Eigen/Dense>
#include <functional>

#include "fockbench/quadrature.hpp"

namespace fock::detail {

// Angular Fourier modes of f on every ring of a planar-polar rule:
//   F(r, q + Q) = (1/n_theta) sum_t f(sqrt(s_r) e^{i theta_t}) e^{-i q theta_t},  |q| <= Q.
Eigen::MatrixXcd angular_modes(const std::function<cplx(cplx)>& f, const QuadratureRule& rule, int Q);

void require_planar(const QuadratureRule& rule);

}  // namespace fock::detail
