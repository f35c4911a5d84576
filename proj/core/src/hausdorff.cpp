#include "fockbench/operators.hpp"

namespace fock {

TruncatedOperator hausdorff_matrix(const MeasureSpec& rho, int N) {
  if (N < 1) throw PreconditionError("N >= 1", "hausdorff_matrix");
  rho.validate();
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(N, N);
  for (int n = 0; n < N; ++n) H(n, n) = rho.moment(n);
  return TruncatedOperator(std::move(H), "hausdorff[" + rho.describe() + "]");
}

}  // namespace fock
