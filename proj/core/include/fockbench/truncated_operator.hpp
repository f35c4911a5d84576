#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fockbench/types.hpp"

namespace fock {

// Expression tree recording how an operator was built.
struct Provenance {
  std::string label;
  std::vector<std::shared_ptr<const Provenance>> children;

  static std::shared_ptr<const Provenance> leaf(std::string label);
  static std::shared_ptr<const Provenance> node(std::string label,
                                                std::vector<std::shared_ptr<const Provenance>> kids);
  std::string to_string() const;
};

// N x N section of an operator: entries(m, n) = <A e_n, e_m>.
class TruncatedOperator {
 public:
  TruncatedOperator(Eigen::MatrixXcd entries, std::shared_ptr<const Provenance> provenance,
                    double truncation_tail = 0.0);
  TruncatedOperator(Eigen::MatrixXcd entries, std::string label, double truncation_tail = 0.0);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  cplx operator()(int m, int n) const { return entries_(m, n); }
  const std::shared_ptr<const Provenance>& provenance() const { return provenance_; }
  std::string describe() const { return provenance_->to_string(); }
  // Largest column norm of the coefficients dropped beyond degree N-1
  // (0 when the section is exact or unknown).
  double truncation_tail() const { return tail_; }

  TruncatedOperator leading_block(int n) const;

 private:
  Eigen::MatrixXcd entries_;
  std::shared_ptr<const Provenance> provenance_;
  double tail_ = 0.0;
};

TruncatedOperator compose(const TruncatedOperator& A, const TruncatedOperator& B);
TruncatedOperator adjoint(const TruncatedOperator& A);
TruncatedOperator linear_combine(const std::vector<std::pair<cplx, TruncatedOperator>>& terms);
TruncatedOperator scale(cplx c, const TruncatedOperator& A);
TruncatedOperator identity_operator(int N);
TruncatedOperator zero_operator(int N);
// e_j (x) e_j : f -> <f, e_j> e_j.
TruncatedOperator basis_projection(int j, int N);

}  // namespace fock
