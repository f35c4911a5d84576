#include "fockbench/truncated_operator.hpp"

#include <cmath>
#include <sstream>

#include "detail.hpp"

namespace fock {

std::shared_ptr<const Provenance> Provenance::leaf(std::string label) {
  return std::make_shared<const Provenance>(Provenance{std::move(label), {}});
}

std::shared_ptr<const Provenance> Provenance::node(
    std::string label, std::vector<std::shared_ptr<const Provenance>> kids) {
  return std::make_shared<const Provenance>(Provenance{std::move(label), std::move(kids)});
}

std::string Provenance::to_string() const {
  if (children.empty()) return label;
  std::string s = label + "(";
  for (size_t i = 0; i < children.size(); ++i) s += (i ? ", " : "") + children[i]->to_string();
  return s + ")";
}

TruncatedOperator::TruncatedOperator(Eigen::MatrixXcd entries,
                                     std::shared_ptr<const Provenance> provenance,
                                     double truncation_tail)
    : entries_(std::move(entries)), provenance_(std::move(provenance)), tail_(truncation_tail) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1)
    throw PreconditionError("square matrix with dim >= 1", "truncated operator");
  if (!entries_.allFinite())
    throw PreconditionError("entries finite", provenance_ ? provenance_->to_string() : "");
}

TruncatedOperator::TruncatedOperator(Eigen::MatrixXcd entries, std::string label,
                                     double truncation_tail)
    : TruncatedOperator(std::move(entries), Provenance::leaf(std::move(label)), truncation_tail) {}

TruncatedOperator TruncatedOperator::leading_block(int n) const {
  if (n < 1 || n > dim()) throw PreconditionError("1 <= block <= dim", "leading_block");
  return TruncatedOperator(entries_.topLeftCorner(n, n),
                           Provenance::node("block" + std::to_string(n), {provenance_}), tail_);
}

namespace {
void require_same_dim(const TruncatedOperator& A, const TruncatedOperator& B, const char* op) {
  if (A.dim() != B.dim())
    throw PreconditionError("matching dimensions",
                            std::string(op) + ": " + std::to_string(A.dim()) + " vs " +
                                std::to_string(B.dim()));
}
}  // namespace

TruncatedOperator compose(const TruncatedOperator& A, const TruncatedOperator& B) {
  require_same_dim(A, B, "compose");
  return TruncatedOperator(A.entries() * B.entries(),
                           Provenance::node("compose", {A.provenance(), B.provenance()}),
                           std::max(A.truncation_tail(), B.truncation_tail()));
}

TruncatedOperator adjoint(const TruncatedOperator& A) {
  return TruncatedOperator(A.entries().adjoint(), Provenance::node("adjoint", {A.provenance()}),
                           A.truncation_tail());
}

TruncatedOperator linear_combine(const std::vector<std::pair<cplx, TruncatedOperator>>& terms) {
  if (terms.empty()) throw PreconditionError("at least one term", "linear_combine");
  const int N = terms.front().second.dim();
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(N, N);
  std::vector<std::shared_ptr<const Provenance>> kids;
  double tail = 0.0;
  for (const auto& [c, A] : terms) {
    require_same_dim(terms.front().second, A, "linear_combine");
    M += c * A.entries();
    kids.push_back(Provenance::node(detail::fmt(c) + "*", {A.provenance()}));
    tail = std::max(tail, std::abs(c) * A.truncation_tail());
  }
  return TruncatedOperator(std::move(M), Provenance::node("sum", std::move(kids)), tail);
}

TruncatedOperator scale(cplx c, const TruncatedOperator& A) { return linear_combine({{c, A}}); }

TruncatedOperator identity_operator(int N) {
  return TruncatedOperator(Eigen::MatrixXcd::Identity(N, N), "identity");
}

TruncatedOperator zero_operator(int N) {
  return TruncatedOperator(Eigen::MatrixXcd::Zero(N, N), "zero");
}

TruncatedOperator basis_projection(int j, int N) {
  if (j < 0 || j >= N) throw PreconditionError("0 <= j < N", "basis_projection");
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(N, N);
  M(j, j) = 1.0;
  return TruncatedOperator(std::move(M), "e" + std::to_string(j) + "(x)e" + std::to_string(j));
}

}  // namespace fock
