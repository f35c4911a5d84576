#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace fock {

using cplx = std::complex<double>;

// A constructor or transform refused its input. `condition()` names the
// mathematical requirement that failed, e.g. "|lambda| <= 1".
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(std::string condition, const std::string& detail)
      : std::invalid_argument("precondition violated: " + condition +
                              (detail.empty() ? "" : " (" + detail + ")")),
        condition_(std::move(condition)) {}
  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

// A value computed outside the region where the truncation is trusted.
template <class T>
struct Flagged {
  T value;
  bool flagged = false;
  std::string note;
};

void require_finite(cplx z, const char* what);
void require_finite(double x, const char* what);

}  // namespace fock
