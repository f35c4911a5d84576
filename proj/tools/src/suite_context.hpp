#pragma once

#include <random>
#include <string>
#include <vector>

#include "fockbench/fockbench.hpp"
#include "fockbench/verify/suites.hpp"

namespace fock::verify {

// Per-suite state: the config, a jitter stream seeded from (seed, suite) and
// the checks collected so far.
class SuiteContext {
 public:
  SuiteContext(const RunConfig& cfg, const std::string& suite);

  const RunConfig& cfg;
  std::vector<Check> checks;

  double tol(const std::string& key) const { return cfg.tol(suite_ + "/" + key); }
  void check(std::string name, double measured, double expected, const std::string& tol_key, bool flagged = false,
             std::string detail = {});
  void bound(std::string name, double value, double limit, const std::string& tol_key, bool flagged = false,
             std::string detail = {});

  cplx jitter(cplx z);
  // n x n grid on [c - h, c + h]^2 (real and imaginary parts), each point jittered.
  std::vector<cplx> square_grid(cplx center, double half, int n);
  const QuadratureRule& planar() const { return planar_; }

 private:
  std::string suite_;
  std::mt19937_64 rng_;
  QuadratureRule planar_;
};

// Running maximum of an error with the place it occurred.
struct MaxError {
  double value = 0.0;
  bool flagged = false;
  std::string where;
  void take(double e, bool f, const std::string& at);
  void take(double e, bool f = false) { take(e, f, {}); }
};

std::string fmt(cplx z);
std::string fmt(double x);

using SuiteFn = void (*)(SuiteContext&);

void suite_weyl_toeplitz(SuiteContext&);
void suite_berezin_heat(SuiteContext&);
void suite_composition_kernel(SuiteContext&);
void suite_wco_symbol(SuiteContext&);
void suite_wco_berezin(SuiteContext&);
void suite_distance_bound(SuiteContext&);
void suite_volterra_matrix(SuiteContext&);
void suite_volterra_berezin(SuiteContext&);
void suite_volterra_decomposition(SuiteContext&);
void suite_index_volterra(SuiteContext&);
void suite_singular_multiplier(SuiteContext&);
void suite_singular_berezin(SuiteContext&);
void suite_singular_shift(SuiteContext&);
void suite_singular_vertical_toeplitz(SuiteContext&);
void suite_toeplitztype_convolution(SuiteContext&);
void suite_laguerre_fourier_weyl(SuiteContext&);
void suite_hausdorff_eigen(SuiteContext&);
void suite_hausdorff_norm(SuiteContext&);
void suite_hausdorff_decay(SuiteContext&);
void suite_localization_wiener(SuiteContext&);
void suite_bargmann_basis(SuiteContext&);

}  // namespace fock::verify
