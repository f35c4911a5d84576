#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fockbench/operators.hpp"
#include "fockbench/transforms.hpp"

namespace fock {

enum class Verdict { Holds, Fails, Inconclusive };
const char* to_string(Verdict v);

struct Witness {
  cplx point = 0.0;
  double value = 0.0;
};

struct PredicateReport {
  std::string name;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Witness> witness;  // always present when verdict == Fails
  std::vector<std::pair<std::string, double>> data;
  std::string note;

  double datum(const std::string& key) const;  // NaN when absent
};

struct PredicatePair {
  PredicateReport bounded;
  PredicateReport compact;
};

struct DecayProfile {
  std::vector<double> radii;
  std::vector<double> sup_values;
  bool flagged = false;  // requested radii beyond the reliable radius were dropped
};

struct RadiusLadder {
  std::vector<double> radii{2.0, 4.0, 6.0, 8.0};
  int n_angles = 64;
  double compact_tolerance = 1e-6;
  double stability = 0.10;  // relative spread allowed between the outer two rungs
};

double operator_norm(const TruncatedOperator& A);
Eigen::VectorXd singular_values(const TruncatedOperator& A);

// |psi(z)|^2 exp(|a + lambda z|^2 - |z|^2), +inf on overflow.
double M_z_quantity(const AnalyticSpec& psi, cplx a, cplx lambda, cplx z);
// |g'(z)| / (1 + |z|) exp((|a + lambda z|^2 - |z|^2) / 2).
double R_quantity(const AnalyticSpec& gprime, cplx a, cplx lambda, cplx z);

// Ladder protocol shared by the WCO and Volterra predicates. bounded: the
// running sup is finite and settles (last rung within 10% of the previous, or
// increments contracting). compact: outer circle max below tolerance, or
// decreasing along the ladder with power-law decay at least |z|^{-1/2}.
PredicatePair ladder_predicates(const std::string& name, const std::function<double(cplx)>& q,
                                const RadiusLadder& ladder);

PredicatePair wco_predicates(const AnalyticSpec& psi, cplx a, cplx lambda,
                             const RadiusLadder& ladder = {});
PredicatePair volterra_predicates(const AnalyticSpec& gprime, cplx a, cplx lambda,
                                  const RadiusLadder& ladder = {});

struct HausdorffVerdict {
  PredicatePair predicates;
  double norm = 0.0;  // int (1/t) d rho for positive rho
};
HausdorffVerdict hausdorff_predicates(const MeasureSpec& rho);

struct DistanceBound {
  double value = 0.0;      // limsup M_z / ||W||
  double limsup = 0.0;
  double norm = 0.0;
  bool stable = true;
};
// The lower bound for dist(W_{psi,phi}, T). Rejects lambda = 1, psi = 0.
DistanceBound distance_lower_bound(const AnalyticSpec& psi, cplx a, cplx lambda,
                                   const RadiusLadder& ladder = {}, int N = 48);

struct WcoSymbolResult {
  SymbolSpec symbol;
  PredicateReport bounded;
};
// f_{psi,phi}(w) = (1/lambda) exp(((lambda-1)/lambda)|w|^2 + a conj(w)/lambda) psi((w-a)/lambda).
WcoSymbolResult wco_toeplitz_symbol(const AnalyticSpec& psi, cplx a, cplx lambda);

// Closed forms used as oracles.
cplx wco_berezin_closed_form(const AnalyticSpec& psi, cplx a, cplx lambda, cplx z);
// Heat transform at time t of the Berezin transform of W_{psi,phi}.
cplx wco_heat_closed_form(const AnalyticSpec& psi, cplx a, cplx lambda, double t, cplx w);
// exp(-|z|^2 + a conj z + lambda |z|^2) sum_{k<=K} (-lambda conj z)^k (A^{[k]} g)(z), g(0) = 0.
cplx volterra_berezin_series(const AnalyticSpec& gprime, cplx a, cplx lambda, cplx z, int K = 20);

struct VerticalResult {
  SymbolSpec symbol;        // f(z) = m0(sign Im z)
  LineProfile multiplier;   // m = g * m0
  int sign = -1;
  double mismatch_plus = 0.0;   // max Berezin discrepancy with sign +1
  double mismatch_minus = 0.0;  // same with sign -1
  PredicateReport report;
};
VerticalResult vertical_toeplitz_from_m0(const LineProfile& m0);

// pi^{-1/2} int a(y / sqrt 2) exp(-(x - y)^2) dy.
cplx singular_gamma_a(const LineProfile& a, double x);

struct IndexEstimate {
  std::optional<int> index;  // set only when stable
  bool stable = false;
  std::vector<int> per_dim;
  std::vector<int> kernel_A;
  std::vector<int> kernel_Astar;
  PredicateReport report;
};
// ind = dim ker A - dim ker A*, read off (d + margin) x d sections of A and A*.
// A must be at least max(dims) + margin wide.
IndexEstimate fredholm_index_estimate(const TruncatedOperator& A, const std::vector<int>& dims,
                                      double threshold = 1e-6, int margin = 8);

// |A~(w, z)| <= H(|z - w|) on every pair of grid points.
PredicateReport localization_check(const TruncatedOperator& A, const std::function<double(double)>& H,
                                   const std::vector<cplx>& grid, const std::string& name = "localization");

DecayProfile berezin_decay_profile(const TruncatedOperator& A, const std::vector<double>& radii,
                                   int n_angles = 64);

// max |a_m - a_n| over start <= m, n < size with |sqrt m - sqrt n| <= delta.
PredicateReport slow_oscillation_check(const std::vector<cplx>& seq, double epsilon, double delta,
                                       int start = 0);

// sum c_i exp(-(x_i - 1)|z|^2) for atomic rho.
SymbolSpec hausdorff_toeplitz_symbol(const MeasureSpec& rho);

}  // namespace fock
