#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fockbench/types.hpp"

namespace fock {

// ---------------------------------------------------------------- line profiles

struct StepProfile {
  cplx lo = -1.0;   // value for x < x0
  cplx hi = 1.0;    // value for x > x0
  double x0 = 0.0;
};
struct GaussianProfile {
  cplx amp = 1.0;
  double center = 0.0;
  double width = 1.0;  // exp(-(x - center)^2 / (2 width^2))
};
struct CosineProfile {
  cplx offset = 0.0;
  cplx amp = 1.0;
  double freq = 1.0;
  double phase = 0.0;  // offset + amp cos(freq x + phase)
};
struct GridProfile {
  std::vector<double> xs;     // strictly increasing
  std::vector<cplx> values;   // piecewise linear, constant beyond the ends
};

// A bounded function on R, optionally shifted (x -> x + shift) and blurred
// by a centred Gaussian of the given variance.
class LineProfile {
 public:
  using Family = std::variant<StepProfile, GaussianProfile, CosineProfile, GridProfile>;

  LineProfile() : LineProfile(constant(1.0)) {}
  explicit LineProfile(Family f);

  static LineProfile constant(cplx c);
  static LineProfile step(cplx lo, cplx hi, double x0 = 0.0);
  static LineProfile gaussian(cplx amp, double center, double width);
  static LineProfile cosine(cplx offset, cplx amp, double freq, double phase = 0.0);
  static LineProfile grid(std::vector<double> xs, std::vector<cplx> values);

  cplx operator()(double x) const;

  LineProfile shifted(double s) const;      // x -> m(x + s)
  LineProfile mirrored() const;             // x -> m(-x)
  LineProfile blurred(double variance) const;

  double sup_abs() const;
  std::vector<double> breakpoints() const;  // jump/kink locations, empty once blurred
  bool is_real() const;
  std::string describe() const;

  const Family& family() const { return family_; }
  double shift() const { return shift_; }
  double blur() const { return blur_; }
  int sign() const { return sign_; }

 private:
  cplx base(double x) const;
  Family family_;
  int sign_ = 1;        // argument orientation
  double shift_ = 0.0;
  double blur_ = 0.0;
};

// ---------------------------------------------------------------- analytic functions

struct Polynomial {
  std::vector<cplx> coeffs;  // coeffs[k] multiplies z^k
};
struct KernelMultiple {
  cplx c = 1.0;
  cplx b = 0.0;  // c exp(z conj(b))
};
struct ExpLinearTimesPoly {
  std::vector<cplx> coeffs;
  cplx c = 0.0;  // p(z) exp(z conj(c))
};

class AnalyticSpec {
 public:
  using Family = std::variant<Polynomial, KernelMultiple, ExpLinearTimesPoly>;

  AnalyticSpec() : AnalyticSpec(Polynomial{{1.0}}) {}
  explicit AnalyticSpec(Family f);

  static AnalyticSpec polynomial(std::vector<cplx> coeffs);
  static AnalyticSpec constant(cplx c) { return polynomial({c}); }
  static AnalyticSpec kernel_multiple(cplx c, cplx b);
  static AnalyticSpec exp_linear_times_poly(std::vector<cplx> coeffs, cplx c);

  cplx operator()(cplx z) const;
  // Taylor coefficients through z^degree.
  std::vector<std::complex<long double>> taylor(int degree) const;
  bool is_zero() const;
  std::string describe() const;

  // h with f(z) = f(0) + z h(z), as a polynomial of the given degree.
  AnalyticSpec quotient_after_constant(int degree) const;

  const Family& family() const { return family_; }

 private:
  Family family_;
};

// ---------------------------------------------------------------- symbols on C

struct RadialGaussianSum {
  std::vector<std::pair<cplx, double>> terms;  // sum amp exp(-c |z|^2)
};
struct RadialPower {
  cplx amp = 1.0;
  int k = 2;  // amp |z|^k (unbounded unless k = 0)
};
struct RadialDisc {
  double radius = 1.0;
  cplx inside = 1.0;
  cplx outside = 0.0;
};
struct AngularSymbol {
  int power = 0;  // (z/|z|)^power
};
struct PlaneWaveSymbol {
  cplx z0 = 0.0;  // exp(2i Im(w conj z0) + |z0|^2/2)
};
struct VerticalSymbol {
  LineProfile m0;
  int sign = -1;  // f(z) = m0(sign * Im z)
};
struct GridSamplesSymbol {
  double x0 = 0.0, y0 = 0.0, dx = 1.0, dy = 1.0;
  int nx = 0, ny = 0;
  std::vector<cplx> values;  // row-major in y, bilinear, `outside` beyond
  cplx outside = 0.0;
};
struct WcoSymbol {
  AnalyticSpec psi;
  cplx a = 0.0;
  cplx lambda = 0.5;  // f_{psi,phi}
};
class SymbolSpec;
struct SymbolSum {
  std::vector<std::pair<cplx, std::shared_ptr<const SymbolSpec>>> terms;
};

class SymbolSpec {
 public:
  using Family = std::variant<RadialGaussianSum, RadialPower, RadialDisc, AngularSymbol,
                              PlaneWaveSymbol, VerticalSymbol, GridSamplesSymbol, WcoSymbol,
                              SymbolSum>;

  SymbolSpec() : SymbolSpec(constant(1.0)) {}
  explicit SymbolSpec(Family f);

  static SymbolSpec constant(cplx c);
  static SymbolSpec gaussian_radial(double c, cplx amp = 1.0);
  static SymbolSpec radial_gaussian_sum(std::vector<std::pair<cplx, double>> terms);
  static SymbolSpec radial_power(int k, cplx amp = 1.0);
  static SymbolSpec radial_disc(double radius, cplx inside, cplx outside);
  static SymbolSpec angular(int power);
  static SymbolSpec plane_wave(cplx z0);
  static SymbolSpec vertical(LineProfile m0, int sign = -1);
  static SymbolSpec grid(double x0, double y0, double dx, double dy, int nx, int ny,
                         std::vector<cplx> values, cplx outside = 0.0);
  static SymbolSpec wco(AnalyticSpec psi, cplx a, cplx lambda);
  static SymbolSpec sum(std::vector<std::pair<cplx, SymbolSpec>> terms);

  cplx operator()(cplx z) const;
  // Radial profile g(r) when the symbol depends on |z| only.
  bool is_radial() const;
  cplx radial(double r) const;
  // Radii where a radial symbol jumps.
  std::vector<double> radial_breakpoints() const;
  // Sup of |f|; +inf for unbounded families.
  double sup_bound() const;
  bool is_real() const;
  std::string describe() const;

  const Family& family() const { return family_; }

 private:
  Family family_;
};

// ---------------------------------------------------------------- measures on [1, inf)

struct MeasureDensity {
  std::vector<double> t;      // log-spaced grid in [1, t_max]
  std::vector<cplx> values;   // density samples
};

class MeasureSpec {
 public:
  MeasureSpec() = default;

  static MeasureSpec atom(double x, cplx weight = 1.0);
  static MeasureSpec atoms(std::vector<std::pair<double, cplx>> list);
  // coef * t^power on [t0, t1]; t1 = inf picks t_max so the dropped tail of
  // int t^{-1} |rho| is below 1e-10.
  static MeasureSpec power_density(cplx coef, double power, double t0, double t1,
                                   int samples = 2001);

  MeasureSpec& add_atom(double x, cplx weight);
  MeasureSpec& set_density(MeasureDensity d);

  const std::vector<std::pair<double, cplx>>& atom_list() const { return atoms_; }
  const std::optional<MeasureDensity>& density() const { return density_; }
  bool purely_atomic() const { return !density_.has_value(); }

  // int t^{-(n+1)} d rho.
  cplx moment(int n) const;
  // int t^{-1} d|rho|.
  double total_variation() const;
  cplx mass_at_one() const;
  bool is_positive() const;
  // Throws PreconditionError unless supported in [1, inf).
  void validate() const;
  std::string describe() const;

 private:
  std::vector<std::pair<double, cplx>> atoms_;
  std::optional<MeasureDensity> density_;
};

}  // namespace fock
