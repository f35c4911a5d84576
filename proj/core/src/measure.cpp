#include <cmath>
#include <limits>
#include <sstream>

#include "detail.hpp"
#include "fockbench/symbols.hpp"

namespace fock {

MeasureSpec MeasureSpec::atom(double x, cplx weight) { return MeasureSpec().add_atom(x, weight); }

MeasureSpec MeasureSpec::atoms(std::vector<std::pair<double, cplx>> list) {
  MeasureSpec m;
  for (const auto& [x, w] : list) m.add_atom(x, w);
  return m;
}

MeasureSpec& MeasureSpec::add_atom(double x, cplx weight) {
  require_finite(x, "atom location");
  require_finite(weight, "atom weight");
  atoms_.emplace_back(x, weight);
  return *this;
}

MeasureSpec& MeasureSpec::set_density(MeasureDensity d) {
  if (d.t.size() < 2 || d.t.size() != d.values.size())
    throw PreconditionError("density has >= 2 matching samples", "");
  for (size_t i = 0; i < d.t.size(); ++i) {
    require_finite(d.t[i], "density abscissa");
    require_finite(d.values[i], "density value");
    if (i > 0 && !(d.t[i] > d.t[i - 1]))
      throw PreconditionError("density grid strictly increasing", "");
  }
  density_ = std::move(d);
  return *this;
}

MeasureSpec MeasureSpec::power_density(cplx coef, double power, double t0, double t1, int samples) {
  if (!(t0 > 0) || samples < 2) throw PreconditionError("t0 > 0 and samples >= 2", "");
  if (std::isinf(t1)) {
    if (!(power < 0)) throw PreconditionError("power < 0 for an unbounded density", "");
    // |coef| t_max^power / (-power) <= 1e-10
    t1 = std::pow(1e-10 * (-power) / std::abs(coef), 1.0 / power);
    t1 = std::max(t1, 2.0 * t0);
  }
  if (!(t1 > t0)) throw PreconditionError("t1 > t0", "");
  MeasureDensity d;
  const double ratio = std::log(t1 / t0);
  for (int i = 0; i < samples; ++i) {
    const double t = (i == samples - 1) ? t1 : t0 * std::exp(ratio * i / (samples - 1));
    d.t.push_back(t);
    d.values.push_back(coef * std::pow(t, power));
  }
  MeasureSpec m;
  m.set_density(std::move(d));
  return m;
}

namespace {

// int_{a}^{b} t^{-(n+1)} rho(t) dt on one grid cell. Positive cells use the
// power law through both end samples; anything else is linear in t.
cplx cell_moment(double a, double b, cplx ra, cplx rb, int n) {
  const double L = std::log(b / a);
  if (ra.imag() == 0 && rb.imag() == 0 && ra.real() > 0 && rb.real() > 0) {
    const double beta = std::log(rb.real() / ra.real()) / L;
    const double gamma = beta - n;  // integrand ra a^{-beta} t^{gamma-1}
    const double x = gamma * L;
    const double factor = std::abs(x) < 1e-14 ? L : std::expm1(x) / gamma;
    return ra.real() * std::pow(a, -static_cast<double>(n)) * factor;
  }
  // rho = A + B t
  const cplx B = (rb - ra) / (b - a);
  const cplx A = ra - B * a;
  auto int_pow = [&](int k) -> double {  // int_a^b t^{-k} dt
    if (k == 1) return L;
    return (std::pow(a, 1.0 - k) - std::pow(b, 1.0 - k)) / (k - 1.0);
  };
  return A * int_pow(n + 1) + B * int_pow(n);
}

}  // namespace

cplx MeasureSpec::moment(int n) const {
  cplx acc = 0.0;
  for (const auto& [x, w] : atoms_) acc += w * std::pow(x, -(n + 1.0));
  if (density_) {
    const auto& d = *density_;
    for (size_t i = 0; i + 1 < d.t.size(); ++i)
      acc += cell_moment(d.t[i], d.t[i + 1], d.values[i], d.values[i + 1], n);
  }
  return acc;
}

double MeasureSpec::total_variation() const {
  double acc = 0.0;
  for (const auto& [x, w] : atoms_) acc += std::abs(w) / x;
  if (density_) {
    const auto& d = *density_;
    for (size_t i = 0; i + 1 < d.t.size(); ++i)
      acc += cell_moment(d.t[i], d.t[i + 1], std::abs(d.values[i]), std::abs(d.values[i + 1]), 0)
                 .real();
  }
  return acc;
}

cplx MeasureSpec::mass_at_one() const {
  cplx acc = 0.0;
  for (const auto& [x, w] : atoms_)
    if (x == 1.0) acc += w;
  return acc;
}

bool MeasureSpec::is_positive() const {
  for (const auto& [x, w] : atoms_)
    if (w.imag() != 0 || w.real() < 0) return false;
  if (density_)
    for (cplx v : density_->values)
      if (v.imag() != 0 || v.real() < 0) return false;
  return true;
}

void MeasureSpec::validate() const {
  for (const auto& [x, w] : atoms_) {
    if (x < 1.0) {
      std::ostringstream os;
      os << "atom at " << x << " < 1";
      throw PreconditionError("rho((0, 1)) = 0", os.str());
    }
  }
  if (density_ && density_->t.front() < 1.0) {
    std::ostringstream os;
    os << "density starts at " << density_->t.front() << " < 1";
    throw PreconditionError("rho((0, 1)) = 0", os.str());
  }
  if (!std::isfinite(total_variation()))
    throw PreconditionError("int (1/t) d|rho| finite", "");
}

std::string MeasureSpec::describe() const {
  std::ostringstream os;
  os << "rho(";
  bool first = true;
  for (const auto& [x, w] : atoms_) {
    os << (first ? "" : "+") << detail::fmt(w) << "*delta_" << x;
    first = false;
  }
  if (density_) {
    os << (first ? "" : "+") << "density[" << density_->t.front() << "," << density_->t.back()
       << "]";
  }
  os << ")";
  return os.str();
}

}  // namespace fock
