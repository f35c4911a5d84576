#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "detail.hpp"
#include "fockbench/quadrature.hpp"
#include "fockbench/symbols.hpp"

namespace fock {

using detail::fmt;
using detail::overloaded;

namespace {

cplx grid_eval(const GridProfile& g, double y) {
  const auto& xs = g.xs;
  if (y <= xs.front()) return g.values.front();
  if (y >= xs.back()) return g.values.back();
  const auto it = std::upper_bound(xs.begin(), xs.end(), y);
  const std::size_t i = static_cast<std::size_t>(it - xs.begin()) - 1;
  const double t = (y - xs[i]) / (xs[i + 1] - xs[i]);
  return (1.0 - t) * g.values[i] + t * g.values[i + 1];
}

}  // namespace

LineProfile::LineProfile(Family f) : family_(std::move(f)) {
  if (const auto* g = std::get_if<GridProfile>(&family_)) {
    if (g->xs.size() < 2 || g->xs.size() != g->values.size())
      throw PreconditionError("grid profile has >= 2 matching samples", "");
    for (std::size_t i = 0; i < g->xs.size(); ++i) {
      require_finite(g->xs[i], "grid abscissa");
      require_finite(g->values[i], "grid value");
      if (i > 0 && !(g->xs[i] > g->xs[i - 1]))
        throw PreconditionError("grid abscissae strictly increasing", "");
    }
  }
}

LineProfile LineProfile::constant(cplx c) { return LineProfile(CosineProfile{c, 0.0, 0.0, 0.0}); }
LineProfile LineProfile::step(cplx lo, cplx hi, double x0) { return LineProfile(StepProfile{lo, hi, x0}); }
LineProfile LineProfile::gaussian(cplx amp, double center, double width) {
  if (!(width > 0)) throw PreconditionError("gaussian width > 0", "");
  return LineProfile(GaussianProfile{amp, center, width});
}
LineProfile LineProfile::cosine(cplx offset, cplx amp, double freq, double phase) {
  return LineProfile(CosineProfile{offset, amp, freq, phase});
}
LineProfile LineProfile::grid(std::vector<double> xs, std::vector<cplx> values) {
  return LineProfile(GridProfile{std::move(xs), std::move(values)});
}

cplx LineProfile::base(double y) const {
  const double v = blur_;
  return std::visit(
      overloaded{
          [&](const StepProfile& s) -> cplx {
            if (v == 0.0) {
              if (y < s.x0) return s.lo;
              if (y > s.x0) return s.hi;
              return 0.5 * (s.lo + s.hi);
            }
            const double cdf = 0.5 * std::erfc(-(y - s.x0) / std::sqrt(2.0 * v));
            return s.lo + (s.hi - s.lo) * cdf;
          },
          [&](const GaussianProfile& g) -> cplx {
            const double w2 = g.width * g.width + v;
            const double d = y - g.center;
            return g.amp * (g.width / std::sqrt(w2)) * std::exp(-d * d / (2.0 * w2));
          },
          [&](const CosineProfile& c) -> cplx {
            return c.offset +
                   c.amp * std::exp(-0.5 * c.freq * c.freq * v) * std::cos(c.freq * y + c.phase);
          },
          [&](const GridProfile& g) -> cplx {
            if (v == 0.0) return grid_eval(g, y);
            // Gauss-Hermite: (1/sqrt(pi)) int m(y - sqrt(2v) u) e^{-u^2} du
            static const QuadratureRule gh = make_rule(RuleKind::LineHermite, {96});
            cplx acc = 0.0;
            const double sc = std::sqrt(2.0 * v);
            for (std::size_t i = 0; i < gh.size(); ++i)
              acc += gh.weights[i] * grid_eval(g, y - sc * gh.nodes[i].real());
            return acc / std::sqrt(std::numbers::pi);
          }},
      family_);
}

cplx LineProfile::operator()(double x) const { return base(sign_ * x + shift_); }

LineProfile LineProfile::shifted(double s) const {
  LineProfile p = *this;
  p.shift_ += sign_ * s;
  return p;
}

LineProfile LineProfile::mirrored() const {
  LineProfile p = *this;
  p.sign_ = -sign_;
  return p;
}

LineProfile LineProfile::blurred(double variance) const {
  if (!(variance >= 0)) throw PreconditionError("blur variance >= 0", "");
  LineProfile p = *this;
  p.blur_ += variance;
  return p;
}

double LineProfile::sup_abs() const {
  const double v = blur_;
  return std::visit(
      overloaded{[](const StepProfile& s) { return std::max(std::abs(s.lo), std::abs(s.hi)); },
                 [&](const GaussianProfile& g) {
                   return std::abs(g.amp) * g.width / std::sqrt(g.width * g.width + v);
                 },
                 [&](const CosineProfile& c) {
                   const double a = std::abs(c.amp) * std::exp(-0.5 * c.freq * c.freq * v);
                   // exact when offset and amplitude are real
                   if (c.offset.imag() == 0 && c.amp.imag() == 0)
                     return std::abs(c.offset.real()) + a;
                   return std::abs(c.offset) + a;
                 },
                 [](const GridProfile& g) {
                   double m = 0.0;
                   for (cplx c : g.values) m = std::max(m, std::abs(c));
                   return m;
                 }},
      family_);
}

std::vector<double> LineProfile::breakpoints() const {
  std::vector<double> ys;
  if (blur_ == 0.0) {
    if (const auto* s = std::get_if<StepProfile>(&family_)) ys.push_back(s->x0);
    if (const auto* g = std::get_if<GridProfile>(&family_)) ys = g->xs;
  }
  std::vector<double> xs;
  for (double y : ys) xs.push_back(sign_ * (y - shift_));
  std::sort(xs.begin(), xs.end());
  return xs;
}

bool LineProfile::is_real() const {
  return std::visit(
      overloaded{[](const StepProfile& s) { return s.lo.imag() == 0 && s.hi.imag() == 0; },
                 [](const GaussianProfile& g) { return g.amp.imag() == 0; },
                 [](const CosineProfile& c) { return c.offset.imag() == 0 && c.amp.imag() == 0; },
                 [](const GridProfile& g) {
                   return std::all_of(g.values.begin(), g.values.end(),
                                      [](cplx c) { return c.imag() == 0; });
                 }},
      family_);
}

std::string LineProfile::describe() const {
  std::ostringstream os;
  std::visit(overloaded{[&](const StepProfile& s) {
                          os << "step(" << fmt(s.lo) << "," << fmt(s.hi) << ",x0=" << s.x0 << ")";
                        },
                        [&](const GaussianProfile& g) {
                          os << "gaussian(" << fmt(g.amp) << ",c=" << g.center
                             << ",w=" << g.width << ")";
                        },
                        [&](const CosineProfile& c) {
                          if (c.amp == 0.0)
                            os << "const(" << fmt(c.offset) << ")";
                          else
                            os << "cosine(" << fmt(c.offset) << "+" << fmt(c.amp) << "cos("
                               << c.freq << "x+" << c.phase << "))";
                        },
                        [&](const GridProfile& g) { os << "grid(" << g.xs.size() << ")"; }},
             family_);
  if (sign_ < 0) os << "[mirrored]";
  if (shift_ != 0.0) os << "[shift " << shift_ << "]";
  if (blur_ != 0.0) os << "[blur " << blur_ << "]";
  return os.str();
}

}  // namespace fock
