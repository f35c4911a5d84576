#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "detail.hpp"
#include "fockbench/symbols.hpp"

namespace fock {

using detail::fmt;
using detail::overloaded;

SymbolSpec::SymbolSpec(Family f) : family_(std::move(f)) {
  std::visit(overloaded{[](const RadialGaussianSum& g) {
                          for (const auto& [amp, c] : g.terms) {
                            require_finite(amp, "radial amplitude");
                            require_finite(c, "radial rate");
                          }
                        },
                        [](const GridSamplesSymbol& g) {
                          if (g.nx < 2 || g.ny < 2 ||
                              g.values.size() != static_cast<size_t>(g.nx) * g.ny)
                            throw PreconditionError("grid symbol has nx*ny >= 4 samples", "");
                          if (!(g.dx > 0 && g.dy > 0))
                            throw PreconditionError("grid spacing positive", "");
                          for (cplx v : g.values) {
                            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                              throw PreconditionError("grid symbol bounded",
                                                      "non-finite sample");
                          }
                        },
                        [](const WcoSymbol& w) {
                          if (w.lambda == 0.0) throw PreconditionError("lambda != 0", "");
                        },
                        [](const auto&) {}},
             family_);
}

SymbolSpec SymbolSpec::constant(cplx c) { return radial_gaussian_sum({{c, 0.0}}); }
SymbolSpec SymbolSpec::gaussian_radial(double c, cplx amp) { return radial_gaussian_sum({{amp, c}}); }
SymbolSpec SymbolSpec::radial_gaussian_sum(std::vector<std::pair<cplx, double>> terms) {
  return SymbolSpec(RadialGaussianSum{std::move(terms)});
}
SymbolSpec SymbolSpec::radial_power(int k, cplx amp) { return SymbolSpec(RadialPower{amp, k}); }
SymbolSpec SymbolSpec::radial_disc(double radius, cplx inside, cplx outside) {
  return SymbolSpec(RadialDisc{radius, inside, outside});
}
SymbolSpec SymbolSpec::angular(int power) { return SymbolSpec(AngularSymbol{power}); }
SymbolSpec SymbolSpec::plane_wave(cplx z0) { return SymbolSpec(PlaneWaveSymbol{z0}); }
SymbolSpec SymbolSpec::vertical(LineProfile m0, int sign) {
  if (sign != 1 && sign != -1) throw PreconditionError("sign is +1 or -1", "");
  return SymbolSpec(VerticalSymbol{std::move(m0), sign});
}
SymbolSpec SymbolSpec::grid(double x0, double y0, double dx, double dy, int nx, int ny,
                            std::vector<cplx> values, cplx outside) {
  return SymbolSpec(GridSamplesSymbol{x0, y0, dx, dy, nx, ny, std::move(values), outside});
}
SymbolSpec SymbolSpec::wco(AnalyticSpec psi, cplx a, cplx lambda) {
  return SymbolSpec(WcoSymbol{std::move(psi), a, lambda});
}
SymbolSpec SymbolSpec::sum(std::vector<std::pair<cplx, SymbolSpec>> terms) {
  SymbolSum s;
  for (auto& [c, f] : terms) s.terms.emplace_back(c, std::make_shared<const SymbolSpec>(std::move(f)));
  return SymbolSpec(std::move(s));
}

namespace {

cplx eval_wco(const WcoSymbol& w, cplx z) {
  const cplx lam = w.lambda;
  const cplx u = (z - w.a) / lam;
  cplx expo = ((lam - 1.0) / lam) * std::norm(z) + w.a * std::conj(z) / lam;
  cplx pre = 1.0 / lam;
  // Fold exponential factors of psi into one exponent to avoid overflow.
  if (const auto* k = std::get_if<KernelMultiple>(&w.psi.family())) {
    expo += u * std::conj(k->b);
    pre *= k->c;
  } else if (const auto* e = std::get_if<ExpLinearTimesPoly>(&w.psi.family())) {
    expo += u * std::conj(e->c);
    cplx p = 0.0;
    for (auto it = e->coeffs.rbegin(); it != e->coeffs.rend(); ++it) p = p * u + *it;
    pre *= p;
  } else {
    pre *= w.psi(u);
  }
  if (pre == 0.0) return 0.0;
  return pre * std::exp(expo);
}

cplx eval_grid(const GridSamplesSymbol& g, cplx z) {
  const double fx = (z.real() - g.x0) / g.dx, fy = (z.imag() - g.y0) / g.dy;
  if (fx < 0 || fy < 0 || fx > g.nx - 1 || fy > g.ny - 1) return g.outside;
  const int i = std::min(static_cast<int>(fx), g.nx - 2);
  const int j = std::min(static_cast<int>(fy), g.ny - 2);
  const double tx = fx - i, ty = fy - j;
  auto at = [&](int a, int b) { return g.values[static_cast<size_t>(b) * g.nx + a]; };
  return (1 - tx) * (1 - ty) * at(i, j) + tx * (1 - ty) * at(i + 1, j) +
         (1 - tx) * ty * at(i, j + 1) + tx * ty * at(i + 1, j + 1);
}

}  // namespace

cplx SymbolSpec::operator()(cplx z) const {
  return std::visit(
      overloaded{[&](const RadialGaussianSum&) { return radial(std::abs(z)); },
                 [&](const RadialPower&) { return radial(std::abs(z)); },
                 [&](const RadialDisc&) { return radial(std::abs(z)); },
                 [&](const AngularSymbol& a) -> cplx {
                   if (z == 0.0) return a.power == 0 ? 1.0 : 0.0;
                   return std::polar(1.0, a.power * std::arg(z));
                 },
                 [&](const PlaneWaveSymbol& p) {
                   const double im = std::imag(z * std::conj(p.z0));
                   return std::exp(cplx(0.5 * std::norm(p.z0), 2.0 * im));
                 },
                 [&](const VerticalSymbol& v) { return v.m0(v.sign * z.imag()); },
                 [&](const GridSamplesSymbol& g) { return eval_grid(g, z); },
                 [&](const WcoSymbol& w) { return eval_wco(w, z); },
                 [&](const SymbolSum& s) {
                   cplx acc = 0.0;
                   for (const auto& [c, f] : s.terms) acc += c * (*f)(z);
                   return acc;
                 }},
      family_);
}

bool SymbolSpec::is_radial() const {
  return std::visit(overloaded{[](const RadialGaussianSum&) { return true; },
                               [](const RadialPower&) { return true; },
                               [](const RadialDisc&) { return true; },
                               [](const AngularSymbol& a) { return a.power == 0; },
                               [](const SymbolSum& s) {
                                 for (const auto& t : s.terms)
                                   if (!t.second->is_radial()) return false;
                                 return true;
                               },
                               [](const auto&) { return false; }},
                    family_);
}

cplx SymbolSpec::radial(double r) const {
  return std::visit(
      overloaded{[&](const RadialGaussianSum& g) {
                   cplx acc = 0.0;
                   for (const auto& [amp, c] : g.terms) acc += amp * std::exp(-c * r * r);
                   return acc;
                 },
                 [&](const RadialPower& p) { return p.amp * std::pow(r, p.k); },
                 [&](const RadialDisc& d) { return r < d.radius ? d.inside : d.outside; },
                 [&](const AngularSymbol& a) -> cplx {
                   if (a.power != 0) throw PreconditionError("symbol is radial", describe());
                   return 1.0;
                 },
                 [&](const SymbolSum& s) {
                   cplx acc = 0.0;
                   for (const auto& [c, f] : s.terms) acc += c * f->radial(r);
                   return acc;
                 },
                 [&](const auto&) -> cplx { throw PreconditionError("symbol is radial", describe()); }},
      family_);
}

std::vector<double> SymbolSpec::radial_breakpoints() const {
  std::vector<double> out;
  if (const auto* d = std::get_if<RadialDisc>(&family_)) {
    if (d->inside != d->outside) out.push_back(d->radius);
  } else if (const auto* s = std::get_if<SymbolSum>(&family_)) {
    for (const auto& t : s->terms)
      for (double r : t.second->radial_breakpoints()) out.push_back(r);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

double SymbolSpec::sup_bound() const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return std::visit(
      overloaded{[&](const RadialGaussianSum& g) {
                   double s = 0.0;
                   for (const auto& [amp, c] : g.terms) {
                     if (c < 0) return inf;
                     s += std::abs(amp);
                   }
                   return s;
                 },
                 [](const RadialPower& p) { return p.k == 0 ? std::abs(p.amp) : inf; },
                 [](const RadialDisc& d) { return std::max(std::abs(d.inside), std::abs(d.outside)); },
                 [](const AngularSymbol&) { return 1.0; },
                 [](const PlaneWaveSymbol& p) { return std::exp(0.5 * std::norm(p.z0)); },
                 [](const VerticalSymbol& v) { return v.m0.sup_abs(); },
                 [](const GridSamplesSymbol& g) {
                   double m = std::abs(g.outside);
                   for (cplx v : g.values) m = std::max(m, std::abs(v));
                   return m;
                 },
                 [&](const WcoSymbol&) {
                   // sampled estimate over a disc of radius 12
                   double m = 0.0;
                   for (int r = 0; r <= 48; ++r)
                     for (int t = 0; t < 64; ++t) {
                       const cplx z = std::polar(0.25 * r, 2 * std::numbers::pi * t / 64);
                       m = std::max(m, std::abs((*this)(z)));
                     }
                   return std::isfinite(m) ? m : inf;
                 },
                 [](const SymbolSum& s) {
                   double m = 0.0;
                   for (const auto& [c, f] : s.terms) m += std::abs(c) * f->sup_bound();
                   return m;
                 }},
      family_);
}

bool SymbolSpec::is_real() const {
  return std::visit(
      overloaded{[](const RadialGaussianSum& g) {
                   for (const auto& t : g.terms)
                     if (t.first.imag() != 0) return false;
                   return true;
                 },
                 [](const RadialPower& p) { return p.amp.imag() == 0; },
                 [](const RadialDisc& d) { return d.inside.imag() == 0 && d.outside.imag() == 0; },
                 [](const AngularSymbol& a) { return a.power == 0; },
                 [](const PlaneWaveSymbol& p) { return p.z0 == 0.0; },
                 [](const VerticalSymbol& v) { return v.m0.is_real(); },
                 [](const GridSamplesSymbol& g) {
                   for (cplx v : g.values)
                     if (v.imag() != 0) return false;
                   return g.outside.imag() == 0;
                 },
                 [](const WcoSymbol&) { return false; },
                 [](const SymbolSum& s) {
                   for (const auto& [c, f] : s.terms)
                     if (c.imag() != 0 || !f->is_real()) return false;
                   return true;
                 }},
      family_);
}

std::string SymbolSpec::describe() const {
  std::ostringstream os;
  std::visit(overloaded{[&](const RadialGaussianSum& g) {
                          os << "radial(";
                          for (size_t i = 0; i < g.terms.size(); ++i) {
                            if (i) os << "+";
                            os << fmt(g.terms[i].first);
                            if (g.terms[i].second != 0.0) os << "*exp(-" << g.terms[i].second << "|z|^2)";
                          }
                          os << ")";
                        },
                        [&](const RadialPower& p) { os << fmt(p.amp) << "*|z|^" << p.k; },
                        [&](const RadialDisc& d) {
                          os << "disc(r<" << d.radius << ":" << fmt(d.inside) << ","
                             << fmt(d.outside) << ")";
                        },
                        [&](const AngularSymbol& a) { os << "(z/|z|)^" << a.power; },
                        [&](const PlaneWaveSymbol& p) { os << "plane_wave(" << fmt(p.z0) << ")"; },
                        [&](const VerticalSymbol& v) {
                          os << "vertical(" << v.m0.describe() << ",sign=" << v.sign << ")";
                        },
                        [&](const GridSamplesSymbol& g) { os << "grid(" << g.nx << "x" << g.ny << ")"; },
                        [&](const WcoSymbol& w) {
                          os << "f_wco(" << w.psi.describe() << ",a=" << fmt(w.a)
                             << ",lambda=" << fmt(w.lambda) << ")";
                        },
                        [&](const SymbolSum& s) {
                          os << "sum(";
                          for (size_t i = 0; i < s.terms.size(); ++i)
                            os << (i ? "+" : "") << fmt(s.terms[i].first) << "*"
                               << s.terms[i].second->describe();
                          os << ")";
                        }},
             family_);
  return os.str();
}

}  // namespace fock
