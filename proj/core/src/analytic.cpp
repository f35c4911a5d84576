#include <cmath>
#include <sstream>

#include "detail.hpp"
#include "fockbench/symbols.hpp"

namespace fock {

using detail::lcplx;
using detail::overloaded;
using detail::Series;

namespace {

void check_coeffs(const std::vector<cplx>& c, const char* what) {
  for (cplx v : c) require_finite(v, what);
}

cplx horner(const std::vector<cplx>& c, cplx z) {
  cplx acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Series exp_series(lcplx c, int deg) {
  Series s(static_cast<size_t>(deg) + 1);
  s[0] = 1.0L;
  for (int k = 1; k <= deg; ++k) s[k] = s[k - 1] * c / static_cast<long double>(k);
  return s;
}

Series poly_series(const std::vector<cplx>& c, int deg) {
  Series s(static_cast<size_t>(deg) + 1, 0.0L);
  for (size_t k = 0; k < c.size() && k <= static_cast<size_t>(deg); ++k) s[k] = detail::to_l(c[k]);
  return s;
}

// Drop trailing zeros so the leading coefficient is nonzero.
std::vector<cplx> trimmed(std::vector<cplx> c) {
  while (c.size() > 1 && c.back() == 0.0) c.pop_back();
  if (c.empty()) c.push_back(0.0);
  return c;
}

}  // namespace

AnalyticSpec::AnalyticSpec(Family f) : family_(std::move(f)) {
  std::visit(overloaded{[](Polynomial& p) {
                          check_coeffs(p.coeffs, "polynomial coefficient");
                          p.coeffs = trimmed(std::move(p.coeffs));
                        },
                        [](KernelMultiple& k) {
                          require_finite(k.c, "kernel multiple c");
                          require_finite(k.b, "kernel multiple b");
                        },
                        [](ExpLinearTimesPoly& e) {
                          check_coeffs(e.coeffs, "polynomial coefficient");
                          require_finite(e.c, "exponential rate");
                          e.coeffs = trimmed(std::move(e.coeffs));
                        }},
             family_);
}

AnalyticSpec AnalyticSpec::polynomial(std::vector<cplx> coeffs) {
  return AnalyticSpec(Polynomial{std::move(coeffs)});
}
AnalyticSpec AnalyticSpec::kernel_multiple(cplx c, cplx b) { return AnalyticSpec(KernelMultiple{c, b}); }
AnalyticSpec AnalyticSpec::exp_linear_times_poly(std::vector<cplx> coeffs, cplx c) {
  return AnalyticSpec(ExpLinearTimesPoly{std::move(coeffs), c});
}

cplx AnalyticSpec::operator()(cplx z) const {
  return std::visit(
      overloaded{[&](const Polynomial& p) { return horner(p.coeffs, z); },
                 [&](const KernelMultiple& k) { return k.c * std::exp(z * std::conj(k.b)); },
                 [&](const ExpLinearTimesPoly& e) {
                   return horner(e.coeffs, z) * std::exp(z * std::conj(e.c));
                 }},
      family_);
}

std::vector<lcplx> AnalyticSpec::taylor(int degree) const {
  return std::visit(
      overloaded{[&](const Polynomial& p) { return poly_series(p.coeffs, degree); },
                 [&](const KernelMultiple& k) {
                   Series s = exp_series(detail::to_l(std::conj(k.b)), degree);
                   for (auto& v : s) v *= detail::to_l(k.c);
                   return s;
                 },
                 [&](const ExpLinearTimesPoly& e) {
                   return detail::series_mul(poly_series(e.coeffs, degree),
                                             exp_series(detail::to_l(std::conj(e.c)), degree),
                                             degree);
                 }},
      family_);
}

bool AnalyticSpec::is_zero() const {
  return std::visit(
      overloaded{[](const Polynomial& p) { return p.coeffs.size() == 1 && p.coeffs[0] == 0.0; },
                 [](const KernelMultiple& k) { return k.c == 0.0; },
                 [](const ExpLinearTimesPoly& e) {
                   return e.coeffs.size() == 1 && e.coeffs[0] == 0.0;
                 }},
      family_);
}

AnalyticSpec AnalyticSpec::quotient_after_constant(int degree) const {
  if (const auto* p = std::get_if<Polynomial>(&family_)) {
    std::vector<cplx> c(p->coeffs.begin() + 1, p->coeffs.end());
    return polynomial(c.empty() ? std::vector<cplx>{0.0} : c);
  }
  const Series s = taylor(degree + 1);
  std::vector<cplx> c;
  for (size_t k = 1; k < s.size(); ++k) c.push_back(detail::to_d(s[k]));
  return polynomial(std::move(c));
}

std::string AnalyticSpec::describe() const {
  std::ostringstream os;
  auto poly = [&](const std::vector<cplx>& c) {
    os << "[";
    for (size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << detail::fmt(c[k]);
    os << "]";
  };
  std::visit(overloaded{[&](const Polynomial& p) {
                          os << "poly";
                          poly(p.coeffs);
                        },
                        [&](const KernelMultiple& k) {
                          os << detail::fmt(k.c) << "*K_" << detail::fmt(k.b);
                        },
                        [&](const ExpLinearTimesPoly& e) {
                          os << "poly";
                          poly(e.coeffs);
                          os << "*exp(z*conj" << detail::fmt(e.c) << ")";
                        }},
             family_);
  return os.str();
}

}  // namespace fock
