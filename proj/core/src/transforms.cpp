#include "fockbench/transforms.hpp"

#include <cmath>
#include <numbers>

#include "detail.hpp"
#include "piecewise.hpp"
#include "fockbench/special.hpp"
#include "rings.hpp"

namespace fock {

double reliable_radius(int N) { return 0.5 * std::sqrt(static_cast<double>(N)); }

namespace {

void flag_radius(Flagged<cplx>& out, int N, double r) {
  if (r > reliable_radius(N) + 1e-12) {
    out.flagged = true;
    out.note = "point outside the reliable radius sqrt(N)/2";
  }
}

// conj(xi)^n / sqrt(n!), the kernel coefficients without the Gaussian factor.
Eigen::VectorXcd raw_kernel_coeffs(cplx xi, int N) {
  Eigen::VectorXcd u(N);
  cplx v = 1.0;
  const cplx cx = std::conj(xi);
  for (int n = 0; n < N; ++n) {
    u(n) = v;
    v *= cx / std::sqrt(n + 1.0);
  }
  return u;
}

}  // namespace

Flagged<cplx> bivariate_berezin(const TruncatedOperator& A, cplx w, cplx z) {
  require_finite(w, "w");
  require_finite(z, "z");
  const int N = A.dim();
  const Eigen::VectorXcd cw = normalized_kernel_coeffs(w, N);
  const Eigen::VectorXcd cz = normalized_kernel_coeffs(z, N);
  Flagged<cplx> out{cz.dot(A.entries() * cw), false, {}};
  flag_radius(out, N, std::max(std::abs(w), std::abs(z)));
  return out;
}

Flagged<cplx> berezin(const TruncatedOperator& A, cplx z) { return bivariate_berezin(A, z, z); }

Flagged<cplx> canonical_kernel(const TruncatedOperator& A, cplx w, cplx z) {
  Flagged<cplx> b = bivariate_berezin(A, w, z);
  b.value *= std::exp(0.5 * (std::norm(z) + std::norm(w)));
  if (std::abs(z) > 6.0 || std::abs(w) > 6.0) {
    b.flagged = true;
    b.note = "kernel growth guard |z|, |w| <= 6 exceeded";
  }
  return b;
}

GridFunction sample_berezin(const TruncatedOperator& A, const std::vector<cplx>& points) {
  GridFunction g;
  g.points = points;
  for (cplx z : points) {
    const auto b = berezin(A, z);
    g.values.push_back(b.value);
    g.flagged.push_back(b.flagged);
  }
  return g;
}

CompositionCheck compose_berezin_check(const TruncatedOperator& A, const TruncatedOperator& B, cplx w,
                                       cplx z, const QuadratureRule& rule) {
  detail::require_planar(rule);
  const int N = A.dim();
  const auto lhs = bivariate_berezin(compose(A, B), w, z);
  const Eigen::VectorXcd cw = normalized_kernel_coeffs(w, N);
  const Eigen::VectorXcd cz = normalized_kernel_coeffs(z, N);
  const Eigen::VectorXcd Bcw = B.entries() * cw;                 // B k_w
  const Eigen::RowVectorXcd czA = cz.adjoint() * A.entries();   // k_z^* A
  // (1/pi) dxi = e^{|xi|^2} d mu(xi); the Gaussian factors of k_xi cancel it.
  cplx rhs = 0.0;
  for (size_t i = 0; i < rule.size(); ++i) {
    const Eigen::VectorXcd u = raw_kernel_coeffs(rule.nodes[i], N);
    const cplx bt = u.dot(Bcw);           // e^{|xi|^2/2} B~(w, xi)
    const cplx at = (czA * u)(0);         // e^{|xi|^2/2} A~(xi, z)
    rhs += rule.weights[i] * bt * at;
  }
  return {lhs.value, rhs, lhs.flagged};
}

cplx heat_transform(const std::function<cplx(cplx)>& f, double t, cplx w, const QuadratureRule& rule) {
  if (!(t > 0)) throw PreconditionError("t > 0", "heat_transform");
  require_finite(w, "w");
  // g_t(u) du = d mu(u / sqrt t): recentre at w and rescale.
  const double st = std::sqrt(t);
  return integrate_gaussian([&](cplx v) { return f(w + st * v); }, rule);
}

cplx heat_transform(const SymbolSpec& f, double t, cplx w, const QuadratureRule& rule) {
  if (!(t > 0)) throw PreconditionError("t > 0", "heat_transform");
  require_finite(w, "w");
  if (f.is_radial() && !f.radial_breakpoints().empty()) return detail::heat_radial_piecewise(f, t, w);
  if (const auto* v = std::get_if<VerticalSymbol>(&f.family())) return detail::heat_vertical(*v, t, w);
  if (const auto* g = std::get_if<GridSamplesSymbol>(&f.family())) return detail::heat_grid(f, *g, t, w);
  if (const auto* s = std::get_if<SymbolSum>(&f.family())) {
    cplx acc = 0.0;
    for (const auto& [c, term] : s->terms) acc += c * heat_transform(*term, t, w, rule);
    return acc;
  }
  return heat_transform([&](cplx z) { return f(z); }, t, w, rule);
}

TruncatedOperator parity_conjugate(const TruncatedOperator& A) {
  Eigen::MatrixXcd M = A.entries();
  for (int m = 0; m < A.dim(); ++m)
    for (int n = 0; n < A.dim(); ++n)
      if ((m + n) % 2) M(m, n) = -M(m, n);
  return TruncatedOperator(std::move(M), Provenance::node("parity_conjugate", {A.provenance()}),
                           A.truncation_tail());
}

ShiftResult shift_operator(const TruncatedOperator& A, cplx z, double reliable) {
  const TruncatedOperator W = weyl_matrix(z, A.dim());
  TruncatedOperator out = compose(W, compose(A, adjoint(W)));
  return {TruncatedOperator(out.entries(), Provenance::node("alpha[" + detail::fmt(z) + "]", {A.provenance()}),
                            out.truncation_tail()),
          std::abs(z) > reliable};
}

TruncatedOperator qha_convolve_function_operator(const SymbolSpec& f, const TruncatedOperator& A,
                                                 const QuadratureRule& rule) {
  detail::require_planar(rule);
  if (!std::isfinite(f.sup_bound())) throw PreconditionError("f bounded", f.describe());
  const int N = A.dim();
  const bool radial = f.is_radial();
  const int Q = radial ? 0 : 2 * N - 2;
  std::vector<double> rs, rw;
  Eigen::MatrixXcd F;
  if (radial) {
    detail::radial_rule_for(f, N, rule, rs, rw);
    F.resize(static_cast<Eigen::Index>(rs.size()), 1);
    for (size_t r = 0; r < rs.size(); ++r) F(static_cast<Eigen::Index>(r), 0) = f.radial(std::sqrt(rs[r]));
  } else {
    rs = rule.radial_nodes;
    rw = rule.radial_weights;
    F = detail::angular_modes([&](cplx z) { return f(z); }, rule, Q);
  }
  const Eigen::MatrixXcd& Am = A.entries();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(N, N);
  for (size_t r = 0; r < rs.size(); ++r) {
    const Eigen::MatrixXd P = weyl_radial_part(rs[r], N);
    const double w = std::numbers::pi * rw[r];
    const auto row = static_cast<Eigen::Index>(r);
    for (int m = 0; m < N; ++m)
      for (int n = 0; n < N; ++n) {
        cplx acc = 0.0;
        for (int k = 0; k < N; ++k) {
          const double pmk = P(m, k);
          if (pmk == 0.0) continue;
          for (int l = 0; l < N; ++l) {
            const int q = (m - k) - (n - l);
            if (q < -Q || q > Q) continue;
            acc += pmk * Am(k, l) * P(n, l) * F(row, q + Q);
          }
        }
        out(m, n) += w * acc;
      }
  }
  return TruncatedOperator(std::move(out), Provenance::node("conv[" + f.describe() + "]", {A.provenance()}));
}

Flagged<cplx> qha_convolve_operator_operator(const TruncatedOperator& A, const TruncatedOperator& B,
                                             cplx z) {
  if (A.dim() != B.dim()) throw PreconditionError("matching dimensions", "operator convolution");
  const int N = A.dim();
  const Eigen::MatrixXcd W = weyl_matrix(z, N).entries();
  const Eigen::MatrixXcd RBR = parity_conjugate(B).entries();
  Flagged<cplx> out{(A.entries() * W * RBR * W.adjoint()).trace(), false, {}};
  flag_radius(out, N, std::abs(z));
  return out;
}

TraceResult fourier_weyl(const TruncatedOperator& A, cplx xi) {
  const int N = A.dim();
  const Eigen::MatrixXcd P = A.entries() * weyl_matrix(-xi, N).entries();
  TraceResult out{P.trace(), 0.0, std::abs(xi) > reliable_radius(N) + 1e-12};
  for (int m = N - N / 4; m < N; ++m) out.tail += P(m, m);
  return out;
}

cplx bargmann_transform(const std::function<cplx(double)>& f, cplx z, const QuadratureRule& rule) {
  require_finite(z, "z");
  const double c = std::pow(2.0 / std::numbers::pi, 0.25);
  const cplx zz = 0.5 * z * z;
  cplx acc = 0.0;
  for (size_t i = 0; i < rule.size(); ++i) {
    const double x = rule.nodes[i].real();
    const cplx fx = f(x);
    if (fx == 0.0) continue;
    cplx w = rule.weights[i];
    if (rule.kind == RuleKind::LineHermite) w = 1.0 * rule.weights[i] * std::exp(x * x);
    acc += w * fx * std::exp(2.0 * x * z - x * x - zz);
  }
  return c * acc;
}

cplx bargmann_transform(const std::function<cplx(double)>& f, cplx z) {
  static const QuadratureRule rule = make_line_rule(-14.0, 14.0, {}, 112, 20);
  return bargmann_transform(f, z, rule);
}

cplx bargmann_transform(const LineProfile& f, cplx z) {
  const auto bps = f.breakpoints();
  const QuadratureRule rule = make_line_rule(-14.0, 14.0, bps, 112, 20);
  return bargmann_transform([&](double x) { return f(x); }, z, rule);
}

}  // namespace fock
