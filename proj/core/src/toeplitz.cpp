#include <cmath>
#include <numbers>

#include "detail.hpp"
#include "fockbench/operators.hpp"
#include "fockbench/special.hpp"
#include "piecewise.hpp"
#include "rings.hpp"

namespace fock {

namespace detail {

void require_planar(const QuadratureRule& rule) {
  if (rule.kind != RuleKind::PlanarPolar || rule.radial_nodes.empty() || rule.n_theta < 1)
    throw PreconditionError("rule kind is planar-polar", std::string("got ") + to_string(rule.kind));
}

Eigen::MatrixXcd angular_modes(const std::function<cplx(cplx)>& f, const QuadratureRule& rule, int Q) {
  require_planar(rule);
  const int nr = static_cast<int>(rule.radial_nodes.size());
  const int nt = rule.n_theta;
  std::vector<cplx> tw(nt);
  for (int k = 0; k < nt; ++k) tw[k] = std::polar(1.0, -2.0 * std::numbers::pi * k / nt);
  Eigen::MatrixXcd F = Eigen::MatrixXcd::Zero(nr, 2 * Q + 1);
  std::vector<cplx> v(nt);
  for (int r = 0; r < nr; ++r) {
    for (int t = 0; t < nt; ++t) {
      v[t] = f(rule.nodes[static_cast<size_t>(r) * nt + t]);
      if (!std::isfinite(v[t].real()) || !std::isfinite(v[t].imag()))
        throw PreconditionError("symbol bounded on the quadrature support",
                                "non-finite value at |z|^2 = " + std::to_string(rule.radial_nodes[r]));
    }
    for (int q = -Q; q <= Q; ++q) {
      const int qq = ((q % nt) + nt) % nt;
      cplx acc = 0.0;
      int idx = 0;
      for (int t = 0; t < nt; ++t) {
        acc += v[t] * tw[idx];
        idx += qq;
        if (idx >= nt) idx -= nt;
      }
      F(r, q + Q) = acc / static_cast<double>(nt);
    }
  }
  return F;
}

}  // namespace detail

namespace {

// rho_n(s)^2 = s^n / n!
double rho(int n, double s) {
  if (n == 0) return 1.0;
  if (s == 0.0) return 0.0;
  return std::exp(0.5 * (n * std::log(s) - log_factorial(n)));
}

const std::vector<double>& radial_nodes(const QuadratureRule& rule, std::vector<double>& buf) {
  if (rule.kind == RuleKind::PlanarPolar) return rule.radial_nodes;
  if (rule.kind != RuleKind::RadialLaguerre)
    throw PreconditionError("radial-laguerre or planar-polar rule", to_string(rule.kind));
  buf.clear();
  for (cplx c : rule.nodes) buf.push_back(c.real());
  return buf;
}

const std::vector<double>& radial_weights(const QuadratureRule& rule) {
  return rule.kind == RuleKind::PlanarPolar ? rule.radial_weights : rule.weights;
}

TruncatedOperator vertical_toeplitz(const VerticalSymbol& v, int N, const std::string& label) {
  const QuadratureRule gx = make_rule(RuleKind::LineHermite, {N + 8});
  const double L = std::max(10.0, std::sqrt(2.0 * N) + 8.0);
  std::vector<double> bps;
  for (double b : v.m0.breakpoints()) bps.push_back(v.sign * b);
  const QuadratureRule gy = make_line_rule(-L, L, bps, 2 * static_cast<int>(std::ceil(L)), 20);
  const int nx = static_cast<int>(gx.size());
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(N, N);
  Eigen::MatrixXcd E(nx, N);
  for (size_t iy = 0; iy < gy.size(); ++iy) {
    const double y = gy.nodes[iy].real();
    const cplx fy = v.m0(v.sign * y);
    const double wy = gy.weights[iy] * std::exp(-y * y);
    if (fy == 0.0 || wy == 0.0) continue;
    for (int ix = 0; ix < nx; ++ix) {
      const cplx z(gx.nodes[ix].real(), y);
      cplx e = std::sqrt(gx.weights[ix]);
      for (int n = 0; n < N; ++n) {
        E(ix, n) = e;
        e *= z / std::sqrt(n + 1.0);
      }
    }
    acc.noalias() += (fy * wy / std::numbers::pi) * (E.adjoint() * E);
  }
  return TruncatedOperator(std::move(acc), label);
}

// outside * I plus the integral of f - outside over the sampled rectangle.
TruncatedOperator grid_toeplitz(const SymbolSpec& f, const GridSamplesSymbol& g, int N,
                                const std::string& label) {
  std::vector<cplx> z;
  std::vector<double> wt;
  detail::grid_cells(g, 0.25, 12, z, wt);
  const int nz = static_cast<int>(z.size());
  Eigen::MatrixXcd E(nz, N);
  Eigen::VectorXcd fv(nz);
  for (int i = 0; i < nz; ++i) {
    fv(i) = f(z[i]) - g.outside;
    cplx e = std::sqrt(wt[i] * std::exp(-std::norm(z[i])) / std::numbers::pi);
    for (int n = 0; n < N; ++n) {
      E(i, n) = e;
      e *= z[i] / std::sqrt(n + 1.0);
    }
  }
  Eigen::MatrixXcd M = E.adjoint() * (fv.asDiagonal() * E);
  M.diagonal().array() += g.outside;
  return TruncatedOperator(std::move(M), label);
}

}  // namespace

std::vector<cplx> toeplitz_radial_eigenvalues(const SymbolSpec& g, int N, const QuadratureRule& rule) {
  if (N < 1) throw PreconditionError("N >= 1", "toeplitz_radial_eigenvalues");
  if (!g.is_radial()) throw PreconditionError("symbol is radial", g.describe());
  std::vector<cplx> a(N, 0.0);
  if (const auto* d = std::get_if<RadialDisc>(&g.family())) {
    // <1_{|z| < R} e_n, e_n> = P(n + 1, R^2)
    for (int n = 0; n < N; ++n) {
      double P = 0, Q = 0;
      detail::poisson_split(n, d->radius * d->radius, P, Q);
      a[n] = d->inside * P + d->outside * Q;
    }
    return a;
  }
  if (const auto* sum = std::get_if<SymbolSum>(&g.family())) {
    for (const auto& [c, term] : sum->terms) {
      const auto t = toeplitz_radial_eigenvalues(*term, N, rule);
      for (int n = 0; n < N; ++n) a[n] += c * t[n];
    }
    return a;
  }
  std::vector<double> buf;
  const auto& s = radial_nodes(rule, buf);
  const auto& w = radial_weights(rule);
  for (size_t r = 0; r < s.size(); ++r) {
    const cplx gv = g.radial(std::sqrt(s[r]));
    if (gv == 0.0) continue;
    const double ls = std::log(s[r]);
    for (int n = 0; n < N; ++n) a[n] += w[r] * gv * std::exp(n * ls - log_factorial(n));
  }
  return a;
}

TruncatedOperator toeplitz_matrix(const SymbolSpec& f, int N, const QuadratureRule& rule) {
  if (N < 1) throw PreconditionError("N >= 1", "toeplitz_matrix");
  const std::string label = "toeplitz[" + f.describe() + "]";
  if (f.is_radial()) {
    const auto a = toeplitz_radial_eigenvalues(f, N, rule);
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(N, N);
    for (int n = 0; n < N; ++n) M(n, n) = a[n];
    return TruncatedOperator(std::move(M), label);
  }
  if (const auto* ang = std::get_if<AngularSymbol>(&f.family())) {
    // <(z/|z|)^p e_n, e_m> = delta_{m, n+p} Gamma(n + p/2 + 1) / sqrt(n! m!)
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(N, N);
    const int p = ang->power;
    for (int n = 0; n < N; ++n) {
      const int m = n + p;
      if (m < 0 || m >= N) continue;
      M(m, n) = std::exp(std::lgamma(n + 0.5 * p + 1.0) - 0.5 * (log_factorial(n) + log_factorial(m)));
    }
    return TruncatedOperator(std::move(M), label);
  }
  if (const auto* v = std::get_if<VerticalSymbol>(&f.family())) return vertical_toeplitz(*v, N, label);
  if (const auto* g = std::get_if<GridSamplesSymbol>(&f.family())) return grid_toeplitz(f, *g, N, label);

  detail::require_planar(rule);
  const int Q = N - 1;
  const Eigen::MatrixXcd F = detail::angular_modes([&](cplx z) { return f(z); }, rule, Q);
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(N, N);
  std::vector<double> rh(N);
  for (size_t r = 0; r < rule.radial_nodes.size(); ++r) {
    const double s = rule.radial_nodes[r], w = rule.radial_weights[r];
    for (int n = 0; n < N; ++n) rh[n] = rho(n, s);
    for (int n = 0; n < N; ++n)
      for (int m = 0; m < N; ++m) M(m, n) += w * rh[m] * rh[n] * F(static_cast<Eigen::Index>(r), m - n + Q);
  }
  return TruncatedOperator(std::move(M), label);
}

TruncatedOperator toeplitz_type_matrix(const SymbolSpec& f, int j, int N, const QuadratureRule& rule) {
  if (j < 0 || j >= N) throw PreconditionError("0 <= j < N", "toeplitz_type_matrix");
  if (!std::isfinite(f.sup_bound())) throw PreconditionError("symbol bounded", f.describe());
  detail::require_planar(rule);
  const std::string label = "toeplitz_type[" + f.describe() + ",j=" + std::to_string(j) + "]";
  const bool radial = f.is_radial();
  const int Q = radial ? 0 : N - 1;
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
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(N, N);
  for (size_t r = 0; r < rs.size(); ++r) {
    const double s = rs[r], w = rw[r];
    const Eigen::MatrixXd P = weyl_radial_part(s, N);
    for (int n = 0; n < N; ++n)
      for (int m = 0; m < N; ++m) {
        const int q = m - n;
        if (q < -Q || q > Q) continue;
        M(m, n) += w * P(m, j) * P(n, j) * F(static_cast<Eigen::Index>(r), q + Q);
      }
  }
  return TruncatedOperator(std::move(M), label);
}

}  // namespace fock
