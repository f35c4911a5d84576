#include <cmath>
#include <numbers>

#include "detail.hpp"
#include "fockbench/operators.hpp"
#include "fockbench/special.hpp"

namespace fock {

using detail::lcplx;

namespace {

QuadratureRule profile_rule(const LineProfile& m, double center, double half_width, int order = 20) {
  const std::vector<double> bps = m.breakpoints();
  const int panels = 4 * static_cast<int>(std::ceil(half_width));
  return make_line_rule(center - half_width, center + half_width, bps, panels, order);
}

void require_bounded(const LineProfile& m) {
  if (!std::isfinite(m.sup_abs())) throw PreconditionError("m bounded", m.describe());
}

}  // namespace

Flagged<cplx> phi_from_multiplier(const LineProfile& m, cplx z, const PhiOptions& opt) {
  require_bounded(m);
  require_finite(z, "z");
  // exp(-2 (x - i z/2)^2) = exp(-2 (x + Im z / 2)^2 + (Re z)^2 / 2) * phase
  const double c = -0.5 * z.imag();
  const QuadratureRule rule = profile_rule(m, c, 8.0);
  const cplx iz2 = cplx(0, 0.5) * z;
  const cplx val = integrate_line(
      [&](double x) {
        const cplx d = x - iz2;
        return m(x) * std::exp(-2.0 * d * d);
      },
      rule);
  Flagged<cplx> out;
  out.value = std::sqrt(2.0 / std::numbers::pi) * val;
  if (std::abs(z.real()) > opt.safe_re_radius) {
    out.flagged = true;
    out.note = "|Re z| beyond the safe radius: cancellation of order exp((Re z)^2/2)";
  }
  return out;
}

std::vector<cplx> phi_taylor_coefficients(const LineProfile& m, int degree) {
  require_bounded(m);
  // Phi_j = sqrt(2/pi) int m(x) e^{-2x^2} (2ix)^j / j! dx, phi = e^{z^2/2} Phi.
  const QuadratureRule rule = profile_rule(m, 0.0, 9.0);
  std::vector<lcplx> Phi(static_cast<size_t>(degree) + 1, 0.0L);
  for (size_t i = 0; i < rule.size(); ++i) {
    const double x = rule.nodes[i].real();
    const cplx mv = m(x);
    if (mv == 0.0) continue;
    lcplx t = detail::to_l(mv) * static_cast<long double>(rule.weights[i]) *
              std::exp(-2.0L * x * x);
    const lcplx step(0.0L, 2.0L * x);
    for (int j = 0; j <= degree; ++j) {
      Phi[j] += t;
      t *= step / static_cast<long double>(j + 1);
    }
  }
  const long double norm = std::sqrt(2.0L / std::numbers::pi_v<long double>);
  detail::Series g(static_cast<size_t>(degree) + 1, 0.0L);
  long double e = 1.0L;
  for (int k = 0; 2 * k <= degree; ++k) {
    g[2 * k] = e;
    e /= 2.0L * (k + 1);
  }
  for (auto& v : Phi) v *= norm;
  const auto phi = detail::series_mul(g, Phi, degree);
  std::vector<cplx> out;
  for (const auto& v : phi) out.push_back(detail::to_d(v));
  return out;
}

TruncatedOperator singular_integral_matrix_direct(const LineProfile& m, int N) {
  if (N < 1) throw PreconditionError("N >= 1", "singular_integral_matrix_direct");
  const auto phi = phi_taylor_coefficients(m, 2 * N - 2);
  std::vector<long double> lf(2 * N);
  for (int k = 0; k < 2 * N; ++k) lf[k] = std::lgamma(static_cast<long double>(k) + 1.0L);
  Eigen::MatrixXcd S(N, N);
  for (int r = 0; r < N; ++r)
    for (int n = 0; n < N; ++n) {
      lcplx acc = 0.0L;
      for (int k = 0; k <= std::min(r, n); ++k) {
        const int j = r + n - 2 * k;
        // sqrt(r! n!) C(j, r - k) / k!
        const long double c = std::exp(0.5L * (lf[r] + lf[n]) + lf[j] - lf[r - k] - lf[n - k] - lf[k]);
        const lcplx term = detail::to_l(phi[j]) * c;
        acc += ((n - k) % 2) ? -term : term;
      }
      S(r, n) = detail::to_d(acc);
    }
  return TruncatedOperator(std::move(S), "singular_direct[" + m.describe() + "]");
}

TruncatedOperator singular_integral_matrix_multiplier(const LineProfile& m, int N,
                                                      MultiplierReport* report) {
  require_bounded(m);
  if (N < 1) throw PreconditionError("N >= 1", "singular_integral_matrix_multiplier");
  const double L = std::max(10.0, std::sqrt(2.0 * N) + 6.0);
  const QuadratureRule xr = profile_rule(m, 0.0, L, 16);
  // Same panels in y: e^{-2ixy} oscillates too fast for Gauss-Hermite once |x| ~ L.
  const QuadratureRule yr = make_line_rule(-L, L, {}, 4 * static_cast<int>(std::ceil(L)), 16);
  const int nx = static_cast<int>(xr.size()), ny = static_cast<int>(yr.size());

  Eigen::MatrixXcd Q(ny, N);  // h_n(y) times the weight
  for (int iy = 0; iy < ny; ++iy) {
    const auto h = hermite_functions(N - 1, yr.nodes[iy].real());
    for (int n = 0; n < N; ++n) Q(iy, n) = h[n] * yr.weights[iy];
  }
  // E(ix, iy) = pi^{-1/2} e^{-2 i x y}
  Eigen::MatrixXcd E(nx, ny);
  const double ipi = 1.0 / std::sqrt(std::numbers::pi);
  for (int ix = 0; ix < nx; ++ix)
    for (int iy = 0; iy < ny; ++iy)
      E(ix, iy) = std::polar(ipi, -2.0 * xr.nodes[ix].real() * yr.nodes[iy].real());
  const Eigen::MatrixXcd Fh = E * Q;  // (F h_n)(x)

  double resid = 0.0;
  Eigen::MatrixXcd Wm(nx, N);
  for (int ix = 0; ix < nx; ++ix) {
    const double x = xr.nodes[ix].real();
    const auto h = hermite_functions(N - 1, x);
    cplx ph = 1.0;
    for (int n = 0; n < N; ++n) {
      resid = std::max(resid, std::abs(Fh(ix, n) - ph * h[n]));
      ph *= cplx(0, -1);
    }
    const cplx w = m(x) * xr.weights[ix];
    Wm.row(ix) = w * Fh.row(ix);
  }
  Eigen::MatrixXcd S = Fh.adjoint() * Wm;  // S(m', n) = sum conj(Fh_m') m Fh_n
  if (report) {
    report->fourier_residual = resid;
    report->flagged = resid > 1e-8;
  }
  return TruncatedOperator(std::move(S), "singular_multiplier[" + m.describe() + "]");
}

}  // namespace fock
