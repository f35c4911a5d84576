#include <cmath>
#include <numbers>

#include "suite_context.hpp"

namespace fock::verify {

namespace {

// Points are jittered, so keep them inside the stated disc.
cplx clamp_to_disc(cplx z, double r) { return std::abs(z) > r ? z * (r / std::abs(z)) : z; }

}  // namespace

void suite_weyl_toeplitz(SuiteContext& ctx) {
  const int N = ctx.cfg.n();
  const std::vector<cplx> z0s{0.8, {0.0, 0.55}, {-0.6, 0.35}, {-0.25, -0.7}, {0.4, 0.45}};
  const auto grid = ctx.square_grid(0.0, 0.7, 5);
  MaxError closed;
  for (cplx base : z0s) {
    const cplx z0 = clamp_to_disc(ctx.jitter(base), 1.0);
    const auto T = toeplitz_matrix(SymbolSpec::plane_wave(z0), N, ctx.planar());
    const auto W = weyl_matrix(z0, N);
    MaxError err;
    for (cplx w : grid) {
      const auto bt = berezin(T, w);
      const auto bw = berezin(W, w);
      err.take(std::abs(bt.value - bw.value), bt.flagged || bw.flagged, "w=" + fmt(w));
      const cplx exact = std::exp(-0.5 * std::norm(z0) + cplx(0.0, 2.0 * std::imag(w * std::conj(z0))));
      closed.take(std::abs(bw.value - exact), bw.flagged, "z0=" + fmt(z0) + " w=" + fmt(w));
    }
    ctx.check("berezin T_g vs W, z0=" + fmt(z0), err.value, 0.0, "berezin", err.flagged, "max at " + err.where);
  }
  ctx.check("berezin W_z0 closed form", closed.value, 0.0, "closed-form", closed.flagged, "max at " + closed.where);
}

void suite_berezin_heat(SuiteContext& ctx) {
  const int N = ctx.cfg.n();
  const AnalyticSpec psi = AnalyticSpec::polynomial({1.0, {0.5, -0.25}});
  const cplx a{0.3, 0.1};
  const std::vector<SymbolSpec> symbols{
      SymbolSpec::gaussian_radial(0.7),
      SymbolSpec::radial_gaussian_sum({{{1.0, 0.5}, 0.3}, {-0.4, 1.2}}),
      SymbolSpec::plane_wave({0.5, 0.2}),
      SymbolSpec::wco(psi, a, 0.5),
      SymbolSpec::vertical(LineProfile::cosine(0.5, 0.5, 1.5)),
  };
  const auto grid = ctx.square_grid(0.0, 1.2, 5);
  for (const auto& f : symbols) {
    const auto T = toeplitz_matrix(f, N, ctx.planar());
    MaxError err;
    for (cplx w : grid) {
      const auto b = berezin(T, w);
      err.take(std::abs(b.value - heat_transform(f, 1.0, w, ctx.planar())), b.flagged, "w=" + fmt(w));
    }
    ctx.check("T_f~ = f * g_1 for " + f.describe(), err.value, 0.0, "heat", err.flagged, "max at " + err.where);
  }
  // Heat flow of the WCO symbol against its closed form, lambda = 1/4. The
  // symbol sits at time -1 of the flow through the Berezin transform.
  const cplx lambda = 0.25;
  const SymbolSpec f = wco_toeplitz_symbol(psi, a, lambda).symbol;
  for (double t : {0.5, 1.0, 2.0}) {
    MaxError err;
    for (cplx w : grid)
      err.take(std::abs(heat_transform(f, t, w, ctx.planar()) - wco_heat_closed_form(psi, a, lambda, t - 1.0, w)), false,
               "w=" + fmt(w));
    ctx.check("heat flow of f_{psi,phi} at t=" + fmt(t), err.value, 0.0, "closed-form", false, "max at " + err.where);
  }
}

void suite_composition_kernel(SuiteContext& ctx) {
  const int N = ctx.cfg.n_composition();
  struct Pair {
    std::string name;
    TruncatedOperator A, B;
  };
  const auto Tang = toeplitz_matrix(SymbolSpec::angular(1), N, ctx.planar());
  std::vector<Pair> pairs{
      {"T_{z/|z|}, T_{z/|z|}*", Tang, adjoint(Tang)},
      {"W_z, W_w", weyl_matrix({0.4, 0.2}, N), weyl_matrix({-0.3, 0.5}, N)},
      {"T_{exp(-|z|^2/2)}, A^[1]", toeplitz_matrix(SymbolSpec::gaussian_radial(0.5), N, ctx.planar()),
       shift_A_k_matrix(1, N)},
      {"V_{z^2/2}, T_{plane wave}", volterra_matrix(AnalyticSpec::polynomial({0.0, 1.0}), 0.0, 1.0, N),
       toeplitz_matrix(SymbolSpec::plane_wave({0.0, 0.3}), N, ctx.planar())},
  };
  const auto pts = ctx.square_grid(0.0, 0.5, 3);
  for (const auto& p : pairs) {
    MaxError err;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const cplx w = pts[i], z = pts[pts.size() - 1 - i];
      const auto c = compose_berezin_check(p.A, p.B, w, z, ctx.planar());
      err.take(std::abs(c.lhs - c.rhs), c.flagged, "w=" + fmt(w) + " z=" + fmt(z));
    }
    ctx.check("composition kernel for " + p.name, err.value, 0.0, "identity", err.flagged, "max at " + err.where);
  }
  // Weyl relation: W_z W_w = exp(-i Im(z conj w)) W_{z+w}, read through the bivariate kernel.
  const cplx z{0.4, 0.2}, w{-0.3, 0.5};
  const auto lhs = compose(weyl_matrix(z, N), weyl_matrix(w, N));
  const auto rhs = scale(std::exp(cplx(0.0, -std::imag(z * std::conj(w)))), weyl_matrix(z + w, N));
  MaxError err;
  for (cplx u : pts)
    for (cplx v : pts) {
      const auto a = bivariate_berezin(lhs, u, v), b = bivariate_berezin(rhs, u, v);
      err.take(std::abs(a.value - b.value), a.flagged || b.flagged);
    }
  ctx.check("Weyl relation W_z W_w = e^{-i Im(z conj w)} W_{z+w}", err.value, 0.0, "identity", err.flagged);
}

void suite_toeplitztype_convolution(SuiteContext& ctx) {
  const int N = ctx.cfg.n_small();
  const std::vector<SymbolSpec> symbols{
      SymbolSpec::gaussian_radial(0.5),
      SymbolSpec::plane_wave({0.4, 0.2}),
      SymbolSpec::angular(2),
      SymbolSpec::radial_disc(1.2, 1.0, 0.3),
  };
  const int jmax = std::min(3, N - 1);
  for (const auto& f : symbols) {
    MaxError err;
    for (int j = 0; j <= jmax; ++j) {
      const auto T = toeplitz_type_matrix(f, j, N, ctx.planar());
      const auto C = qha_convolve_function_operator(f, basis_projection(j, N), ctx.planar());
      const auto D = linear_combine({{1.0, T}, {-1.0 / std::numbers::pi, C}});
      err.take(operator_norm(D), false, "j=" + std::to_string(j));
    }
    ctx.check("T^(j)_f = (1/pi) f * (e_j (x) e_j) for " + f.describe(), err.value, 0.0, "operator", false,
              "max at " + err.where);
  }
  const int M = ctx.cfg.n();
  const auto grid = ctx.square_grid(0.0, 1.06, 5);
  const auto P0 = basis_projection(0, M);
  for (int j = 0; j <= std::min(4, M - 1); ++j) {
    const auto Pj = basis_projection(j, M);
    MaxError err;
    for (cplx z : grid) {
      const auto v = qha_convolve_operator_operator(Pj, P0, z);
      const double s = std::norm(z);
      const double gj = std::exp(-s) * std::pow(s, j) / std::tgamma(j + 1.0);
      err.take(std::abs(v.value - gj), v.flagged, "z=" + fmt(z));
    }
    ctx.check("(e_j (x) e_j) * (e_0 (x) e_0) = g_j, j=" + std::to_string(j), err.value, 0.0, "gj", err.flagged,
              "max at " + err.where);
  }
}

void suite_laguerre_fourier_weyl(SuiteContext& ctx) {
  const int N = ctx.cfg.n();
  const auto grid = ctx.square_grid(0.0, 1.06, 5);
  for (int j = 0; j <= std::min(6, N - 1); ++j) {
    const auto P = basis_projection(j, N);
    MaxError err;
    for (cplx xi : grid) {
      const auto t = fourier_weyl(P, xi);
      const double s = std::norm(xi);
      err.take(std::abs(t.value - std::exp(-s / 2) * laguerre_poly(j, s)), t.flagged, "xi=" + fmt(xi));
    }
    ctx.check("F_W(e_j (x) e_j) = e^{-|xi|^2/2} L_j, j=" + std::to_string(j), err.value, 0.0, "trace", err.flagged,
              "max at " + err.where);
  }
}

void suite_bargmann_basis(SuiteContext& ctx) {
  const auto grid = ctx.square_grid(0.0, 1.4, 5);
  for (int n = 0; n <= 8; ++n) {
    MaxError err;
    for (cplx z : grid) {
      const cplx b = bargmann_transform([n](double x) { return cplx(hermite_function(n, x)); }, z);
      err.take(std::abs(b - monomial_basis_eval(n, z)), false, "z=" + fmt(z));
    }
    ctx.check("B h_n = e_n, n=" + std::to_string(n), err.value, 0.0, "basis", false, "max at " + err.where);
  }
  const QuadratureRule rule = make_rule(RuleKind::LineHermite, {ctx.cfg.line_nodes});
  MaxError gram;
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; n <= m; ++n) {
      // h_m h_n carries exp(-2x^2); the Hermite weight takes exp(-x^2) of it.
      const cplx v = integrate_hermite(
          [m, n](double x) { return cplx(hermite_function(m, x) * hermite_function(n, x) * std::exp(x * x)); },
          rule);
      gram.take(std::abs(v - (m == n ? 1.0 : 0.0)), false, std::to_string(m) + "," + std::to_string(n));
    }
  ctx.check("h_n orthonormal in L2(R)", gram.value, 0.0, "orthonormal", false, "max at " + gram.where);
}

void suite_localization_wiener(SuiteContext& ctx) {
  const int N = ctx.cfg.n();
  const auto grid = ctx.square_grid(0.0, 1.0, 5);
  auto run = [&](const std::string& name, const TruncatedOperator& A, const std::function<double(double)>& H) {
    const auto r = localization_check(A, H, grid, name);
    const bool flagged = r.verdict == Verdict::Inconclusive;
    ctx.bound(name + " dominated", r.datum("max_excess"), 0.0, "domination", flagged, r.note);
  };
  struct Atomic {
    std::string name;
    MeasureSpec rho;
    double c;
  };
  for (const auto& h : {Atomic{"H_{delta_2}", MeasureSpec::atom(2.0), 2.0},
                        Atomic{"H_{delta_2 + delta_3}", MeasureSpec::atoms({{2.0, 1.0}, {3.0, 1.0}}), 3.0}}) {
    const double M = h.rho.total_variation();
    run(h.name, hausdorff_matrix(h.rho, N), [M, c = h.c](double r) { return std::exp(-r * r / (2 * c)) * M; });
  }
  for (cplx z0 : {cplx(0.5, 0.0), cplx(0.3, -0.6)}) {
    const double s = std::norm(z0);
    run("W_" + fmt(z0), weyl_matrix(z0, N), [s](double r) { return std::exp(s / 2 - r * r / 4); });
  }
  const SymbolSpec f = SymbolSpec::radial_disc(1.0, 1.0, {0.0, 0.5});
  const double sup = f.sup_bound();
  run("T_" + f.describe(), toeplitz_matrix(f, N, ctx.planar()), [sup](double r) { return sup * std::exp(-r * r / 4); });
}

}  // namespace fock::verify
