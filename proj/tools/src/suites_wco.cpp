#include <cmath>

#include "suite_context.hpp"

namespace fock::verify {

namespace {

struct Wco {
  AnalyticSpec psi;
  cplx a;
  cplx lambda;
  std::string label() const { return "psi=" + psi.describe() + " a=" + fmt(a) + " lambda=" + fmt(lambda); }
};

// Parameters with |lambda - 1/2| <= 1/2, where W_{psi,phi} is a Toeplitz operator.
std::vector<Wco> disc_family() {
  const cplx b{0.4, -0.1};
  return {
      {AnalyticSpec::constant(1.0), 0.0, 0.5},
      {AnalyticSpec::polynomial({1.0, 0.5}), 0.3, 0.5},
      {AnalyticSpec::kernel_multiple(0.8, {0.0, 0.2}), {-0.2, 0.1}, 0.25},
      {AnalyticSpec::constant(1.0), 0.5, 0.75},
      {AnalyticSpec::polynomial({1.0, {0.0, -0.3}, 0.2}), {0.1, -0.2}, {0.5, 0.3}},
      // lambda = 1 with psi = e^{-|b|^2/2} K_{-b}: the Weyl operator W_{-b}.
      {AnalyticSpec::kernel_multiple(std::exp(-0.5 * std::norm(b)), -b), b, 1.0},
  };
}

}  // namespace

void suite_wco_symbol(SuiteContext& ctx) {
  const int N = ctx.cfg.n_mid();
  for (const auto& p : disc_family()) {
    const auto W = weighted_composition_matrix(p.psi, p.a, p.lambda, N);
    const auto sym = wco_toeplitz_symbol(p.psi, p.a, p.lambda);
    const auto T = toeplitz_matrix(sym.symbol, N, ctx.planar());
    const double d = operator_norm(linear_combine({{1.0, W}, {-1.0, T}}));
    ctx.check("||W - T_f|| for " + p.label(), d, 0.0, "norm", sym.bounded.verdict == Verdict::Inconclusive,
              "symbol bounded: " + std::string(to_string(sym.bounded.verdict)));
  }
}

void suite_wco_berezin(SuiteContext& ctx) {
  const int N = ctx.cfg.n();
  auto family = disc_family();
  family.push_back({AnalyticSpec::constant(1.0), 0.3, -1.0});
  family.push_back({AnalyticSpec::polynomial({1.0, 0.2}), 0.0, {0.0, 1.0}});
  family.push_back({AnalyticSpec::kernel_multiple(1.0, 0.2), {0.1, 0.0}, -0.6});
  const auto grid = ctx.square_grid(0.0, 1.0, 5);
  for (const auto& p : family) {
    const auto W = weighted_composition_matrix(p.psi, p.a, p.lambda, N);
    MaxError err;
    for (cplx z : grid) {
      const auto b = berezin(W, z);
      err.take(std::abs(b.value - wco_berezin_closed_form(p.psi, p.a, p.lambda, z)), b.flagged, "z=" + fmt(z));
    }
    ctx.check("Berezin closed form for " + p.label(), err.value, 0.0, "closed-form", err.flagged,
              "max at " + err.where);
  }
}

void suite_distance_bound(SuiteContext& ctx) {
  const int N = ctx.cfg.n();
  const RadiusLadder ladder = ctx.cfg.ladder();
  const double threshold = ctx.tol("threshold");
  for (cplx a : {cplx(0.0), cplx(0.3, 0.0)}) {
    // lambda = -1, psi = e^{z conj a}: bounded, |M_z| = e^{|a|^2}, not compact.
    const AnalyticSpec psi = AnalyticSpec::kernel_multiple(1.0, a);
    const cplx lambda = -1.0;
    const auto db = distance_lower_bound(psi, a, lambda, ladder, N);
    const std::string label = "lambda=-1 a=" + fmt(a);
    ctx.bound("lower bound >= " + fmt(threshold) + ", " + label, threshold, db.value, "slack", !db.stable,
              "bound=" + fmt(db.value) + " limsup=" + fmt(db.limsup) + " norm=" + fmt(db.norm));
    ctx.check("lower bound = e^{|a|^2/2}, " + label, db.value, std::exp(std::norm(a) / 2), "value", !db.stable);
    // Twenty Toeplitz candidates; none may come closer than the bound.
    const auto W = weighted_composition_matrix(psi, a, lambda, N);
    std::vector<SymbolSpec> cands;
    for (double c : {-1.0, -0.5, 0.0, 0.5, 1.0}) cands.push_back(SymbolSpec::constant(c));
    for (double c : {0.25, 0.5, 1.0}) cands.push_back(SymbolSpec::gaussian_radial(c, 1.0));
    for (double c : {0.5, 1.0}) cands.push_back(SymbolSpec::gaussian_radial(c, -1.0));
    for (cplx z0 : {cplx(0.3, 0.0), cplx(0.0, 0.3), cplx(-0.5, 0.2), cplx(0.7, -0.7)})
      cands.push_back(SymbolSpec::plane_wave(z0));
    for (int p : {1, 2}) cands.push_back(SymbolSpec::angular(p));
    cands.push_back(SymbolSpec::radial_disc(1.5, 1.0, -1.0));
    cands.push_back(SymbolSpec::radial_disc(2.0, -1.0, 1.0));
    cands.push_back(SymbolSpec::wco(psi, a, 0.5));
    cands.push_back(SymbolSpec::vertical(LineProfile::step(-1.0, 1.0)));
    double best = INFINITY;
    std::string best_name;
    for (const auto& f : cands) {
      const double d = operator_norm(linear_combine({{1.0, W}, {-1.0, toeplitz_matrix(f, N, ctx.planar())}}));
      if (d < best) {
        best = d;
        best_name = f.describe();
      }
    }
    ctx.bound("no Toeplitz candidate beats the bound (" + std::to_string(cands.size()) + " tried), " + label,
              db.value, best, "slack", !db.stable, "closest " + best_name + " at " + fmt(best));
  }
  const auto compact = distance_lower_bound(AnalyticSpec::constant(1.0), 0.0, 0.5, ladder, N);
  ctx.check("compact case lambda=1/2 gives 0", compact.value, 0.0, "compact");
}

void suite_volterra_matrix(SuiteContext& ctx) {
  const int N = ctx.cfg.n();
  const auto V = volterra_matrix(AnalyticSpec::polynomial({0.0, 1.0}), 0.0, 1.0, N);
  MaxError entries;
  for (int m = 0; m < N; ++m)
    for (int n = 0; n < N; ++n) {
      const double ref = m == n + 2 ? std::sqrt((n + 1.0) / (n + 2.0)) : 0.0;
      entries.take(std::abs(V(m, n) - ref), false, std::to_string(m) + "," + std::to_string(n));
    }
  ctx.check("V_{z^2/2} entries sqrt((n+1)/(n+2))", entries.value, 0.0, "entries", false, "max at " + entries.where);
  const auto T = toeplitz_matrix(SymbolSpec::angular(2), N, ctx.planar());
  ctx.check("V_{z^2/2} = T_{(z/|z|)^2}", (V.entries() - T.entries()).cwiseAbs().maxCoeff(), 0.0, "toeplitz");
  // Adjoint lowers by two; V*V is diagonal (n+1)/(n+2) on the leading block.
  const auto VV = compose(adjoint(V), V);
  MaxError diag;
  for (int m = 0; m < N - 2; ++m)
    for (int n = 0; n < N - 2; ++n)
      diag.take(std::abs(VV(m, n) - (m == n ? (n + 1.0) / (n + 2.0) : 0.0)));
  ctx.check("V*V = diag((n+1)/(n+2)) on the leading block", diag.value, 0.0, "entries");
  // V_z is A^[1]: e_n -> e_{n+1} / sqrt(n+1).
  const auto Vz = volterra_matrix(AnalyticSpec::constant(1.0), 0.0, 1.0, N);
  ctx.check("V_z = A^[1]", (Vz.entries() - shift_A_k_matrix(1, N).entries()).cwiseAbs().maxCoeff(), 0.0, "entries");
}

void suite_volterra_berezin(SuiteContext& ctx) {
  const int N = ctx.cfg.n_mid();
  struct Case {
    AnalyticSpec gprime;
    cplx a, lambda;
  };
  const std::vector<Case> cases{
      {AnalyticSpec::constant(1.0), 0.0, 1.0},
      {AnalyticSpec::polynomial({0.0, 1.0}), 0.0, 0.5},
      {AnalyticSpec::polynomial({1.0, 0.5}), 0.2, {0.5, 0.2}},
      {AnalyticSpec::kernel_multiple(1.0, 0.3), {0.0, 0.1}, -0.5},
      {AnalyticSpec::polynomial({0.0, 0.0, 1.0}), 0.0, 1.0},
  };
  const auto grid = ctx.square_grid(0.0, 1.06, 5);
  for (const auto& c : cases) {
    const auto V = volterra_matrix(c.gprime, c.a, c.lambda, N);
    MaxError err;
    for (cplx z : grid) {
      const auto b = berezin(V, z);
      err.take(std::abs(b.value - volterra_berezin_series(c.gprime, c.a, c.lambda, z, 20)), b.flagged,
               "z=" + fmt(z));
    }
    ctx.check("Berezin series for g'=" + c.gprime.describe() + " a=" + fmt(c.a) + " lambda=" + fmt(c.lambda),
              err.value, 0.0, "series", err.flagged, "max at " + err.where);
  }
}

void suite_volterra_decomposition(SuiteContext& ctx) {
  const int N = ctx.cfg.n_mid();
  const auto Vz = volterra_matrix(AnalyticSpec::constant(1.0), 0.0, 1.0, N);
  const auto Vz2 = volterra_matrix(AnalyticSpec::polynomial({0.0, 1.0}), 0.0, 1.0, N);
  struct Case {
    cplx a, b, c;
  };
  for (const auto& k : {Case{1.0, 0.5, {0.3, 0.2}}, Case{{0.0, 0.5}, -0.7, -0.2}, Case{0.0, 1.0, {0.0, 0.4}}}) {
    // g'(z) = a + b z e^{z conj c}, phi(z) = z - c; V is linear in g'.
    const cplx shift = -k.c;
    const auto V = linear_combine(
        {{1.0, volterra_matrix(AnalyticSpec::constant(k.a), shift, 1.0, N)},
         {1.0, volterra_matrix(AnalyticSpec::exp_linear_times_poly({0.0, k.b}, k.c), shift, 1.0, N)}});
    const auto rhs = linear_combine(
        {{k.a, compose(Vz, weighted_composition_matrix(AnalyticSpec::constant(1.0), shift, 1.0, N))},
         {k.b * std::exp(std::norm(k.c) / 2), compose(Vz2, weyl_matrix(k.c, N))}});
    const std::string label = "a=" + fmt(k.a) + " b=" + fmt(k.b) + " c=" + fmt(k.c);
    ctx.check("V = a V_z W_{1,phi} + b e^{|c|^2/2} V_{z^2/2} W_c, " + label,
              (V.entries() - rhs.entries()).cwiseAbs().maxCoeff(), 0.0, "identity");
    // Same identity through the general splitting g'(0) V_z W_{1,phi} + V_{z^2/2} W_{h,phi}.
    const AnalyticSpec h = AnalyticSpec::kernel_multiple(k.b, k.c);
    const auto split = linear_combine(
        {{k.a, compose(Vz, weighted_composition_matrix(AnalyticSpec::constant(1.0), shift, 1.0, N))},
         {1.0, compose(Vz2, weighted_composition_matrix(h, shift, 1.0, N))}});
    ctx.check("V = g'(0) V_z W_{1,phi} + V_{z^2/2} W_{h,phi}, " + label,
              (V.entries() - split.entries()).cwiseAbs().maxCoeff(), 0.0, "identity");
  }
}

void suite_index_volterra(SuiteContext& ctx) {
  const int N = ctx.cfg.n();
  const int margin = 8;
  const std::vector<int> dims{std::max(1, N / 2), std::max(2, 3 * N / 4), N};
  const double thr = ctx.tol("threshold");
  struct Case {
    std::string name;
    TruncatedOperator A;
    int expected;
  };
  const std::vector<Case> cases{
      {"V_{z^2/2}", volterra_matrix(AnalyticSpec::polynomial({0.0, 1.0}), 0.0, 1.0, N + margin), -2},
      {"W_{0.7}", weyl_matrix(0.7, N + margin), 0},
      {"I", identity_operator(N + margin), 0},
  };
  for (const auto& c : cases) {
    const auto est = fredholm_index_estimate(c.A, dims, thr, margin);
    std::string per;
    for (int v : est.per_dim) per += (per.empty() ? "" : ",") + std::to_string(v);
    ctx.check("index of " + c.name + " stable across dims", est.stable ? 1.0 : 0.0, 1.0, "index", false,
              "per dim: " + per);
    ctx.check("index of " + c.name, est.index ? *est.index : NAN, c.expected, "index", false, "per dim: " + per);
  }
}

}  // namespace fock::verify
