#include <cmath>

#include "suite_context.hpp"

namespace fock::verify {

namespace {

std::vector<LineProfile> multipliers() {
  return {
      LineProfile::step(-1.0, 1.0, 0.0),
      LineProfile::step(0.0, 1.0, 0.3),
      LineProfile::gaussian(1.0, 0.3, 0.5),
      LineProfile::cosine(0.2, 0.8, 2.0, 0.3),
      LineProfile::grid({-1.0, 0.0, 1.5}, {0.0, 1.0, 0.5}),
  };
}

}  // namespace

void suite_singular_multiplier(SuiteContext& ctx) {
  const int Ns = ctx.cfg.n_small();
  const int N = ctx.cfg.n();
  std::vector<int> sizes;
  for (int n : {8, 16, 24, 32, 48})
    if (n < N) sizes.push_back(n);
  sizes.push_back(N);
  for (const auto& m : multipliers()) {
    const std::string name = m.describe();
    MultiplierReport rep;
    const auto M = singular_integral_matrix_multiplier(m, Ns, &rep);
    const auto D = singular_integral_matrix_direct(m, Ns);
    ctx.check("direct = multiplier at N=" + std::to_string(Ns) + " for " + name,
              (M.entries() - D.entries()).cwiseAbs().maxCoeff(), 0.0, "cross", rep.flagged,
              "fourier residual " + fmt(rep.fourier_residual));
    const double sup = m.sup_abs();
    double prev = 0.0;
    std::string norms;
    for (int n : sizes) {
      MultiplierReport r;
      const auto S = singular_integral_matrix_multiplier(m, n, &r);
      const double nrm = operator_norm(S);
      norms += (norms.empty() ? "" : ", ") + std::to_string(n) + ":" + fmt(nrm);
      ctx.bound("||S|| <= sup|m| at N=" + std::to_string(n) + " for " + name, nrm, sup, "norm", r.flagged,
                "norm " + fmt(nrm) + " sup " + fmt(sup));
      ctx.bound("||S|| nondecreasing up to N=" + std::to_string(n) + " for " + name, prev, nrm, "monotone", r.flagged,
                norms);
      prev = nrm;
      if (n == N && m.is_real())
        ctx.check("S self-adjoint for real m at N=" + std::to_string(n) + ", " + name,
                  (S.entries() - S.entries().adjoint()).cwiseAbs().maxCoeff(), 0.0, "self-adjoint", r.flagged);
    }
  }
}

void suite_singular_berezin(SuiteContext& ctx) {
  const int N = ctx.cfg.n_composition();
  const auto grid = ctx.square_grid(0.0, 1.0, 5);
  const auto pts = ctx.square_grid(0.0, 0.5, 3);
  for (const auto& m : multipliers()) {
    const auto S = singular_integral_matrix_multiplier(m, N);
    MaxError err;
    for (cplx z : grid) {
      const auto b = berezin(S, z);
      const auto phi = phi_from_multiplier(m, cplx(0.0, 2.0 * z.imag()));
      err.take(std::abs(b.value - phi.value), b.flagged || phi.flagged, "z=" + fmt(z));
    }
    ctx.check("S~(z) = phi(2i Im z) for " + m.describe(), err.value, 0.0, "phi", err.flagged, "max at " + err.where);
    MaxError kern;
    for (cplx w : pts)
      for (cplx z : pts) {
        const auto k = canonical_kernel(S, w, z);
        const auto phi = phi_from_multiplier(m, z - std::conj(w));
        kern.take(std::abs(k.value - phi.value * std::exp(z * std::conj(w))), k.flagged || phi.flagged,
                  "w=" + fmt(w) + " z=" + fmt(z));
      }
    ctx.check("K_S(w,z) = phi(z - conj w) e^{z conj w} for " + m.describe(), kern.value, 0.0, "kernel", kern.flagged,
              "max at " + kern.where);
  }
}

void suite_singular_shift(SuiteContext& ctx) {
  const int N = ctx.cfg.n_composition();
  const auto pts = ctx.square_grid(0.0, 0.5, 3);
  for (const auto& m : multipliers()) {
    const auto S = singular_integral_matrix_multiplier(m, N);
    for (cplx v : {cplx(0.5, 0.4), cplx(-0.3, 0.7)}) {
      const auto lhs = shift_operator(S, v);
      const LineProfile shifted = m.shifted(v.imag());
      const auto rhs = singular_integral_matrix_multiplier(shifted, N);
      MaxError err;
      for (cplx w : pts)
        for (cplx z : pts) {
          const auto a = bivariate_berezin(lhs.op, w, z), b = bivariate_berezin(rhs, w, z);
          err.take(std::abs(a.value - b.value), lhs.flagged || a.flagged || b.flagged,
                   "w=" + fmt(w) + " z=" + fmt(z));
        }
      for (cplx z : pts) {
        const auto a = berezin(lhs.op, z);
        const auto phi = phi_from_multiplier(m, cplx(0.0, 2.0 * (z.imag() - v.imag())));
        err.take(std::abs(a.value - phi.value), a.flagged || phi.flagged, "diagonal z=" + fmt(z));
      }
      ctx.check("alpha_v(S_phi) = S_{phi(. - 2i Im v)}, v=" + fmt(v) + ", " + m.describe(), err.value, 0.0, "lemma",
                err.flagged, "max at " + err.where);
    }
  }
}

void suite_singular_vertical_toeplitz(SuiteContext& ctx) {
  const int N = ctx.cfg.n_composition();
  const auto grid = ctx.square_grid(0.0, 1.0, 5);
  const std::vector<LineProfile> m0s{
      LineProfile::step(0.0, 1.0, 0.0),
      LineProfile::cosine(0.5, 0.5, 1.5),
      LineProfile::gaussian(1.0, 0.2, 0.6),
  };
  for (const auto& m0 : m0s) {
    const auto vr = vertical_toeplitz_from_m0(m0);
    const std::string signs = "sign=" + std::to_string(vr.sign) + " mismatch(+1)=" + fmt(vr.mismatch_plus) +
                              " mismatch(-1)=" + fmt(vr.mismatch_minus);
    ctx.check("resolved sign for m0=" + m0.describe(), std::min(vr.mismatch_plus, vr.mismatch_minus), 0.0, "berezin",
              false, signs);
    const auto T = toeplitz_matrix(vr.symbol, N, ctx.planar());
    const auto S = singular_integral_matrix_multiplier(vr.multiplier, N);
    MaxError err;
    for (cplx z : grid) {
      const auto a = berezin(T, z), b = berezin(S, z);
      err.take(std::abs(a.value - b.value), a.flagged || b.flagged, "z=" + fmt(z));
    }
    ctx.check("T_f~ = S~ with f(z) = m0(" + std::string(vr.sign < 0 ? "-" : "") + "Im z), m0=" + m0.describe(),
              err.value, 0.0, "berezin", err.flagged, signs + "; max at " + err.where);
  }
}

}  // namespace fock::verify
