#include <cmath>

#include "suite_context.hpp"

namespace fock::verify {

namespace {

struct Measure {
  std::string name;
  MeasureSpec rho;
};

std::vector<Measure> atomic_family() {
  return {{"delta_2", MeasureSpec::atom(2.0)}, {"delta_2 + 2 delta_3", MeasureSpec::atoms({{2.0, 1.0}, {3.0, 2.0}})}};
}

MeasureSpec density_1_over_t2() { return MeasureSpec::power_density(1.0, -2.0, 1.0, 10.0); }

}  // namespace

void suite_hausdorff_eigen(SuiteContext& ctx) {
  const int N = ctx.cfg.n();
  for (const auto& m : atomic_family()) {
    const auto H = hausdorff_matrix(m.rho, N);
    const auto eig = toeplitz_radial_eigenvalues(hausdorff_toeplitz_symbol(m.rho), N);
    MaxError err, off;
    for (int n = 0; n < N; ++n) {
      err.take(std::abs(H(n, n) - eig[n]), false, "n=" + std::to_string(n));
      double direct = 0.0;  // sum w x^{-(n+1)}
      for (const auto& [x, w] : m.rho.atom_list()) direct += w.real() * std::pow(x, -(n + 1.0));
      off.take(std::abs(H(n, n) - direct), false, "n=" + std::to_string(n));
    }
    ctx.check("diag H_rho = radial Toeplitz eigenvalues, rho=" + m.name, err.value, 0.0, "moments", false,
              "max at " + err.where);
    ctx.check("diag H_rho = sum w x^{-(n+1)}, rho=" + m.name, off.value, 0.0, "moments", false, "max at " + off.where);
    ctx.check("H_rho diagonal, rho=" + m.name,
              (H.entries() - Eigen::MatrixXcd(H.entries().diagonal().asDiagonal())).cwiseAbs().maxCoeff(), 0.0,
              "moments");
  }
  const auto H = hausdorff_matrix(density_1_over_t2(), N);
  MaxError err;
  for (int n = 0; n < N; ++n)
    err.take(std::abs(H(n, n) - (1.0 - std::pow(10.0, -(n + 2.0))) / (n + 2.0)), false, "n=" + std::to_string(n));
  ctx.check("diag H_rho = (1 - 10^{-(n+2)})/(n+2), rho=t^{-2} dt on [1,10]", err.value, 0.0, "moments", false,
            "max at " + err.where);
  const auto I = hausdorff_matrix(MeasureSpec::atom(1.0), N);
  ctx.check("H_{delta_1} = I", (I.entries() - Eigen::MatrixXcd::Identity(N, N)).cwiseAbs().maxCoeff(), 0.0,
            "moments");
}

void suite_hausdorff_norm(SuiteContext& ctx) {
  const int N = ctx.cfg.n();
  struct Case {
    std::string name;
    MeasureSpec rho;
    double norm;
  };
  const std::vector<Case> cases{
      {"delta_2", MeasureSpec::atom(2.0), 0.5},
      {"delta_2 + 2 delta_3", MeasureSpec::atoms({{2.0, 1.0}, {3.0, 2.0}}), 0.5 + 2.0 / 3.0},
      {"t^{-2} dt on [1,10]", density_1_over_t2(), (1.0 - 1e-2) / 2.0},
  };
  for (const auto& c : cases) {
    ctx.check("||H_rho|| = int (1/t) d rho, rho=" + c.name, operator_norm(hausdorff_matrix(c.rho, N)), c.norm, "norm");
    const auto v = hausdorff_predicates(c.rho);
    ctx.check("predicate norm, rho=" + c.name, v.norm, c.norm, "norm");
    ctx.check("compact verdict, rho=" + c.name, v.predicates.compact.verdict == Verdict::Holds ? 1.0 : 0.0, 1.0,
              "norm", false, v.predicates.compact.note);
  }
  const auto one = hausdorff_predicates(MeasureSpec::atom(1.0));
  ctx.check("delta_1 bounded", one.predicates.bounded.verdict == Verdict::Holds ? 1.0 : 0.0, 1.0, "norm");
  ctx.check("delta_1 not compact", one.predicates.compact.verdict == Verdict::Fails ? 1.0 : 0.0, 1.0, "norm");
  ctx.check("||H_{delta_1}|| = 1", operator_norm(hausdorff_matrix(MeasureSpec::atom(1.0), N)), 1.0, "norm");
}

void suite_hausdorff_decay(SuiteContext& ctx) {
  const int N = ctx.cfg.n();
  const double R = reliable_radius(N);
  std::vector<double> radii;
  for (double r : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0})
    if (r <= R) radii.push_back(r);
  for (double x : {1.0, 2.0, 3.0}) {
    const auto H = hausdorff_matrix(MeasureSpec::atom(x), N);
    const auto prof = berezin_decay_profile(H, radii);
    MaxError err;
    for (std::size_t i = 0; i < prof.radii.size(); ++i) {
      const double r = prof.radii[i];
      err.take(std::abs(prof.sup_values[i] - std::exp((1.0 / x - 1.0) * r * r) / x), prof.flagged,
               "r=" + fmt(r));
    }
    ctx.check("H_{delta_" + fmt(x) + "}~ = e^{(1/x - 1)|z|^2}/x", err.value, 0.0, "closed-form", prof.flagged,
              "max at " + err.where);
  }
  // Moment sequences as slowly oscillating eigenvalue sequences.
  std::vector<cplx> moments, alternating;
  const MeasureSpec rho = MeasureSpec::atoms({{2.0, 1.0}, {3.0, 2.0}});
  for (int n = 0; n < 400; ++n) {
    moments.push_back(rho.moment(n));
    alternating.push_back(n % 2 ? -1.0 : 1.0);
  }
  const double eps = ctx.tol("oscillation");
  const auto slow = slow_oscillation_check(moments, eps, 1.0, 40);
  ctx.check("moments of delta_2 + 2 delta_3 oscillate slowly", slow.verdict == Verdict::Holds ? 1.0 : 0.0, 1.0,
            "oscillation", false, slow.note);
  const auto fast = slow_oscillation_check(alternating, eps, 1.0, 40);
  ctx.check("(-1)^n does not oscillate slowly", fast.verdict == Verdict::Fails ? 1.0 : 0.0, 1.0, "oscillation", false,
            fast.note);
}

}  // namespace fock::verify
