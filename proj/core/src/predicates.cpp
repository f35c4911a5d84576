#include <cmath>
#include <limits>
#include <numbers>

#include "detail.hpp"
#include "fockbench/analysis.hpp"

namespace fock {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

double PredicateReport::datum(const std::string& key) const {
  for (const auto& [k, v] : data)
    if (k == key) return v;
  return std::numeric_limits<double>::quiet_NaN();
}

double M_z_quantity(const AnalyticSpec& psi, cplx a, cplx lambda, cplx z) {
  const cplx p = psi(z);
  if (p == 0.0) return 0.0;
  const double logm = 2.0 * std::log(std::abs(p)) + std::norm(a + lambda * z) - std::norm(z);
  if (!std::isfinite(logm) || logm > 700.0) return std::numeric_limits<double>::infinity();
  return std::exp(logm);
}

double R_quantity(const AnalyticSpec& gprime, cplx a, cplx lambda, cplx z) {
  const cplx g = gprime(z);
  if (g == 0.0) return 0.0;
  const double logr = std::log(std::abs(g)) - std::log1p(std::abs(z)) +
                      0.5 * (std::norm(a + lambda * z) - std::norm(z));
  if (!std::isfinite(logr) || logr > 700.0) return std::numeric_limits<double>::infinity();
  return std::exp(logr);
}

PredicatePair ladder_predicates(const std::string& name, const std::function<double(cplx)>& q,
                                const RadiusLadder& ladder) {
  const auto& radii = ladder.radii;
  if (radii.size() < 2) throw PreconditionError("ladder has >= 2 rungs", name);
  PredicatePair out;
  out.bounded.name = name + ".bounded";
  out.compact.name = name + ".compact";

  std::vector<double> circle_max, running;
  std::vector<Witness> circle_arg;
  Witness best{0.0, q(0.0)};
  double run = best.value;
  for (double r : radii) {
    Witness cm{r, -1.0};
    for (int t = 0; t < ladder.n_angles; ++t) {
      const cplx z = std::polar(r, 2.0 * std::numbers::pi * t / ladder.n_angles);
      const double v = q(z);
      if (std::isnan(v) || v > cm.value) cm = {z, std::isnan(v) ? std::numeric_limits<double>::infinity() : v};
    }
    circle_max.push_back(cm.value);
    circle_arg.push_back(cm);
    if (cm.value > run) {
      run = cm.value;
      best = cm;
    }
    running.push_back(run);
    out.bounded.data.emplace_back("sup_r" + detail::fmt(r), run);
    out.compact.data.emplace_back("max_r" + detail::fmt(r), cm.value);
  }
  const size_t L = radii.size();
  const double s_last = running[L - 1], s_prev = running[L - 2];
  bool bounded = std::isfinite(s_last);
  if (bounded) {
    bool settled = s_last <= 1.1 * s_prev;
    if (!settled && L >= 3) {
      const double d1 = s_last - s_prev, d0 = s_prev - running[L - 3];
      settled = d0 > 0 && d1 <= 0.75 * d0;
    }
    bounded = settled;
  }
  out.bounded.verdict = bounded ? Verdict::Holds : Verdict::Fails;
  if (!bounded) {
    out.bounded.witness = best;
    out.bounded.note = "sampled supremum keeps growing along the ladder";
  }

  const double c_last = circle_max[L - 1], c_prev = circle_max[L - 2];
  if (!bounded) {
    out.compact.verdict = Verdict::Fails;
    out.compact.witness = circle_arg[L - 1];
    out.compact.note = "unbounded";
  } else if (c_last < ladder.compact_tolerance && c_last <= c_prev) {
    out.compact.verdict = Verdict::Holds;
  } else {
    bool decreasing = true;
    for (size_t i = (L >= 3 ? L - 3 : 0); i + 1 < L; ++i) decreasing = decreasing && circle_max[i + 1] < circle_max[i];
    const double slope = std::log(c_last / c_prev) / std::log(radii[L - 1] / radii[L - 2]);
    out.compact.data.emplace_back("outer_loglog_slope", slope);
    if (decreasing && slope <= -0.5) {
      out.compact.verdict = Verdict::Holds;
      out.compact.note = "outer maxima decay at least like |z|^-1/2";
    } else if (decreasing) {
      out.compact.verdict = Verdict::Inconclusive;
      out.compact.note = "decreasing but too slowly to call";
    } else {
      out.compact.verdict = Verdict::Fails;
      out.compact.witness = circle_arg[L - 1];
      out.compact.note = "outer circle maximum does not tend to 0";
    }
  }
  return out;
}

PredicatePair wco_predicates(const AnalyticSpec& psi, cplx a, cplx lambda, const RadiusLadder& ladder) {
  auto out = ladder_predicates(
      "wco", [&](cplx z) { return M_z_quantity(psi, a, lambda, z); }, ladder);
  if (std::abs(std::abs(lambda) - 1.0) < 1e-14 && out.compact.verdict != Verdict::Fails) {
    out.compact.verdict = Verdict::Fails;
    const cplx z = ladder.radii.back();
    out.compact.witness = Witness{z, M_z_quantity(psi, a, lambda, z)};
    out.compact.note = "|lambda| = 1: M_z cannot tend to 0";
  }
  return out;
}

PredicatePair volterra_predicates(const AnalyticSpec& gprime, cplx a, cplx lambda, const RadiusLadder& ladder) {
  return ladder_predicates(
      "volterra", [&](cplx z) { return R_quantity(gprime, a, lambda, z); }, ladder);
}

HausdorffVerdict hausdorff_predicates(const MeasureSpec& rho) {
  HausdorffVerdict out;
  auto& b = out.predicates.bounded;
  auto& c = out.predicates.compact;
  b.name = "hausdorff.bounded";
  c.name = "hausdorff.compact";
  bool support_ok = true;
  Witness bad;
  for (const auto& [x, w] : rho.atom_list())
    if (x < 1.0) {
      support_ok = false;
      bad = {x, std::abs(w)};
    }
  if (rho.density() && rho.density()->t.front() < 1.0) {
    support_ok = false;
    bad = {rho.density()->t.front(), std::abs(rho.density()->values.front())};
  }
  const double tv = rho.total_variation();
  out.norm = tv;
  b.data.emplace_back("total_variation", tv);
  if (support_ok && std::isfinite(tv)) {
    b.verdict = Verdict::Holds;
  } else {
    b.verdict = Verdict::Fails;
    b.witness = bad;
    b.note = support_ok ? "int (1/t) d|rho| infinite" : "rho charges (0, 1)";
  }
  const cplx one = rho.mass_at_one();
  c.data.emplace_back("mass_at_one", std::abs(one));
  if (b.verdict == Verdict::Fails) {
    c.verdict = Verdict::Fails;
    c.witness = bad;
    c.note = "unbounded";
  } else if (one == 0.0) {
    c.verdict = Verdict::Holds;
  } else {
    c.verdict = Verdict::Fails;
    c.witness = Witness{1.0, std::abs(one)};
    c.note = "atom at t = 1";
  }
  if (rho.is_positive()) c.data.emplace_back("norm", tv);
  return out;
}

}  // namespace fock
