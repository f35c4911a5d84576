#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fockbench/analysis.hpp"
#include "fockbench/operators.hpp"
#include "fockbench/transforms.hpp"

using namespace fock;

namespace {

const AnalyticSpec kOne = AnalyticSpec::constant(1.0);
const AnalyticSpec kZ = AnalyticSpec::polynomial({0.0, 1.0});

double max_abs(const Eigen::MatrixXcd& M) { return M.cwiseAbs().maxCoeff(); }

void expect_witness_on_fail(const PredicateReport& r) {
  if (r.verdict == Verdict::Fails) {
    EXPECT_TRUE(r.witness.has_value()) << r.name;
  }
}

}  // namespace

TEST(Norm, Examples) {
  EXPECT_NEAR(operator_norm(identity_operator(12)), 1.0, 1e-14);
  EXPECT_NEAR(operator_norm(hausdorff_matrix(MeasureSpec::atoms({{2.0, 1.0}, {3.0, 1.0}}), 24)), 5.0 / 6.0, 1e-12);
  EXPECT_NEAR(operator_norm(shift_A_k_matrix(3, 24)), 1.0 / std::sqrt(6.0), 1e-12);
  const auto sv = singular_values(zero_operator(5));
  EXPECT_EQ(sv.size(), 5);
  EXPECT_EQ(sv.maxCoeff(), 0.0);
}

TEST(Mz, Examples) {
  EXPECT_NEAR(M_z_quantity(kOne, 0.0, 0.0, 0.0), 1.0, 1e-15);
  for (cplx lambda : {cplx(0.5), cplx(0.0, 0.8)})
    for (cplx z : {cplx(0.5, 0.1), cplx(2.0, -1.0)})
      EXPECT_NEAR(M_z_quantity(kOne, 0.0, lambda, z), std::exp((std::norm(lambda) - 1.0) * std::norm(z)),
                  1e-14);
}

TEST(Mz, ConstantOnUnitCircleWithMatchingExponential) {
  // psi(w) = psi(0) e^{-conj(a) lambda w}
  for (auto [a, lambda] : {std::pair{cplx(0.6, -0.2), cplx(1.0)}, std::pair{cplx(-0.3, 0.9), std::polar(1.0, 2.0)}}) {
    const auto psi = AnalyticSpec::kernel_multiple(1.5, -std::conj(std::conj(a) * lambda));
    const double ref = M_z_quantity(psi, a, lambda, 0.0);
    EXPECT_GT(ref, 0.0);
    for (int k = 0; k < 10; ++k) {
      const cplx z = std::polar(0.4 * k, 0.7 * k);
      EXPECT_NEAR(M_z_quantity(psi, a, lambda, z), ref, 1e-10 * ref) << z;
    }
  }
}

TEST(Mz, OverflowIsInfinite) {
  EXPECT_TRUE(std::isinf(M_z_quantity(kOne, 0.0, cplx(2.0), 40.0)));
}

TEST(R, Examples) {
  EXPECT_EQ(R_quantity(AnalyticSpec::constant(0.0), 0.3, 0.5, {1.0, 2.0}), 0.0);
  for (double r : {1.0, 10.0, 50.0}) EXPECT_NEAR(R_quantity(kZ, 0.0, 1.0, r), r / (1.0 + r), 1e-14);
  EXPECT_GT(R_quantity(kZ, 0.0, 1.0, 50.0), 0.98);
  EXPECT_NEAR(R_quantity(kOne, 0.0, 0.0, 3.0), std::exp(-4.5) / 4.0, 1e-16);
}

TEST(WcoPredicates, Examples) {
  const auto compact = wco_predicates(kOne, 0.0, 0.5);
  EXPECT_EQ(compact.bounded.verdict, Verdict::Holds);
  EXPECT_EQ(compact.compact.verdict, Verdict::Holds);

  const cplx a(0.4, 0.1);
  const auto weyl_like = wco_predicates(AnalyticSpec::kernel_multiple(1.0, -a), a, 1.0);
  EXPECT_EQ(weyl_like.bounded.verdict, Verdict::Holds);
  EXPECT_EQ(weyl_like.compact.verdict, Verdict::Fails);

  const auto unbounded = wco_predicates(kZ, 0.0, 1.0);
  EXPECT_EQ(unbounded.bounded.verdict, Verdict::Fails);
  ASSERT_TRUE(unbounded.bounded.witness.has_value());
  EXPECT_GT(unbounded.bounded.witness->value, 10.0);
  for (const auto* r : {&compact.bounded, &compact.compact, &weyl_like.compact, &unbounded.compact})
    expect_witness_on_fail(*r);
}

TEST(VolterraPredicates, Examples) {
  // g = a + bz + cz^2: bounded; g = a + bz: compact; g' = z^2: unbounded.
  const auto quad = volterra_predicates(AnalyticSpec::polynomial({0.5, 2.0}), 0.0, 1.0);
  EXPECT_EQ(quad.bounded.verdict, Verdict::Holds);
  EXPECT_NE(quad.compact.verdict, Verdict::Holds);
  const auto lin = volterra_predicates(AnalyticSpec::constant(0.7), 0.0, 1.0);
  EXPECT_EQ(lin.bounded.verdict, Verdict::Holds);
  EXPECT_EQ(lin.compact.verdict, Verdict::Holds);
  const auto cubic = volterra_predicates(AnalyticSpec::polynomial({0.0, 0.0, 1.0}), 0.0, 1.0);
  EXPECT_EQ(cubic.bounded.verdict, Verdict::Fails);
  expect_witness_on_fail(cubic.bounded);
  expect_witness_on_fail(quad.compact);
}

TEST(HausdorffPredicates, Examples) {
  const auto d1 = hausdorff_predicates(MeasureSpec::atom(1.0));
  EXPECT_EQ(d1.predicates.bounded.verdict, Verdict::Holds);
  EXPECT_EQ(d1.predicates.compact.verdict, Verdict::Fails);
  EXPECT_NEAR(d1.norm, 1.0, 1e-15);

  const auto d2 = hausdorff_predicates(MeasureSpec::atom(2.0));
  EXPECT_EQ(d2.predicates.bounded.verdict, Verdict::Holds);
  EXPECT_EQ(d2.predicates.compact.verdict, Verdict::Holds);
  EXPECT_NEAR(d2.norm, 0.5, 1e-15);

  const auto dens = hausdorff_predicates(MeasureSpec::power_density(1.0, -2.0, 1.0, 10.0));
  EXPECT_EQ(dens.predicates.bounded.verdict, Verdict::Holds);
  EXPECT_EQ(dens.predicates.compact.verdict, Verdict::Holds);
  EXPECT_NEAR(dens.norm, (1.0 - 1e-2) / 2.0, 1e-8);

  const auto bad = hausdorff_predicates(MeasureSpec::atom(0.5));
  EXPECT_EQ(bad.predicates.bounded.verdict, Verdict::Fails);
  expect_witness_on_fail(bad.predicates.bounded);
}

TEST(DistanceBound, CompactCaseVanishes) {
  const auto d = distance_lower_bound(kOne, 0.0, 0.5);
  EXPECT_NEAR(d.value, 0.0, 1e-6);
}

TEST(DistanceBound, ReflectionIsPositive) {
  // lambda = -1, psi = e^{z conj(a)}: M_z = e^{|a|^2}, norm e^{|a|^2/2}.
  for (cplx a : {cplx(0.0), cplx(0.3, 0.0)}) {
    const auto d = distance_lower_bound(AnalyticSpec::kernel_multiple(1.0, a), a, -1.0);
    EXPECT_GT(d.value, 0.1);
    EXPECT_TRUE(d.stable);
    EXPECT_NEAR(d.value, std::exp(0.5 * std::norm(a)), 1e-6);
  }
}

TEST(DistanceBound, Rejections) {
  EXPECT_THROW(distance_lower_bound(AnalyticSpec::constant(0.0), 0.0, -1.0), PreconditionError);
  EXPECT_THROW(distance_lower_bound(kOne, 0.0, 1.0), PreconditionError);
}

TEST(WcoSymbol, HalfDilation) {
  const auto r = wco_toeplitz_symbol(kOne, 0.0, 0.5);
  for (cplx w : {cplx(0.0), cplx(0.4, 0.9), cplx(-1.5, 0.2)})
    EXPECT_NEAR(std::abs(r.symbol(w) - 2.0 * std::exp(-std::norm(w))), 0.0, 1e-14);
  EXPECT_EQ(r.bounded.verdict, Verdict::Holds);
  const int N = 24;
  EXPECT_LT(max_abs(toeplitz_matrix(r.symbol, N).entries() - weighted_composition_matrix(kOne, 0.0, 0.5, N).entries()),
            1e-6);
}

TEST(WcoSymbol, WeylBoundaryRecoversPlaneWave) {
  // W_z as W_{psi, phi} with psi = e^{-|z|^2/2} e^{w conj z}, phi(w) = w - z.
  const cplx z(0.5, -0.3);
  const auto r = wco_toeplitz_symbol(AnalyticSpec::kernel_multiple(std::exp(-0.5 * std::norm(z)), z), -z, 1.0);
  const auto g = SymbolSpec::plane_wave(z);
  for (cplx w : {cplx(0.0), cplx(0.3, 0.8), cplx(-1.0, -0.4)})
    EXPECT_NEAR(std::abs(r.symbol(w) - g(w)), 0.0, 1e-13) << w;
}

TEST(WcoSymbol, RejectsOutsideDisc) {
  EXPECT_THROW(wco_toeplitz_symbol(kOne, 0.0, -0.5), PreconditionError);
  EXPECT_THROW(wco_toeplitz_symbol(kOne, 0.0, 0.0), PreconditionError);
}

TEST(Vertical, ConstantProfile) {
  const auto v = vertical_toeplitz_from_m0(LineProfile::constant(1.0));
  for (double x : {-3.0, 0.0, 2.0}) EXPECT_NEAR(std::abs(v.multiplier(x) - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(v.symbol({0.3, -1.2}) - 1.0), 0.0, 1e-15);
  EXPECT_EQ(v.report.verdict, Verdict::Holds);
}

TEST(Vertical, CosineBerezinEquality) {
  const auto m0 = LineProfile::cosine(0.2, 0.8, 2.0, 0.3);
  const auto v = vertical_toeplitz_from_m0(m0);
  ASSERT_EQ(v.report.verdict, Verdict::Holds);
  const int N = 48;
  const auto T = toeplitz_matrix(v.symbol, N);
  const auto S = singular_integral_matrix_multiplier(v.multiplier, N);
  for (double re : {-0.8, 0.0, 0.8})
    for (double im : {-0.8, 0.0, 0.8}) {
      const cplx z(re, im);
      EXPECT_NEAR(std::abs(berezin(T, z).value - berezin(S, z).value), 0.0, 1e-5) << z;
    }
}

TEST(Vertical, StepAlongImaginaryAxis) {
  const auto m0 = LineProfile::step(0.0, 1.0, 0.3);
  const auto v = vertical_toeplitz_from_m0(m0);
  EXPECT_EQ(v.sign, -1);
  const auto S = singular_integral_matrix_multiplier(v.multiplier, 48);
  for (double b : {-1.0, -0.2, 0.5, 1.2}) {
    const cplx phi = phi_from_multiplier(v.multiplier, cplx(0.0, 2.0 * b)).value;
    EXPECT_NEAR(std::abs(berezin(S, cplx(0.0, b)).value - phi), 0.0, 1e-5) << b;
    // m * g(-b) = m0 * (g * g)(-b); g * g is a centred Gaussian of variance 1/2
    const double want = 0.5 * std::erfc(0.3 + b);
    EXPECT_NEAR(std::abs(phi - want), 0.0, 1e-8) << b;
  }
}

TEST(GammaA, Examples) {
  EXPECT_NEAR(std::abs(singular_gamma_a(LineProfile::constant(1.0), 0.4) - 1.0), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(singular_gamma_a(LineProfile::constant({2.0, -1.0}), -1.3) - cplx(2.0, -1.0)), 0.0, 1e-13);
  // a(x) = cos(k x): pi^{-1/2} int cos(k y / sqrt2) e^{-(x-y)^2} dy = cos(k x / sqrt2) e^{-k^2/8}
  for (double k : {1.0, 2.5})
    for (double x : {-1.0, 0.0, 0.7}) {
      const double want = std::cos(k * x / std::numbers::sqrt2) * std::exp(-k * k / 8.0);
      EXPECT_NEAR(std::abs(singular_gamma_a(LineProfile::cosine(0.0, 1.0, k), x) - want), 0.0, 1e-8);
    }
}

TEST(FredholmIndex, Examples) {
  const std::vector<int> dims{16, 24, 32};
  const auto id = fredholm_index_estimate(identity_operator(40), dims);
  ASSERT_TRUE(id.stable);
  EXPECT_EQ(*id.index, 0);
  const auto V = fredholm_index_estimate(volterra_matrix(kZ, 0.0, 1.0, 40), dims);
  ASSERT_TRUE(V.stable);
  EXPECT_EQ(*V.index, -2);
  const auto W = fredholm_index_estimate(weyl_matrix({0.4, 0.5}, 40), dims);
  ASSERT_TRUE(W.stable);
  EXPECT_EQ(*W.index, 0);
}

TEST(FredholmIndex, Preconditions) {
  EXPECT_THROW(fredholm_index_estimate(identity_operator(40), {8, 16}), PreconditionError);
  EXPECT_THROW(fredholm_index_estimate(identity_operator(20), {8, 12, 16}), PreconditionError);
}

TEST(Localization, HausdorffDominatedByGaussian) {
  // rho supported in [1, c]: |H~(z, w)| <= e^{-|z-w|^2/(2c)} M_rho
  const auto rho = MeasureSpec::atoms({{1.5, 1.0}, {2.0, 0.5}});
  const double c = 2.0, M = rho.total_variation();
  const auto H = hausdorff_matrix(rho, 48);
  std::vector<cplx> grid;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) grid.emplace_back(-1.0 + 0.5 * i, -1.0 + 0.5 * j);
  const auto r = localization_check(H, [&](double d) { return M * std::exp(-d * d / (2 * c)); }, grid);
  EXPECT_EQ(r.verdict, Verdict::Holds);
}

TEST(Localization, WeylAndToeplitz) {
  std::vector<cplx> grid;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) grid.emplace_back(-0.9 + 0.6 * i, -0.9 + 0.6 * j);
  const cplx z0(0.5, 0.0);
  // |W~(w, v)| = e^{-|v - w - z0|^2/2} <= e^{|z0|^2/2} e^{-|v-w|^2/4}
  const auto rw = localization_check(weyl_matrix(z0, 48), [&](double d) {
    return std::exp(0.5 * std::norm(z0)) * std::exp(-d * d / 4.0); }, grid);
  EXPECT_EQ(rw.verdict, Verdict::Holds);
  const auto rt = localization_check(toeplitz_matrix(SymbolSpec::radial_disc(1.0, 1.0, 0.0), 48),
                                     [](double d) { return std::exp(-d * d / 4.0); }, grid);
  EXPECT_EQ(rt.verdict, Verdict::Holds);
  // |<f k_w, k_z>| <= sup|f| int |k_w k_z| d mu = sup|f| e^{-|z-w|^2/4}
  // A profile that is too small must fail with a witness.
  const auto bad = localization_check(identity_operator(48), [](double d) { return 0.5 * std::exp(-d * d); }, grid);
  EXPECT_EQ(bad.verdict, Verdict::Fails);
  expect_witness_on_fail(bad);
}

TEST(DecayProfile, Examples) {
  const std::vector<double> radii{0.5, 1.5, 2.5, 3.5};
  const auto h2 = berezin_decay_profile(hausdorff_matrix(MeasureSpec::atom(2.0), 64), radii);
  ASSERT_EQ(h2.sup_values.size(), radii.size());
  for (size_t i = 1; i < radii.size(); ++i) EXPECT_LT(h2.sup_values[i], h2.sup_values[i - 1]);
  EXPECT_LT(h2.sup_values.back(), 0.5 * std::exp(-0.5 * 3.5 * 3.5) + 1e-8);

  const auto h1 = berezin_decay_profile(hausdorff_matrix(MeasureSpec::atom(1.0), 64), radii);
  for (double v : h1.sup_values) EXPECT_NEAR(v, 1.0, 1e-10);

  const cplx z0(0.6, 0.3);
  const auto w = berezin_decay_profile(weyl_matrix(z0, 64), radii);
  for (double v : w.sup_values) EXPECT_NEAR(v, std::exp(-0.5 * std::norm(z0)), 1e-8);
}

TEST(DecayProfile, DropsUnreliableRadii) {
  const auto p = berezin_decay_profile(identity_operator(16), {1.0, 1.9, 3.0, 5.0});
  EXPECT_TRUE(p.flagged);
  EXPECT_EQ(p.radii.size(), 2u);
  EXPECT_THROW(berezin_decay_profile(identity_operator(16), {1.0, 0.5}), PreconditionError);
}

TEST(SlowOscillation, Examples) {
  const std::vector<cplx> constant(200, cplx(0.3, 0.1));
  const auto c = slow_oscillation_check(constant, 1e-12, 1.0);
  EXPECT_EQ(c.verdict, Verdict::Holds);
  EXPECT_EQ(c.datum("oscillation"), 0.0);

  std::vector<cplx> geo(200);
  for (int n = 0; n < 200; ++n) geo[n] = std::ldexp(1.0, -(n + 1));
  EXPECT_LT(slow_oscillation_check(geo, 1e-10, 1.0, 40).datum("oscillation"), 1e-12);

  std::vector<cplx> alt(400);
  for (int n = 0; n < 400; ++n) alt[n] = (n % 2) ? -1.0 : 1.0;
  const auto a = slow_oscillation_check(alt, 0.5, 0.05, 40);
  EXPECT_EQ(a.verdict, Verdict::Fails);
  EXPECT_NEAR(a.datum("oscillation"), 2.0, 1e-15);
  expect_witness_on_fail(a);
  EXPECT_TRUE(std::isnan(a.datum("missing")));
}

TEST(HausdorffSymbol, Examples) {
  EXPECT_NEAR(std::abs(hausdorff_toeplitz_symbol(MeasureSpec::atom(1.0))({1.3, 0.4}) - 1.0), 0.0, 1e-15);
  const auto f2 = hausdorff_toeplitz_symbol(MeasureSpec::atom(2.0));
  EXPECT_NEAR(std::abs(f2({0.5, 0.5}) - std::exp(-0.5)), 0.0, 1e-15);
  const auto rho = MeasureSpec::atoms({{2.0, 1.0}, {3.0, 2.0}});
  const auto eig = toeplitz_radial_eigenvalues(hausdorff_toeplitz_symbol(rho), 20);
  for (int n = 0; n < 20; ++n) {
    const double want = std::pow(2.0, -(n + 1)) + 2.0 * std::pow(3.0, -(n + 1));
    EXPECT_NEAR(std::abs(eig[n] - want), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(rho.moment(n) - want), 0.0, 1e-15);
  }
  EXPECT_THROW(hausdorff_toeplitz_symbol(MeasureSpec::power_density(1.0, -2.0, 1.0, 5.0)), PreconditionError);
}
