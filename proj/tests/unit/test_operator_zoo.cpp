#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>

#include "fockbench/analysis.hpp"
#include "fockbench/operator_spec.hpp"
#include "fockbench/operators.hpp"
#include "fockbench/special.hpp"

using namespace fock;

namespace {

double max_abs(const Eigen::MatrixXcd& M) { return M.cwiseAbs().maxCoeff(); }

double dist_to_identity(const TruncatedOperator& A) {
  return max_abs(A.entries() - Eigen::MatrixXcd::Identity(A.dim(), A.dim()));
}

double off_diagonal(const TruncatedOperator& A) {
  Eigen::MatrixXcd M = A.entries();
  M.diagonal().setZero();
  return max_abs(M);
}

}  // namespace

TEST(Toeplitz, ConstantSymbolIsIdentity) {
  EXPECT_LT(dist_to_identity(toeplitz_matrix(SymbolSpec::constant(1.0), 24)), 1e-12);
}

TEST(Toeplitz, AngularSelectionRule) {
  const auto T = toeplitz_matrix(SymbolSpec::angular(2), 16);
  EXPECT_NEAR(std::abs(T(2, 0)), std::sqrt(0.5), 1e-12);
  for (int n = 0; n + 2 < 16; ++n) EXPECT_NEAR(std::abs(T(n + 2, n) - std::sqrt((n + 1.0) / (n + 2.0))), 0.0, 1e-12);
  for (int m = 0; m < 16; ++m)
    for (int n = 0; n < 16; ++n)
      if (m != n + 2) {
        EXPECT_EQ(T(m, n), cplx(0.0));
      }
}

TEST(Toeplitz, GaussianRadialDiagonal) {
  const auto T = toeplitz_matrix(SymbolSpec::gaussian_radial(1.0), 20);
  for (int n = 0; n < 20; ++n) EXPECT_NEAR(T(n, n).real(), std::ldexp(1.0, -(n + 1)), 1e-13);
  EXPECT_LT(off_diagonal(T), 1e-15);
}

TEST(Toeplitz, RadialEigenvalues) {
  const auto one = toeplitz_radial_eigenvalues(SymbolSpec::constant(1.0), 30);
  for (auto v : one) EXPECT_NEAR(std::abs(v - 1.0), 0.0, 1e-12);
  const auto half = toeplitz_radial_eigenvalues(SymbolSpec::gaussian_radial(1.0), 30);
  for (int n = 0; n < 30; ++n) EXPECT_NEAR(half[n].real(), std::ldexp(1.0, -(n + 1)), 1e-13);
  const auto r2 = toeplitz_radial_eigenvalues(SymbolSpec::radial_power(2), 30);
  for (int n = 0; n < 30; ++n) EXPECT_NEAR(r2[n].real(), n + 1.0, 1e-10 * (n + 1));
}

TEST(Toeplitz, RadialEigenvaluesMatchDiagonal) {
  const auto f = SymbolSpec::radial_disc(1.5, 2.0, -0.5);
  const auto T = toeplitz_matrix(f, 20);
  const auto a = toeplitz_radial_eigenvalues(f, 20);
  for (int n = 0; n < 20; ++n) EXPECT_NEAR(std::abs(T(n, n) - a[n]), 0.0, 1e-10);
}

TEST(Toeplitz, GenericSymbolMatchesQuadratureOracle) {
  // Plane wave symbol through the ring-by-ring path against a direct planar sum.
  const auto f = SymbolSpec::plane_wave({0.3, -0.4});
  const int N = 6;
  const auto T = toeplitz_matrix(f, N);
  const auto& rule = default_planar_rule();
  for (int m = 0; m < N; ++m)
    for (int n = 0; n < N; ++n) {
      const cplx want = integrate_gaussian(
          [&](cplx z) { return f(z) * monomial_basis_eval(n, z) * std::conj(monomial_basis_eval(m, z)); }, rule);
      EXPECT_NEAR(std::abs(T(m, n) - want), 0.0, 1e-10);
    }
}

TEST(Weyl, ZeroIsIdentity) { EXPECT_LT(dist_to_identity(weyl_matrix(0.0, 20)), 1e-15); }

TEST(Weyl, VacuumEntry) { EXPECT_NEAR(weyl_matrix(1.0, 8)(0, 0).real(), std::exp(-0.5), 1e-15); }

TEST(Weyl, EntriesMatchSeriesOracle) {
  // <W_z e_n, e_m> from e^{-|z|^2/2} e^{w conj z} (w - z)^n / sqrt(n!), summed in long double.
  const cplx z(0.6, -0.8);
  const int N = 12;
  const auto W = weyl_matrix(z, N);
  for (int n = 0; n < N; ++n)
    for (int m = 0; m < N; ++m) {
      std::complex<long double> acc = 0.0L;
      const std::complex<long double> zl(z.real(), z.imag());
      for (int k = 0; k <= std::min(n, m); ++k) {
        // coefficient of w^m: C(n, k) w^k (-z)^{n-k} * conj(z)^{m-k} / (m-k)!
        const long double c = std::exp(std::lgamma(n + 1.0L) - std::lgamma(k + 1.0L) - std::lgamma(n - k + 1.0L) -
                                       std::lgamma(m - k + 1.0L));
        acc += c * std::pow(-zl, n - k) * std::pow(std::conj(zl), m - k);
      }
      acc *= std::exp(-0.5L * std::norm(zl)) * std::sqrt(std::tgamma(m + 1.0L) / std::tgamma(n + 1.0L));
      EXPECT_NEAR(std::abs(W(m, n) - cplx(double(acc.real()), double(acc.imag()))), 0.0, 1e-13) << m << "," << n;
    }
}

TEST(Weyl, GroupLawOnLeadingBlock) {
  const int N = 48, h = N / 2;
  for (auto [z, w] : {std::pair{cplx(0.5, 0.3), cplx(-0.2, 0.7)}, std::pair{cplx(1.0, 0.0), cplx(0.0, 1.0)}}) {
    const Eigen::MatrixXcd lhs = (weyl_matrix(z, N).entries() * weyl_matrix(w, N).entries()).topLeftCorner(h, h);
    const Eigen::MatrixXcd rhs =
        std::exp(cplx(0, -std::imag(z * std::conj(w)))) * weyl_matrix(z + w, N).entries().topLeftCorner(h, h);
    EXPECT_LT(max_abs(lhs - rhs), 1e-8);
  }
}

TEST(Wco, IdentityCase) {
  EXPECT_LT(dist_to_identity(weighted_composition_matrix(AnalyticSpec::constant(1.0), 0.0, 1.0, 16)), 1e-15);
}

TEST(Wco, HalfDilationDiagonal) {
  const auto W = weighted_composition_matrix(AnalyticSpec::constant(1.0), 0.0, 0.5, 16);
  for (int n = 0; n < 16; ++n) EXPECT_NEAR(W(n, n).real(), std::ldexp(1.0, -n), 1e-15);
  EXPECT_LT(off_diagonal(W), 1e-15);
}

TEST(Wco, WeylAsWeightedComposition) {
  const cplx z(0.4, -0.7);
  const int N = 40;
  const auto W = weighted_composition_matrix(AnalyticSpec::kernel_multiple(std::exp(-0.5 * std::norm(z)), z), -z,
                                             1.0, N);
  const Eigen::MatrixXcd diff = (W.entries() - weyl_matrix(z, N).entries()).topLeftCorner(N / 2, N / 2);
  EXPECT_LT(max_abs(diff), 1e-12);
}

TEST(Wco, RejectsExpandingSymbol) {
  EXPECT_THROW(weighted_composition_matrix(AnalyticSpec::constant(1.0), 0.0, 1.2, 8), PreconditionError);
  EXPECT_THROW(volterra_matrix(AnalyticSpec::constant(1.0), 0.0, cplx(0.0, 1.01), 8), PreconditionError);
}

TEST(Phi, ConstantMultiplier) {
  const auto m = LineProfile::constant(1.0);
  for (cplx z : {cplx(0.0), cplx(1.0, 1.0)}) {
    const auto r = phi_from_multiplier(m, z);
    EXPECT_NEAR(std::abs(r.value - 1.0), 0.0, 1e-12);
    EXPECT_FALSE(r.flagged);
  }
  EXPECT_NEAR(std::abs(phi_from_multiplier(LineProfile::constant(0.0), {0.5, 0.5}).value), 0.0, 1e-300);
}

TEST(Phi, CosineMatchesFineQuadrature) {
  const auto m = LineProfile::cosine(0.0, 1.0, 2.0);
  const auto fine = make_line_rule(-14.0, 14.0, {}, 400, 20);
  for (cplx z : {cplx(0.0), cplx(0.5, 0.0), cplx(0.0, 1.0), cplx(-1.0, 0.3), cplx(1.5, -1.2)}) {
    const cplx want = std::sqrt(2.0 / std::numbers::pi) *
                      integrate_line([&](double x) {
                        const cplx d = x - cplx(0, 0.5) * z;
                        return std::cos(2 * x) * std::exp(-2.0 * d * d);
                      }, fine);
    EXPECT_NEAR(std::abs(phi_from_multiplier(m, z).value - want), 0.0, 1e-10) << z;
  }
}

TEST(Phi, FlagsLargeRealPart) { EXPECT_TRUE(phi_from_multiplier(LineProfile::constant(1.0), {7.0, 0.0}).flagged); }

TEST(Singular, ConstantMultiplierIsIdentity) {
  EXPECT_LT(dist_to_identity(singular_integral_matrix_direct(LineProfile::constant(1.0), 16)), 1e-6);
  MultiplierReport rep;
  EXPECT_LT(dist_to_identity(singular_integral_matrix_multiplier(LineProfile::constant(1.0), 32, &rep)), 1e-6);
  EXPECT_FALSE(rep.flagged);
}

TEST(Singular, ZeroMultiplier) {
  EXPECT_LT(max_abs(singular_integral_matrix_direct(LineProfile::constant(0.0), 8).entries()), 1e-300);
  EXPECT_LT(max_abs(singular_integral_matrix_multiplier(LineProfile::constant(0.0), 8).entries()), 1e-300);
}

TEST(Singular, RealMultiplierSelfAdjoint) {
  const auto S = singular_integral_matrix_multiplier(LineProfile::gaussian(1.0, 0.3, 0.5), 24);
  EXPECT_LT(max_abs(S.entries() - S.entries().adjoint()), 1e-8);
}

TEST(Singular, StepCrossConstructor) {
  const auto m = LineProfile::step(-1.0, 1.0);
  const auto D = singular_integral_matrix_direct(m, 12);
  const auto M = singular_integral_matrix_multiplier(m, 12);
  EXPECT_LT(max_abs(D.entries() - M.entries()), 1e-5);
  EXPECT_LE(operator_norm(D), 1.0 + 1e-5);
}

TEST(Volterra, QuadraticSymbol) {
  const auto V = volterra_matrix(AnalyticSpec::polynomial({0.0, 1.0}), 0.0, 1.0, 20);
  for (int n = 0; n + 2 < 20; ++n) EXPECT_NEAR(V(n + 2, n).real(), std::sqrt((n + 1.0) / (n + 2.0)), 1e-14);
  const auto Va = adjoint(V);
  for (int n = 2; n < 20; ++n) EXPECT_NEAR(Va(n - 2, n).real(), std::sqrt((n - 1.0) / n), 1e-14);
}

TEST(Volterra, LinearSymbolIsFirstShift) {
  const auto V = volterra_matrix(AnalyticSpec::constant(1.0), 0.0, 1.0, 20);
  for (int n = 0; n + 1 < 20; ++n) EXPECT_NEAR(V(n + 1, n).real(), 1.0 / std::sqrt(n + 1.0), 1e-14);
  EXPECT_LT(max_abs(V.entries() - shift_A_k_matrix(1, 20).entries()), 1e-14);
  EXPECT_LT(max_abs(volterra_matrix(AnalyticSpec::constant(0.0), 0.3, 0.5, 10).entries()), 1e-300);
}

TEST(ShiftA, Examples) {
  EXPECT_LT(dist_to_identity(shift_A_k_matrix(0, 10)), 1e-16);
  EXPECT_NEAR(shift_A_k_matrix(2, 10)(2, 0).real(), std::sqrt(0.5), 1e-15);
  for (int k = 0; k <= 6; ++k)
    EXPECT_NEAR(operator_norm(shift_A_k_matrix(k, 30)), 1.0 / std::sqrt(std::tgamma(k + 1.0)), 1e-12) << k;
}

TEST(ToeplitzType, ConstantSymbolIsIdentity) {
  EXPECT_LT(dist_to_identity(toeplitz_type_matrix(SymbolSpec::constant(1.0), 0, 12)), 1e-6);
  EXPECT_LT(max_abs(toeplitz_type_matrix(SymbolSpec::constant(0.0), 1, 8).entries()), 1e-300);
}

TEST(ToeplitzType, RadialSymbolDiagonal) {
  for (int j : {0, 2})
    EXPECT_LT(off_diagonal(toeplitz_type_matrix(SymbolSpec::gaussian_radial(0.5), j, 12)), 1e-8);
}

TEST(ToeplitzType, ZeroIndexIsToeplitz) {
  // alpha_z(e_0 (x) e_0) = k_z (x) k_z, so the j = 0 operator is T_f itself.
  const auto f = SymbolSpec::radial_disc(1.2, 1.0, cplx(0.0, 0.5));
  const auto A = toeplitz_type_matrix(f, 0, 10);
  const auto B = toeplitz_matrix(f, 10);
  EXPECT_LT(max_abs(A.entries() - B.entries()), 1e-6);
}

TEST(Hausdorff, Atoms) {
  EXPECT_LT(dist_to_identity(hausdorff_matrix(MeasureSpec::atom(1.0), 16)), 1e-16);
  const auto H2 = hausdorff_matrix(MeasureSpec::atom(2.0), 16);
  EXPECT_NEAR(H2(0, 0).real(), 0.5, 1e-16);
  for (int n = 0; n < 16; ++n) EXPECT_NEAR(H2(n, n).real(), std::ldexp(1.0, -(n + 1)), 1e-16);
  const auto H23 = hausdorff_matrix(MeasureSpec::atoms({{2.0, 1.0}, {3.0, 1.0}}), 16);
  EXPECT_NEAR(operator_norm(H23), 5.0 / 6.0, 1e-14);
}

TEST(Hausdorff, RejectsAtomBelowOne) {
  try {
    hausdorff_matrix(MeasureSpec::atom(0.5), 4);
    FAIL() << "accepted an atom at 0.5";
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.condition(), "rho((0, 1)) = 0");
  }
}

TEST(Hausdorff, PowerDensityMoments) {
  // rho = t^{-2} dt on [1, inf): a_n = 1/(n+2).
  const auto H = hausdorff_matrix(MeasureSpec::power_density(1.0, -2.0, 1.0, INFINITY), 12);
  for (int n = 0; n < 12; ++n) EXPECT_NEAR(H(n, n).real(), 1.0 / (n + 2.0), 1e-8) << n;
}

TEST(Algebra, AdjointInvolution) {
  const auto A = weyl_matrix({0.3, 0.2}, 10);
  EXPECT_EQ(adjoint(adjoint(A)).entries(), A.entries());
}

TEST(Algebra, TphiStarTphi) {
  const int N = 20;
  const auto T = toeplitz_matrix(SymbolSpec::angular(2), N);
  const auto P = compose(adjoint(T), T);
  for (int n = 0; n < N - 2; ++n) EXPECT_NEAR(P(n, n).real(), (n + 1.0) / (n + 2.0), 1e-12);
  EXPECT_LT(off_diagonal(P), 1e-15);
}

TEST(Algebra, DimensionMismatch) {
  EXPECT_THROW(compose(identity_operator(3), identity_operator(4)), PreconditionError);
  EXPECT_THROW(linear_combine({{1.0, identity_operator(3)}, {1.0, identity_operator(5)}}), PreconditionError);
}

TEST(Algebra, ProvenanceNamesFactors) {
  const auto P = compose(weyl_matrix(1.0, 4), parity_matrix(4));
  const std::string d = P.describe();
  EXPECT_NE(d.find("weyl"), std::string::npos) << d;
  EXPECT_NE(d.find("parity"), std::string::npos) << d;
}

TEST(Algebra, BuildFromSpecTree) {
  const int N = 10;
  OperatorSpec w = WeylSpec{cplx(0.5, 0.1)};
  OperatorSpec adj = AdjointSpec{std::make_shared<const OperatorSpec>(w)};
  OperatorSpec prod = ProductSpec{{std::make_shared<const OperatorSpec>(adj), std::make_shared<const OperatorSpec>(w)}};
  OperatorSpec sum = SumSpec{{{2.0, std::make_shared<const OperatorSpec>(prod)},
                              {-1.0, std::make_shared<const OperatorSpec>(IdentitySpec{})}}};
  const auto S = build_operator(sum, N);
  const Eigen::MatrixXcd W = weyl_matrix(cplx(0.5, 0.1), N).entries();
  const Eigen::MatrixXcd want = 2.0 * W.adjoint() * W - Eigen::MatrixXcd::Identity(N, N);
  EXPECT_LT(max_abs(S.entries() - want), 1e-14);
  EXPECT_EQ(sum.class_name(), "sum");
}

TEST(Parity, DiagonalSigns) {
  const auto R = parity_matrix(9);
  for (int n = 0; n < 9; ++n) EXPECT_EQ(R(n, n), cplx(n % 2 ? -1.0 : 1.0));
  EXPECT_LT(off_diagonal(R), 1e-300);
}

TEST(Toeplitz, DiscEigenvaluesAreIncompleteGamma) {
  for (double R : {0.3, 1.0, 2.5, 6.0}) {
    const auto a = toeplitz_radial_eigenvalues(SymbolSpec::radial_disc(R, 2.0, cplx(0.0, 1.0)), 64);
    for (int n = 0; n < 64; ++n) {
      const double P = boost::math::gamma_p(n + 1.0, R * R), Q = boost::math::gamma_q(n + 1.0, R * R);
      EXPECT_NEAR(std::abs(a[n] - (2.0 * P + cplx(0.0, 1.0) * Q)), 0.0, 1e-13) << R << " " << n;
    }
  }
}
