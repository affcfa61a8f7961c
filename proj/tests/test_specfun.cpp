#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "arsec/error.hpp"
#include "arsec/specfun.hpp"
#include "oracles/oracle_values.hpp"

using namespace arsec;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(LnGamma, SpecialValues) {
  EXPECT_NEAR(ln_gamma(std::complex<double>(1.0, 0.0)).real(), 0.0, 1e-15);
  EXPECT_NEAR(ln_gamma(std::complex<double>(0.5, 0.0)).real(), 0.5723649429247001, 1e-14);
  EXPECT_NEAR(ln_gamma(0.5), 0.5723649429247001, 1e-14);
}

TEST(LnGamma, ComplexOracle) {
  const auto v = ln_gamma(std::complex<double>(3.7, 2.1));
  EXPECT_NEAR(v.real(), oracle::kLnGammaRe_3p7_2p1, 1e-13);
  EXPECT_NEAR(v.imag(), oracle::kLnGammaIm_3p7_2p1, 1e-13);
  const auto w = ln_gamma(std::complex<double>(-2.3, 0.4));
  EXPECT_NEAR(w.real(), oracle::kLnGammaRe_m2p3_0p4, 1e-12);
  EXPECT_NEAR(w.imag(), oracle::kLnGammaIm_m2p3_0p4, 1e-12);
}

TEST(LnGamma, ExpReproducesGamma) {
  EXPECT_LT(rel(std::exp(ln_gamma(3.5)), oracle::kGamma_3p5), 1e-13);
  for (double x : {0.1, 1.7, 6.0, 23.5, 49.0}) {
    EXPECT_LT(rel(std::exp(ln_gamma(std::complex<double>(x, 0.0)).real()), std::tgamma(x)), 1e-13)
        << x;
  }
}

TEST(LnGamma, PolesThrow) {
  EXPECT_THROW(ln_gamma(std::complex<double>(0.0, 0.0)), PoleError);
  EXPECT_THROW(ln_gamma(std::complex<double>(-3.0, 0.0)), PoleError);
}

TEST(Digamma, Oracles) {
  EXPECT_LT(rel(digamma(0.3), oracle::kDigamma_0p3), 1e-13);
  const auto v = digamma(std::complex<double>(2.5, 1.0));
  EXPECT_NEAR(v.real(), oracle::kDigammaRe_2p5_1, 1e-13);
  EXPECT_NEAR(v.imag(), oracle::kDigammaIm_2p5_1, 1e-13);
  EXPECT_NEAR(digamma(1.0), -kEulerGamma, 1e-14);
}

TEST(Pochhammer, Basics) {
  EXPECT_EQ(pochhammer(3.3, 0), 1.0);
  EXPECT_EQ(pochhammer(1.0, 5), 120.0);
  EXPECT_EQ(pochhammer(-2.0, 3), 0.0);
  EXPECT_LT(rel(pochhammer(0.5, 7), oracle::kPochhammer_0p5_7), 1e-15);
}

TEST(Pochhammer, RecurrenceProperty) {
  for (double a : {-3.5, -0.25, 0.5, 2.0, 7.75}) {
    for (unsigned n = 0; n < 12; ++n) {
      const double lhs = pochhammer(a, n + 1);
      const double rhs = pochhammer(a, n) * (a + n);
      EXPECT_NEAR(lhs, rhs, 1e-13 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST(Kummer, ClosedForms) {
  EXPECT_EQ(kummer_1f1(0.3, 1.7, 0.0), 1.0);
  EXPECT_LT(rel(kummer_1f1(1.0, 1.0, 2.5), std::exp(2.5)), 1e-14);
}

TEST(Kummer, Oracles) {
  EXPECT_LT(rel(kummer_1f1(0.5, 1.0, 3.0), oracle::kHyp1f1_0p5_1_3), 1e-13);
  EXPECT_LT(rel(kummer_1f1(0.5, 1.0, -60.0), oracle::kHyp1f1_0p5_1_m60), 1e-12);
  EXPECT_LT(rel(kummer_1f1(10.0, 1.0, 30.0), oracle::kHyp1f1_10_1_30), 1e-12);
  EXPECT_LT(rel(kummer_1f1(-0.5, 1.0, -4.0), oracle::kHyp1f1_m0p5_1_m4), 1e-13);
  EXPECT_LT(rel(kummer_1f1_scaled(0.5, 1.0, 250.0), oracle::kHyp1f1Scaled_0p5_1_250), 1e-12);
}

TEST(Kummer, ScaledMatchesUnscaled) {
  for (double z : {0.0, 1.0, 20.0, 150.0, 600.0}) {
    const double a = 0.7, b = 1.0;
    EXPECT_LT(rel(kummer_1f1_scaled(a, b, z), std::exp(-z) * kummer_1f1(a, b, z)), 1e-12) << z;
  }
}

TEST(Kummer, ScaledLargeArgumentIsFinite) {
  const double v = kummer_1f1_scaled(0.5, 1.0, 1e9);
  EXPECT_TRUE(std::isfinite(v));
  EXPECT_GT(v, 0.0);
  // Leading behaviour z^{a-b} / Gamma(a).
  EXPECT_LT(rel(v, std::pow(1e9, -0.5) / std::tgamma(0.5)), 1e-8);
}

TEST(Kummer, BadDenominatorThrows) {
  EXPECT_THROW(kummer_1f1(0.5, -2.0, 1.0), DomainError);
}

TEST(Kummer, DifferentialEquationHoldsInExtendedPrecision) {
  using LD = long double;
  const SeriesPolicy pol{1e-19, 100000, 3};
  const LD h = 1e-4L;
  for (double a : {0.5, 2.5}) {
    for (double b : {1.0, 3.5}) {
      for (LD z : {0.5L, 2.0L, 10.0L}) {
        auto f = [&](LD x) { return kummer_1f1_series<LD>(a, b, x, pol); };
        const LD f0 = f(z), fp = f(z + h), fm = f(z - h);
        const LD d1 = (fp - fm) / (2 * h);
        const LD d2 = (fp - 2 * f0 + fm) / (h * h);
        const LD residual = z * d2 + (LD(b) - z) * d1 - LD(a) * f0;
        const LD scale = std::abs(z * d2) + std::abs((LD(b) - z) * d1) + std::abs(LD(a) * f0);
        EXPECT_LT(static_cast<double>(std::abs(residual) / scale), 1e-8)
            << "a=" << a << " b=" << b << " z=" << static_cast<double>(z);
      }
    }
  }
}

TEST(Kummer, SeriesExhaustionThrows) {
  SeriesPolicy tight;
  tight.max_terms = 3;
  EXPECT_THROW(kummer_1f1_series<double>(0.5, 1.0, 40.0, tight), ConvergenceError);
}

TEST(Phi2, Basics) {
  EXPECT_EQ(humbert_phi2(0.4, 1.2, 2.0, 0.0, 0.0), 1.0);
  EXPECT_LT(rel(humbert_phi2(0.7, 0.3, 2.0, 1.5, 0.0), kummer_1f1(0.7, 2.0, 1.5)), 1e-12);
  EXPECT_LT(rel(humbert_phi2(-0.5, 0.5, 2.0, -4.0, -1.0), oracle::kPhi2_m0p5_0p5_2_m4_m1), 1e-12);
}

TEST(Phi2, CollapsesToKummerOnRandomDraws) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ub(-2.0, 3.0), uc(0.5, 4.0), ux(-8.0, 8.0);
  for (int i = 0; i < 100; ++i) {
    const double b1 = ub(rng), b2 = ub(rng), c = uc(rng), x = ux(rng);
    const double k = kummer_1f1(b1, c, x);
    EXPECT_NEAR(humbert_phi2(b1, b2, c, x, 0.0), k, 1e-12 * std::max(1.0, std::abs(k)))
        << b1 << " " << c << " " << x;
  }
}

TEST(Phi2, DetailedReportsTerms) {
  const auto r = humbert_phi2_detailed(0.5, 0.5, 1.0, -3.0, -2.0);
  EXPECT_GT(r.terms, 1u);
  EXPECT_GE(r.magnitude, std::abs(r.value));
  EXPECT_FALSE(r.precision_warning);
}

TEST(Phi2, PrecisionWarningOnHeavyCancellation) {
  const auto r = humbert_phi2_detailed(0.5, 0.5, 1.0, -40.0, -30.0);
  EXPECT_TRUE(r.precision_warning);
}

TEST(Laguerre, Values) {
  EXPECT_EQ(laguerre_generalized(0, 1.3, 4.2), 1.0);
  EXPECT_NEAR(laguerre_generalized(1, 2.0, 3.0), 0.0, 1e-15);
  EXPECT_LT(rel(laguerre_generalized(5, 0.5, 2.0), oracle::kLaguerre_5_0p5_2), 1e-14);
}

TEST(IncompleteGamma, Oracles) {
  EXPECT_LT(rel(gamma_p(2.5, 1.7), oracle::kGammaP_2p5_1p7), 1e-13);
  EXPECT_LT(rel(gamma_q(3.0, 10.0), oracle::kGammaQ_3_10), 1e-13);
  EXPECT_NEAR(gamma_p(1.0, 2.0), 1.0 - std::exp(-2.0), 1e-15);
  EXPECT_NEAR(gamma_p(4.2, 3.3) + gamma_q(4.2, 3.3), 1.0, 1e-15);
}

TEST(Purity, RepeatedCallsAreBitwiseEqual) {
  EXPECT_EQ(kummer_1f1(0.5, 1.0, 17.3), kummer_1f1(0.5, 1.0, 17.3));
  EXPECT_EQ(humbert_phi2(-0.5, 0.5, 2.0, -4.0, -1.0), humbert_phi2(-0.5, 0.5, 2.0, -4.0, -1.0));
  EXPECT_EQ(ln_gamma(std::complex<double>(3.7, 2.1)), ln_gamma(std::complex<double>(3.7, 2.1)));
}
