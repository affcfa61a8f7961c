#include <gtest/gtest.h>

#include <cmath>
#include <tuple>

#include "arsec/error.hpp"
#include "arsec/metric.hpp"
#include "arsec/presets.hpp"
#include "arsec/secrecy.hpp"

using namespace arsec;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

SecrecyScenario rayleigh(double gb, double ge, double rt) {
  return {{1.0, 0.0, 0.0, 1.0, gb}, {1.0, 0.0, 0.0, 1.0, ge}, rt};
}

SecrecyScenario identical(double m) {
  const ArsParams l{0.5, 5.0, 1.0, m, 8.0};
  return {l, l, 0.0};
}

}  // namespace

TEST(Scenario, RateAndSwap) {
  SecrecyScenario s = rayleigh(10, 2, 1.0);
  EXPECT_EQ(s.rs(), 2.0);
  const auto w = s.swapped();
  EXPECT_EQ(w.main.mean_snr, 2.0);
  EXPECT_EQ(w.eve.mean_snr, 10.0);
  s.target_rate = -1.0;
  EXPECT_THROW(s.validate(), DomainError);
}

TEST(Scenario, NamesRoundTrip) {
  for (Engine e : {Engine::ExactReal, Engine::ExactInteger, Engine::Asymptotic,
                   Engine::Quadrature, Engine::MonteCarlo}) {
    EXPECT_EQ(parse_engine(to_string(e)), e);
  }
  for (Metric m : {Metric::Asc, Metric::Sop, Metric::Pnz}) EXPECT_EQ(parse_metric(to_string(m)), m);
  EXPECT_THROW(parse_engine("fast"), DomainError);
  EXPECT_THROW(parse_metric("snr"), DomainError);
}

TEST(Finalize, ClampsWithNote) {
  MetricResult r;
  r.value = 1.0 + 1e-12;
  finalize(r, Metric::Pnz);
  EXPECT_EQ(r.value, 1.0);
  ASSERT_EQ(r.notes.size(), 1u);
  MetricResult a;
  a.value = -1e-10;
  finalize(a, Metric::Asc);
  EXPECT_EQ(a.value, 0.0);
  EXPECT_EQ(a.notes.size(), 1u);
}

TEST(Accessors, HighSnrConstants) {
  EXPECT_DOUBLE_EQ(high_snr_slope(), std::log(2.0));
  EXPECT_EQ(secrecy_diversity_order(), 1);
  EXPECT_EQ(pnz_high_snr_limit(), 1.0);
}

TEST(Rayleigh, ClosedForms) {
  const auto s = rayleigh(10.0, 2.0, 1.0);
  const double gb = 10.0, ge = 2.0, rs = 2.0;
  const double sop = 1.0 - gb / (gb + rs * ge) * std::exp(-(rs - 1.0) / gb);
  const double pnz = gb / (gb + ge);
  EXPECT_NEAR(sop_exact_integer(s).value, sop, 1e-12);
  EXPECT_NEAR(sop_quadrature(s).value, sop, 1e-10);
  EXPECT_NEAR(pnz_exact_integer(s).value, pnz, 1e-12);
  EXPECT_NEAR(pnz_quadrature(s).value, pnz, 1e-10);
  EXPECT_LT(rel(asc_exact_integer(s).value, asc_quadrature(s).value), 1e-8);
}

TEST(Rayleigh, ExponentialMixturePnz) {
  const SecrecyScenario s{{0.3, 4.0, 1.0, 1.0, 6.0}, {0.8, 2.0, 7.0, 1.0, 3.0}, 0.0};
  const auto B = derive(s.main), E = derive(s.eve);
  double expected = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      expected += B.q[i] * E.q[j] * B.rho_bar[i] / (B.rho_bar[i] + E.rho_bar[j]);
  EXPECT_NEAR(pnz_exact_integer(s).value, expected, 1e-13);
}

TEST(IntegerEngine, AscMatchesQuadrature) {
  const SecrecyScenario s{{0.5, 5.0, 1.0, 2.0, 100.0}, {0.5, 5.0, 1.0, 2.0, 10.0}, 0.0};
  EXPECT_LT(rel(asc_exact_integer(s).value, asc_quadrature(s).value), 1e-6);
}

TEST(IntegerEngine, SopMixedShapesMatchQuadrature) {
  const SecrecyScenario s{make_link(0.5, 10.0, 2.0, 5.0, 15.0), make_link(0.5, 10.0, 2.0, 1.0, 4.0),
                          0.5};
  EXPECT_LT(rel(sop_exact_integer(s).value, sop_quadrature(s).value), 1e-8);
}

TEST(IntegerEngine, IdenticalLinks) {
  const auto s = identical(3.0);
  EXPECT_NEAR(sop_exact_integer(s).value, 0.5, 1e-10);
  EXPECT_NEAR(pnz_exact_integer(s).value, 0.5, 1e-10);
  const auto c = asc_components_exact_integer(s);
  EXPECT_NEAR(c.i1, c.i2, 1e-12 * std::abs(c.i1));
}

TEST(IntegerEngine, RejectsRealM) {
  const auto s = identical(0.5);
  EXPECT_THROW(asc_exact_integer(s), DispatchError);
  EXPECT_THROW(sop_exact_integer(s), DispatchError);
  EXPECT_THROW(pnz_exact_integer(s), DispatchError);
}

TEST(Quadrature, IdenticalLinks) {
  const auto s = identical(0.5);
  EXPECT_NEAR(pnz_quadrature(s).value, 0.5, 1e-10);
  EXPECT_NEAR(sop_quadrature(s).value, 0.5, 1e-10);
  const auto c = asc_components_quadrature(s);
  EXPECT_NEAR(c.i1, c.i2, 1e-9 * std::abs(c.i1));
}

TEST(Quadrature, VanishingEavesdropper) {
  SecrecyScenario s = figure_preset("fig2").at(0, 10.0);
  s.eve.mean_snr = 1e-9;
  s.target_rate = 0.5;
  EXPECT_LT(rel(asc_quadrature(s).value, capacity_quadrature(s.main)), 1e-6);
  EXPECT_NEAR(sop_quadrature(s).value, cdf(s.main, s.rs() - 1.0), 1e-8);
}

TEST(Properties, PnzComplement) {
  const SecrecyScenario real{make_link(0.5, 60.0, 3.0, 0.5, 12.0), make_link(0.5, 60.0, 3.0, 0.5, 4.0),
                             0.0};
  EXPECT_NEAR(pnz_quadrature(real).value + pnz_quadrature(real.swapped()).value, 1.0, 1e-9);
  const SecrecyScenario integer{make_link(0.3, 50.0, 10.0, 2.0, 12.0),
                                make_link(0.7, 20.0, 1.0, 5.0, 4.0), 0.0};
  EXPECT_NEAR(pnz_exact_integer(integer).value + pnz_exact_integer(integer.swapped()).value, 1.0,
              1e-9);
}

TEST(Properties, SopAtZeroRateIsPnzComplement) {
  const SecrecyScenario s{make_link(0.5, 50.0, 10.0, 5.0, 10.0), make_link(0.5, 50.0, 10.0, 0.5, 4.0),
                          0.0};
  EXPECT_NEAR(sop_quadrature(s).value, 1.0 - pnz_quadrature(s).value, 1e-9);
}

TEST(Properties, SopMonotoneInRate) {
  SecrecyScenario s{make_link(0.5, 50.0, 10.0, 1.0, 12.0), make_link(0.5, 50.0, 10.0, 0.5, 4.0), 0.0};
  double prev = -1.0;
  for (double rt : {0.0, 0.5, 1.0, 2.0}) {
    s.target_rate = rt;
    const double v = sop_quadrature(s).value;
    EXPECT_GE(v, prev) << rt;
    prev = v;
  }
}

TEST(Properties, AscNonNegative) {
  const SecrecyScenario s{make_link(0.5, 5.0, 1.0, 2.0, -10.0), make_link(0.5, 5.0, 1.0, 2.0, 30.0),
                          0.0};
  EXPECT_GE(asc_quadrature(s).value, 0.0);
  EXPECT_GE(asc_exact_integer(s).value, 0.0);
  EXPECT_GE(asc_asymptotic(s).value, 0.0);
}

TEST(RealEngine, I3MatchesQuadratureComponent) {
  const auto s = figure_preset("fig2").at(1, 10.0);
  const auto c = asc_components_quadrature(s);
  EXPECT_LT(rel(i3_exact_real(s.eve).value, c.i3), 1e-6);
}

TEST(RealEngine, PnzMatchesQuadrature) {
  for (const auto& [fig, series, db] :
       {std::tuple{"fig3", 0, 10.0}, std::tuple{"fig7", 1, 20.0}}) {
    const auto s = figure_preset(fig).at(series, db);
    const auto r = pnz_exact_real(s);
    EXPECT_LT(rel(r.value, pnz_quadrature(s).value), 1e-3) << fig;
    EXPECT_EQ(r.engine, Engine::ExactReal);
  }
}

TEST(RealEngine, PnzIdenticalLinks) {
  EXPECT_NEAR(pnz_exact_real(identical(0.5)).value, 0.5, 5e-4);
}

TEST(RealEngine, AscFourVariateMatchesQuadrature) {
  const auto s = figure_preset("fig2").at(0, 20.0);
  const auto r = asc_exact_real(s);
  EXPECT_LT(rel(r.value, asc_quadrature(s).value), 1e-3);
  EXPECT_FALSE(r.notes.empty());
}

TEST(RealEngine, RejectsIntegerM) {
  const auto s = identical(2.0);
  EXPECT_THROW(pnz_exact_real(s), DispatchError);
  EXPECT_THROW(asc_exact_real(s), DispatchError);
  EXPECT_THROW(sop_series_real(s, 10), DispatchError);
}

TEST(SopSeries, MatchesQuadratureOnTableRow) {
  const auto s = table1_row(1).scenario;
  EXPECT_NEAR(sop_series_real(s, 40).value, sop_quadrature(s).value, 1e-5);
  const auto c = sop_series_real_converged(s);
  EXPECT_NEAR(c.value, sop_quadrature(s).value, 1e-9);
}

TEST(SopSeries, UnitRateLimit) {
  auto s = table1_row(1).scenario;
  s.target_rate = 0.0;
  EXPECT_NEAR(sop_series_real_converged(s).value, sop_quadrature(s).value, 1e-8);
}

TEST(SopSeries, TruncationErrorDecreases) {
  const auto s = table1_row(1).scenario;
  double prev = 1.0;
  for (int n : {10, 20, 30, 40}) {
    const double e = sop_truncation_error(s, n);
    EXPECT_LT(e, prev) << n;
    prev = e;
  }
  const auto profile = sop_truncation_error_profile(s, 40);
  ASSERT_EQ(profile.size(), 41u);
  EXPECT_NEAR(profile[30], sop_truncation_error(s, 30), 1e-15);
}

TEST(SopSeries, ReportedTruncationMagnitudes) {
  const double e1 = sop_truncation_error(table1_row(1).scenario, 33);
  EXPECT_GT(e1, 7.32e-7 / 5);
  EXPECT_LT(e1, 7.32e-7 * 5);
  EXPECT_LT(sop_truncation_error(table1_row(5).scenario, 16), 1e-6);
  const double e6 = sop_truncation_error(table1_row(6).scenario, 8);
  EXPECT_GT(e6, 1.06e-7 / 5);
  EXPECT_LT(e6, 1.06e-7 * 5);
}

TEST(SopSeries, DivergentRegimeThrows) {
  auto s = figure_preset("fig2").at(0, 10.0);
  s.target_rate = 0.5;
  EXPECT_THROW(sop_series_real_converged(s), ConvergenceError);
}

TEST(Asymptotic, AscNearQuadratureAtHighSnr) {
  const auto s = figure_preset("fig2").at(0, 60.0);
  EXPECT_LT(rel(asc_asymptotic(s).value, asc_quadrature(s).value), 1e-2);
}

TEST(Asymptotic, SopNearSeriesAtHighSnr) {
  auto s = table1_row(1).scenario;
  s.main.mean_snr = db_to_linear(50.0);
  const double ref = sop_series_real_converged(s).value;
  EXPECT_LT(rel(sop_asymptotic(s).value, ref), 1e-2);
}

TEST(Asymptotic, PnzNearQuadrature) {
  const auto p = figure_preset("fig7");
  for (std::size_t i = 0; i < p.series.size(); ++i) {
    const auto s = p.at(i, 40.0);
    EXPECT_LT(rel(pnz_asymptotic(s).value, pnz_quadrature(s).value), 1e-2) << i;
  }
  EXPECT_GE(pnz_quadrature(p.at(0, 60.0)).value, 0.999);
}

TEST(Asymptotic, IntegerForms) {
  const SecrecyScenario s{make_link(0.5, 50.0, 10.0, 2.0, 50.0), make_link(0.5, 50.0, 10.0, 1.0, 4.0),
                          0.5};
  EXPECT_LT(rel(sop_asymptotic(s).value, sop_exact_integer(s).value), 1e-2);
  EXPECT_LT(rel(pnz_asymptotic(s).value, pnz_exact_integer(s).value), 1e-3);
  EXPECT_LT(rel(asc_asymptotic(s).value, asc_exact_integer(s).value), 1e-2);
}

TEST(Facade, DefaultEngine) {
  EXPECT_EQ(default_engine(identical(2.0)), Engine::ExactInteger);
  EXPECT_EQ(default_engine(identical(0.5)), Engine::Quadrature);
  const auto r = metric(Metric::Pnz, identical(2.0));
  EXPECT_EQ(r.engine, Engine::ExactInteger);
  EXPECT_NEAR(r.value, 0.5, 1e-10);
  MetricOptions o;
  o.n_terms = 40;
  const auto t = table1_row(1).scenario;
  EXPECT_EQ(metric(Metric::Sop, t, Engine::ExactReal, o).value, sop_series_real(t, 40).value);
}
