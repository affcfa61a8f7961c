#pragma once

#include <string>
#include <vector>

#include "arsec/channel.hpp"
#include "arsec/foxh.hpp"
#include "arsec/quadrature.hpp"

namespace arsec {

struct SecrecyScenario {
  ArsParams main;  ///< legitimate link (B)
  ArsParams eve;   ///< eavesdropper link (E)
  double target_rate = 0.0;  ///< bits

  double rs() const;
  void validate() const;
  /// Same scenario with the two links exchanged.
  SecrecyScenario swapped() const;
};

enum class Engine { ExactReal, ExactInteger, Asymptotic, Quadrature, MonteCarlo };
enum class Metric { Asc, Sop, Pnz };

std::string to_string(Engine e);
std::string to_string(Metric m);
Engine parse_engine(const std::string& s);
Metric parse_metric(const std::string& s);

struct MetricResult {
  double value = 0.0;
  Engine engine = Engine::Quadrature;
  double error_estimate = 0.0;
  std::vector<std::string> notes;
};

/// ASC = I1 + I2 - I3.
struct AscComponents {
  double i1 = 0.0, i2 = 0.0, i3 = 0.0;
  double e1 = 0.0, e2 = 0.0, e3 = 0.0;
  std::vector<std::string> notes;
};

// Definition-level quadrature, valid for any m.
AscComponents asc_components_quadrature(const SecrecyScenario& s, const QuadConfig& cfg = {});
MetricResult asc_quadrature(const SecrecyScenario& s, const QuadConfig& cfg = {});
MetricResult sop_quadrature(const SecrecyScenario& s, const QuadConfig& cfg = {});
MetricResult pnz_quadrature(const SecrecyScenario& s, const QuadConfig& cfg = {});
/// Ergodic capacity E[ln(1 + gamma)] of one link, in nats.
double capacity_quadrature(const ArsParams& link, const QuadConfig& cfg = {});

// Integer m on both links.
AscComponents asc_components_exact_integer(const SecrecyScenario& s);
MetricResult asc_exact_integer(const SecrecyScenario& s);
MetricResult sop_exact_integer(const SecrecyScenario& s);
MetricResult pnz_exact_integer(const SecrecyScenario& s);
/// E[ln(1 + X)] for X ~ Gamma(shape a, scale rho), via G^{1,3}_{3,2}.
double expected_log1p_gamma(double a, double rho);

// Real (non-integer) m: Fox H forms.
struct FoxTolerances {
  double i3 = 1e-8;
  double asc_four_variate = 1e-3;
};
/// I3 = E[ln(1 + gamma_E)] through the 2-variate Fox H form.
MetricResult i3_exact_real(const ArsParams& eve, double tolerance = 1e-8);
AscComponents asc_components_exact_real(const SecrecyScenario& s, const FoxTolerances& tol = {});
MetricResult asc_exact_real(const SecrecyScenario& s, const FoxTolerances& tol = {});
MetricResult pnz_exact_real(const SecrecyScenario& s, double tolerance = 1e-4);

/// Partial sums of the real-m SOP double series for every truncation 0..n_max.
struct SopSeriesProfile {
  std::vector<double> partial;          ///< partial[N]: n1, n2 in [0, N]
  std::vector<double> shell_magnitude;  ///< |partial[N] - partial[N-1]|
};
SopSeriesProfile sop_series_profile(const SecrecyScenario& s, int n_max);
MetricResult sop_series_real(const SecrecyScenario& s, int n_terms);
/// Smallest truncation whose last shell falls below rel_tol of the sum (capped).
MetricResult sop_series_real_converged(const SecrecyScenario& s, double rel_tol = 1e-12,
                                       int n_cap = 400);
double sop_truncation_error(const SecrecyScenario& s, int n_terms);
/// Truncation error for every N in [0, n_max], each against the N + 30 reference.
std::vector<double> sop_truncation_error_profile(const SecrecyScenario& s, int n_max);

// High-SNR forms.
inline constexpr int kDefaultAsymptoticTerms = 30;
MetricResult asc_asymptotic(const SecrecyScenario& s);
MetricResult sop_asymptotic(const SecrecyScenario& s, int n_terms = kDefaultAsymptoticTerms);
MetricResult pnz_asymptotic(const SecrecyScenario& s);
double high_snr_slope();
int secrecy_diversity_order();
double pnz_high_snr_limit();

/// Clamp into the metric's range, noting any adjustment.
void finalize(MetricResult& r, Metric kind);

}  // namespace arsec
