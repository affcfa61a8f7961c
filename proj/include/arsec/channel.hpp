#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace arsec {

struct RicianShadowedParams {
  double mean_snr = 1.0;
  double K = 0.0;
  double m = 1.0;
  void validate() const;
};

/// Alternate Rician shadowed link: two LoS branches selected with probability p.
struct ArsParams {
  double p = 0.5;
  double K1 = 0.0;
  double K2 = 0.0;
  double m = 1.0;
  double mean_snr = 1.0;  ///< linear

  void validate() const;
  bool integer_m() const;
  double K(int branch) const { return branch == 0 ? K1 : K2; }
};

struct DerivedArs {
  double k_bar = 0.0;
  double omega_bar = 1.0;
  std::array<double, 2> q{};
  std::array<double, 2> rho_bar{};
  /// (mean SNR)/(1 + k_bar): scale of the diffuse component.
  double theta = 1.0;
  /// B_{n,r}, n = 0..m-1; empty unless m is an integer.
  std::array<std::vector<double>, 2> b_coeff;
};

DerivedArs derive(const ArsParams& params);

/// Density and CDF of one Rician shadowed branch with the link's shared theta.
double branch_pdf(const ArsParams& params, const DerivedArs& d, int branch, double gamma);
double branch_cdf(const ArsParams& params, const DerivedArs& d, int branch, double gamma,
                  bool* fallback = nullptr);

/// Closed forms for each regime, callable directly (the real-m ones stay valid at integer m).
double pdf_real_m(const ArsParams& params, double gamma);
double pdf_integer_m(const ArsParams& params, double gamma);
double cdf_real_m(const ArsParams& params, double gamma, bool* fallback = nullptr);
double cdf_integer_m(const ArsParams& params, double gamma);
/// Gamma-mixture series of the CDF (all terms positive); used as the large-argument fallback.
double cdf_mixture_series(const ArsParams& params, double gamma);

double pdf(const ArsParams& params, double gamma);

struct CdfResult {
  double value = 0.0;
  bool fallback = false;
};

CdfResult cdf_detailed(const ArsParams& params, double gamma);
double cdf(const ArsParams& params, double gamma);

using Rng = std::mt19937_64;

double sample(const ArsParams& params, Rng& rng);

double db_to_linear(double db);
double linear_to_db(double x);

}  // namespace arsec
