#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace arsec {

/// Gamma(offset + sum_d coeffs[d] * s_d), coupling several contour variables.
struct GammaTerm {
  double offset = 0.0;
  std::vector<double> coeffs;
};

/// Gamma(offset + slope * s) in a single variable.
struct LinearGamma {
  double offset = 0.0;
  double slope = 1.0;
};

/// Mellin-Barnes description of a Meijer G (dimension 1) or N-variate Fox H instance.
/// The integrand is the gamma ratio times prod_d z_d^{-s_d}; the result is
/// exp(log_prefactor) * (2 pi i)^{-N} times the contour integral.
struct FoxHSpec {
  int dimension = 1;
  std::vector<GammaTerm> outer_numerator;
  std::vector<GammaTerm> outer_denominator;
  std::vector<std::vector<LinearGamma>> per_variable_numerator;
  std::vector<std::vector<LinearGamma>> per_variable_denominator;
  /// Empty selects the midpoint between the pole families of each variable.
  std::vector<double> contour_abscissas;
  double truncation_height = 20.0;
  /// Initial panel count per variable on [-T, T]; 0 picks one from the arguments.
  int panel_count = 0;
  double log_prefactor = 0.0;
  /// 0 selects 1e-12 for N = 1, 1e-6 for N = 2, 1e-3 for N >= 3.
  double relative_tolerance = 0.0;
  /// Optional additional log-factor of s (dimension 1 only).
  std::function<std::complex<double>(std::complex<double>)> extra_log_factor;

  explicit FoxHSpec(int n = 1);
  /// Contour abscissas after automatic placement; throws ContourError.
  std::vector<double> resolved_abscissas() const;
  /// Checks slopes and pole separation; throws ContourError.
  void validate() const;
};

struct FoxHResult {
  double value = 0.0;
  double error_estimate = 0.0;
  double imaginary = 0.0;
  bool accuracy_warning = false;
  int refinements = 0;
  std::size_t evaluations = 0;
};

/// G^{m,n}_{p,q}(z | a; b) in the standard Mellin-Barnes convention.
FoxHSpec meijer_g_spec(int m, int n, const std::vector<double>& a, const std::vector<double>& b);

double meijer_g(const FoxHSpec& spec, double z);
FoxHResult meijer_g_detailed(const FoxHSpec& spec, double z);
double meijer_g(int m, int n, const std::vector<double>& a, const std::vector<double>& b, double z);

FoxHResult fox_h_multi_detailed(const FoxHSpec& spec, const std::vector<double>& args);
double fox_h_multi(const FoxHSpec& spec, const std::vector<double>& args);

}  // namespace arsec
