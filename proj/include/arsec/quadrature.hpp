#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace arsec {

struct QuadConfig {
  double relative_tolerance = 1e-10;
  double absolute_tolerance = 1e-14;
  std::size_t max_subdivisions = 2000;
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  std::size_t subdivisions = 0;
};

/// Where the integrand lives: the map is t = x / (scale + x), and the
/// breakpoints seed the initial partition.
struct QuadHints {
  double scale = 1.0;
  std::vector<double> breakpoints;
};

using Integrand = std::function<double(double)>;

QuadResult integrate_semi_infinite(const Integrand& f, const QuadConfig& config = {},
                                   const QuadHints& hints = {});

/// Adaptive Gauss-Kronrod on a finite interval.
QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadConfig& config = {});

}  // namespace arsec
