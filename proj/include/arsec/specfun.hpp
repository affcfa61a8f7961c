#pragma once

#include <cmath>
#include <complex>
#include <cstddef>

#include "arsec/error.hpp"

namespace arsec {

struct SeriesPolicy {
  double relative_tolerance = 1e-14;
  std::size_t max_terms = 100000;
  int consecutive_small_terms_to_stop = 3;
};

/// Principal-branch log-gamma.
std::complex<double> ln_gamma(std::complex<double> z);
/// log Gamma(x) for real x > 0.
double ln_gamma(double x);

std::complex<double> digamma(std::complex<double> z);
double digamma(double x);

double pochhammer(double a, unsigned n);

/// Raw power series of 1F1, evaluated in the arithmetic of T.
template <class T>
T kummer_1f1_series(T a, T b, T z, const SeriesPolicy& policy) {
  T sum = 1, comp = 0, term = 1;
  int small = 0;
  for (std::size_t k = 0; k < policy.max_terms; ++k) {
    const T kk = static_cast<T>(k);
    const T ratio = (a + kk) / (b + kk) * z / (kk + 1);
    term *= ratio;
    if (term == T(0)) return sum + comp;
    const T y = term - comp;
    const T t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    using std::abs;
    if (abs(ratio) < T(1) &&
        abs(term) <= static_cast<T>(policy.relative_tolerance) * abs(sum)) {
      if (++small >= policy.consecutive_small_terms_to_stop) return sum;
    } else {
      small = 0;
    }
  }
  throw ConvergenceError("kummer_1f1: series did not converge within max_terms");
}

double kummer_1f1(double a, double b, double z, const SeriesPolicy& policy = {});
/// e^{-z} 1F1(a; b; z) for z >= 0, a > 0, b > 0, finite for any z.
double kummer_1f1_scaled(double a, double b, double z, const SeriesPolicy& policy = {});

struct SeriesResult {
  double value = 0;
  double magnitude = 0;  ///< sum of |term|
  std::size_t terms = 0;
  bool precision_warning = false;
};

SeriesResult humbert_phi2_detailed(double b1, double b2, double c, double x1, double x2,
                                   const SeriesPolicy& policy = {});
double humbert_phi2(double b1, double b2, double c, double x1, double x2,
                    const SeriesPolicy& policy = {});

double laguerre_generalized(unsigned n, double alpha, double x);

/// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);
/// Regularized upper incomplete gamma Q(a, x).
double gamma_q(double a, double x);

inline bool is_near_integer(double m, double tol = 1e-9) {
  return std::abs(m - std::round(m)) < tol;
}

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kPi = 3.14159265358979323846264338327950288;

}  // namespace arsec
