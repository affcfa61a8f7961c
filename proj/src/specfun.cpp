#include "arsec/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace arsec {

namespace {

using cd = std::complex<double>;

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);

void pole_guard(cd z) {
  if (z.real() > 0.5) return;
  const double n = std::round(z.real());
  if (n <= 0.0 && std::abs(z - cd(n, 0.0)) < 1e-9) {
    throw PoleError("ln_gamma: argument is (within 1e-9 of) a non-positive integer");
  }
}

// log(sin(pi z)) without overflow for large |Im z|.
cd log_sin_pi(cd z) {
  if (z.imag() < 0) return std::conj(log_sin_pi(std::conj(z)));
  const cd i(0.0, 1.0);
  const cd e = std::exp(2.0 * kPi * i * z);
  return -i * kPi * z + std::log(1.0 - e) + std::log(cd(0.0, 0.5));
}

cd ln_gamma_lanczos(cd z) {
  z -= 1.0;
  cd x = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) x += kLanczos[k] / (z + static_cast<double>(k));
  const cd t = z + kLanczosG + 0.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

struct ScaledSum {
  double mantissa;
  double log_scale;
};

// Sum of the all-positive series of 1F1(a; b; z), a, b, z > 0, with rescaling.
ScaledSum kummer_positive(double a, double b, double z, const SeriesPolicy& policy) {
  constexpr double kBig = 1e250;
  const double log_big = std::log(kBig);
  double sum = 1.0, comp = 0.0, term = 1.0, log_scale = 0.0;
  int small = 0;
  for (std::size_t k = 0; k < policy.max_terms; ++k) {
    const double kk = static_cast<double>(k);
    const double ratio = (a + kk) / (b + kk) * z / (kk + 1.0);
    term *= ratio;
    if (term > kBig) {
      term /= kBig;
      sum /= kBig;
      comp /= kBig;
      log_scale += log_big;
    }
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (ratio < 1.0 && term <= policy.relative_tolerance * sum) {
      if (++small >= policy.consecutive_small_terms_to_stop) return {sum, log_scale};
    } else {
      small = 0;
    }
  }
  throw ConvergenceError("kummer_1f1: series did not converge within max_terms");
}

// e^{-z} 1F1(a; b; z) for large positive z: Gamma(b)/Gamma(a) z^{a-b} sum_k (b-a)_k (1-a)_k / (k! z^k).
double kummer_scaled_large(double a, double b, double z, const SeriesPolicy& policy) {
  double sum = 1.0, term = 1.0, prev = INFINITY;
  for (std::size_t k = 0; k < policy.max_terms; ++k) {
    const double kk = static_cast<double>(k);
    term *= (b - a + kk) * (1.0 - a + kk) / ((kk + 1.0) * z);
    const double mag = std::abs(term);
    if (mag == 0.0 || mag <= policy.relative_tolerance * std::abs(sum)) break;
    if (mag > prev) break;
    sum += term;
    prev = mag;
  }
  return std::exp(ln_gamma(b) - ln_gamma(a) + (a - b) * std::log(z)) * sum;
}

void check_b(double b, const char* who) {
  if (b <= 0.0 && is_near_integer(b)) {
    throw DomainError(std::string(who) + ": b must not be a non-positive integer");
  }
}

}  // namespace

cd ln_gamma(cd z) {
  pole_guard(z);
  if (z.real() < 0.5) {
    return std::log(kPi) - log_sin_pi(z) - ln_gamma_lanczos(1.0 - z);
  }
  return ln_gamma_lanczos(z);
}

double ln_gamma(double x) {
  if (x <= 0.0 && is_near_integer(x)) {
    throw PoleError("ln_gamma: argument is (within 1e-9 of) a non-positive integer");
  }
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

cd digamma(cd z) {
  pole_guard(z);
  if (z.real() < 0.5) {
    return digamma(1.0 - z) - kPi / std::tan(kPi * z);
  }
  cd acc = 0.0;
  while (z.real() < 10.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  const cd w = 1.0 / (z * z);
  const cd series =
      w * (1.0 / 12 -
           w * (1.0 / 120 -
                w * (1.0 / 252 - w * (1.0 / 240 - w * (1.0 / 132 - w * (691.0 / 32760 - w / 12.0))))));
  return acc + std::log(z) - 0.5 / z - series;
}

double digamma(double x) { return digamma(cd(x, 0.0)).real(); }

double pochhammer(double a, unsigned n) {
  double r = 1.0;
  for (unsigned k = 0; k < n; ++k) r *= a + static_cast<double>(k);
  return r;
}

double kummer_1f1(double a, double b, double z, const SeriesPolicy& policy) {
  check_b(b, "kummer_1f1");
  if (z == 0.0) return 1.0;
  if (z > 0.0 && a > 0.0 && b > 0.0) {
    const auto s = kummer_positive(a, b, z, policy);
    return s.mantissa * std::exp(s.log_scale);
  }
  if (z < -50.0 && b > 0.0 && b - a > 0.0) {
    const auto s = kummer_positive(b - a, b, -z, policy);
    return s.mantissa * std::exp(s.log_scale + z);
  }
  return kummer_1f1_series<double>(a, b, z, policy);
}

double kummer_1f1_scaled(double a, double b, double z, const SeriesPolicy& policy) {
  check_b(b, "kummer_1f1_scaled");
  if (z < 0.0 || a <= 0.0 || b <= 0.0) {
    throw DomainError("kummer_1f1_scaled: requires z >= 0, a > 0, b > 0");
  }
  if (z == 0.0) return 1.0;
  if (z > std::max(200.0, 8.0 * (a + b) * (a + b))) return kummer_scaled_large(a, b, z, policy);
  const auto s = kummer_positive(a, b, z, policy);
  return s.mantissa * std::exp(s.log_scale - z);
}

SeriesResult humbert_phi2_detailed(double b1, double b2, double c, double x1, double x2,
                                   const SeriesPolicy& policy) {
  check_b(c, "humbert_phi2");
  // log|.| and sign of (b)_n x^n / n! and of (c)_d, grown on demand.
  struct Seq {
    std::vector<double> lg{0.0};
    std::vector<int> sg{1};
  };
  Seq A, B, C;
  auto grow_factorial_seq = [](Seq& s, double b, double x) {
    const std::size_t n = s.lg.size() - 1;
    const double f = (b + static_cast<double>(n)) * x / static_cast<double>(n + 1);
    if (f == 0.0 || s.sg[n] == 0) {
      s.lg.push_back(0.0);
      s.sg.push_back(0);
    } else {
      s.lg.push_back(s.lg[n] + std::log(std::abs(f)));
      s.sg.push_back(f > 0 ? s.sg[n] : -s.sg[n]);
    }
  };
  auto grow_rising = [](Seq& s, double c) {
    const std::size_t n = s.lg.size() - 1;
    const double f = c + static_cast<double>(n);
    s.lg.push_back(s.lg[n] + std::log(std::abs(f)));
    s.sg.push_back(f > 0 ? s.sg[n] : -s.sg[n]);
  };

  SeriesResult r;
  double sum = 0.0, comp = 0.0;
  const double d_min = std::abs(x1) + std::abs(x2) + 2.0;
  int small = 0;
  for (std::size_t d = 0;; ++d) {
    while (A.lg.size() <= d) grow_factorial_seq(A, b1, x1);
    while (B.lg.size() <= d) grow_factorial_seq(B, b2, x2);
    while (C.lg.size() <= d) grow_rising(C, c);
    double diag_max = 0.0;
    for (std::size_t n1 = 0; n1 <= d; ++n1) {
      const std::size_t n2 = d - n1;
      const int s = A.sg[n1] * B.sg[n2] * C.sg[d];
      ++r.terms;
      if (s == 0) continue;
      const double term = s * std::exp(A.lg[n1] + B.lg[n2] - C.lg[d]);
      diag_max = std::max(diag_max, std::abs(term));
      r.magnitude += std::abs(term);
      const double y = term - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
    if (static_cast<double>(d) > d_min && diag_max <= policy.relative_tolerance * std::abs(sum)) {
      if (++small >= policy.consecutive_small_terms_to_stop) break;
    } else {
      small = 0;
    }
    if (r.terms > policy.max_terms) {
      throw ConvergenceError("humbert_phi2: series did not converge within max_terms");
    }
  }
  r.value = sum;
  r.precision_warning = r.magnitude > 1e6 * std::abs(sum);
  return r;
}

double humbert_phi2(double b1, double b2, double c, double x1, double x2,
                    const SeriesPolicy& policy) {
  return humbert_phi2_detailed(b1, b2, c, x1, x2, policy).value;
}

double laguerre_generalized(unsigned n, double alpha, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0, cur = 1.0 + alpha - x;
  for (unsigned k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double next = ((2.0 * kk + 1.0 + alpha - x) * cur - (kk + alpha) * prev) / (kk + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

// Series for P(a, x), valid and efficient for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a, del = 1.0 / a, sum = del;
  for (int n = 0; n < 100000; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-17) {
      return sum * std::exp(-x + a * std::log(x) - ln_gamma(a));
    }
  }
  throw ConvergenceError("gamma_p: series did not converge");
}

// Lentz continued fraction for Q(a, x), valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int i = 1; i < 100000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) {
      return std::exp(-x + a * std::log(x) - ln_gamma(a)) * h;
    }
  }
  throw ConvergenceError("gamma_q: continued fraction did not converge");
}

}  // namespace

double gamma_p(double a, double x) {
  if (a <= 0.0) throw DomainError("gamma_p: a must be positive");
  if (x <= 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
  if (a <= 0.0) throw DomainError("gamma_q: a must be positive");
  if (x <= 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

}  // namespace arsec
