#include <cmath>
#include <complex>
#include <sstream>

#include "arsec/error.hpp"
#include "arsec/foxh.hpp"
#include "arsec/secrecy.hpp"
#include "arsec/specfun.hpp"
#include "secrecy_internal.hpp"

namespace arsec {

namespace {

using detail::Link;

int mint(const ArsParams& p) { return static_cast<int>(std::lround(p.m)); }

double beta_of(const Link& l, int r) {
  const double m = l.p.m, K = l.p.K(r);
  return m / ((m + K) * l.d.theta);
}

/// Density of one branch at the origin.
double pdf_at_zero(const Link& l, int r) {
  const double m = l.p.m, K = l.p.K(r);
  return std::pow(m / (m + K), m) / l.d.theta;
}

// E[ln X] for one branch.
double expected_log(const Link& l, int r) {
  const double m = l.p.m, K = l.p.K(r);
  if (K == 0.0) return std::log(l.d.theta) - kEulerGamma;
  if (l.p.integer_m()) {
    const int mi = mint(l.p);
    double s = 0.0;
    for (int n = 0; n < mi; ++n) {
      const double B = l.d.b_coeff[r][n];
      if (B != 0.0) s += B * (std::log(l.d.rho_bar[r]) + digamma(double(mi - n)));
    }
    return s;
  }
  FoxHSpec spec(1);
  spec.per_variable_numerator[0] = {{0.0, 1.0}, {1.0 - m, -1.0}};
  spec.contour_abscissas = {0.5 * (1.0 - m)};
  spec.extra_log_factor = [](std::complex<double> s) { return std::log(digamma(1.0 - s)); };
  const double J = meijer_g(spec, K / m);
  return std::log(l.d.rho_bar[r]) + std::pow(m / (m + K), m - 1.0) / std::tgamma(1.0 - m) * J;
}

// E[X ln(1 + X)] for one branch.
double expected_x_log1p(const Link& l, int r) {
  const double m = l.p.m, K = l.p.K(r);
  if (K == 0.0) return l.d.theta * expected_log1p_gamma(2.0, l.d.theta);
  if (l.p.integer_m()) {
    const int mi = mint(l.p);
    const double rho = l.d.rho_bar[r];
    double s = 0.0;
    for (int n = 0; n < mi; ++n) {
      const double B = l.d.b_coeff[r][n];
      const int a = mi - n;
      if (B != 0.0) s += B * a * rho * expected_log1p_gamma(a + 1.0, rho);
    }
    return s;
  }
  const double beta = beta_of(l, r);
  FoxHSpec spec(2);
  spec.per_variable_numerator[0] = {{0.0, 1.0}, {1.0 - m, -1.0}};
  spec.per_variable_denominator[0] = {{1.0, -1.0}};
  spec.per_variable_numerator[1] = {{0.0, 1.0}, {0.0, 1.0}, {1.0, -1.0}};
  spec.per_variable_denominator[1] = {{1.0, 1.0}};
  spec.outer_numerator = {{2.0, {-1.0, 1.0}}};
  spec.contour_abscissas = {0.5 * (1.0 - m), 0.5};
  spec.relative_tolerance = 1e-8;
  const double h = fox_h_multi(spec, {K / m, beta});
  return std::pow(m / (m + K), m) / (l.d.theta * std::tgamma(1.0 - m) * beta * beta) * h;
}

double i3_any(const ArsParams& eve) {
  if (eve.integer_m()) {
    const Link E(eve);
    double s = 0.0;
    for (int j : E.branches()) {
      double b = 0.0;
      const int m = mint(eve);
      for (int n = 0; n < m; ++n) {
        const double B = E.d.b_coeff[j][n];
        if (B != 0.0) b += B * expected_log1p_gamma(m - n, E.d.rho_bar[j]);
      }
      s += E.d.q[j] * b;
    }
    return s;
  }
  return i3_exact_real(eve).value;
}

}  // namespace

MetricResult asc_asymptotic(const SecrecyScenario& s) {
  s.validate();
  const Link B(s.main), E(s.eve);
  double r_term = 0.0, t_term = 0.0;
  for (int i : B.branches()) {
    for (int j : E.branches()) {
      r_term += B.d.q[i] * E.d.q[j] * expected_log(B, i);
    }
  }
  for (int i : E.branches()) {
    const double ex = expected_x_log1p(E, i);
    for (int j : B.branches()) t_term += E.d.q[i] * B.d.q[j] * pdf_at_zero(B, j) * ex;
  }
  MetricResult r;
  r.engine = Engine::Asymptotic;
  r.value = r_term + t_term - i3_any(s.eve);
  r.notes.push_back("high-SNR approximation in the main-link SNR");
  finalize(r, Metric::Asc);
  return r;
}

MetricResult sop_asymptotic(const SecrecyScenario& s, int n_terms) {
  s.validate();
  MetricResult r;
  if (!s.eve.integer_m()) {
    r = sop_series_real(s, n_terms);
    r.notes.clear();
    r.notes.push_back("series truncated at N = " + std::to_string(n_terms));
  } else {
    const Link B(s.main), E(s.eve);
    const double rs = s.rs();
    const double mean_e = s.eve.mean_snr;
    for (int i : B.branches()) r.value += B.d.q[i] * pdf_at_zero(B, i) * (rs * mean_e + rs - 1.0);
    r.notes.push_back("first-order high-SNR form (integer eavesdropper m)");
  }
  r.engine = Engine::Asymptotic;
  finalize(r, Metric::Sop);
  return r;
}

MetricResult pnz_asymptotic(const SecrecyScenario& s) {
  s.validate();
  const Link B(s.main), E(s.eve);
  MetricResult r;
  r.engine = Engine::Asymptotic;
  const double mb = s.main.m, me = s.eve.m;
  if (s.main.integer_m() || s.eve.integer_m()) {
    double outage = 0.0;
    for (int i : B.branches()) outage += B.d.q[i] * pdf_at_zero(B, i) * s.eve.mean_snr;
    r.value = 1.0 - outage;
    r.notes.push_back("first-order high-SNR form (integer m)");
  } else {
    for (int i : B.branches()) {
      const double kb = s.main.K(i);
      if (!(kb > 0.0)) throw DomainError("pnz_asymptotic: the Fox H form needs K > 0 on the main link");
      for (int j : E.branches()) {
        const double ke = s.eve.K(j);
        const double y2 = s.eve.mean_snr * mb * (me + ke) * (1.0 + B.d.k_bar) /
                          (s.main.mean_snr * me * (mb + kb) * (1.0 + E.d.k_bar));
        const double y3 = mb / kb;
        FoxHSpec spec(2);
        spec.per_variable_numerator[0] = {{0.0, 1.0}, {me, -1.0}};
        spec.per_variable_denominator[0] = {{1.0 + me, -1.0}};
        spec.per_variable_numerator[1] = {{0.0, 1.0}, {1.0 - mb, -1.0}};
        spec.per_variable_denominator[1] = {{1.0, -1.0}};
        spec.outer_numerator = {{1.0 + me, {-1.0, -1.0}}};
        spec.contour_abscissas = {0.5 * me, 0.5 * (1.0 - mb)};
        spec.relative_tolerance = 1e-6;
        const double h = fox_h_multi(spec, {1.0 / y2, 1.0 / y3});
        r.value += B.d.q[i] * E.d.q[j] / (std::tgamma(1.0 - mb) * std::tgamma(me)) *
                  std::pow(y2, -me) * std::pow(mb / (mb + kb), mb - 1.0) * h;
      }
    }
  }
  r.notes.push_back("high-SNR approximation in the main-link SNR");
  finalize(r, Metric::Pnz);
  return r;
}

}  // namespace arsec
