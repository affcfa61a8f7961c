#include <cmath>
#include <map>

#include "arsec/error.hpp"
#include "arsec/foxh.hpp"
#include "arsec/secrecy.hpp"
#include "arsec/specfun.hpp"
#include "secrecy_internal.hpp"

namespace arsec {

namespace {

using detail::Link;

int mint(const ArsParams& p) { return static_cast<int>(std::lround(p.m)); }

// log of C(a+k-1, k) u^a v^k, the negative-binomial weight.
double log_nb_weight(int a, int k, double log_u, double log_v) {
  return ln_gamma(double(a + k)) - ln_gamma(double(a)) - ln_gamma(k + 1.0) + a * log_u +
         (k > 0 ? k * log_v : 0.0);
}

// E[ln(1+X) F_Y(X)] with X the f-link branch (gamma mixture) and Y the F-link branch.
double log_cdf_term(const Link& X, int i, const Link& Y, int j) {
  const int mx = mint(X.p), my = mint(Y.p);
  const double rx = X.d.rho_bar[i], ry = Y.d.rho_bar[j];
  const double rp = rx * ry / (rx + ry);
  const double log_u = std::log(ry / (rx + ry)), log_v = std::log(rx / (rx + ry));
  const auto& Bx = X.d.b_coeff[i];
  const auto& By = Y.d.b_coeff[j];
  std::map<int, double> cache;
  auto E_rp = [&](int shape) {
    auto it = cache.find(shape);
    if (it != cache.end()) return it->second;
    return cache[shape] = expected_log1p_gamma(shape, rp);
  };
  double total = 0.0;
  for (int n = 0; n < mx; ++n) {
    if (Bx[n] == 0.0) continue;
    const int a = mx - n;
    double inner = expected_log1p_gamma(a, rx);
    for (int l = 0; l < my; ++l) {
      if (By[l] == 0.0) continue;
      for (int k = 0; k < my - l; ++k) {
        inner -= By[l] * std::exp(log_nb_weight(a, k, log_u, log_v)) * E_rp(a + k);
      }
    }
    total += Bx[n] * inner;
  }
  return total;
}

double i3_integer(const Link& E) {
  double s = 0.0;
  const int m = mint(E.p);
  for (int j : E.branches()) {
    double b = 0.0;
    for (int n = 0; n < m; ++n) {
      const double B = E.d.b_coeff[j][n];
      if (B != 0.0) b += B * expected_log1p_gamma(m - n, E.d.rho_bar[j]);
    }
    s += E.d.q[j] * b;
  }
  return s;
}

}  // namespace

double expected_log1p_gamma(double a, double rho) {
  auto spec = meijer_g_spec(1, 3, {1.0 - a, 1.0, 1.0}, {1.0, 0.0});
  spec.log_prefactor = -ln_gamma(a);
  return meijer_g(spec, rho);
}

AscComponents asc_components_exact_integer(const SecrecyScenario& s) {
  s.validate();
  detail::require_integer_m(s, "asc_exact_integer");
  const Link B(s.main), E(s.eve);
  AscComponents c;
  for (int i : B.branches()) {
    for (int j : E.branches()) {
      c.i1 += B.d.q[i] * E.d.q[j] * log_cdf_term(B, i, E, j);
      c.i2 += E.d.q[j] * B.d.q[i] * log_cdf_term(E, j, B, i);
    }
  }
  c.i3 = i3_integer(E);
  return c;
}

MetricResult asc_exact_integer(const SecrecyScenario& s) {
  const auto c = asc_components_exact_integer(s);
  MetricResult r;
  r.engine = Engine::ExactInteger;
  r.value = c.i1 + c.i2 - c.i3;
  r.error_estimate = 1e-11 * (std::abs(c.i1) + std::abs(c.i2) + std::abs(c.i3));
  finalize(r, Metric::Asc);
  return r;
}

MetricResult sop_exact_integer(const SecrecyScenario& s) {
  s.validate();
  detail::require_integer_m(s, "sop_exact_integer");
  const Link B(s.main), E(s.eve);
  const int mb = mint(s.main), me = mint(s.eve);
  const double rs = s.rs(), w = rs - 1.0;
  double total = 0.0;
  for (int i : B.branches()) {
    const double rb = B.d.rho_bar[i];
    for (int j : E.branches()) {
      const double re = E.d.rho_bar[j];
      const double lambda = 1.0 / re + rs / rb;
      double wij = 0.0;
      for (int l = 0; l < mb; ++l) {
        const double Bl = B.d.b_coeff[i][l];
        if (Bl == 0.0) continue;
        for (int n = 0; n < me; ++n) {
          const double Bn = E.d.b_coeff[j][n];
          if (Bn == 0.0) continue;
          const int a = me - n;
          double sum = 0.0;
          for (int k = 0; k <= mb - l - 1; ++k) {
            for (int t = 0; t <= k; ++t) {
              if (w == 0.0 && t > 0) break;
              const double lg = -w / rb - k * std::log(rb) - a * std::log(re) +
                                (t > 0 ? t * std::log(w) : 0.0) + (k - t) * std::log(rs) -
                                ln_gamma(t + 1.0) - ln_gamma(double(k - t + 1)) +
                                ln_gamma(double(a + k - t)) - ln_gamma(double(a)) -
                                (a + k - t) * std::log(lambda);
              sum += std::exp(lg);
            }
          }
          wij += Bl * Bn * (1.0 - sum);
        }
      }
      total += B.d.q[i] * E.d.q[j] * wij;
    }
  }
  MetricResult r;
  r.engine = Engine::ExactInteger;
  r.value = total;
  r.error_estimate = 1e-14;
  finalize(r, Metric::Sop);
  return r;
}

MetricResult pnz_exact_integer(const SecrecyScenario& s) {
  s.validate();
  detail::require_integer_m(s, "pnz_exact_integer");
  const Link B(s.main), E(s.eve);
  const int mb = mint(s.main), me = mint(s.eve);
  double total = 0.0;
  for (int i : B.branches()) {
    const double rb = B.d.rho_bar[i];
    for (int j : E.branches()) {
      const double re = E.d.rho_bar[j];
      const double log_u = std::log(re / (rb + re)), log_v = std::log(rb / (rb + re));
      double dij = 0.0;
      for (int l = 0; l < me; ++l) {
        const double Bl = E.d.b_coeff[j][l];
        if (Bl == 0.0) continue;
        for (int n = 0; n < mb; ++n) {
          const double Bn = B.d.b_coeff[i][n];
          if (Bn == 0.0) continue;
          const int a = mb - n;
          double sum = 0.0;
          for (int k = 0; k < me - l; ++k) sum += std::exp(log_nb_weight(a, k, log_u, log_v));
          dij += Bl * Bn * (1.0 - sum);
        }
      }
      total += B.d.q[i] * E.d.q[j] * dij;
    }
  }
  MetricResult r;
  r.engine = Engine::ExactInteger;
  r.value = total;
  r.error_estimate = 1e-14;
  finalize(r, Metric::Pnz);
  return r;
}

}  // namespace arsec
