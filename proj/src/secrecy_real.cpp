#include <algorithm>
#include <cmath>
#include <sstream>

#include "arsec/error.hpp"
#include "arsec/foxh.hpp"
#include "arsec/secrecy.hpp"
#include "arsec/specfun.hpp"
#include "secrecy_internal.hpp"

namespace arsec {

namespace {

using detail::Link;

double beta_of(const Link& l, int r) {
  const double m = l.p.m, K = l.p.K(r);
  return m / ((m + K) * l.d.theta);
}

void require_positive_k(const Link& l, int r, const char* who) {
  if (!(l.p.K(r) > 0.0)) {
    throw DomainError(std::string(who) + ": the Fox H form needs K > 0 on the density link");
  }
}

std::string fox_note(const char* what, const FoxHResult& r) {
  std::ostringstream os;
  os.precision(3);
  os << what << ": grid difference " << r.error_estimate << " after " << r.refinements
     << " refinement(s)";
  if (r.accuracy_warning) os << " (accuracy warning: tolerance not reached)";
  return os.str();
}

// E[ln(1 + X)] for one Rician shadowed branch X of link l.
FoxHResult i3_branch(const Link& l, int r, double tol, double& value) {
  const double m = l.p.m, K = l.p.K(r);
  if (K == 0.0) {
    value = expected_log1p_gamma(1.0, l.d.theta);
    return {};
  }
  FoxHSpec spec(2);
  spec.per_variable_numerator[0] = {{0.0, 1.0}, {1.0 - m, -1.0}};
  spec.per_variable_denominator[0] = {{1.0, -1.0}};
  spec.per_variable_numerator[1] = {{0.0, 1.0}, {0.0, 1.0}, {1.0, -1.0}};
  spec.per_variable_denominator[1] = {{1.0, 1.0}};
  spec.outer_numerator = {{1.0, {-1.0, 1.0}}};
  spec.contour_abscissas = {0.5 * (1.0 - m), 0.5};
  spec.relative_tolerance = tol;
  const auto h = fox_h_multi_detailed(spec, {K / m, beta_of(l, r)});
  value = std::pow(m / (m + K), m - 1.0) / std::tgamma(1.0 - m) * h.value;
  return h;
}

// Integral of (ln(1+g) if with_log else 1) f_X,i(g) F_Y,j(g) over g >= 0.
FoxHResult mixed_term(const Link& X, int i, const Link& Y, int j, bool with_log, double tol,
                      double& value) {
  require_positive_k(X, i, with_log ? "asc_exact_real" : "pnz_exact_real");
  const double mx = X.p.m, kx = X.p.K(i), my = Y.p.m, ky = Y.p.K(j);
  const double bx = beta_of(X, i);
  const double ay = 1.0 / Y.d.theta, by = beta_of(Y, j);
  const int n = with_log ? 4 : 3;
  FoxHSpec spec(n);
  spec.per_variable_numerator[0] = {{0.0, 1.0}, {1.0 - my, -1.0}};
  spec.per_variable_numerator[1] = {{0.0, 1.0}, {my, -1.0}};
  spec.per_variable_numerator[2] = {{0.0, 1.0}, {1.0 - mx, -1.0}};
  spec.per_variable_denominator[2] = {{1.0, -1.0}};
  std::vector<double> lead{-1.0, -1.0, -1.0};
  std::vector<double> pair{-1.0, -1.0, 0.0};
  std::vector<double> args{ay / bx, by / bx, kx / mx};
  std::vector<double> c{0.5 * (1.0 - my), 0.5 * my, 0.5 * (1.0 - mx)};
  if (with_log) {
    spec.per_variable_numerator[3] = {{0.0, 1.0}, {0.0, 1.0}, {1.0, -1.0}};
    spec.per_variable_denominator[3] = {{1.0, 1.0}};
    lead.push_back(1.0);
    pair.push_back(0.0);
    args.push_back(bx);
    c.push_back(0.5);
  }
  spec.outer_numerator = {{2.0, lead}};
  spec.outer_denominator = {{2.0, pair}};
  spec.contour_abscissas = c;
  spec.truncation_height = with_log ? 8.0 : 10.0;
  spec.relative_tolerance = tol;
  const auto h = fox_h_multi_detailed(spec, args);
  const double pref = (ay / bx) * ((mx + kx) / mx) * std::pow(my / (my + ky), my) *
                      std::pow(mx / (mx + kx), mx) /
                      (std::tgamma(1.0 - mx) * std::tgamma(1.0 - my) * std::tgamma(my));
  value = pref * h.value;
  return h;
}

}  // namespace

MetricResult i3_exact_real(const ArsParams& eve, double tolerance) {
  detail::require_real_m(eve, "i3_exact_real", "eve");
  const Link E(eve);
  MetricResult r;
  r.engine = Engine::ExactReal;
  for (int j : E.branches()) {
    double v = 0.0;
    const auto h = i3_branch(E, j, tolerance, v);
    r.value += E.d.q[j] * v;
    r.error_estimate += E.d.q[j] * std::abs(v) * (h.value != 0.0 ? h.error_estimate / std::abs(h.value) : 0.0);
    r.notes.push_back(fox_note("I3 (2-variate)", h));
  }
  return r;
}

AscComponents asc_components_exact_real(const SecrecyScenario& s, const FoxTolerances& tol) {
  s.validate();
  detail::require_real_m(s.main, "asc_exact_real", "main");
  detail::require_real_m(s.eve, "asc_exact_real", "eve");
  const Link B(s.main), E(s.eve);
  AscComponents c;
  c.notes.push_back("4-variate Fox H terms are experimental (tolerance " +
                    std::to_string(tol.asc_four_variate) + ")");
  auto rel = [](const FoxHResult& h) {
    return h.value != 0.0 ? h.error_estimate / std::abs(h.value) : 0.0;
  };
  for (int i : B.branches()) {
    for (int j : E.branches()) {
      double v = 0.0;
      auto h = mixed_term(B, i, E, j, true, tol.asc_four_variate, v);
      c.i1 += B.d.q[i] * E.d.q[j] * v;
      c.e1 += B.d.q[i] * E.d.q[j] * std::abs(v) * rel(h);
      c.notes.push_back(fox_note("R term", h));
      h = mixed_term(E, j, B, i, true, tol.asc_four_variate, v);
      c.i2 += B.d.q[i] * E.d.q[j] * v;
      c.e2 += B.d.q[i] * E.d.q[j] * std::abs(v) * rel(h);
      c.notes.push_back(fox_note("T term", h));
    }
  }
  const auto i3 = i3_exact_real(s.eve, tol.i3);
  c.i3 = i3.value;
  c.e3 = i3.error_estimate;
  return c;
}

MetricResult asc_exact_real(const SecrecyScenario& s, const FoxTolerances& tol) {
  const auto c = asc_components_exact_real(s, tol);
  MetricResult r;
  r.engine = Engine::ExactReal;
  r.value = c.i1 + c.i2 - c.i3;
  r.error_estimate = c.e1 + c.e2 + c.e3;
  r.notes = c.notes;
  finalize(r, Metric::Asc);
  return r;
}

MetricResult pnz_exact_real(const SecrecyScenario& s, double tolerance) {
  s.validate();
  detail::require_real_m(s.main, "pnz_exact_real", "main");
  detail::require_real_m(s.eve, "pnz_exact_real", "eve");
  const Link B(s.main), E(s.eve);
  MetricResult r;
  r.engine = Engine::ExactReal;
  for (int i : B.branches()) {
    for (int j : E.branches()) {
      double v = 0.0;
      const auto h = mixed_term(B, i, E, j, false, tolerance, v);
      const double w = B.d.q[i] * E.d.q[j];
      r.value += w * v;
      r.error_estimate += w * std::abs(v) * (h.value != 0.0 ? h.error_estimate / std::abs(h.value) : 0.0);
      r.notes.push_back(fox_note("D term (3-variate)", h));
    }
  }
  finalize(r, Metric::Pnz);
  return r;
}

namespace {

double log_add(double a, double b) {
  if (a == -INFINITY) return b;
  if (b == -INFINITY) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// log of G^{1,2}_{2,2}(z | m, -n; 0, 0) / n! for n = 0..n_max.
std::vector<double> log_g_over_factorial(double m, double z, int n_max) {
  std::vector<double> out(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    if (z == 0.0) {
      out[n] = ln_gamma(1.0 - m);
      continue;
    }
    auto spec = meijer_g_spec(1, 2, {m, -static_cast<double>(n)}, {0.0, 0.0});
    spec.log_prefactor = -ln_gamma(n + 1.0);
    const double g = meijer_g(spec, z);
    if (!(g > 0.0)) throw Error("sop_series_real: non-positive G^{1,2}_{2,2} value");
    out[n] = std::log(g);
  }
  return out;
}

}  // namespace

SopSeriesProfile sop_series_profile(const SecrecyScenario& s, int n_max) {
  s.validate();
  detail::require_real_m(s.eve, "sop_series_real", "eve");
  if (n_max < 0) throw DomainError("sop_series_real: n_terms must be non-negative");
  const Link B(s.main), E(s.eve);
  const double mb = s.main.m, me = s.eve.m;
  const double rs = s.rs(), w = rs - 1.0;
  const int m_top = 2 * n_max + 1;
  SopSeriesProfile prof;
  prof.partial.assign(n_max + 1, 0.0);
  prof.shell_magnitude.assign(n_max + 1, 0.0);
  std::vector<double> shell(n_max + 1, 0.0);

  for (int j : E.branches()) {
    const double ke = s.eve.K(j);
    const double beta = beta_of(E, j);
    const auto lg = log_g_over_factorial(me, ke / me, m_top);
    // log U(M), M = 0..m_top.
    std::vector<double> log_u(m_top + 1, -INFINITY);
    const double l_ratio = std::log(rs / beta);
    for (int M = 0; M <= m_top; ++M) {
      double acc = -INFINITY;
      for (int n3 = (w == 0.0 ? M : 0); n3 <= M; ++n3) {
        const int k = M - n3;
        const double lw = k > 0 ? k * std::log(w) : 0.0;
        acc = log_add(acc, lw - ln_gamma(k + 1.0) + n3 * l_ratio + lg[n3]);
      }
      log_u[M] = acc;
    }
    for (int i : B.branches()) {
      const double kb = s.main.K(i);
      const double a = 1.0 / B.d.theta;
      const double b = beta_of(B, i);
      const double pref = B.d.q[i] * E.d.q[j] / B.d.theta / std::tgamma(1.0 - me) *
                          std::pow(mb / (mb + kb), mb) * std::pow(me / (me + ke), me - 1.0);
      // log|.| and sign of (1-mb)_n1 (-a)^n1 / n1! and (mb)_n2 (-b)^n2 / n2!.
      std::vector<double> la(n_max + 1), lc(n_max + 1);
      std::vector<int> sa(n_max + 1), sc(n_max + 1);
      la[0] = lc[0] = 0.0;
      sa[0] = sc[0] = 1;
      for (int n = 1; n <= n_max; ++n) {
        const double fa = (1.0 - mb + n - 1) * (-a) / n;
        const double fc = (mb + n - 1) * (-b) / n;
        sa[n] = (fa == 0.0 || sa[n - 1] == 0) ? 0 : (fa > 0 ? sa[n - 1] : -sa[n - 1]);
        la[n] = sa[n] == 0 ? 0.0 : la[n - 1] + std::log(std::abs(fa));
        sc[n] = fc > 0 ? sc[n - 1] : -sc[n - 1];
        lc[n] = lc[n - 1] + std::log(std::abs(fc));
      }
      auto term = [&](int n1, int n2) {
        if (sa[n1] == 0) return 0.0;
        return sa[n1] * sc[n2] * std::exp(la[n1] + lc[n2] + log_u[1 + n1 + n2]);
      };
      for (int N = 0; N <= n_max; ++N) {
        double sh = 0.0;
        for (int k = 0; k < N; ++k) sh += term(N, k) + term(k, N);
        sh += term(N, N);
        shell[N] += pref * sh;
      }
    }
  }
  double run = 0.0;
  for (int N = 0; N <= n_max; ++N) {
    run += shell[N];
    prof.partial[N] = run;
    prof.shell_magnitude[N] = std::abs(shell[N]);
  }
  return prof;
}

MetricResult sop_series_real(const SecrecyScenario& s, int n_terms) {
  const auto prof = sop_series_profile(s, n_terms);
  MetricResult r;
  r.engine = Engine::ExactReal;
  r.value = prof.partial.back();
  r.error_estimate = prof.shell_magnitude.back();
  if (r.error_estimate > 1e-6 * std::abs(r.value)) {
    std::ostringstream os;
    os.precision(3);
    os << "series not converged: last shell " << r.error_estimate << " exceeds 1e-6 of the sum";
    r.notes.push_back(os.str());
  }
  finalize(r, Metric::Sop);
  return r;
}

MetricResult sop_series_real_converged(const SecrecyScenario& s, double rel_tol, int n_cap) {
  for (int n = 40;; n = std::min(2 * n, n_cap)) {
    const auto prof = sop_series_profile(s, n);
    const double v = prof.partial.back();
    const bool ok = prof.shell_magnitude[n] <= rel_tol * std::abs(v) &&
                    prof.shell_magnitude[n - 1] <= rel_tol * std::abs(v);
    if (!ok && (n >= n_cap || prof.shell_magnitude[n] > 1.0)) {
      std::ostringstream os;
      os.precision(3);
      os << "sop_series_real: series diverges or stalls (last shell " << prof.shell_magnitude[n]
         << " at N = " << n << "); the main-link SNR is too low for this expansion, use quadrature";
      throw ConvergenceError(os.str());
    }
    if (ok) {
      MetricResult r;
      r.engine = Engine::ExactReal;
      r.value = v;
      r.error_estimate = prof.shell_magnitude[n];
      r.notes.push_back("truncated at N = " + std::to_string(n));
      finalize(r, Metric::Sop);
      return r;
    }
  }
}

double sop_truncation_error(const SecrecyScenario& s, int n_terms) {
  const auto prof = sop_series_profile(s, n_terms + 30);
  return std::abs(prof.partial[n_terms + 30] - prof.partial[n_terms]);
}

std::vector<double> sop_truncation_error_profile(const SecrecyScenario& s, int n_max) {
  const auto prof = sop_series_profile(s, n_max + 30);
  std::vector<double> eps(n_max + 1);
  for (int n = 0; n <= n_max; ++n) eps[n] = std::abs(prof.partial[n + 30] - prof.partial[n]);
  return eps;
}

}  // namespace arsec
