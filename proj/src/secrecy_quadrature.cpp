#include <algorithm>
#include <cmath>

#include "arsec/secrecy.hpp"
#include "secrecy_internal.hpp"

namespace arsec {

namespace {

using detail::Link;

/// The map scale follows the link whose density is integrated; both links seed breakpoints.
QuadHints hints_for(const Link& density, const Link& other, double stretch = 1.0) {
  QuadHints h;
  std::vector<double> scales;
  for (const Link* l : {&density, &other}) {
    scales.push_back(l->d.theta);
    for (int r : l->branches()) scales.push_back(l->d.rho_bar[r]);
  }
  const double lo = *std::min_element(scales.begin(), scales.begin() + 1 + density.branches().size());
  h.scale = lo * stretch;
  for (double s : scales) {
    for (double f : {0.01, 0.1, 1.0, 10.0, 100.0}) h.breakpoints.push_back(s * f * stretch);
  }
  return h;
}

void note_fallback(bool fb, std::vector<std::string>& notes) {
  if (fb) notes.push_back("cdf used the gamma-mixture fallback for large arguments");
}

}  // namespace

double capacity_quadrature(const ArsParams& link, const QuadConfig& cfg) {
  const Link l(link);
  return integrate_semi_infinite([&](double x) { return std::log1p(x) * l.pdf(x); }, cfg,
                                 hints_for(l, l))
      .value;
}

AscComponents asc_components_quadrature(const SecrecyScenario& s, const QuadConfig& cfg) {
  s.validate();
  const Link B(s.main), E(s.eve);
  bool fb = false;
  const auto hints_b = hints_for(B, E), hints_e = hints_for(E, B);
  const auto r1 = integrate_semi_infinite(
      [&](double x) {
        const double f = B.pdf(x);
        return f == 0.0 ? 0.0 : std::log1p(x) * f * E.cdf(x, &fb);
      },
      cfg, hints_b);
  const auto r2 = integrate_semi_infinite(
      [&](double x) {
        const double f = E.pdf(x);
        return f == 0.0 ? 0.0 : std::log1p(x) * f * B.cdf(x, &fb);
      },
      cfg, hints_e);
  const auto r3 =
      integrate_semi_infinite([&](double x) { return std::log1p(x) * E.pdf(x); }, cfg, hints_e);
  AscComponents c;
  c.i1 = r1.value;
  c.i2 = r2.value;
  c.i3 = r3.value;
  c.e1 = r1.error_estimate;
  c.e2 = r2.error_estimate;
  c.e3 = r3.error_estimate;
  note_fallback(fb, c.notes);
  return c;
}

MetricResult asc_quadrature(const SecrecyScenario& s, const QuadConfig& cfg) {
  const auto c = asc_components_quadrature(s, cfg);
  MetricResult r;
  r.engine = Engine::Quadrature;
  r.value = c.i1 + c.i2 - c.i3;
  r.error_estimate = c.e1 + c.e2 + c.e3;
  r.notes = c.notes;
  finalize(r, Metric::Asc);
  return r;
}

MetricResult sop_quadrature(const SecrecyScenario& s, const QuadConfig& cfg) {
  s.validate();
  const Link B(s.main), E(s.eve);
  const double rs = s.rs();
  bool fb = false;
  const auto q = integrate_semi_infinite(
      [&](double x) {
        const double f = E.pdf(x);
        return f == 0.0 ? 0.0 : f * B.cdf(rs * x + rs - 1.0, &fb);
      },
      cfg, hints_for(E, B));
  MetricResult r;
  r.engine = Engine::Quadrature;
  r.value = q.value;
  r.error_estimate = q.error_estimate;
  note_fallback(fb, r.notes);
  finalize(r, Metric::Sop);
  return r;
}

MetricResult pnz_quadrature(const SecrecyScenario& s, const QuadConfig& cfg) {
  s.validate();
  const Link B(s.main), E(s.eve);
  bool fb = false;
  const auto q = integrate_semi_infinite(
      [&](double x) {
        const double f = B.pdf(x);
        return f == 0.0 ? 0.0 : f * E.cdf(x, &fb);
      },
      cfg, hints_for(B, E));
  MetricResult r;
  r.engine = Engine::Quadrature;
  r.value = q.value;
  r.error_estimate = q.error_estimate;
  note_fallback(fb, r.notes);
  finalize(r, Metric::Pnz);
  return r;
}

}  // namespace arsec
