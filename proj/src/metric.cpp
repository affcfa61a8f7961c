#include "arsec/metric.hpp"

namespace arsec {

Engine default_engine(const SecrecyScenario& s) {
  return s.main.integer_m() && s.eve.integer_m() ? Engine::ExactInteger : Engine::Quadrature;
}

MetricResult metric(Metric kind, const SecrecyScenario& s, std::optional<Engine> engine,
                    const MetricOptions& o) {
  const Engine e = engine.value_or(default_engine(s));
  switch (e) {
    case Engine::Quadrature:
      if (kind == Metric::Asc) return asc_quadrature(s, o.quad);
      if (kind == Metric::Sop) return sop_quadrature(s, o.quad);
      return pnz_quadrature(s, o.quad);
    case Engine::ExactInteger:
      if (kind == Metric::Asc) return asc_exact_integer(s);
      if (kind == Metric::Sop) return sop_exact_integer(s);
      return pnz_exact_integer(s);
    case Engine::ExactReal: {
      if (kind == Metric::Asc) {
        FoxTolerances tol;
        if (o.fox_tolerance > 0.0) tol.asc_four_variate = o.fox_tolerance;
        return asc_exact_real(s, tol);
      }
      if (kind == Metric::Sop) {
        return o.n_terms > 0 ? sop_series_real(s, o.n_terms) : sop_series_real_converged(s);
      }
      return o.fox_tolerance > 0.0 ? pnz_exact_real(s, o.fox_tolerance) : pnz_exact_real(s);
    }
    case Engine::Asymptotic:
      if (kind == Metric::Asc) return asc_asymptotic(s);
      if (kind == Metric::Sop) {
        return sop_asymptotic(s, o.n_terms > 0 ? o.n_terms : kDefaultAsymptoticTerms);
      }
      return pnz_asymptotic(s);
    case Engine::MonteCarlo:
      return to_metric_result(simulate(s, o.mc), kind);
  }
  return {};
}

}  // namespace arsec
