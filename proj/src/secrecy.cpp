#include "arsec/secrecy.hpp"

#include <cmath>
#include <sstream>

#include "arsec/error.hpp"
#include "arsec/specfun.hpp"
#include "secrecy_internal.hpp"

namespace arsec {

double SecrecyScenario::rs() const { return std::exp2(target_rate); }

void SecrecyScenario::validate() const {
  main.validate();
  eve.validate();
  if (!(target_rate >= 0) || !std::isfinite(target_rate)) {
    throw DomainError("target_rate must be a finite non-negative number");
  }
}

SecrecyScenario SecrecyScenario::swapped() const { return {eve, main, target_rate}; }

std::string to_string(Engine e) {
  switch (e) {
    case Engine::ExactReal:
      return "exact-real";
    case Engine::ExactInteger:
      return "exact-integer";
    case Engine::Asymptotic:
      return "asymptotic";
    case Engine::Quadrature:
      return "quadrature";
    case Engine::MonteCarlo:
      return "monte-carlo";
  }
  return "unknown";
}

std::string to_string(Metric m) {
  switch (m) {
    case Metric::Asc:
      return "asc";
    case Metric::Sop:
      return "sop";
    case Metric::Pnz:
      return "pnz";
  }
  return "unknown";
}

Engine parse_engine(const std::string& s) {
  for (Engine e : {Engine::ExactReal, Engine::ExactInteger, Engine::Asymptotic,
                   Engine::Quadrature, Engine::MonteCarlo}) {
    if (to_string(e) == s) return e;
  }
  throw DomainError("unknown engine '" + s + "'");
}

Metric parse_metric(const std::string& s) {
  for (Metric m : {Metric::Asc, Metric::Sop, Metric::Pnz}) {
    if (to_string(m) == s) return m;
  }
  throw DomainError("unknown metric '" + s + "'");
}

void finalize(MetricResult& r, Metric kind) {
  std::ostringstream os;
  os.precision(3);
  if (kind == Metric::Asc) {
    if (r.value < 0.0) {
      os << "negative ASC " << r.value << " clamped to 0";
      r.notes.push_back(os.str());
      r.value = 0.0;
    }
    return;
  }
  if (r.value < 0.0 || r.value > 1.0) {
    const double excess = r.value < 0.0 ? -r.value : r.value - 1.0;
    os << (excess < 1e-9 ? "value clamped into [0, 1] (overshoot " : "value outside [0, 1] clamped (overshoot ")
       << excess << ")";
    r.notes.push_back(os.str());
    r.value = std::min(std::max(r.value, 0.0), 1.0);
  }
}

double high_snr_slope() { return std::log(2.0); }
int secrecy_diversity_order() { return 1; }
double pnz_high_snr_limit() { return 1.0; }

namespace detail {

void require_integer_m(const SecrecyScenario& s, const char* who) {
  if (!s.main.integer_m() || !s.eve.integer_m()) {
    throw DispatchError(std::string(who) + ": both links need integer m; use the quadrature engine");
  }
}

void require_real_m(const ArsParams& p, const char* who, const char* link) {
  if (p.integer_m()) {
    throw DispatchError(std::string(who) + ": " + link +
                        " m is an integer; use the exact-integer engine");
  }
}

}  // namespace detail

}  // namespace arsec
