#pragma once

#include <optional>

#include "arsec/mc.hpp"
#include "arsec/quadrature.hpp"
#include "arsec/secrecy.hpp"

namespace arsec {

struct MetricOptions {
  QuadConfig quad;
  McConfig mc;
  /// Series truncation for the real-m SOP; 0 runs the series to convergence.
  int n_terms = 0;
  /// Fox H relative tolerance for the real-m engines; 0 keeps each engine's default.
  double fox_tolerance = 0.0;
};

/// Engine chosen when none is requested: exact-integer for integer m on both links, else quadrature.
Engine default_engine(const SecrecyScenario& s);

MetricResult metric(Metric kind, const SecrecyScenario& s, std::optional<Engine> engine = {},
                    const MetricOptions& options = {});

}  // namespace arsec
