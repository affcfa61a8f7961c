#pragma once

#include <cstdint>

#include "arsec/secrecy.hpp"

namespace arsec {

struct McConfig {
  std::uint64_t n_samples = 1'000'000;
  std::uint64_t seed = 0;
  std::uint64_t batch_size = 100'000;
  /// 0 uses the hardware concurrency.
  unsigned threads = 0;
  void validate() const;
};

struct McEstimate {
  double asc = 0.0;
  double sop = 0.0;
  double pnz = 0.0;
  double stderr_asc = 0.0;
  double stderr_sop = 0.0;
  double stderr_pnz = 0.0;
  std::uint64_t n = 0;
};

/// Paired independent draws of the main and eavesdropper SNRs; reproducible for a given seed.
McEstimate simulate(const SecrecyScenario& s, const McConfig& config = {});

/// The estimate for one metric as a MetricResult (error_estimate = standard error).
MetricResult to_metric_result(const McEstimate& e, Metric kind);

}  // namespace arsec
