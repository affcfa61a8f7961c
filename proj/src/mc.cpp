#include "arsec/mc.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>
#include <vector>

#include "arsec/error.hpp"

namespace arsec {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng stream(std::uint64_t seed, std::uint64_t batch, std::uint64_t lane) {
  return Rng(splitmix64(splitmix64(seed ^ (0xA5A5A5A5ULL * (lane + 1))) + batch));
}

struct Moments {
  double n = 0.0, mean = 0.0, m2 = 0.0;
  void push(double x) {
    n += 1.0;
    const double d = x - mean;
    mean += d / n;
    m2 += d * (x - mean);
  }
  void merge(const Moments& o) {
    if (o.n == 0.0) return;
    const double tot = n + o.n;
    const double d = o.mean - mean;
    mean += d * o.n / tot;
    m2 += o.m2 + d * d * n * o.n / tot;
    n = tot;
  }
  double stderr_mean() const { return n > 1.0 ? std::sqrt(m2 / (n - 1.0) / n) : 0.0; }
};

struct Batch {
  Moments asc;
  std::uint64_t outage = 0, positive = 0, n = 0;
};

Batch run_batch(const SecrecyScenario& s, std::uint64_t seed, std::uint64_t index,
                std::uint64_t count) {
  Rng rb = stream(seed, index, 0), re = stream(seed, index, 1);
  const double rs = s.rs();
  Batch b;
  b.n = count;
  for (std::uint64_t k = 0; k < count; ++k) {
    const double gb = sample(s.main, rb);
    const double ge = sample(s.eve, re);
    b.asc.push(std::max(std::log1p(gb) - std::log1p(ge), 0.0));
    if (gb < rs * ge + rs - 1.0) ++b.outage;
    if (gb > ge) ++b.positive;
  }
  return b;
}

}  // namespace

void McConfig::validate() const {
  if (n_samples < 1) throw DomainError("mc: n_samples must be at least 1");
  if (batch_size < 1) throw DomainError("mc: batch_size must be at least 1");
}

McEstimate simulate(const SecrecyScenario& s, const McConfig& cfg) {
  s.validate();
  cfg.validate();
  const std::uint64_t batches = (cfg.n_samples + cfg.batch_size - 1) / cfg.batch_size;
  std::vector<Batch> results(batches);
  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, batches));
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::uint64_t b = w; b < batches; b += workers) {
        const std::uint64_t count = std::min(cfg.batch_size, cfg.n_samples - b * cfg.batch_size);
        results[b] = run_batch(s, cfg.seed, b, count);
      }
    }));
  }
  for (auto& j : jobs) j.get();

  Moments asc;
  std::uint64_t outage = 0, positive = 0, n = 0;
  for (const auto& b : results) {
    asc.merge(b.asc);
    outage += b.outage;
    positive += b.positive;
    n += b.n;
  }
  McEstimate e;
  e.n = n;
  const double dn = static_cast<double>(n);
  e.asc = asc.mean;
  e.stderr_asc = asc.stderr_mean();
  e.sop = outage / dn;
  e.pnz = positive / dn;
  e.stderr_sop = std::sqrt(e.sop * (1.0 - e.sop) / dn);
  e.stderr_pnz = std::sqrt(e.pnz * (1.0 - e.pnz) / dn);
  return e;
}

MetricResult to_metric_result(const McEstimate& e, Metric kind) {
  MetricResult r;
  r.engine = Engine::MonteCarlo;
  switch (kind) {
    case Metric::Asc: r.value = e.asc; r.error_estimate = e.stderr_asc; break;
    case Metric::Sop: r.value = e.sop; r.error_estimate = e.stderr_sop; break;
    case Metric::Pnz: r.value = e.pnz; r.error_estimate = e.stderr_pnz; break;
  }
  r.notes.push_back(std::to_string(e.n) + " samples");
  return r;
}

}  // namespace arsec
