#pragma once

#include <cmath>
#include <vector>

#include "arsec/channel.hpp"
#include "arsec/secrecy.hpp"

namespace arsec::detail {

/// A link with its derived quantities cached for repeated density evaluations.
struct Link {
  ArsParams p;
  DerivedArs d;

  explicit Link(const ArsParams& params) : p(params), d(derive(params)) {}

  double pdf(double x) const {
    double s = 0.0;
    for (int r = 0; r < 2; ++r)
      if (d.q[r] > 0.0) s += d.q[r] * branch_pdf(p, d, r, x);
    return s;
  }

  double cdf(double x, bool* fallback) const {
    double s = 0.0;
    for (int r = 0; r < 2; ++r)
      if (d.q[r] > 0.0) s += d.q[r] * branch_cdf(p, d, r, x, fallback);
    return std::min(std::max(s, 0.0), 1.0);
  }

  /// Active branches (q > 0).
  std::vector<int> branches() const {
    std::vector<int> out;
    for (int r = 0; r < 2; ++r)
      if (d.q[r] > 0.0) out.push_back(r);
    return out;
  }
};

void require_integer_m(const SecrecyScenario& s, const char* who);
void require_real_m(const ArsParams& p, const char* who, const char* link);

}  // namespace arsec::detail
