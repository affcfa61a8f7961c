#include "arsec/channel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "arsec/error.hpp"
#include "arsec/specfun.hpp"

namespace arsec {

namespace {

std::string describe(const char* what, double v) {
  std::ostringstream os;
  os << what << " (got " << v << ")";
  return os.str();
}

constexpr double kPhi2ArgumentLimit = 40.0;
constexpr double kCancellationEps = 2.220446049250313e-16;
constexpr double kCdfAbsoluteTolerance = 1e-14;

}  // namespace

void RicianShadowedParams::validate() const {
  if (!(mean_snr > 0) || !std::isfinite(mean_snr)) throw DomainError(describe("mean_snr must be positive", mean_snr));
  if (!(K >= 0) || !std::isfinite(K)) throw DomainError(describe("K must be non-negative", K));
  if (!(m >= 0.5) || !std::isfinite(m)) throw DomainError(describe("m must be at least 0.5", m));
}

void ArsParams::validate() const {
  if (!(p >= 0 && p <= 1)) throw DomainError(describe("p must lie in [0, 1]", p));
  RicianShadowedParams{mean_snr, K1, m}.validate();
  RicianShadowedParams{mean_snr, K2, m}.validate();
}

bool ArsParams::integer_m() const { return is_near_integer(m); }

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double x) { return 10.0 * std::log10(x); }

DerivedArs derive(const ArsParams& params) {
  params.validate();
  DerivedArs d;
  d.k_bar = params.p * params.K1 + (1.0 - params.p) * params.K2;
  d.omega_bar = 1.0 + d.k_bar;
  d.q = {params.p, 1.0 - params.p};
  d.theta = params.mean_snr / (1.0 + d.k_bar);
  const double m = params.m;
  for (int r = 0; r < 2; ++r) {
    const double K = params.K(r);
    d.rho_bar[r] = (K + m) * params.mean_snr / (m * (1.0 + d.k_bar));
  }
  if (params.integer_m()) {
    const int mi = static_cast<int>(std::lround(m));
    for (int r = 0; r < 2; ++r) {
      const double K = params.K(r);
      const double a = m / (K + m), b = K / (K + m);
      auto& B = d.b_coeff[r];
      B.resize(mi);
      double binom = 1.0;
      for (int n = 0; n < mi; ++n) {
        B[n] = binom * std::pow(a, n) * std::pow(b, mi - n - 1);
        binom = binom * (mi - 1 - n) / (n + 1);
      }
    }
  }
  return d;
}

namespace {

double branch_pdf_real(const ArsParams& prm, const DerivedArs& d, int r, double x) {
  const double m = prm.m, K = prm.K(r), th = d.theta;
  const double cx = K / ((m + K) * th) * x;
  const double log_front = m * std::log(m / (m + K)) - m / ((m + K) * th) * x;
  return std::exp(log_front) / th * kummer_1f1_scaled(m, 1.0, cx);
}

double branch_pdf_integer(const ArsParams& prm, const DerivedArs& d, int r, double x) {
  const int mi = static_cast<int>(std::lround(prm.m));
  const double rho = d.rho_bar[r];
  const auto& B = d.b_coeff[r];
  double s = 0.0;
  for (int n = 0; n < mi; ++n) {
    if (B[n] == 0.0) continue;
    const int k = mi - n;
    if (x == 0.0) {
      if (k == 1) s += B[n] / rho;
      continue;
    }
    s += B[n] * std::exp((k - 1) * std::log(x) - x / rho - k * std::log(rho) - ln_gamma(double(k)));
  }
  return s;
}

double branch_cdf_integer(const ArsParams& prm, const DerivedArs& d, int r, double x) {
  const int mi = static_cast<int>(std::lround(prm.m));
  const auto& B = d.b_coeff[r];
  double s = 0.0;
  for (int j = 0; j < mi; ++j) {
    if (B[j] != 0.0) s += B[j] * gamma_p(mi - j, x / d.rho_bar[r]);
  }
  return s;
}

double poisson_weight(long j, double y, double ly) {
  return std::exp(j * ly - y - ln_gamma(j + 1.0));
}

// F = sum_{j>=1} Pois(j; y) W_{j-1}, W the cumulative negative-binomial LoS-index law.
// Near F = 1 the complement sum over the negative-binomial upper tails is used instead.
double branch_cdf_mixture(const ArsParams& prm, const DerivedArs& d, int r, double x) {
  const double y = x / d.theta;
  if (y <= 0.0) return 0.0;
  const double m = prm.m, K = prm.K(r);
  const double q = K / (m + K);
  const double spread = 40.0 * std::sqrt(y) + 50.0;
  const double ly = std::log(y);

  std::vector<double> w{std::pow(m / (m + K), m)};
  for (;;) {
    const double k = static_cast<double>(w.size() - 1);
    const double next = w.back() * (m + k) / (k + 1.0) * q;
    if ((k + 1.0 > K && next < 1e-20) || !(next > 0.0)) break;
    w.push_back(next);
  }
  const long n_w = static_cast<long>(w.size());
  std::vector<double> tail(n_w, 0.0);  // tail[k] = sum_{i > k} w_i
  for (long k = n_w - 2; k >= 0; --k) tail[k] = tail[k + 1] + w[k + 1];

  auto kahan_add = [](double& sum, double& comp, double term) {
    const double t1 = term - comp;
    const double t2 = sum + t1;
    comp = (t2 - sum) - t1;
    sum = t2;
  };

  const long j_lo = std::max(0L, static_cast<long>(std::floor(y - spread)));
  const long j_hi = static_cast<long>(std::ceil(y + spread));
  auto complement = [&] {
    double G = 0.0, c = 0.0;
    for (long j = j_lo; j <= std::min(j_hi, n_w); ++j) {
      const double t = j == 0 ? 1.0 : tail[j - 1];
      if (t == 0.0) break;
      kahan_add(G, c, poisson_weight(j, y, ly) * t);
    }
    return std::min(std::max(1.0 - G, 0.0), 1.0);
  };
  if (y > static_cast<double>(n_w)) return complement();

  double F = 0.0, comp = 0.0, W = 0.0;
  for (long k = 0; k < std::min(j_lo, n_w) - 1; ++k) W += w[k];
  for (long j = std::max(1L, j_lo); j <= j_hi; ++j) {
    if (j - 1 < n_w) W += w[j - 1];
    const double term = poisson_weight(j, y, ly) * std::min(W, 1.0);
    kahan_add(F, comp, term);
    if (j > y && term <= 1e-17 * F) break;
  }
  return F < 0.5 ? F : complement();
}

double branch_cdf_real(const ArsParams& prm, const DerivedArs& d, int r, double x, bool* fb) {
  const double y = x / d.theta;
  if (y <= 0.0) return 0.0;
  const double m = prm.m, K = prm.K(r);
  const double x2 = -y * m / (m + K);
  if (y + std::abs(x2) <= kPhi2ArgumentLimit) {
    const auto s = humbert_phi2_detailed(1.0 - m, m, 2.0, -y, x2);
    const double scale = y * std::pow(m / (m + K), m);
    // Accept the closed form only when its rounding error stays far below double resolution of F.
    if (!s.precision_warning && s.magnitude * scale * kCancellationEps <= kCdfAbsoluteTolerance) {
      return scale * s.value;
    }
  }
  if (fb) *fb = true;
  return branch_cdf_mixture(prm, d, r, x);
}

template <class F>
double mix(const DerivedArs& d, F&& f) {
  double s = 0.0;
  for (int r = 0; r < 2; ++r) {
    if (d.q[r] > 0.0) s += d.q[r] * f(r);
  }
  return s;
}

void require_integer(const ArsParams& p) {
  if (!p.integer_m()) throw DispatchError("integer-m form requested for non-integer m");
}

void require_nonnegative(double g) {
  if (!(g >= 0.0)) throw DomainError(describe("gamma must be non-negative", g));
}

}  // namespace

double branch_pdf(const ArsParams& params, const DerivedArs& d, int branch, double gamma) {
  require_nonnegative(gamma);
  if (params.integer_m()) return branch_pdf_integer(params, d, branch, gamma);
  return branch_pdf_real(params, d, branch, gamma);
}

double branch_cdf(const ArsParams& params, const DerivedArs& d, int branch, double gamma,
                  bool* fallback) {
  require_nonnegative(gamma);
  if (params.integer_m()) return branch_cdf_integer(params, d, branch, gamma);
  return branch_cdf_real(params, d, branch, gamma, fallback);
}

double pdf_real_m(const ArsParams& params, double gamma) {
  require_nonnegative(gamma);
  const auto d = derive(params);
  return mix(d, [&](int r) { return branch_pdf_real(params, d, r, gamma); });
}

double pdf_integer_m(const ArsParams& params, double gamma) {
  require_nonnegative(gamma);
  require_integer(params);
  const auto d = derive(params);
  return mix(d, [&](int r) { return branch_pdf_integer(params, d, r, gamma); });
}

double cdf_real_m(const ArsParams& params, double gamma, bool* fallback) {
  require_nonnegative(gamma);
  const auto d = derive(params);
  return mix(d, [&](int r) { return branch_cdf_real(params, d, r, gamma, fallback); });
}

double cdf_integer_m(const ArsParams& params, double gamma) {
  require_nonnegative(gamma);
  require_integer(params);
  const auto d = derive(params);
  return mix(d, [&](int r) { return branch_cdf_integer(params, d, r, gamma); });
}

double cdf_mixture_series(const ArsParams& params, double gamma) {
  require_nonnegative(gamma);
  const auto d = derive(params);
  return mix(d, [&](int r) { return branch_cdf_mixture(params, d, r, gamma); });
}

double pdf(const ArsParams& params, double gamma) {
  require_nonnegative(gamma);
  const auto d = derive(params);
  return mix(d, [&](int r) { return branch_pdf(params, d, r, gamma); });
}

CdfResult cdf_detailed(const ArsParams& params, double gamma) {
  require_nonnegative(gamma);
  const auto d = derive(params);
  CdfResult res;
  res.value = mix(d, [&](int r) { return branch_cdf(params, d, r, gamma, &res.fallback); });
  res.value = std::min(std::max(res.value, 0.0), 1.0);
  return res;
}

double cdf(const ArsParams& params, double gamma) { return cdf_detailed(params, gamma).value; }

double sample(const ArsParams& params, Rng& rng) {
  const double k_bar = params.p * params.K1 + (1.0 - params.p) * params.K2;
  std::bernoulli_distribution pick(params.p);
  const double K = pick(rng) ? params.K1 : params.K2;
  std::gamma_distribution<double> shadow(params.m, 1.0 / params.m);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double xi = shadow(rng);
  const double g1 = gauss(rng), g2 = gauss(rng);
  const double re = std::sqrt(xi * K) + g1 * std::sqrt(0.5);
  const double im = g2 * std::sqrt(0.5);
  return params.mean_snr * (re * re + im * im) / (1.0 + k_bar);
}

}  // namespace arsec
