#include "arsec/foxh.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "arsec/error.hpp"
#include "arsec/specfun.hpp"

namespace arsec {

namespace {

using cd = std::complex<double>;

constexpr int kGaussOrder = 8;
constexpr double kPoleTol = 1e-12;

struct GaussRule {
  std::array<double, kGaussOrder> x{};
  std::array<double, kGaussOrder> w{};
};

GaussRule make_gauss_rule() {
  GaussRule r;
  const int n = kGaussOrder;
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    r.x[i] = x;
    r.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

const GaussRule& gauss_rule() {
  static const GaussRule rule = make_gauss_rule();
  return rule;
}

struct Node {
  double t;
  double w;
};

// Symmetric composite Gauss-Legendre nodes on [-R, R], graded toward t = 0.
std::vector<Node> make_nodes(double delta, double h, double R, int splits, bool coarse) {
  std::vector<double> b{0.0};
  const double ratio = coarse ? 3.0 : 2.0;
  for (double x = coarse ? 2.0 * delta : delta; x < h && x < R; x *= ratio) b.push_back(x);
  for (double x = b.back() + h; x < R + 0.5 * h; x += h) b.push_back(std::min(x, R));
  if (b.back() < R) b.push_back(R);
  const auto& g = gauss_rule();
  const int parts = 1 << splits;
  std::vector<Node> nodes;
  nodes.reserve(2 * (b.size() - 1) * parts * kGaussOrder);
  for (std::size_t k = 0; k + 1 < b.size(); ++k) {
    const double width = (b[k + 1] - b[k]) / parts;
    for (int p = 0; p < parts; ++p) {
      const double lo = b[k] + p * width;
      const double mid = lo + 0.5 * width, half = 0.5 * width;
      for (int i = 0; i < kGaussOrder; ++i) {
        const double t = mid + half * g.x[i];
        nodes.push_back({t, half * g.w[i]});
        nodes.push_back({-t, half * g.w[i]});
      }
    }
  }
  std::sort(nodes.begin(), nodes.end(),
            [](const Node& a, const Node& b) { return std::abs(a.t) < std::abs(b.t); });
  return nodes;
}

double default_tolerance(int n) {
  if (n == 1) return 1e-12;
  if (n == 2) return 1e-6;
  return 1e-3;
}

int max_refinements(int n) {
  switch (n) {
    case 1:
      return 7;
    case 2:
      return 4;
    case 3:
      return 2;
    default:
      return 1;
  }
}

struct OuterTerm {
  double offset;
  std::vector<double> coeffs;
  int last_dim;
  double sign;  // +1 numerator, -1 denominator
};

class Evaluator {
 public:
  Evaluator(const FoxHSpec& spec, const std::vector<double>& args, bool coarse)
      : spec_(spec), n_(spec.dimension), c_(spec.resolved_abscissas()), coarse_(coarse) {
    for (double z : args) {
      if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("fox_h: arguments must be positive");
      logz_.push_back(std::log(z));
    }
    auto add_outer = [&](const std::vector<GammaTerm>& terms, double sign) {
      for (const auto& g : terms) {
        int last = -1;
        for (int d = 0; d < n_; ++d)
          if (g.coeffs[d] != 0.0) last = d;
        if (last < 0) {
          const_log_ += sign * ln_gamma(cd(g.offset, 0.0));
          continue;
        }
        outer_.push_back({g.offset, g.coeffs, last, sign});
      }
    };
    add_outer(spec.outer_numerator, 1.0);
    add_outer(spec.outer_denominator, -1.0);
    const_log_ += spec.log_prefactor - n_ * std::log(2.0 * kPi);
  }

  int dimension() const { return n_; }

  /// Distance from the contour of variable d to the nearest pole, in t units.
  double pole_distance(int d) const {
    double delta = 1.0;
    for (const auto& g : spec_.per_variable_numerator[d]) {
      delta = std::min(delta, (g.offset + g.slope * c_[d]) / std::abs(g.slope));
    }
    for (const auto& g : spec_.outer_numerator) {
      if (g.coeffs[d] == 0.0) continue;
      double re = g.offset, norm = 0.0;
      for (int k = 0; k < n_; ++k) {
        re += g.coeffs[k] * c_[k];
        norm += std::abs(g.coeffs[k]);
      }
      delta = std::min(delta, re / norm);
    }
    return std::max(delta, 1e-6);
  }

  double oscillation(int d) const { return std::abs(logz_[d]); }

  cd per_variable_log(int d, double t) const {
    const cd s(c_[d], t);
    cd acc = -s * logz_[d];
    for (const auto& g : spec_.per_variable_numerator[d]) acc += ln_gamma(g.offset + g.slope * s);
    for (const auto& g : spec_.per_variable_denominator[d]) acc -= ln_gamma(g.offset + g.slope * s);
    if (spec_.extra_log_factor) acc += spec_.extra_log_factor(s);
    return acc;
  }

  /// log of the full integrand (without quadrature weights) at a point.
  cd log_integrand(const std::vector<double>& t) const {
    cd acc = const_log_;
    for (int d = 0; d < n_; ++d) acc += per_variable_log(d, t[d]);
    for (const auto& o : outer_) {
      cd arg = o.offset;
      for (int d = 0; d < n_; ++d) arg += o.coeffs[d] * cd(c_[d], t[d]);
      acc += o.sign * ln_gamma(arg);
    }
    return acc;
  }

  struct Sum {
    cd value;
    std::size_t evaluations;
  };

  Sum integrate(double radius, const std::vector<double>& widths, int splits) const {
    std::vector<std::vector<Node>> nodes(n_);
    std::vector<std::vector<cd>> logs(n_);
    for (int d = 0; d < n_; ++d) {
      nodes[d] = make_nodes(pole_distance(d), widths[d], radius, splits, coarse_);
      logs[d].resize(nodes[d].size());
      for (std::size_t i = 0; i < nodes[d].size(); ++i) {
        logs[d][i] = per_variable_log(d, nodes[d][i].t) + std::log(nodes[d][i].w);
      }
    }
    std::vector<std::vector<cd>> args(n_ + 1, std::vector<cd>(outer_.size()));
    for (std::size_t k = 0; k < outer_.size(); ++k) args[0][k] = outer_[k].offset;
    Sum sum{0.0, 0};
    cd comp = 0.0;
    auto recurse = [&](auto&& self, int d, double budget, cd acc) -> void {
      const auto& nd = nodes[d];
      for (std::size_t i = 0; i < nd.size(); ++i) {
        const double t = nd[i].t;
        if (std::abs(t) > budget) break;
        const cd s(c_[d], t);
        cd a = acc + logs[d][i];
        for (std::size_t k = 0; k < outer_.size(); ++k) {
          args[d + 1][k] = args[d][k] + outer_[k].coeffs[d] * s;
          if (outer_[k].last_dim == d) a += outer_[k].sign * ln_gamma(args[d + 1][k]);
        }
        if (d + 1 == n_) {
          const cd y = std::exp(a) - comp;
          const cd tt = sum.value + y;
          comp = (tt - sum.value) - y;
          sum.value = tt;
          ++sum.evaluations;
        } else {
          self(self, d + 1, n_ == 1 ? budget : budget - std::abs(t), a);
        }
      }
    };
    recurse(recurse, 0, radius, const_log_);
    return sum;
  }

 private:
  const FoxHSpec& spec_;
  int n_;
  std::vector<double> c_;
  bool coarse_;
  std::vector<double> logz_;
  std::vector<OuterTerm> outer_;
  cd const_log_ = 0.0;
};

double boundary_magnitude(const Evaluator& ev, double radius) {
  const int n = ev.dimension();
  double worst = 0.0;
  std::vector<double> t(n, 0.0);
  auto probe = [&]() { worst = std::max(worst, std::exp(ev.log_integrand(t).real())); };
  for (int d = 0; d < n; ++d) {
    for (double sgn : {-1.0, 1.0}) {
      std::fill(t.begin(), t.end(), 0.0);
      t[d] = sgn * radius;
      probe();
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (double sa : {-1.0, 1.0}) {
        for (double sb : {-1.0, 1.0}) {
          std::fill(t.begin(), t.end(), 0.0);
          t[a] = 0.5 * sa * radius;
          t[b] = 0.5 * sb * radius;
          probe();
        }
      }
    }
  }
  return worst;
}

void check_real(const FoxHResult& res, int n) {
  const double imag_tol = n == 1 ? 1e-10 : 1e-8;
  if (std::abs(res.imaginary) > imag_tol * std::abs(res.value) &&
      std::abs(res.imaginary) > res.error_estimate) {
    throw Error("fox_h: instance is not real-valued (imaginary part " +
                std::to_string(res.imaginary) + ")");
  }
}

}  // namespace

FoxHSpec::FoxHSpec(int n)
    : dimension(n), per_variable_numerator(n > 0 ? n : 0), per_variable_denominator(n > 0 ? n : 0) {}

std::vector<double> FoxHSpec::resolved_abscissas() const {
  if (dimension < 1) throw ContourError("fox_h: dimension must be at least 1");
  if (dimension > 4) throw ContourError("fox_h: dimension limit is 4");
  if (static_cast<int>(per_variable_numerator.size()) != dimension ||
      static_cast<int>(per_variable_denominator.size()) != dimension) {
    throw ContourError("fox_h: per-variable term lists do not match the dimension");
  }
  if (!contour_abscissas.empty()) {
    if (static_cast<int>(contour_abscissas.size()) != dimension) {
      throw ContourError("fox_h: contour abscissa count does not match the dimension");
    }
    return contour_abscissas;
  }
  std::vector<double> c(dimension);
  for (int d = 0; d < dimension; ++d) {
    double left = -std::numeric_limits<double>::infinity();
    double right = std::numeric_limits<double>::infinity();
    for (const auto& g : per_variable_numerator[d]) {
      if (g.slope > 0) left = std::max(left, -g.offset / g.slope);
      if (g.slope < 0) right = std::min(right, g.offset / -g.slope);
    }
    if (std::isfinite(left) && std::isfinite(right)) {
      if (left >= right - kPoleTol) {
        throw ContourError("fox_h: left and right pole families interleave for variable " +
                           std::to_string(d));
      }
      c[d] = 0.5 * (left + right);
    } else if (std::isfinite(left)) {
      c[d] = left + 0.5;
    } else if (std::isfinite(right)) {
      c[d] = right - 0.5;
    } else {
      c[d] = 0.0;
    }
  }
  return c;
}

void FoxHSpec::validate() const {
  const auto c = resolved_abscissas();
  for (int d = 0; d < dimension; ++d) {
    for (const auto* list : {&per_variable_numerator[d], &per_variable_denominator[d]}) {
      for (const auto& g : *list) {
        if (!std::isfinite(g.slope) || g.slope == 0.0 || !std::isfinite(g.offset)) {
          throw ContourError("fox_h: gamma-term slopes must be finite and nonzero");
        }
      }
    }
    for (const auto& g : per_variable_numerator[d]) {
      if (g.offset + g.slope * c[d] <= kPoleTol) {
        throw ContourError("fox_h: contour does not separate the poles of variable " +
                           std::to_string(d));
      }
    }
  }
  for (const auto* list : {&outer_numerator, &outer_denominator}) {
    for (const auto& g : *list) {
      if (static_cast<int>(g.coeffs.size()) != dimension) {
        throw ContourError("fox_h: outer gamma term has the wrong coefficient count");
      }
    }
  }
  for (const auto& g : outer_numerator) {
    double re = g.offset;
    for (int d = 0; d < dimension; ++d) re += g.coeffs[d] * c[d];
    if (re <= kPoleTol) throw ContourError("fox_h: contour does not separate coupled poles");
  }
  if (extra_log_factor && dimension != 1) {
    throw ContourError("fox_h: extra log factor is supported in dimension 1 only");
  }
}

FoxHSpec meijer_g_spec(int m, int n, const std::vector<double>& a, const std::vector<double>& b) {
  const int p = static_cast<int>(a.size()), q = static_cast<int>(b.size());
  if (m < 0 || n < 0 || m > q || n > p) throw ContourError("meijer_g: invalid orders");
  FoxHSpec spec(1);
  for (int j = 0; j < m; ++j) spec.per_variable_numerator[0].push_back({b[j], 1.0});
  for (int j = 0; j < n; ++j) spec.per_variable_numerator[0].push_back({1.0 - a[j], -1.0});
  for (int j = m; j < q; ++j) spec.per_variable_denominator[0].push_back({1.0 - b[j], -1.0});
  for (int j = n; j < p; ++j) spec.per_variable_denominator[0].push_back({a[j], 1.0});
  return spec;
}

FoxHResult fox_h_multi_detailed(const FoxHSpec& spec, const std::vector<double>& args) {
  spec.validate();
  const int n = spec.dimension;
  if (static_cast<int>(args.size()) != n) throw DomainError("fox_h: argument count mismatch");
  const double tol = spec.relative_tolerance > 0 ? spec.relative_tolerance : default_tolerance(n);
  const bool coarse_grid = n >= 3 && tol >= 1e-5;
  const Evaluator ev(spec, args, coarse_grid);

  std::vector<double> widths(n);
  for (int d = 0; d < n; ++d) {
    double h = std::min(1.0, 4.0 / (ev.oscillation(d) + 1.0));
    if (n >= 3) h = std::min(2.0, 2.0 * h);
    if (coarse_grid) h *= 2.0;
    if (spec.panel_count > 0) h = 2.0 * spec.truncation_height / spec.panel_count;
    widths[d] = h;
  }

  const double boundary_tol = n == 1 ? 1e-12 : (n == 2 ? 1e-10 : 1e-3 * tol);
  double radius = spec.truncation_height;
  FoxHResult res;
  Evaluator::Sum coarse{};
  for (int grow = 0;; ++grow) {
    coarse = ev.integrate(radius, widths, 0);
    res.evaluations += coarse.evaluations;
    const double edge = boundary_magnitude(ev, radius);
    if (edge <= boundary_tol * std::abs(coarse.value)) break;
    if (grow >= 8) {
      throw TruncationError("fox_h: integrand at the contour ends exceeds the truncation bound");
    }
    radius *= n == 1 ? 2.0 : (n == 2 ? 1.5 : 1.25);
  }

  cd prev = coarse.value;
  std::vector<double> wide(widths);
  for (double& w : wide) w *= 2.0;
  const auto check = ev.integrate(radius, wide, 0);
  res.evaluations += check.evaluations;
  res.error_estimate = std::abs(check.value - coarse.value);
  if (res.error_estimate <= tol * std::abs(coarse.value)) {
    res.value = coarse.value.real();
    res.imaginary = coarse.value.imag();
    check_real(res, n);
    return res;
  }
  const int max_ref = max_refinements(n);
  for (int level = 1;; ++level) {
    const auto fine = ev.integrate(radius, widths, level);
    res.evaluations += fine.evaluations;
    const double diff = std::abs(fine.value - prev);
    prev = fine.value;
    res.refinements = level;
    res.error_estimate = diff;
    if (diff <= tol * std::abs(fine.value)) break;
    if (level >= max_ref) {
      res.accuracy_warning = true;
      break;
    }
  }
  res.value = prev.real();
  res.imaginary = prev.imag();
  check_real(res, n);
  return res;
}

double fox_h_multi(const FoxHSpec& spec, const std::vector<double>& args) {
  return fox_h_multi_detailed(spec, args).value;
}

FoxHResult meijer_g_detailed(const FoxHSpec& spec, double z) {
  if (spec.dimension != 1) throw ContourError("meijer_g: spec must have dimension 1");
  if (!(z > 0.0)) throw DomainError("meijer_g: z must be positive");
  return fox_h_multi_detailed(spec, {z});
}

double meijer_g(const FoxHSpec& spec, double z) { return meijer_g_detailed(spec, z).value; }

double meijer_g(int m, int n, const std::vector<double>& a, const std::vector<double>& b,
                double z) {
  return meijer_g(meijer_g_spec(m, n, a, b), z);
}

}  // namespace arsec
