// Acceptance checks: one PASS/FAIL line per criterion; non-zero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "arsec/channel.hpp"
#include "arsec/mc.hpp"
#include "arsec/presets.hpp"
#include "arsec/quadrature.hpp"
#include "arsec/secrecy.hpp"

using namespace arsec;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

/// Collects failures and a short summary for one criterion.
struct Check {
  std::vector<std::string> failures;
  std::ostringstream summary;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

template <class... A>
std::string fmtn(const char* f, A... a) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a...);
  return buf;
}

// Truncation-error table.
void criterion1(Check& c) {
  const double threshold = 1e-6;
  for (const auto& row : table1_rows()) {
    const auto eps = sop_truncation_error_profile(row.scenario, 120);
    int cross = -1;
    for (std::size_t n = 0; n < eps.size(); ++n) {
      if (eps[n] < threshold) {
        cross = static_cast<int>(n);
        break;
      }
    }
    const double at_reported = eps[row.reported_terms];
    const double factor = std::max(at_reported / row.reported_error, row.reported_error / at_reported);
    c.summary << fmtn(" r%d:N=%d(%d),eps=%.2e", row.row, cross, row.reported_terms, at_reported);
    c.expect(cross >= 0 && std::abs(cross - row.reported_terms) <= 8,
             fmtn("row %d crossing %d vs %d", row.row, cross, row.reported_terms));
    c.expect(factor <= 5.0, fmtn("row %d epsilon %.3e vs %.3e", row.row, at_reported, row.reported_error));
  }
}

// High-SNR slope and the asymptotic ASC.
void criterion2(Check& c) {
  const auto f = figure_preset("fig2");
  for (std::size_t i = 0; i < f.series.size(); ++i) {
    const double a60 = asc_quadrature(f.at(i, 60.0)).value;
    const double a70 = asc_quadrature(f.at(i, 70.0)).value;
    const double slope = (a70 - a60) / std::log2(10.0);
    c.summary << fmtn(" slope[%s]=%.5f", f.series[i].label.c_str(), slope);
    c.expect(rel(slope, high_snr_slope()) <= 0.02, "slope " + fmt("%.5f", slope));
  }
  const auto s = f.at(0, 60.0);
  const double d = rel(asc_asymptotic(s).value, asc_quadrature(s).value);
  c.summary << fmtn(" asym_rel@60dB=%.2e", d);
  c.expect(d <= 0.01, "asymptotic ASC relative gap " + fmt("%.3e", d));
}

// Secrecy diversity order.
void criterion3(Check& c) {
  const auto f = figure_preset("fig4");
  for (std::size_t i = 0; i < f.series.size(); ++i) {
    const double s50 = sop_quadrature(f.at(i, 50.0)).value;
    const double s60 = sop_quadrature(f.at(i, 60.0)).value;
    const double slope = std::log10(s60) - std::log10(s50);
    c.summary << fmtn(" %s:%.5f", f.series[i].label.c_str(), slope);
    c.expect(std::abs(slope + secrecy_diversity_order()) <= 0.02, "SOP slope " + fmt("%.5f", slope));
  }
}

// Integer-m engines against quadrature on the pinned grid.
void criterion4(Check& c) {
  double worst[3] = {0, 0, 0};
  int points = 0;
  for (double m : {1.0, 2.0, 5.0}) {
    for (auto [k1, k2] : {std::pair{50.0 / 3, 10.0 / 3}, std::pair{50.0, 10.0}}) {
      for (auto [p, gb] : {std::pair{0.0, 10.0}, std::pair{0.5, 10.0}, std::pair{1.0, 10.0},
                           std::pair{0.5, 20.0}}) {
        const SecrecyScenario s{make_link(p, k1, k2, m, gb), make_link(p, k1, k2, m, 4.0), 0.5};
        worst[0] = std::max(worst[0], rel(asc_exact_integer(s).value, asc_quadrature(s).value));
        worst[1] = std::max(worst[1], rel(sop_exact_integer(s).value, sop_quadrature(s).value));
        worst[2] = std::max(worst[2], rel(pnz_exact_integer(s).value, pnz_quadrature(s).value));
        ++points;
      }
    }
  }
  c.summary << fmtn(" points=%d asc=%.1e sop=%.1e pnz=%.1e", points, worst[0], worst[1], worst[2]);
  c.expect(points == 24, "grid size");
  c.expect(worst[0] <= 1e-6, "ASC " + fmt("%.2e", worst[0]));
  c.expect(worst[1] <= 1e-8, "SOP " + fmt("%.2e", worst[1]));
  c.expect(worst[2] <= 1e-8, "PNZ " + fmt("%.2e", worst[2]));
}

struct Point {
  const char* fig;
  std::size_t series;
  double db;
};

// Real-m closed forms against quadrature.
void criterion5(Check& c) {
  double worst_sop = 0, worst_pnz = 0, worst_i3 = 0;
  // The series expansion needs the main link well above the eavesdropper.
  for (const Point& p : {Point{"fig2", 0, 20.0}, Point{"fig2", 1, 30.0}, Point{"fig3", 0, 40.0},
                         Point{"fig7", 0, 30.0}, Point{"fig7", 2, 40.0}}) {
    const auto s = figure_preset(p.fig).at(p.series, p.db);
    const double d = std::abs(sop_series_real_converged(s).value - sop_quadrature(s).value);
    worst_sop = std::max(worst_sop, d);
    c.expect(d <= 1e-5, fmtn("SOP %s/%zu/%g: %.2e", p.fig, p.series, p.db, d));
  }
  for (const Point& p : {Point{"fig3", 0, 10.0}, Point{"fig3", 1, 20.0}, Point{"fig2", 0, 30.0},
                         Point{"fig7", 0, 20.0}, Point{"fig7", 2, 10.0}}) {
    const auto s = figure_preset(p.fig).at(p.series, p.db);
    const double d = rel(pnz_exact_real(s).value, pnz_quadrature(s).value);
    worst_pnz = std::max(worst_pnz, d);
    c.expect(d <= 1e-3, fmtn("PNZ %s/%zu/%g: %.2e", p.fig, p.series, p.db, d));
  }
  for (const Point& p : {Point{"fig2", 0, 10.0}, Point{"fig2", 1, 10.0}, Point{"fig7", 0, 10.0},
                         Point{"fig7", 2, 10.0}}) {
    const auto s = figure_preset(p.fig).at(p.series, p.db);
    const double ref = asc_components_quadrature(s).i3;
    const double d = rel(i3_exact_real(s.eve).value, ref);
    worst_i3 = std::max(worst_i3, d);
    c.expect(d <= 1e-6, fmtn("I3 %s/%zu: %.2e", p.fig, p.series, d));
  }
  c.summary << fmtn(" sop_abs=%.1e pnz_rel=%.1e i3_rel=%.1e", worst_sop, worst_pnz, worst_i3);
}

// Monte-Carlo against quadrature and, where available, the real-m closed form.
void criterion6(Check& c) {
  const Point pts[] = {{"fig2", 0, 10.0}, {"fig2", 1, 20.0}, {"fig3", 0, 6.0},  {"fig3", 1, 16.0},
                       {"fig4", 0, 10.0}, {"fig4", 1, 20.0}, {"fig5", 0, 4.0},  {"fig5", 2, 10.0},
                       {"fig6", 0, 12.0}, {"fig6", 2, 20.0}, {"fig7", 0, 8.0},  {"fig7", 2, 14.0}};
  double worst = 0;
  std::uint64_t seed = 1000;
  for (const Point& p : pts) {
    const auto f = figure_preset(p.fig);
    const auto s = f.at(p.series, p.db);
    McConfig cfg;
    cfg.n_samples = 1'000'000;
    cfg.seed = seed++;
    const auto mc = to_metric_result(simulate(s, cfg), f.metric);
    std::vector<MetricResult> refs;
    switch (f.metric) {
      case Metric::Asc:
        refs.push_back(asc_quadrature(s));
        break;
      case Metric::Sop:
        refs.push_back(sop_quadrature(s));
        break;
      case Metric::Pnz:
        refs.push_back(pnz_quadrature(s));
        refs.push_back(pnz_exact_real(s));
        break;
    }
    for (const auto& r : refs) {
      const double z = std::abs(r.value - mc.value) / mc.error_estimate;
      worst = std::max(worst, z);
      c.expect(z <= 3.0, fmtn("%s/%zu/%gdB %s: %.2f stderr", p.fig, p.series, p.db,
                              to_string(r.engine).c_str(), z));
    }
  }
  c.summary << fmtn(" points=12 worst=%.2f stderr", worst);
}

// Rayleigh reductions.
void criterion7(Check& c) {
  double worst = 0;
  for (auto [gb, ge, rt] : {std::tuple{10.0, 2.0, 1.0}, std::tuple{3.0, 7.0, 0.5},
                            std::tuple{100.0, 1.0, 2.0}, std::tuple{1.0, 1.0, 0.0}}) {
    const SecrecyScenario s{{1.0, 0.0, 0.0, 1.0, gb}, {1.0, 0.0, 0.0, 1.0, ge}, rt};
    const double rs = s.rs();
    const double sop = 1.0 - gb / (gb + rs * ge) * std::exp(-(rs - 1.0) / gb);
    const double pnz = gb / (gb + ge);
    for (double d : {std::abs(sop_exact_integer(s).value - sop), std::abs(sop_quadrature(s).value - sop),
                     std::abs(pnz_exact_integer(s).value - pnz), std::abs(pnz_quadrature(s).value - pnz)}) {
      worst = std::max(worst, d);
    }
  }
  c.summary << fmtn(" worst_abs=%.1e", worst);
  c.expect(worst <= 1e-9, "Rayleigh gap " + fmt("%.2e", worst));
}

// Property suite.
void criterion8(Check& c) {
  const SecrecyScenario cases[] = {
      {make_link(0.5, 50.0 / 3, 10.0 / 3, 0.5, 12.0), make_link(0.5, 50.0 / 3, 10.0 / 3, 0.5, 4.0), 0.0},
      {make_link(0.5, 50.0, 10.0, 5.0, 10.0), make_link(0.5, 50.0, 10.0, 0.5, 4.0), 0.0},
      {make_link(0.3, 50.0, 10.0, 2.0, 8.0), make_link(0.7, 20.0, 1.0, 5.0, 4.0), 0.0},
  };
  double comp = 0, zero_rate = 0;
  for (const auto& s : cases) {
    comp = std::max(comp, std::abs(pnz_quadrature(s).value + pnz_quadrature(s.swapped()).value - 1.0));
    if (s.main.integer_m() && s.eve.integer_m()) {
      comp = std::max(comp, std::abs(pnz_exact_integer(s).value +
                                     pnz_exact_integer(s.swapped()).value - 1.0));
    }
    zero_rate = std::max(zero_rate, std::abs(sop_quadrature(s).value - (1.0 - pnz_quadrature(s).value)));
    double prev = -1.0;
    for (double rt : {0.0, 0.5, 1.0, 2.0}) {
      auto t = s;
      t.target_rate = rt;
      const double v = sop_quadrature(t).value;
      c.expect(v >= prev, "SOP not monotone at R_t = " + fmt("%g", rt));
      prev = v;
    }
  }
  c.expect(comp <= 1e-9, "PNZ complement " + fmt("%.2e", comp));
  c.expect(zero_rate <= 1e-9, "SOP(0) vs 1 - PNZ " + fmt("%.2e", zero_rate));

  double norm = 0, deriv = 0, ks = 0;
  const ArsParams links[] = {{0.5, 50.0 / 3, 10.0 / 3, 0.5, 10.0}, {0.5, 50.0, 10.0, 5.0, 100.0}};
  for (const auto& l : links) {
    QuadHints hints;
    hints.scale = l.mean_snr;
    norm = std::max(norm, std::abs(integrate_semi_infinite([&](double g) { return pdf(l, g); }, {},
                                                           hints).value - 1.0));
    const double h = 1e-5 * l.mean_snr;
    for (int i = 0; i < 20; ++i) {
      const double g = l.mean_snr * 0.05 * std::pow(100.0, i / 19.0);
      const double d = (cdf(l, g + h) - cdf(l, g - h)) / (2 * h);
      deriv = std::max(deriv, rel(d, pdf(l, g)));
    }
    Rng rng(4242);
    const int n = 100'000;
    std::vector<double> x(n);
    for (auto& v : x) v = sample(l, rng);
    std::sort(x.begin(), x.end());
    double dmax = 0;
    for (int i = 0; i < n; ++i) {
      const double F = cdf(l, x[i]);
      dmax = std::max({dmax, F - double(i) / n, double(i + 1) / n - F});
    }
    const double critical = 1.628 / std::sqrt(double(n));
    ks = std::max(ks, dmax / critical);
  }
  c.expect(norm <= 1e-9, "normalization " + fmt("%.2e", norm));
  c.expect(deriv <= 1e-5, "dF/dx vs pdf " + fmt("%.2e", deriv));
  c.expect(ks < 1.0, "KS statistic / critical value " + fmt("%.3f", ks));
  c.summary << fmtn(" complement=%.1e sop0=%.1e norm=%.1e deriv=%.1e ks/crit=%.2f", comp, zero_rate,
                    norm, deriv, ks);
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  struct Criterion {
    int id;
    const char* title;
    std::function<void(Check&)> run;
  };
  const Criterion all[] = {
      {1, "truncation-error table", criterion1},
      {2, "high-SNR slope", criterion2},
      {3, "secrecy diversity order", criterion3},
      {4, "integer-m engine equivalence", criterion4},
      {5, "real-m engine equivalence", criterion5},
      {6, "Monte-Carlo agreement", criterion6},
      {7, "Rayleigh reductions", criterion7},
      {8, "property suite", criterion8},
  };
  int failed = 0;
  for (const auto& cr : all) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = c.failures.empty();
    failed += !ok;
    std::printf("CRITERION %d %s: %s |%s | %.1fs\n", cr.id, ok ? "PASS" : "FAIL", cr.title,
                c.summary.str().c_str(), secs);
    for (const auto& f : c.failures) std::printf("  failure: %s\n", f.c_str());
  }
  return failed == 0 ? 0 : 1;
}
