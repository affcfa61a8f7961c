#include "arsec/presets.hpp"

#include <cstdio>

#include "arsec/error.hpp"

namespace arsec {

namespace {

std::vector<double> default_grid() {
  std::vector<double> g;
  for (int db = 0; db <= 40; db += 2) g.push_back(db);
  return g;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

SecrecyScenario pair(const ArsParams& main, const ArsParams& eve, double rt = 0.5) {
  return {main, eve, rt};
}

}  // namespace

ArsParams make_link(double p, double K1, double K2, double m, double mean_snr_db) {
  ArsParams a;
  a.p = p;
  a.K1 = K1;
  a.K2 = K2;
  a.m = m;
  a.mean_snr = db_to_linear(mean_snr_db);
  return a;
}

SecrecyScenario FigurePreset::at(std::size_t i, double db) const {
  if (i >= series.size()) throw DomainError("figure: series index out of range");
  auto s = series[i].scenario;
  s.main.mean_snr = db_to_linear(db);
  return s;
}

std::vector<std::string> figure_names() { return {"fig2", "fig3", "fig4", "fig5", "fig6", "fig7"}; }

FigurePreset figure_preset(const std::string& name) {
  FigurePreset f;
  f.name = name;
  f.gamma_b_db = default_grid();
  if (name == "fig2" || name == "fig3") {
    f.metric = name == "fig2" ? Metric::Asc : Metric::Pnz;
    f.caption = "p = 0.5, m = 0.5, K1 = 50/3, K2 = 10/3 on both links";
    for (double ge : {0.0, 10.0}) {
      f.series.push_back({"gamma_e_db=" + num(ge),
                          pair(make_link(0.5, 50.0 / 3, 10.0 / 3, 0.5, 0.0),
                               make_link(0.5, 50.0 / 3, 10.0 / 3, 0.5, ge))});
    }
  } else if (name == "fig4") {
    f.metric = Metric::Sop;
    f.caption = "gamma_e = 4 dB, p = 0.5, m_E = 0.5, K1 = 50, K2 = 10 on both links, R_t = 0.5";
    for (double mb : {1.0, 5.0, 10.0}) {
      f.series.push_back({"m_b=" + num(mb), pair(make_link(0.5, 50, 10, mb, 0.0),
                                                 make_link(0.5, 50, 10, 0.5, 4.0))});
    }
  } else if (name == "fig5") {
    f.metric = Metric::Pnz;
    f.caption = "gamma_e = 4 dB, m = 0.5, K1 = 60, K2 = 3 on both links, p_B = p_E = p";
    for (double p : {0.1, 0.5, 0.9}) {
      f.series.push_back({"p=" + num(p), pair(make_link(p, 60, 3, 0.5, 0.0),
                                              make_link(p, 60, 3, 0.5, 4.0))});
    }
  } else if (name == "fig6") {
    f.metric = Metric::Sop;
    f.caption = "gamma_e = 4 dB, p = 0.5, m_B = 5, m_E = 0.5, K_E = (10, 2), K1/K2 = 5, R_t = 0.5";
    for (double kb : {3.0, 6.0, 12.0}) {
      const double k2 = kb / 3.0;
      f.series.push_back({"k_bar_b=" + num(kb), pair(make_link(0.5, 5 * k2, k2, 5.0, 0.0),
                                                      make_link(0.5, 10, 2, 0.5, 4.0))});
    }
  } else if (name == "fig7") {
    f.metric = Metric::Pnz;
    f.caption = "gamma_e = 4 dB, p = 0.5, m = 0.5, K_B = (100, 10), K_E1/K_E2 = 10";
    for (double ke : {2.75, 5.5, 11.0}) {
      const double k2 = ke / 5.5;
      f.series.push_back({"k_bar_e=" + num(ke), pair(make_link(0.5, 100, 10, 0.5, 0.0),
                                                      make_link(0.5, 10 * k2, k2, 0.5, 4.0))});
    }
  } else {
    throw DomainError("unknown figure preset '" + name + "' (expected fig2..fig7)");
  }
  return f;
}

std::vector<TableRow> table1_rows() {
  struct Raw {
    double kb1, kb2, ke1, ke2, mb, gb, ge;
    int n;
    double eps;
  };
  const Raw raw[] = {
      {30, 10, 30, 10, 10, 30, 10, 33, 7.32e-7}, {30, 10, 60, 20, 10, 30, 10, 35, 3.99e-7},
      {60, 20, 30, 10, 10, 30, 10, 56, 4.28e-7}, {30, 10, 30, 10, 12, 30, 10, 46, 6.53e-7},
      {30, 10, 30, 10, 10, 30, 8, 16, 4.57e-7},  {60, 20, 30, 10, 10, 35, 10, 8, 1.06e-7},
  };
  std::vector<TableRow> rows;
  int k = 1;
  for (const auto& r : raw) {
    TableRow t;
    t.row = k++;
    t.scenario = pair(make_link(0.5, r.kb1, r.kb2, r.mb, r.gb), make_link(0.5, r.ke1, r.ke2, 0.5, r.ge));
    t.reported_terms = r.n;
    t.reported_error = r.eps;
    t.label = "K_B=(" + num(r.kb1) + "," + num(r.kb2) + ") K_E=(" + num(r.ke1) + "," + num(r.ke2) +
              ") m_B=" + num(r.mb) + " gamma_b_db=" + num(r.gb) + " gamma_e_db=" + num(r.ge);
    rows.push_back(t);
  }
  return rows;
}

TableRow table1_row(int row) {
  const auto rows = table1_rows();
  if (row < 1 || row > static_cast<int>(rows.size())) throw DomainError("table1: row must be 1..6");
  return rows[row - 1];
}

}  // namespace arsec
