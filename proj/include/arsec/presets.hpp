#pragma once

#include <string>
#include <vector>

#include "arsec/secrecy.hpp"

namespace arsec {

/// One curve of a figure: a scenario whose main-link mean SNR is swept.
struct FigureSeries {
  std::string label;
  SecrecyScenario scenario;
};

struct FigurePreset {
  std::string name;
  Metric metric = Metric::Asc;
  std::string caption;
  std::vector<double> gamma_b_db;  ///< sweep grid
  std::vector<FigureSeries> series;

  /// Scenario of one series at a given main-link SNR (dB).
  SecrecyScenario at(std::size_t series_index, double gamma_b_db) const;
};

/// Names "fig2" .. "fig7".
std::vector<std::string> figure_names();
/// Throws DomainError for an unknown name.
FigurePreset figure_preset(const std::string& name);

struct TableRow {
  int row = 0;
  SecrecyScenario scenario;
  int reported_terms = 0;
  double reported_error = 0.0;
  std::string label;
};

/// Rows 1..6 of the truncation-error table (m_E = 0.5, R_t = 0.5).
std::vector<TableRow> table1_rows();
TableRow table1_row(int row);

/// Helper for building a link from dB.
ArsParams make_link(double p, double K1, double K2, double m, double mean_snr_db);

}  // namespace arsec
