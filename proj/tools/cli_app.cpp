#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include "arsec/error.hpp"
#include "arsec/mc.hpp"
#include "arsec/metric.hpp"
#include "arsec/presets.hpp"
#include "arsec/secrecy.hpp"

namespace arsec::cli {

namespace {

using json = nlohmann::json;

/// Bad user input: maps to exit status 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

double round12(double v) { return std::isfinite(v) ? std::stod(fmt(v)) : v; }

struct Options {
  std::string config;
  std::string metric = "all";
  std::string engine = "auto";
  bool mc = false;
  std::uint64_t seed = 0;
  std::uint64_t mc_samples = 1'000'000;
  int n_terms = 0;
  std::string out;
  double tol = 0.0;
  double from_db = 0.0, to_db = 40.0, step_db = 2.0;
  int row = 0;
  std::string figure;
};

ArsParams link_from_json(const json& j, const char* name) {
  if (!j.is_object()) throw InputError(std::string("config: '") + name + "' must be an object");
  ArsParams a;
  try {
    a.p = j.at("p").get<double>();
    a.K1 = j.at("K1").get<double>();
    a.K2 = j.at("K2").get<double>();
    a.m = j.at("m").get<double>();
    a.mean_snr = db_to_linear(j.at("mean_snr_db").get<double>());
  } catch (const json::exception& e) {
    throw InputError(std::string("config: '") + name + "': " + e.what());
  }
  return a;
}

SecrecyScenario load_scenario(const std::string& path) {
  json j;
  try {
    if (path == "-") {
      j = json::parse(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) throw InputError("config: cannot open '" + path + "'");
      j = json::parse(in);
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("config: ") + e.what());
  }
  if (!j.is_object() || !j.contains("main") || !j.contains("eve")) {
    throw InputError("config: expected an object with 'main' and 'eve'");
  }
  SecrecyScenario s;
  s.main = link_from_json(j["main"], "main");
  s.eve = link_from_json(j["eve"], "eve");
  s.target_rate = j.value("target_rate", 0.0);
  try {
    s.validate();
  } catch (const DomainError& e) {
    throw InputError(std::string("config: ") + e.what());
  }
  return s;
}

std::vector<Metric> metrics_of(const std::string& name) {
  if (name == "all") return {Metric::Asc, Metric::Sop, Metric::Pnz};
  try {
    return {parse_metric(name)};
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
}

bool applicable(Engine e, Metric k, const SecrecyScenario& s) {
  const bool bi = s.main.integer_m(), ei = s.eve.integer_m();
  switch (e) {
    case Engine::ExactInteger:
      return bi && ei;
    case Engine::ExactReal:
      return k == Metric::Sop ? !ei : (!bi && !ei);
    default:
      return true;
  }
}

/// Engines named by the user; "auto" is the facade default and "all" every applicable one.
std::vector<std::optional<Engine>> engines_of(const std::string& list, bool mc) {
  std::vector<std::optional<Engine>> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "auto") {
      out.push_back(std::nullopt);
    } else if (item == "all") {
      for (Engine e : {Engine::ExactInteger, Engine::ExactReal, Engine::Quadrature, Engine::Asymptotic})
        out.push_back(e);
    } else {
      try {
        out.push_back(parse_engine(item));
      } catch (const DomainError& e) {
        throw InputError(e.what());
      }
    }
  }
  if (mc && std::find(out.begin(), out.end(), std::optional<Engine>(Engine::MonteCarlo)) == out.end())
    out.push_back(Engine::MonteCarlo);
  if (out.empty()) throw InputError("no engine selected");
  return out;
}

MetricOptions metric_options(const Options& o) {
  MetricOptions m;
  m.n_terms = o.n_terms;
  m.mc.seed = o.seed;
  m.mc.n_samples = o.mc_samples;
  if (o.tol > 0.0) {
    m.quad.relative_tolerance = o.tol;
    m.fox_tolerance = o.tol;
  }
  return m;
}

/// Evaluates (metric, engine) pairs, skipping engines that cannot serve a pair when "all" was asked.
struct Job {
  Metric metric;
  std::optional<Engine> engine;
};

std::vector<Job> plan(const Options& o, const SecrecyScenario& s) {
  const bool all = o.engine.find("all") != std::string::npos;
  std::vector<Job> jobs;
  for (Metric k : metrics_of(o.metric)) {
    for (auto e : engines_of(o.engine, o.mc)) {
      if (all && e && !applicable(*e, k, s)) continue;
      jobs.push_back({k, e});
    }
  }
  return jobs;
}

/// Results computed on worker threads, returned in submission order.
template <class T>
std::vector<T> ordered_parallel(std::size_t n, const std::function<T(std::size_t)>& f) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> errors(n);
  const unsigned workers =
      std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(n)));
  std::vector<std::future<void>> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < n; i += workers) {
        try {
          out[i] = f(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    }));
  }
  for (auto& p : pool) p.get();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

json result_json(Metric k, const MetricResult& r) {
  return {{"metric", to_string(k)},
          {"engine", to_string(r.engine)},
          {"value", round12(r.value)},
          {"error_estimate", round12(r.error_estimate)},
          {"notes", r.notes}};
}

int cmd_compute(const Options& o, std::ostream& out) {
  const auto s = load_scenario(o.config);
  const auto jobs = plan(o, s);
  const auto opts = metric_options(o);
  int status = 0;
  for (const auto& j : jobs) {
    try {
      out << result_json(j.metric, metric(j.metric, s, j.engine, opts)).dump() << '\n';
    } catch (const Error& e) {
      if (jobs.size() == 1) throw;
      const Engine e_used = j.engine.value_or(default_engine(s));
      out << json{{"metric", to_string(j.metric)}, {"engine", to_string(e_used)}, {"error", e.what()}}.dump()
          << '\n';
      status = 3;
    }
  }
  return status;
}

std::vector<double> grid(const Options& o) {
  if (!(o.step_db > 0.0)) throw InputError("sweep: --step must be positive");
  if (o.to_db < o.from_db) throw InputError("sweep: --to must not be below --from");
  std::vector<double> g;
  const int n = static_cast<int>(std::floor((o.to_db - o.from_db) / o.step_db + 1e-9));
  for (int i = 0; i <= n; ++i) g.push_back(o.from_db + i * o.step_db);
  return g;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const auto base = load_scenario(o.config);
  const auto g = grid(o);
  const auto jobs = plan(o, base);
  const auto opts = metric_options(o);
  const std::size_t per = jobs.size();
  const auto rows = ordered_parallel<MetricResult>(g.size() * per, [&](std::size_t i) {
    auto s = base;
    s.main.mean_snr = db_to_linear(g[i / per]);
    const auto& j = jobs[i % per];
    return metric(j.metric, s, j.engine, opts);
  });
  out << "gamma_b_db,metric,engine,value,error_estimate\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << fmt(g[i / per]) << ',' << to_string(jobs[i % per].metric) << ','
        << to_string(rows[i].engine) << ',' << fmt(rows[i].value) << ','
        << fmt(rows[i].error_estimate) << '\n';
  }
  return 0;
}

/// Allowed disagreement of an engine with the quadrature reference.
bool within(Engine e, Metric k, const MetricResult& r, double ref, double& tol, std::string& kind) {
  const double abs_d = std::abs(r.value - ref);
  const double rel_d = ref != 0.0 ? abs_d / std::abs(ref) : abs_d;
  switch (e) {
    case Engine::ExactInteger:
      tol = k == Metric::Asc ? 1e-6 : 1e-8;
      kind = "relative";
      return rel_d <= tol;
    case Engine::ExactReal:
      if (k == Metric::Sop) {
        tol = 1e-5;
        kind = "absolute";
        return abs_d <= tol;
      }
      tol = 1e-3;
      kind = "relative";
      return rel_d <= tol;
    case Engine::Asymptotic:
      tol = 1e-2;
      kind = "relative";
      return rel_d <= tol;
    case Engine::MonteCarlo:
      tol = 3.0 * r.error_estimate;
      kind = "absolute(3 stderr)";
      return abs_d <= tol;
    case Engine::Quadrature:
      tol = 0.0;
      kind = "reference";
      return true;
  }
  return false;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const auto s = load_scenario(o.config);
  Options oo = o;
  if (oo.engine == "auto") oo.engine = "all";
  const auto jobs = plan(oo, s);
  const auto opts = metric_options(o);
  out << "metric,engine,reference_engine,value,reference,abs_delta,rel_delta,tolerance,tolerance_kind,"
         "status,message\n";
  for (Metric k : metrics_of(o.metric)) {
    const auto ref = metric(k, s, Engine::Quadrature, opts);
    for (const auto& j : jobs) {
      if (j.metric != k || !j.engine || *j.engine == Engine::Quadrature) continue;
      std::string status, message;
      MetricResult r;
      double tol = 0.0;
      std::string kind;
      try {
        r = metric(k, s, j.engine, opts);
        status = within(*j.engine, k, r, ref.value, tol, kind) ? "PASS" : "FAIL";
      } catch (const Error& e) {
        status = "ERROR";
        message = e.what();
        std::replace(message.begin(), message.end(), ',', ';');
      }
      const double d = std::abs(r.value - ref.value);
      out << to_string(k) << ',' << to_string(*j.engine) << ",quadrature," << fmt(r.value) << ','
          << fmt(ref.value) << ',' << fmt(d) << ','
          << fmt(ref.value != 0.0 ? d / std::abs(ref.value) : d) << ',' << fmt(tol) << ',' << kind
          << ',' << status << ',' << message << '\n';
    }
  }
  return 0;
}

int cmd_table1(const Options& o, std::ostream& out) {
  std::vector<TableRow> rows;
  if (o.row != 0) {
    try {
      rows.push_back(table1_row(o.row));
    } catch (const DomainError& e) {
      throw InputError(e.what());
    }
  } else {
    rows = table1_rows();
  }
  constexpr int kScan = 120;
  out << "row,K_B1,K_B2,K_E1,K_E2,m_B,m_E,gamma_b_db,gamma_e_db,target_rate,n_l,epsilon,"
         "reported_n_l,reported_epsilon\n";
  for (const auto& r : rows) {
    const auto eps = sop_truncation_error_profile(r.scenario, kScan);
    int n_l = -1;
    if (o.n_terms > 0) {
      n_l = std::min(o.n_terms, kScan);
    } else {
      for (int n = 1; n <= kScan; ++n) {
        if (eps[n] < 1e-6) {
          n_l = n;
          break;
        }
      }
    }
    const auto& s = r.scenario;
    out << r.row << ',' << fmt(s.main.K1) << ',' << fmt(s.main.K2) << ',' << fmt(s.eve.K1) << ','
        << fmt(s.eve.K2) << ',' << fmt(s.main.m) << ',' << fmt(s.eve.m) << ','
        << fmt(linear_to_db(s.main.mean_snr)) << ',' << fmt(linear_to_db(s.eve.mean_snr)) << ','
        << fmt(s.target_rate) << ',' << n_l << ',' << (n_l >= 0 ? fmt(eps[n_l]) : "nan") << ','
        << r.reported_terms << ',' << fmt(r.reported_error) << '\n';
  }
  return 0;
}

int cmd_figure(const Options& o, std::ostream& out) {
  FigurePreset f;
  try {
    f = figure_preset(o.figure);
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
  const auto engines = engines_of(o.engine, false);
  if (engines.size() != 1) throw InputError("figure: pass a single --engine");
  const auto opts = metric_options(o);
  struct Point {
    MetricResult closed;
    McEstimate mc;
  };
  const std::size_t per = f.gamma_b_db.size();
  const std::size_t total = per * f.series.size();
  // Monte-Carlo batches already run in parallel, so points are taken one at a time then.
  std::function<Point(std::size_t)> eval = [&](std::size_t i) {
    const auto s = f.at(i / per, f.gamma_b_db[i % per]);
    Point p;
    p.closed = metric(f.metric, s, engines[0], opts);
    if (o.mc) {
      McConfig c = opts.mc;
      c.seed = o.seed + i;
      p.mc = simulate(s, c);
    }
    return p;
  };
  std::vector<Point> pts;
  if (o.mc) {
    for (std::size_t i = 0; i < total; ++i) pts.push_back(eval(i));
  } else {
    pts = ordered_parallel<Point>(total, eval);
  }
  out << "figure,series,gamma_b_db,metric,engine,value,error_estimate";
  if (o.mc) out << ",mc_value,mc_stderr,within_3_stderr";
  out << '\n';
  for (std::size_t i = 0; i < total; ++i) {
    const auto& p = pts[i];
    out << f.name << ',' << f.series[i / per].label << ',' << fmt(f.gamma_b_db[i % per]) << ','
        << to_string(f.metric) << ',' << to_string(p.closed.engine) << ',' << fmt(p.closed.value)
        << ',' << fmt(p.closed.error_estimate);
    if (o.mc) {
      const auto m = to_metric_result(p.mc, f.metric);
      const bool ok = std::abs(m.value - p.closed.value) <= 3.0 * m.error_estimate + 1e-12;
      out << ',' << fmt(m.value) << ',' << fmt(m.error_estimate) << ',' << (ok ? "yes" : "no");
    }
    out << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Secrecy metrics for alternate Rician shadowed fading links"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c, bool with_config) {
    if (with_config) c->add_option("--config", o.config, "scenario JSON file ('-' for stdin)")->required();
    c->add_option("--out", o.out, "output file (default: standard output)");
    c->add_option("--n-terms", o.n_terms, "series truncation for the real-m SOP")->check(CLI::NonNegativeNumber);
    c->add_option("--tol", o.tol, "relative tolerance for quadrature and Fox H engines")->check(CLI::NonNegativeNumber);
    c->add_option("--seed", o.seed, "Monte-Carlo seed");
    c->add_option("--mc-samples", o.mc_samples, "Monte-Carlo sample count")->check(CLI::PositiveNumber);
  };
  auto add_engine = [&](CLI::App* c) {
    c->add_option("--metric", o.metric, "asc | sop | pnz | all")
        ->check(CLI::IsMember({"asc", "sop", "pnz", "all"}));
    c->add_option("--engine", o.engine,
                  "auto | all | exact-real | exact-integer | asymptotic | quadrature | monte-carlo "
                  "(comma separated)");
    c->add_flag("--mc", o.mc, "add Monte-Carlo estimates");
  };

  auto* compute = app.add_subcommand("compute", "evaluate metrics at one scenario (JSON lines)");
  add_common(compute, true);
  add_engine(compute);

  auto* sweep = app.add_subcommand("sweep", "sweep the main-link mean SNR (CSV)");
  add_common(sweep, true);
  add_engine(sweep);
  sweep->add_option("--from", o.from_db, "first main-link SNR in dB");
  sweep->add_option("--to", o.to_db, "last main-link SNR in dB");
  sweep->add_option("--step", o.step_db, "grid step in dB");

  auto* validate = app.add_subcommand("validate", "compare engines against quadrature (CSV)");
  add_common(validate, true);
  add_engine(validate);

  auto* table = app.add_subcommand("table1", "truncation-error table for the real-m SOP series (CSV)");
  add_common(table, false);
  table->add_option("--row", o.row, "row 1..6 (default: all)");

  auto* figure = app.add_subcommand("figure", "data for a figure preset (CSV)");
  add_common(figure, false);
  figure->add_option("name", o.figure, "fig2 .. fig7")->required();
  figure->add_option("--engine", o.engine, "engine for the closed-form column");
  figure->add_flag("--mc", o.mc, "add Monte-Carlo columns");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) {
      err << "error: cannot write '" << o.out << "'\n";
      return 2;
    }
    sink = &file;
  }
  try {
    if (*compute) return cmd_compute(o, *sink);
    if (*sweep) return cmd_sweep(o, *sink);
    if (*validate) return cmd_validate(o, *sink);
    if (*table) return cmd_table1(o, *sink);
    if (*figure) return cmd_figure(o, *sink);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}

}  // namespace arsec::cli
