#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arsec/channel.hpp"
#include "arsec/error.hpp"
#include "arsec/mc.hpp"
#include "arsec/metric.hpp"
#include "arsec/presets.hpp"
#include "arsec/secrecy.hpp"

namespace py = pybind11;
using namespace arsec;

namespace {

MetricResult compute(const std::string& metric_name, const SecrecyScenario& s,
                     const std::string& engine, int n_terms, std::uint64_t mc_samples,
                     std::uint64_t seed) {
  MetricOptions o;
  o.n_terms = n_terms;
  o.mc.n_samples = mc_samples;
  o.mc.seed = seed;
  std::optional<Engine> e;
  if (engine != "auto") e = parse_engine(engine);
  return metric(parse_metric(metric_name), s, e, o);
}

std::vector<double> sample_many(const ArsParams& p, std::size_t n, std::uint64_t seed) {
  p.validate();
  Rng rng(seed);
  std::vector<double> out(n);
  for (auto& v : out) v = sample(p, rng);
  return out;
}

}  // namespace

PYBIND11_MODULE(_arsec, m) {
  m.doc() = "Secrecy metrics over alternate Rician shadowed fading links";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<PoleError>(m, "PoleError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<ContourError>(m, "ContourError", base.ptr());
  py::register_exception<TruncationError>(m, "TruncationError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<DispatchError>(m, "DispatchError", base.ptr());
  py::register_exception<QuadratureError>(m, "QuadratureError", base.ptr());

  py::class_<ArsParams>(m, "ArsParams")
      .def(py::init([](double p, double K1, double K2, double m_, double mean_snr) {
             ArsParams a{p, K1, K2, m_, mean_snr};
             a.validate();
             return a;
           }),
           py::arg("p") = 0.5, py::arg("K1") = 0.0, py::arg("K2") = 0.0, py::arg("m") = 1.0,
           py::arg("mean_snr") = 1.0)
      .def_static("from_db", &make_link, py::arg("p"), py::arg("K1"), py::arg("K2"), py::arg("m"),
                  py::arg("mean_snr_db"))
      .def_readwrite("p", &ArsParams::p)
      .def_readwrite("K1", &ArsParams::K1)
      .def_readwrite("K2", &ArsParams::K2)
      .def_readwrite("m", &ArsParams::m)
      .def_readwrite("mean_snr", &ArsParams::mean_snr)
      .def("__repr__", [](const ArsParams& a) {
        return "ArsParams(p=" + std::to_string(a.p) + ", K1=" + std::to_string(a.K1) +
               ", K2=" + std::to_string(a.K2) + ", m=" + std::to_string(a.m) +
               ", mean_snr=" + std::to_string(a.mean_snr) + ")";
      });

  py::class_<SecrecyScenario>(m, "Scenario")
      .def(py::init([](const ArsParams& main, const ArsParams& eve, double target_rate) {
             SecrecyScenario s{main, eve, target_rate};
             s.validate();
             return s;
           }),
           py::arg("main"), py::arg("eve"), py::arg("target_rate") = 0.0)
      .def_readwrite("main", &SecrecyScenario::main)
      .def_readwrite("eve", &SecrecyScenario::eve)
      .def_readwrite("target_rate", &SecrecyScenario::target_rate)
      .def_property_readonly("rs", &SecrecyScenario::rs)
      .def("swapped", &SecrecyScenario::swapped);

  py::class_<MetricResult>(m, "MetricResult")
      .def_readonly("value", &MetricResult::value)
      .def_readonly("error_estimate", &MetricResult::error_estimate)
      .def_readonly("notes", &MetricResult::notes)
      .def_property_readonly("engine", [](const MetricResult& r) { return to_string(r.engine); })
      .def("__float__", [](const MetricResult& r) { return r.value; })
      .def("__repr__", [](const MetricResult& r) {
        return "MetricResult(value=" + std::to_string(r.value) + ", engine='" +
               to_string(r.engine) + "')";
      });

  py::class_<McEstimate>(m, "McEstimate")
      .def_readonly("asc", &McEstimate::asc)
      .def_readonly("sop", &McEstimate::sop)
      .def_readonly("pnz", &McEstimate::pnz)
      .def_readonly("stderr_asc", &McEstimate::stderr_asc)
      .def_readonly("stderr_sop", &McEstimate::stderr_sop)
      .def_readonly("stderr_pnz", &McEstimate::stderr_pnz)
      .def_readonly("n", &McEstimate::n);

  m.def("pdf", &pdf, py::arg("params"), py::arg("gamma"), "SNR density");
  m.def("cdf", &cdf, py::arg("params"), py::arg("gamma"), "SNR distribution function");
  m.def("sample", &sample_many, py::arg("params"), py::arg("n"), py::arg("seed") = 0,
        "Draw n SNR samples");
  m.def("db_to_linear", &db_to_linear);
  m.def("linear_to_db", &linear_to_db);

  m.def("metric", &compute, py::arg("metric"), py::arg("scenario"), py::arg("engine") = "auto",
        py::arg("n_terms") = 0, py::arg("mc_samples") = 1'000'000, py::arg("seed") = 0,
        py::call_guard<py::gil_scoped_release>(),
        "Evaluate 'asc', 'sop' or 'pnz' with the named engine (default: automatic)");
  m.def("asc", [](const SecrecyScenario& s, const std::string& e) { return compute("asc", s, e, 0, 1'000'000, 0); },
        py::arg("scenario"), py::arg("engine") = "auto", py::call_guard<py::gil_scoped_release>());
  m.def("sop", [](const SecrecyScenario& s, const std::string& e) { return compute("sop", s, e, 0, 1'000'000, 0); },
        py::arg("scenario"), py::arg("engine") = "auto", py::call_guard<py::gil_scoped_release>());
  m.def("pnz", [](const SecrecyScenario& s, const std::string& e) { return compute("pnz", s, e, 0, 1'000'000, 0); },
        py::arg("scenario"), py::arg("engine") = "auto", py::call_guard<py::gil_scoped_release>());
  m.def("sop_truncation_error", &sop_truncation_error, py::arg("scenario"), py::arg("n_terms"),
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "simulate",
      [](const SecrecyScenario& s, std::uint64_t n, std::uint64_t seed) {
        McConfig c;
        c.n_samples = n;
        c.seed = seed;
        return simulate(s, c);
      },
      py::arg("scenario"), py::arg("n_samples") = 1'000'000, py::arg("seed") = 0,
      py::call_guard<py::gil_scoped_release>());

  m.def("figure_names", &figure_names);
  m.def(
      "figure_scenario",
      [](const std::string& name, std::size_t series, double gamma_b_db) {
        return figure_preset(name).at(series, gamma_b_db);
      },
      py::arg("name"), py::arg("series"), py::arg("gamma_b_db"));
  m.def(
      "table1_scenario", [](int row) { return table1_row(row).scenario; }, py::arg("row"));
}
