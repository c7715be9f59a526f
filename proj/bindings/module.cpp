#include <pybind11/complex.h>
#include <pybind11/pybind11.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>

#include "udw/selftest.hpp"
#include "udw/special_functions.hpp"
#include "udw/sweep.hpp"
#include "udw/three_detector.hpp"
#include "udw/two_detector.hpp"

namespace py = pybind11;

namespace {

py::dict pair_dict(const udw::PairElements& e) {
  py::dict d;
  d["separation"] = e.separation;
  d["p"] = e.p;
  d["c"] = e.c;
  d["x"] = e.x;
  return d;
}

py::dict two_detector(double coupling, double gap, double separation) {
  const auto state =
      udw::assemble_two(udw::DetectorParams(coupling, gap), separation);
  py::dict d = pair_dict(state.elems);
  d["coherence_l1"] = udw::coherence_l1_two(state);
  const auto rec = udw::rec_two_detailed(state);
  d["coherence_rec"] = rec.value;
  d["rec_truncated_weight"] = rec.truncated_weight;
  d["negativity"] = udw::negativity_two(state);
  return d;
}

udw::TriangleConfig config_of(const std::string& name, double length,
                              double slide) {
  if (name == "equilateral") {
    return udw::TriangleConfig::equilateral(length);
  }
  if (name == "linear") {
    return udw::TriangleConfig::linear(length);
  }
  if (name == "scalene") {
    return udw::TriangleConfig::scalene(length, slide);
  }
  throw std::invalid_argument("unknown configuration '" + name +
                              "'; expected equilateral, linear or scalene");
}

py::dict three_detector(const std::string& config, double coupling, double gap,
                        double length, double slide) {
  const auto state = udw::assemble_three(config_of(config, length, slide),
                                         udw::DetectorParams(coupling, gap));
  py::dict d;
  d["config"] = config;
  d["separations"] =
      py::make_tuple(state.seps.ab, state.seps.ac, state.seps.bc);
  d["ab"] = pair_dict(state.ab);
  d["ac"] = pair_dict(state.ac);
  d["bc"] = pair_dict(state.bc);
  d["coherence_l1"] = udw::coherence_l1_three(state);
  const auto rec = udw::rec_three_detailed(state);
  d["coherence_rec"] = rec.value;
  d["rec_truncated_weight"] = rec.truncated_weight;
  d["negativity_ab"] = std::max(0.0, std::abs(state.ab.x) - state.ab.p);
  if (state.config.kind == udw::TriangleKind::equilateral) {
    d["tripartite_negativity"] = udw::tripartite_negativity(state);
  } else {
    d["tripartite_negativity"] = py::none();
  }
  d["monogamy_residual"] = udw::monogamy_residual(state);
  return d;
}

std::string figure_csv(const std::string& name) {
  std::ostringstream out;
  udw::emit_csv(udw::run_sweep(udw::figure_preset(name)), out);
  return out.str();
}

py::tuple selftest(const std::string& fault) {
  const auto report = udw::run_selftest(udw::fault_from_name(fault));
  return py::make_tuple(report.passed, report.text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Gaussian-switched detector pair and triple coherence model: complex "
      "error functions, closed-form matrix elements, and the coherence and "
      "entanglement measures built on them. All inputs dimensionless "
      "(coupling, gap = omega sigma, separations in units of sigma).";

  m.def("erf", &udw::erf_complex, py::arg("z"),
        "Error function of a complex argument.");
  m.def("erfc", &udw::erfc_complex, py::arg("z"),
        "Complementary error function of a complex argument.");
  m.def(
      "erfcx",
      [](std::complex<double> z) { return udw::erfcx_scaled(z); },
      py::arg("z"), "Scaled complementary error function exp(z^2) erfc(z).");

  m.def(
      "transition_probability",
      [](double coupling, double gap) {
        return udw::transition_probability(udw::DetectorParams(coupling, gap));
      },
      py::arg("coupling"), py::arg("gap"),
      "Single-detector excitation probability.");
  m.def(
      "correlation_c",
      [](double coupling, double gap, double separation) {
        return udw::correlation_c(udw::DetectorParams(coupling, gap),
                                  separation);
      },
      py::arg("coupling"), py::arg("gap"), py::arg("separation"),
      "Exchange correlation element between two detectors.");
  m.def(
      "correlation_x",
      [](double coupling, double gap, double separation) {
        return udw::correlation_x(udw::DetectorParams(coupling, gap),
                                  separation);
      },
      py::arg("coupling"), py::arg("gap"), py::arg("separation"),
      "Pair-excitation correlation element (complex).");

  m.def("two_detector", &two_detector, py::arg("coupling"), py::arg("gap"),
        py::arg("separation"),
        "Matrix elements and measures for a detector pair, as a dict.");
  m.def("three_detector", &three_detector, py::arg("config"),
        py::arg("coupling"), py::arg("gap"), py::arg("length"),
        py::arg("slide") = 0.0,
        "Matrix elements and measures for a detector triple; `config` is "
        "equilateral, linear or scalene. `length` is the side, spacing, or "
        "base; `slide` moves the scalene apex parallel to the base.");

  m.def("figure_csv", &figure_csv, py::arg("name"),
        "CSV text of a canned sweep (fig1, fig3, fig4, fig5).");
  m.def("selftest", &selftest, py::arg("fault") = "none",
        "Run the internal consistency suite; returns (passed, report).");
}
