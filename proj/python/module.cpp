#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fmax/classic.hpp"
#include "fmax/gfm.hpp"
#include "fmax/io.hpp"
#include "fmax/oracle.hpp"
#include "fmax/regret.hpp"

namespace py = pybind11;
using namespace fmx;

namespace {

SparseJoint joint_from_dict(std::size_t m, const py::dict& masses) {
  std::vector<SparseJoint::Entry> entries;
  for (const auto& item : masses)
    entries.emplace_back(LabelVector::from_string(py::cast<std::string>(item.first)),
                         py::cast<double>(item.second));
  return SparseJoint::from_entries(m, std::move(entries));
}

Metric metric_from_name(const std::string& name) {
  if (name == "f") return Metric::FMeasure;
  if (name == "hamming") return Metric::Hamming;
  if (name == "subset01") return Metric::SubsetZeroOne;
  if (name == "jaccard") return Metric::Jaccard;
  if (name == "precision") return Metric::Precision;
  if (name == "recall") return Metric::Recall;
  throw std::invalid_argument("unknown metric: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Bayes-optimal label-vector prediction under the F-measure";

  py::register_exception<cap_exceeded>(mod, "CapExceeded");

  py::class_<SparseJoint>(mod, "SparseJoint")
      .def(py::init(&joint_from_dict), py::arg("m"), py::arg("masses"))
      .def_property_readonly("m", &SparseJoint::m)
      .def("mass_of",
           [](const SparseJoint& d, const std::string& bits) {
             return d.mass_of(LabelVector::from_string(bits));
           })
      .def("support", [](const SparseJoint& d) {
        py::dict out;
        for (const auto& [y, mass] : d.support())
          out[py::str(y.to_string())] = mass;
        return out;
      });

  mod.def("metric_value",
          [](const std::string& metric, const std::string& y, const std::string& h) {
            return evaluate(metric_from_name(metric), LabelVector::from_string(y),
                            LabelVector::from_string(h));
          },
          py::arg("metric"), py::arg("y"), py::arg("h"));

  mod.def("expected_metric",
          [](const SparseJoint& dist, const std::string& h, const std::string& metric) {
            return expected_metric(dist, LabelVector::from_string(h),
                                   metric_from_name(metric));
          },
          py::arg("dist"), py::arg("h"), py::arg("metric") = "f");

  mod.def("gfm_maximize",
          [](const SparseJoint& dist) {
            const auto result = gfm_maximize(delta_from_joint(dist));
            return py::make_tuple(result.h.to_string(), result.expected_f);
          },
          py::arg("dist"), "Exact F-maximizer; returns (h, expected_f).");

  mod.def("fm_maximize",
          [](const std::vector<double>& marginals) {
            const auto result = fm_maximize(marginals);
            return py::make_tuple(result.h.to_string(), result.expected_f);
          },
          py::arg("marginals"),
          "F-maximizer under label independence; returns (h, expected_f).");

  mod.def("threshold_maximize",
          [](const SparseJoint& dist) {
            const auto result = threshold_maximize(dist);
            return py::make_tuple(result.h.to_string(), result.theta,
                                  result.expected_f);
          },
          py::arg("dist"), "Best marginal-threshold prediction.");

  mod.def("oracle",
          [](const SparseJoint& dist, const std::string& metric, std::size_t cap) {
            const auto result =
                maximize_exhaustive(dist, metric_from_name(metric), cap);
            return py::make_tuple(result.best.to_string(), result.value);
          },
          py::arg("dist"), py::arg("metric") = "f",
          py::arg("cap") = kDefaultExhaustiveCap,
          "Brute-force optimum over all 2^m predictions.");

  mod.def("regret",
          [](const SparseJoint& dist, const std::string& h, const std::string& metric,
             std::size_t cap) {
            return regret(dist, LabelVector::from_string(h),
                          metric_from_name(metric), cap);
          },
          py::arg("dist"), py::arg("h"), py::arg("metric") = "f",
          py::arg("cap") = kDefaultExhaustiveCap);

  mod.def("verify_witness",
          [](const std::string& theorem, std::size_t m, double q, double eps,
             std::size_t cap) {
            WitnessSpec spec;
            if (theorem == "3.1")
              spec.theorem = WitnessTheorem::T3_1;
            else if (theorem == "3.2")
              spec.theorem = WitnessTheorem::T3_2;
            else if (theorem == "4.2")
              spec.theorem = WitnessTheorem::T4_2;
            else if (theorem == "4.5")
              spec.theorem = WitnessTheorem::T4_5;
            else
              throw std::invalid_argument("unknown theorem: " + theorem);
            spec.m = m;
            spec.q = q;
            spec.eps = eps;
            const auto report = verify_witness(spec, cap);
            py::dict out;
            out["method"] = report.method;
            out["h_method"] = report.h_method.to_string();
            out["h_oracle"] = report.h_oracle.to_string();
            out["value_method"] = report.value_method;
            out["value_oracle"] = report.value_oracle;
            out["regret"] = report.regret;
            if (report.closed_form)
              out["closed_form"] = *report.closed_form;
            else
              out["closed_form"] = py::none();
            return out;
          },
          py::arg("theorem"), py::arg("m"), py::arg("q") = 0.9,
          py::arg("eps") = 1e-4, py::arg("cap") = kDefaultExhaustiveCap);

  mod.def("load_distribution", &load_distribution, py::arg("path"));
}
