// Thin JSON-string bindings over the exact certification core. Every
// function takes and returns JSON text so the Python side stays free of
// bignum marshalling concerns.

#include <pybind11/pybind11.h>

#include <cstdint>
#include <string>

#include "framecert/combinatorics.hpp"
#include "framecert/dual_space.hpp"
#include "framecert/json_io.hpp"
#include "framecert/recovery.hpp"
#include "framecert/retrieval.hpp"

namespace py = pybind11;

namespace {

using namespace framecert;

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
}

FrameSpec frame_of(const std::string& text) {
  return frame_from_json(parse_json(text));
}

std::string dump(const Json& j) { return j.dump(); }

std::string py_certify(const std::string& frame_json,
                       const std::string& property, std::uint64_t seed,
                       int budget) {
  FrameSpec f = frame_of(frame_json);
  SearchOptions opts;
  opts.seed = seed;
  opts.sample_budget = budget;
  Verdict v;
  if (property == "phase")
    v = certify_phase_retrieval(f, opts);
  else if (property == "norm")
    v = certify_norm_retrieval_real(f);
  else if (property == "weak-phase")
    v = decide_weak_phase(f, opts);
  else if (property == "complement")
    v = complement_property(f);
  else if (property == "full-spark")
    v = is_full_spark(f);
  else
    throw Error("unknown property: " + property);
  return dump(verdict_to_json(v));
}

std::string py_spark(const std::string& frame_json) {
  SparkResult s = spark_of(frame_of(frame_json));
  Json j = Json::object();
  j["spark"] = s.spark;
  j["independent_family"] = s.independent_family;
  Json w = Json::array();
  for (int i : s.witness) w.push_back(i + 1);
  j["witness"] = w;
  return dump(j);
}

std::string py_canonical_dual(const std::string& frame_json) {
  return dump(family_to_json(canonical_dual(frame_of(frame_json)).vectors));
}

std::string py_frame_operator(const std::string& frame_json) {
  return dump(matrix_to_json(frame_operator(frame_of(frame_json))));
}

std::string py_measure(const std::string& frame_json,
                       const std::string& signal_json) {
  FrameSpec f = frame_of(frame_json);
  Vec x = vector_from_json(parse_json(signal_json), f.field, f.mode);
  return dump(magnitudes_to_json(measure(f, x)));
}

std::string py_recover(const std::string& frame_json,
                       const std::string& magnitudes_json) {
  FrameSpec f = frame_of(frame_json);
  Magnitudes m = magnitudes_from_json(parse_json(magnitudes_json));
  return dump(recovery_to_json(recover_real(f, m)));
}

std::string py_sample_pr_duals(const std::string& frame_json, int count,
                               std::uint64_t seed) {
  DualParameterization param = dual_parameterization(frame_of(frame_json));
  return dump(sample_stats_to_json(sample_pr_duals(param, count, seed)));
}

std::string py_failure_variety(const std::string& frame_json) {
  DualParameterization param = dual_parameterization(frame_of(frame_json));
  return dump(variety_to_json(failure_variety_excess1(param)));
}

std::string py_frame_bounds(const std::string& frame_json) {
  return dump(bounds_to_json(frame_bounds(frame_of(frame_json))));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact phase-retrieval certification for finite frames";

  // translators run newest-first, so the subclass must be registered last
  py::register_exception<framecert::Error>(m, "FramecertError");
  py::register_exception<framecert::InternalError>(m, "FramecertInternalError");

  m.def("version", []() { return std::string("0.1.0"); });
  m.def("input_digest", &framecert::input_digest, py::arg("text"),
        "stable fnv1a fingerprint of raw input text");
  m.def("certify", &py_certify, py::arg("frame_json"), py::arg("property"),
        py::arg("seed") = framecert::kDefaultSeed, py::arg("budget") = 10000,
        "certify phase | norm | weak-phase | complement | full-spark; "
        "returns a verdict as JSON text");
  m.def("spark", &py_spark, py::arg("frame_json"),
        "spark with the first dependent subset (1-based)");
  m.def("canonical_dual", &py_canonical_dual, py::arg("frame_json"));
  m.def("frame_operator", &py_frame_operator, py::arg("frame_json"));
  m.def("measure", &py_measure, py::arg("frame_json"), py::arg("signal_json"),
        "exact squared magnitudes of a signal against the frame");
  m.def("recover", &py_recover, py::arg("frame_json"),
        py::arg("magnitudes_json"),
        "magnitude-only recovery for real exact frames");
  m.def("sample_pr_duals", &py_sample_pr_duals, py::arg("frame_json"),
        py::arg("count") = 100, py::arg("seed") = framecert::kDefaultSeed,
        "sample dual-frame parameters and certify each sampled dual");
  m.def("failure_variety", &py_failure_variety, py::arg("frame_json"),
        "non-injectivity hyperplanes for excess-1 real frames");
  m.def("frame_bounds", &py_frame_bounds, py::arg("frame_json"),
        "floating spectral frame bounds");
}
