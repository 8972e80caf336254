#include "framecert/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace framecert {

namespace {

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("input is not valid JSON: ") + e.what());
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer() || j.is_number_unsigned()) {
    std::ostringstream os;
    os << j;
    return parse_rational(os.str());
  }
  throw Error(
      "exact entries must be \"p/q\" strings or integers (got a non-integer "
      "numeric literal)");
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Scalar scalar_from_json(const Json& j, FieldTag field, ModeTag mode) {
  if (mode == ModeTag::Float) {
    if (j.is_number()) return Scalar(j.get<double>());
    if (j.is_string())
      return Scalar(to_double(parse_rational(j.get<std::string>())));
    throw Error("float entries must be numbers");
  }
  if (j.is_object()) {
    if (field != FieldTag::Complex)
      throw Error("complex entry {re, im} in a real frame");
    if (!j.contains("re") || !j.contains("im"))
      throw Error("complex entries need both \"re\" and \"im\"");
    return Scalar(GaussianRational(rational_from_json(j.at("re")),
                                   rational_from_json(j.at("im"))));
  }
  Rational r = rational_from_json(j);
  return field == FieldTag::Complex
             ? Scalar(GaussianRational(r, Rational(0)))
             : Scalar(r);
}

Vec vector_from_json(const Json& j, FieldTag field, ModeTag mode) {
  if (!j.is_array()) throw Error("vectors must be arrays of entries");
  Vec out;
  out.reserve(j.size());
  for (const Json& entry : j) out.push_back(scalar_from_json(entry, field, mode));
  return out;
}

Matrix matrix_from_json(const Json& j, int rows, int cols, FieldTag field) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw Error("parameter matrix must have one row per dimension");
  std::vector<Vec> parsed;
  for (const Json& row : j) {
    Vec r = vector_from_json(row, field, ModeTag::Exact);
    if (static_cast<int>(r.size()) != cols)
      throw Error("parameter matrix has a row of the wrong length");
    parsed.push_back(std::move(r));
  }
  return Matrix::from_rows(parsed);
}

FrameSpec frame_from_json(const Json& j, const TolerancePolicy& tol) {
  if (!j.is_object()) throw Error("frame input must be a JSON object");
  if (!j.contains("dim")) throw Error("frame input needs \"dim\"");
  if (!j.contains("vectors")) throw Error("frame input needs \"vectors\"");
  if (!j.at("dim").is_number_integer())
    throw Error("\"dim\" must be an integer");

  RawFrame raw;
  raw.dim = j.at("dim").get<int>();
  raw.field = FieldTag::Real;
  raw.mode = ModeTag::Exact;
  if (j.contains("field")) {
    std::string f = j.at("field").get<std::string>();
    if (f == "real")
      raw.field = FieldTag::Real;
    else if (f == "complex")
      raw.field = FieldTag::Complex;
    else
      throw Error("\"field\" must be \"real\" or \"complex\"");
  }
  if (j.contains("mode")) {
    std::string m = j.at("mode").get<std::string>();
    if (m == "exact")
      raw.mode = ModeTag::Exact;
    else if (m == "float")
      raw.mode = ModeTag::Float;
    else
      throw Error("\"mode\" must be \"exact\" or \"float\"");
  }
  const Json& vectors = j.at("vectors");
  if (!vectors.is_array() || vectors.empty())
    throw Error("\"vectors\" must be a non-empty array");
  for (const Json& v : vectors)
    raw.vectors.push_back(vector_from_json(v, raw.field, raw.mode));
  return validate_frame(raw, tol);
}

FrameSpec load_frame_file(const std::string& path, const TolerancePolicy& tol) {
  return frame_from_json(parse_text(read_text_file(path)), tol);
}

Magnitudes magnitudes_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("squared"))
    throw Error("magnitude input needs \"squared\"");
  const Json& arr = j.at("squared");
  if (!arr.is_array() || arr.empty())
    throw Error("\"squared\" must be a non-empty array");
  Magnitudes out;
  for (const Json& entry : arr) out.squared.push_back(rational_from_json(entry));
  return out;
}

Magnitudes load_magnitudes_file(const std::string& path) {
  return magnitudes_from_json(parse_text(read_text_file(path)));
}

Json scalar_to_json(const Scalar& s) {
  switch (s.kind()) {
    case ScalarKind::Rational:
      return format_rational(s.rational());
    case ScalarKind::Gaussian: {
      Json j = Json::object();
      j["re"] = format_rational(s.gaussian().re);
      j["im"] = format_rational(s.gaussian().im);
      return j;
    }
    case ScalarKind::Float64:
      return s.float64();
  }
  throw InternalError("scalar_to_json: unreachable");
}

Json vec_to_json(const Vec& v) {
  Json j = Json::array();
  for (const Scalar& s : v) j.push_back(scalar_to_json(s));
  return j;
}

Json family_to_json(const std::vector<Vec>& family) {
  Json j = Json::array();
  for (const Vec& v : family) j.push_back(vec_to_json(v));
  return j;
}

Json matrix_to_json(const Matrix& m) {
  Json j = Json::array();
  for (int i = 0; i < m.rows(); ++i) j.push_back(vec_to_json(m.row(i)));
  return j;
}

Json frame_to_json(const FrameSpec& f) {
  Json j = Json::object();
  j["dim"] = f.dim;
  j["field"] = field_name(f.field);
  j["mode"] = mode_name(f.mode);
  j["vectors"] = family_to_json(f.vectors);
  if (!f.warnings.empty()) j["warnings"] = f.warnings;
  return j;
}

Json magnitudes_to_json(const Magnitudes& m) {
  Json arr = Json::array();
  for (const Rational& r : m.squared) arr.push_back(format_rational(r));
  Json j = Json::object();
  j["squared"] = arr;
  return j;
}

namespace {

Json subset_to_json(const std::vector<int>& subset) {
  Json j = Json::array();
  for (int i : subset) j.push_back(i + 1);
  return j;
}

}  // namespace

Json pair_to_json(const CounterexamplePair& p) {
  Json j = Json::object();
  j["kind"] = pair_kind_name(p.kind);
  j["x"] = vec_to_json(p.x);
  j["y"] = vec_to_json(p.y);
  if (!p.u.empty()) j["u"] = vec_to_json(p.u);
  if (!p.v.empty()) j["v"] = vec_to_json(p.v);
  if (!p.sigma.empty()) j["sigma"] = subset_to_json(p.sigma);
  return j;
}

Json verdict_to_json(const Verdict& v) {
  Json j = Json::object();
  j["outcome"] = outcome_name(v.outcome);
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.witness_subset.has_value())
    j["witness_subset"] = subset_to_json(*v.witness_subset);
  if (v.pair.has_value()) j["pair"] = pair_to_json(*v.pair);
  if (v.witness_matrix.has_value())
    j["witness_matrix"] = matrix_to_json(*v.witness_matrix);
  if (v.budget.has_value()) {
    Json b = Json::object();
    std::ostringstream seed;
    seed << v.budget->seed;  // as string: 64-bit seeds overflow JSON numbers
    b["seed"] = seed.str();
    b["iterations"] = v.budget->iterations;
    if (!v.budget->note.empty()) b["note"] = v.budget->note;
    j["budget"] = b;
  }
  return j;
}

Json radical_to_json(const RadicalVector& x) {
  Json terms = Json::array();
  for (const auto& [core, coeff] : x.parts) {
    Json t = Json::object();
    t["core"] = core.get_str();
    Json c = Json::array();
    for (const Rational& r : coeff) c.push_back(format_rational(r));
    t["coeffs"] = c;
    terms.push_back(t);
  }
  Json j = Json::object();
  j["terms"] = terms;
  j["display"] = x.str();
  j["approx"] = x.to_doubles();
  return j;
}

Json recovery_to_json(const RecoveryResult& r) {
  Json j = Json::object();
  j["status"] = recovery_status_name(r.status);
  Json cands = Json::array();
  for (const RadicalVector& x : r.candidates) cands.push_back(radical_to_json(x));
  j["candidates"] = cands;
  j["residual"] = r.residual;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json hyperplane_to_json(const AffineHyperplane& h,
                        const std::vector<std::string>& names) {
  Json j = Json::object();
  j["subset"] = subset_to_json(h.subset);
  if (h.degenerate) {
    j["degenerate"] = true;
    return j;
  }
  Json normal = Json::array();
  for (const Rational& c : h.normal) normal.push_back(format_rational(c));
  j["normal"] = normal;
  j["offset"] = format_rational(h.offset);

  std::ostringstream eq;
  bool first = true;
  for (size_t k = 0; k < h.normal.size(); ++k) {
    if (h.normal[k] == 0) continue;
    Rational c = h.normal[k];
    std::string name =
        k < names.size() ? names[k] : "x" + std::to_string(k + 1);
    if (first) {
      if (c == -1)
        eq << "-";
      else if (c != 1)
        eq << format_rational(c) << "*";
    } else {
      eq << (c < 0 ? " - " : " + ");
      Rational a = c < 0 ? -c : c;
      if (a != 1) eq << format_rational(a) << "*";
    }
    eq << name;
    first = false;
  }
  if (h.offset != 0 || first) {
    if (first)
      eq << format_rational(h.offset);
    else if (h.offset < 0)
      eq << " - " << format_rational(-h.offset);
    else
      eq << " + " << format_rational(h.offset);
  }
  eq << " = 0";
  j["equation"] = eq.str();
  return j;
}

Json variety_to_json(const VarietyResult& v,
                     const std::vector<std::string>& names) {
  Json j = Json::object();
  j["excess"] = v.param.excess();
  j["dim"] = v.param.base.dim;
  Json planes = Json::array();
  for (const AffineHyperplane& h : v.planes)
    planes.push_back(hyperplane_to_json(h, names));
  j["planes"] = planes;
  j["distinct_planes"] = v.distinct_planes;
  return j;
}

Json sample_stats_to_json(const DualSampleStats& s) {
  Json j = Json::object();
  j["samples"] = s.total;
  j["pr"] = s.pr;
  j["non_pr"] = s.non_pr;
  j["unknown"] = s.unknown;
  j["pr_fraction"] = s.fraction();
  std::ostringstream seed;
  seed << s.seed;
  j["seed"] = seed.str();
  if (!s.failures.empty()) {
    Json f = Json::array();
    for (const DualSample& sample : s.failures) {
      Json e = Json::object();
      e["params"] = matrix_to_json(sample.params);
      e["pr"] = outcome_name(sample.pr);
      f.push_back(e);
    }
    j["failures"] = f;
  }
  return j;
}

Json nearest_to_json(const NearestDualResult& r) {
  Json j = Json::object();
  j["params"] = matrix_to_json(r.params);
  j["dual"] = family_to_json(r.dual);
  j["distance_lo"] = format_rational(r.distance_lo);
  j["distance_hi"] = format_rational(r.distance_hi);
  j["distance_approx"] = to_double(r.distance_hi);
  j["exact_distance"] = r.exact_distance;
  j["attempts"] = r.attempts;
  return j;
}

Json bounds_to_json(const FrameBounds& b) {
  Json j = Json::object();
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  j["tight"] = b.tight;
  return j;
}

std::string input_digest(const std::string& text) {
  uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  std::ostringstream os;
  os << "fnv1a:" << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4)
    os << ((hash >> shift) & 0xF);
  return os.str();
}

}  // namespace framecert
