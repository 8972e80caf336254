// framecert: exact certification of phase/norm/weak-phase retrieval for
// finite frames, dual-space experiments, and magnitude-only recovery.
//
// Exit codes: 0 = certified yes (or all checks passed), 1 = certified no
// (or a check failed), 2 = undecided within budget, 64 = bad input,
// 70 = internal invariant violation.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "framecert/combinatorics.hpp"
#include "framecert/dual_space.hpp"
#include "framecert/json_io.hpp"
#include "framecert/lambda_lift.hpp"
#include "framecert/recovery.hpp"
#include "framecert/retrieval.hpp"

namespace {

using namespace framecert;

constexpr const char* kToolVersion = "0.1.0";

// ---------------------------------------------------------------- helpers

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.push_back("");
  return out;
}

std::vector<Rational> rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& piece : split_on(text, ','))
    out.push_back(parse_rational(piece));
  if (out.empty()) throw Error("empty value list");
  return out;
}

// "a,b,c;d,e,f" -> dependency vectors (rational entries)
std::vector<Vec> kernel_from_text(const std::string& text, ScalarKind kind) {
  std::vector<Vec> out;
  for (const std::string& row : split_on(text, ';')) {
    Vec v;
    for (const Rational& r : rational_list(row))
      v.push_back(kind == ScalarKind::Gaussian
                      ? Scalar(GaussianRational(r, Rational(0)))
                      : Scalar(r));
    out.push_back(std::move(v));
  }
  return out;
}

// flattened row-major (coordinate-major) list -> dim x excess matrix
Matrix params_from_text(const DualParameterization& param,
                        const std::string& text) {
  std::vector<Rational> flat = rational_list(text);
  const int n = param.base.dim;
  const int e = param.excess();
  if (static_cast<int>(flat.size()) != n * e)
    throw Error("expected " + std::to_string(n * e) +
                " parameter entries (dim x excess), got " +
                std::to_string(flat.size()));
  const ScalarKind kind = param.base.scalar_kind();
  Matrix v(n, e, kind);
  for (int k = 0; k < n; ++k)
    for (int s = 0; s < e; ++s)
      v.at(k, s) = kind == ScalarKind::Gaussian
                       ? Scalar(GaussianRational(flat[k * e + s], Rational(0)))
                       : Scalar(flat[k * e + s]);
  return v;
}

bool families_match(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!vec_equal(a[i], b[i])) return false;
  return true;
}

Json frame_summary(const FrameSpec& f) {
  Json j = Json::object();
  j["dim"] = f.dim;
  j["count"] = f.count();
  j["field"] = field_name(f.field);
  j["mode"] = mode_name(f.mode);
  j["spans"] = f.spans;
  return j;
}

Json rational_array(const std::vector<Rational>& xs) {
  Json j = Json::array();
  for (const Rational& x : xs) j.push_back(format_rational(x));
  return j;
}

int outcome_exit(Outcome o) {
  switch (o) {
    case Outcome::Yes:
      return 0;
    case Outcome::No:
      return 1;
    case Outcome::Unknown:
      return 2;
  }
  return 70;
}

// small rationals with numerator in [-9,9]\{0} and denominator in [1,9]
Rational random_nonzero_rational(std::mt19937_64& rng) {
  long num = 0;
  while (num == 0) num = static_cast<long>(rng() % 19) - 9;
  long den = 1 + static_cast<long>(rng() % 9);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational random_rational(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 19) - 9;
  long den = 1 + static_cast<long>(rng() % 9);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << text;
  if (!out) throw Error("write failed: " + path);
}

// ------------------------------------------------------------ run report

struct ReportSink {
  std::string command;
  std::string digest;  // empty = no file input
  std::optional<std::uint64_t> seed;
  bool stable = false;
  std::string report_path;
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  int emit(const Json& result, int code) const {
    Json rep = Json::object();
    rep["tool"] = "framecert";
    rep["version"] = kToolVersion;
    rep["command"] = command;
    if (!digest.empty()) rep["input_digest"] = digest;
    if (seed.has_value()) {
      std::ostringstream os;
      os << *seed;
      rep["seed"] = os.str();
    }
    if (!stable) {
      double ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
      rep["elapsed_ms"] = ms;
    }
    rep["exit_code"] = code;
    rep["result"] = result;
    std::string text = rep.dump(2);
    text += "\n";
    std::cout << text;
    if (!report_path.empty()) write_text_file(report_path, text);
    return code;
  }
};

struct FrameInput {
  FrameSpec frame;
  std::string digest;
};

FrameInput load_frame_input(const std::string& path, const std::string& mode,
                            double tau) {
  std::string text = read_text_file(path);
  TolerancePolicy tol{tau};
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  FrameSpec frame = frame_from_json(j, tol);
  if (mode == "float" && frame.mode == ModeTag::Exact) {
    if (frame.field == FieldTag::Complex)
      throw Error("float mode supports real frames only");
    RawFrame raw{frame.dim, frame.field, ModeTag::Float, {}};
    for (const Vec& v : frame.vectors) {
      Vec w;
      for (const Scalar& s : v) w.push_back(Scalar(s.to_double()));
      raw.vectors.push_back(std::move(w));
    }
    frame = validate_frame(raw, tol);
  } else if (mode == "exact" && frame.mode == ModeTag::Float) {
    throw Error("cannot promote a float frame to exact mode");
  }
  return {std::move(frame), input_digest(text)};
}

// ------------------------------------------------------------ svg writer

struct SvgMark {
  double x = 0;
  double y = 0;
  std::string label;
  bool pr = false;
};

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// parameter-plane picture for two-parameter duals: failure lines + marks
std::string variety_svg(const VarietyResult& vr,
                        const std::vector<SvgMark>& marks,
                        const std::vector<std::string>& names) {
  double box = 1.6;
  for (const SvgMark& m : marks)
    box = std::max({box, std::fabs(m.x) + 0.4, std::fabs(m.y) + 0.4});
  const double margin = 42.0;
  const double span = 420.0;
  const double scale = span / (2.0 * box);
  auto sx = [&](double x) { return margin + (x + box) * scale; };
  auto sy = [&](double y) { return margin + (box - y) * scale; };

  std::ostringstream svg;
  const double w = span + 2 * margin;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt2(w)
      << "\" height=\"" << fmt2(w) << "\" viewBox=\"0 0 " << fmt2(w) << " "
      << fmt2(w) << "\">\n";
  svg << "  <rect width=\"" << fmt2(w) << "\" height=\"" << fmt2(w)
      << "\" fill=\"white\"/>\n";
  svg << "  <text x=\"" << fmt2(w / 2)
      << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"14\">dual parameter plane: non-injectivity lines"
         "</text>\n";
  // axes
  svg << "  <line x1=\"" << fmt2(sx(-box)) << "\" y1=\"" << fmt2(sy(0))
      << "\" x2=\"" << fmt2(sx(box)) << "\" y2=\"" << fmt2(sy(0))
      << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  svg << "  <line x1=\"" << fmt2(sx(0)) << "\" y1=\"" << fmt2(sy(-box))
      << "\" x2=\"" << fmt2(sx(0)) << "\" y2=\"" << fmt2(sy(box))
      << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  std::string xname = names.size() > 0 ? names[0] : "x";
  std::string yname = names.size() > 1 ? names[1] : "y";
  svg << "  <text x=\"" << fmt2(sx(box) - 12) << "\" y=\"" << fmt2(sy(0) - 6)
      << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#888888\">"
      << xname << "</text>\n";
  svg << "  <text x=\"" << fmt2(sx(0) + 6) << "\" y=\"" << fmt2(sy(box) + 14)
      << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#888888\">"
      << yname << "</text>\n";

  // failure lines: a x + b y + c = 0, clipped to the box
  for (const AffineHyperplane& plane : vr.planes) {
    if (plane.degenerate || plane.normal.size() != 2) continue;
    double a = to_double(plane.normal[0]);
    double b = to_double(plane.normal[1]);
    double c = to_double(plane.offset);
    if (a == 0.0 && b == 0.0) continue;  // never vanishes
    std::vector<std::pair<double, double>> pts;
    auto push_candidate = [&](double x, double y) {
      if (std::fabs(x) > box + 1e-9 || std::fabs(y) > box + 1e-9) return;
      for (const auto& [px, py] : pts)
        if (std::fabs(px - x) < 1e-9 && std::fabs(py - y) < 1e-9) return;
      pts.push_back({x, y});
    };
    if (b != 0.0) {
      push_candidate(-box, -(c + a * -box) / b);
      push_candidate(box, -(c + a * box) / b);
    }
    if (a != 0.0) {
      push_candidate(-(c + b * -box) / a, -box);
      push_candidate(-(c + b * box) / a, box);
    }
    if (pts.size() < 2) continue;
    svg << "  <line x1=\"" << fmt2(sx(pts[0].first)) << "\" y1=\""
        << fmt2(sy(pts[0].second)) << "\" x2=\"" << fmt2(sx(pts[1].first))
        << "\" y2=\"" << fmt2(sy(pts[1].second))
        << "\" stroke=\"#444444\" stroke-width=\"1.5\"/>\n";
  }

  for (const SvgMark& m : marks) {
    const char* color = m.pr ? "#2a7f4f" : "#c0392b";
    svg << "  <circle cx=\"" << fmt2(sx(m.x)) << "\" cy=\"" << fmt2(sy(m.y))
        << "\" r=\"5\" fill=\"" << color << "\"/>\n";
    svg << "  <text x=\"" << fmt2(sx(m.x) + 8) << "\" y=\""
        << fmt2(sy(m.y) - 8)
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << color
        << "\">" << m.label << "</text>\n";
  }
  svg << "  <circle cx=\"" << fmt2(margin + 8) << "\" cy=\"" << fmt2(w - 18)
      << "\" r=\"4\" fill=\"#2a7f4f\"/>\n";
  svg << "  <text x=\"" << fmt2(margin + 18) << "\" y=\"" << fmt2(w - 14)
      << "\" font-family=\"sans-serif\" font-size=\"11\">phase retrieval"
         "</text>\n";
  svg << "  <circle cx=\"" << fmt2(margin + 130) << "\" cy=\"" << fmt2(w - 18)
      << "\" r=\"4\" fill=\"#c0392b\"/>\n";
  svg << "  <text x=\"" << fmt2(margin + 140) << "\" y=\"" << fmt2(w - 14)
      << "\" font-family=\"sans-serif\" font-size=\"11\">not phase retrieval"
         "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

std::vector<std::string> default_names(int count) {
  static const char* kShort[3] = {"x", "y", "z"};
  std::vector<std::string> names;
  if (count <= 3) {
    for (int i = 0; i < count; ++i) names.push_back(kShort[i]);
  } else {
    for (int i = 0; i < count; ++i) names.push_back("v" + std::to_string(i + 1));
  }
  return names;
}

std::string variety_csv(const VarietyResult& vr,
                        const std::vector<std::string>& names) {
  std::ostringstream csv;
  csv << "subset_indices";
  for (const std::string& n : names) csv << "," << n;
  csv << ",constant\n";
  for (const AffineHyperplane& p : vr.planes) {
    csv << "\"";
    for (size_t i = 0; i < p.subset.size(); ++i)
      csv << (i ? " " : "") << p.subset[i] + 1;
    csv << "\"";
    if (p.degenerate) {
      for (size_t i = 0; i < names.size(); ++i) csv << ",0";
      csv << ",0\n";
      continue;
    }
    for (const Rational& c : p.normal) csv << "," << format_rational(c);
    csv << "," << format_rational(p.offset) << "\n";
  }
  return csv.str();
}

// --------------------------------------------------------------- certify

struct CertifyArgs {
  std::string input;
  std::string property;
  std::string mode;
  int erasures = 1;
  double tau = 1e-9;
  std::uint64_t seed = kDefaultSeed;
  int budget = 10000;
  std::string report_path;
  bool stable = false;
};

int run_certify(const CertifyArgs& a) {
  ReportSink sink;
  sink.command = "certify";
  sink.stable = a.stable;
  sink.report_path = a.report_path;

  FrameInput in = load_frame_input(a.input, a.mode, a.tau);
  sink.digest = in.digest;
  const FrameSpec& f = in.frame;

  SearchOptions opts;
  opts.seed = a.seed;
  opts.sample_budget = a.budget;

  Json result = Json::object();
  result["property"] = a.property;
  result["frame"] = frame_summary(f);

  if (a.property == "spark") {
    SparkResult s = spark_of(f);
    Json js = Json::object();
    js["spark"] = s.spark;
    js["independent_family"] = s.independent_family;
    if (!s.witness.empty()) {
      Json w = Json::array();
      for (int i : s.witness) w.push_back(i + 1);
      js["witness"] = w;
    }
    result["spark_report"] = js;
    return sink.emit(result, s.independent_family ? 0 : 1);
  }

  Verdict v;
  if (a.property == "phase") {
    sink.seed = a.seed;
    v = certify_phase_retrieval(f, opts);
  } else if (a.property == "norm") {
    if (f.field != FieldTag::Real)
      throw Error("norm retrieval certification is implemented for real frames");
    v = certify_norm_retrieval_real(f);
  } else if (a.property == "weak-phase") {
    sink.seed = a.seed;
    v = decide_weak_phase(f, opts);
  } else if (a.property == "complement") {
    v = complement_property(f);
  } else if (a.property == "full-spark") {
    v = is_full_spark(f);
  } else if (a.property == "mrc") {
    result["erasures"] = a.erasures;
    v = mrc_check(f, a.erasures);
  } else {
    throw Error("unknown property: " + a.property);
  }
  result["verdict"] = verdict_to_json(v);
  return sink.emit(result, outcome_exit(v.outcome));
}

// ----------------------------------------------------------------- duals

struct DualsArgs {
  std::string input;
  std::string kernel_text;
  std::string report_path;
  bool stable = false;
  // sample/density
  int count = 200;
  int samples = 10000;
  std::uint64_t seed = kDefaultSeed;
  std::string box = "-1,1";
  std::string around;
  std::string delta;
  // nearest
  std::string from_params;
  std::string eps;
  // variety
  std::string names_text;
  std::string csv_path;
  std::string svg_path;
  std::vector<std::string> marks;
  // excess1
  std::string alphas;
  std::string at;
};

DualParameterization parameterization_for(const FrameSpec& f,
                                          const std::string& kernel_text) {
  if (kernel_text.empty()) return dual_parameterization(f);
  return dual_parameterization_with_kernel(
      f, kernel_from_text(kernel_text, f.scalar_kind()));
}

int sample_exit(const DualSampleStats& stats) {
  if (stats.non_pr > 0) return 1;
  if (stats.unknown > 0) return 2;
  return 0;
}

int run_duals_sample(const DualsArgs& a, bool density) {
  ReportSink sink;
  sink.command = density ? "duals density" : "duals sample";
  sink.stable = a.stable;
  sink.report_path = a.report_path;
  sink.seed = a.seed;

  FrameInput in = load_frame_input(a.input, "", 1e-9);
  sink.digest = in.digest;
  DualParameterization param = parameterization_for(in.frame, a.kernel_text);

  const int count = density ? a.samples : a.count;
  Json result = Json::object();
  result["frame"] = frame_summary(in.frame);
  result["excess"] = param.excess();

  DualSampleStats stats;
  if (!a.around.empty()) {
    if (a.delta.empty()) throw Error("--around requires --delta");
    Matrix center = params_from_text(param, a.around);
    Rational radius = parse_rational(a.delta);
    result["around"] = matrix_to_json(center);
    result["delta"] = format_rational(radius);
    stats = sample_pr_duals(param, count, a.seed, &center, radius);
  } else {
    std::vector<Rational> box = rational_list(a.box);
    if (box.size() != 2 || box[0] >= box[1])
      throw Error("--box needs \"lo,hi\" with lo < hi");
    Rational mid = (box[0] + box[1]) / 2;
    Rational radius = (box[1] - box[0]) / 2;
    const ScalarKind kind = param.base.scalar_kind();
    Matrix center(param.base.dim, param.excess(), kind);
    for (int k = 0; k < center.rows(); ++k)
      for (int s = 0; s < center.cols(); ++s)
        center.at(k, s) = kind == ScalarKind::Gaussian
                              ? Scalar(GaussianRational(mid, Rational(0)))
                              : Scalar(mid);
    result["box"] = rational_array(box);
    stats = sample_pr_duals(param, count, a.seed, &center, radius);
  }
  result["stats"] = sample_stats_to_json(stats);
  return sink.emit(result, sample_exit(stats));
}

int run_duals_nearest(const DualsArgs& a) {
  ReportSink sink;
  sink.command = "duals nearest";
  sink.stable = a.stable;
  sink.report_path = a.report_path;
  sink.seed = a.seed;

  FrameInput in = load_frame_input(a.input, "", 1e-9);
  sink.digest = in.digest;
  DualParameterization param = parameterization_for(in.frame, a.kernel_text);
  Matrix from = params_from_text(param, a.from_params);
  Rational eps = parse_rational(a.eps);

  Json result = Json::object();
  result["frame"] = frame_summary(in.frame);
  result["from"] = matrix_to_json(from);
  result["eps"] = format_rational(eps);
  try {
    NearestDualResult r = nearest_pr_dual(param, from, eps, a.seed);
    result["found"] = true;
    result["nearest"] = nearest_to_json(r);
    return sink.emit(result, 0);
  } catch (const Error& e) {
    const std::string what = e.what();
    if (what.find("no phase-retrieval dual found") == std::string::npos)
      throw;
    result["found"] = false;
    result["reason"] = what;
    return sink.emit(result, 2);
  }
}

int run_duals_variety(const DualsArgs& a) {
  ReportSink sink;
  sink.command = "duals variety";
  sink.stable = a.stable;
  sink.report_path = a.report_path;

  FrameInput in = load_frame_input(a.input, "", 1e-9);
  sink.digest = in.digest;
  DualParameterization param = parameterization_for(in.frame, a.kernel_text);
  VarietyResult vr = failure_variety_excess1(param);

  std::vector<std::string> names =
      a.names_text.empty() ? default_names(param.param_count())
                           : split_on(a.names_text, ',');
  Json result = Json::object();
  result["frame"] = frame_summary(in.frame);
  result["variety"] = variety_to_json(vr, names);

  if (!a.csv_path.empty()) {
    write_text_file(a.csv_path, variety_csv(vr, names));
    result["csv"] = a.csv_path;
  }
  if (!a.svg_path.empty()) {
    if (param.param_count() != 2)
      throw Error("--svg requires a two-parameter dual space");
    std::vector<SvgMark> marks;
    Json marks_json = Json::array();
    SearchOptions opts;
    for (const std::string& text : a.marks) {
      Matrix pt = params_from_text(param, text);
      Verdict v = dual_pr_verdict(param.base, dual_at(param, pt), opts);
      SvgMark m;
      m.x = pt.at(0, 0).to_double();
      m.y = pt.at(1, 0).to_double();
      m.pr = v.yes_certified();
      m.label = "(" + format_rational(pt.at(0, 0).rational()) + ", " +
                format_rational(pt.at(1, 0).rational()) + ")";
      marks.push_back(m);
      Json mj = Json::object();
      mj["params"] = matrix_to_json(pt);
      mj["pr"] = outcome_name(v.outcome);
      marks_json.push_back(mj);
    }
    write_text_file(a.svg_path, variety_svg(vr, marks, names));
    result["svg"] = a.svg_path;
    if (!marks.empty()) result["marks"] = marks_json;
  }
  return sink.emit(result, 0);
}

// standard-basis-plus-one-vector frame [I | alpha]
FrameSpec simplex_extension_frame(const std::vector<Rational>& alphas) {
  const int n = static_cast<int>(alphas.size());
  std::vector<Vec> vectors;
  for (int i = 0; i < n; ++i)
    vectors.push_back(unit_vector(n, i, ScalarKind::Rational));
  Vec extra;
  for (const Rational& ai : alphas) extra.push_back(Scalar(ai));
  vectors.push_back(extra);
  return make_real_frame(n, vectors);
}

Vec excess1_kernel(const std::vector<Rational>& alphas) {
  Vec z;
  for (const Rational& ai : alphas) z.push_back(Scalar(-ai));
  z.push_back(Scalar(Rational(1)));
  return z;
}

// closed-form duals of [I | alpha]: with ahat = 1/(1 + ||alpha||^2),
// S^-1 = I - ahat alpha alpha^T, g_i = S^-1 e_i - alpha_i x,
// g_{n+1} = S^-1 alpha + x.
std::vector<Vec> excess1_closed_form(const std::vector<Rational>& alphas,
                                     const std::vector<Rational>& x,
                                     Rational* ahat_out) {
  const int n = static_cast<int>(alphas.size());
  Rational norm2(0);
  for (const Rational& ai : alphas) norm2 += ai * ai;
  Rational ahat = Rational(1) / (Rational(1) + norm2);
  if (ahat_out != nullptr) *ahat_out = ahat;

  std::vector<Vec> duals;
  for (int i = 0; i < n; ++i) {
    Vec g;
    for (int k = 0; k < n; ++k) {
      Rational entry = (k == i ? Rational(1) : Rational(0)) -
                       ahat * alphas[k] * alphas[i] - alphas[i] * x[k];
      g.push_back(Scalar(entry));
    }
    duals.push_back(std::move(g));
  }
  Vec last;
  for (int k = 0; k < n; ++k)
    last.push_back(Scalar(ahat * alphas[k] + x[k]));
  duals.push_back(std::move(last));
  return duals;
}

int run_duals_excess1(const DualsArgs& a) {
  ReportSink sink;
  sink.command = "duals excess1";
  sink.stable = a.stable;
  sink.report_path = a.report_path;

  std::vector<Rational> alphas = rational_list(a.alphas);
  for (const Rational& ai : alphas)
    if (ai == 0) throw Error("--alphas entries must be nonzero");
  std::vector<Rational> x = rational_list(a.at);
  if (x.size() != alphas.size())
    throw Error("--at must have the same length as --alphas");

  FrameSpec frame = simplex_extension_frame(alphas);
  DualParameterization param =
      dual_parameterization_with_kernel(frame, {excess1_kernel(alphas)});

  Rational ahat;
  std::vector<Vec> closed = excess1_closed_form(alphas, x, &ahat);
  Matrix pt(frame.dim, 1, ScalarKind::Rational);
  for (int k = 0; k < frame.dim; ++k) pt.at(k, 0) = Scalar(x[k]);
  std::vector<Vec> derived = dual_at(param, pt);
  if (closed.size() != derived.size())
    throw InternalError("excess1: dual family size mismatch");
  for (size_t i = 0; i < closed.size(); ++i)
    if (!vec_equal(closed[i], derived[i]))
      throw InternalError(
          "excess1: closed form disagrees with the parameterized dual");
  DualCheck check = verify_dual(frame, derived);
  if (!check.ok)
    throw InternalError("excess1: dual family fails the duality check");

  SearchOptions opts;
  Verdict pr = dual_pr_verdict(frame, derived, opts);

  Json result = Json::object();
  result["alphas"] = rational_array(alphas);
  result["alpha_hat"] = format_rational(ahat);
  result["at"] = rational_array(x);
  result["frame"] = frame_summary(frame);
  result["canonical"] = family_to_json(param.canonical);
  result["dual"] = family_to_json(derived);
  result["duality_verified"] = true;
  result["pr"] = verdict_to_json(pr);
  return sink.emit(result, outcome_exit(pr.outcome));
}

// ---------------------------------------------------------------- recover

struct RecoverArgs {
  std::string input;
  std::string magnitudes_path;
  std::string signal;
  std::string report_path;
  bool stable = false;
};

int run_recover(const RecoverArgs& a) {
  ReportSink sink;
  sink.command = "recover";
  sink.stable = a.stable;
  sink.report_path = a.report_path;

  FrameInput in = load_frame_input(a.input, "", 1e-9);
  sink.digest = in.digest;
  const FrameSpec& f = in.frame;

  if (a.magnitudes_path.empty() == a.signal.empty())
    throw Error("provide exactly one of --magnitudes or --signal");

  Json result = Json::object();
  result["frame"] = frame_summary(f);

  Magnitudes mags;
  std::optional<Vec> signal;
  if (!a.signal.empty()) {
    std::vector<Rational> entries = rational_list(a.signal);
    if (static_cast<int>(entries.size()) != f.dim)
      throw Error("--signal must have dim entries");
    Vec s;
    for (const Rational& r : entries) s.push_back(Scalar(r));
    signal = s;
    mags = measure(f, s);
    result["signal"] = vec_to_json(s);
  } else {
    mags = load_magnitudes_file(a.magnitudes_path);
  }
  result["magnitudes"] = magnitudes_to_json(mags);

  RecoveryResult rec = recover_real(f, mags);
  result["recovery"] = recovery_to_json(rec);

  if (signal.has_value()) {
    // sign-normalize the input the same way candidates are normalized
    Vec s = *signal;
    for (const Scalar& e : s) {
      if (e.is_zero()) continue;
      if (e.rational() < 0) s = vec_neg(s);
      break;
    }
    bool matched = false;
    for (const RadicalVector& cand : rec.candidates) {
      if (!cand.is_rational()) continue;
      auto it = cand.parts.find(BigInt(1));
      Vec c(f.dim, Scalar(Rational(0)));
      if (it != cand.parts.end())
        for (int k = 0; k < f.dim; ++k) c[k] = Scalar(it->second[k]);
      else
        c = vec_zero(f.dim, ScalarKind::Rational);
      if (vec_equal(c, s)) {
        matched = true;
        break;
      }
    }
    result["signal_recovered"] = matched;
  }
  int code = rec.status == RecoveryStatus::UniqueUpToSign ? 0 : 1;
  return sink.emit(result, code);
}

// --------------------------------------------------------------- examples

struct ExamplesArgs {
  std::string id;
  int count = 10;
  std::uint64_t seed = kDefaultSeed;
  std::string svg_path = "dual_variety.svg";
  std::string report_path;
  bool stable = false;
};

struct CheckList {
  Json items = Json::array();
  bool all_ok = true;

  void add(const std::string& name, bool ok, Json detail = Json()) {
    Json j = Json::object();
    j["name"] = name;
    j["ok"] = ok;
    if (!detail.is_null()) j["detail"] = detail;
    items.push_back(j);
    all_ok = all_ok && ok;
  }
};

FrameSpec dual_lines_frame() {
  return frame_from_rational_rows(2, {{"1", "0"}, {"0", "1"}, {"1", "1"}});
}

DualParameterization dual_lines_parameterization(const FrameSpec& f) {
  // dependency phi_1 + phi_2 - phi_3 = 0, oriented so the extra vector
  // carries +1: psi_3 = canonical_3 + x
  Vec z = {Scalar(Rational(-1)), Scalar(Rational(-1)), Scalar(Rational(1))};
  return dual_parameterization_with_kernel(f, {z});
}

bool plane_equals(const AffineHyperplane& p, const std::vector<Rational>& normal,
                  const Rational& offset) {
  return !p.degenerate && p.normal == normal && p.offset == offset;
}

std::vector<Vec> family_from_rows(
    const std::vector<std::vector<std::string>>& rows) {
  std::vector<Vec> out;
  for (const auto& row : rows) out.push_back(vec_from_rationals(row));
  return out;
}

int run_examples_dual_lines(const ExamplesArgs& a) {
  ReportSink sink;
  sink.command = "examples dual-lines";
  sink.stable = a.stable;
  sink.report_path = a.report_path;

  FrameSpec f = dual_lines_frame();
  DualParameterization param = dual_lines_parameterization(f);
  CheckList checks;

  // canonical dual of {e1, e2, e1+e2}
  std::vector<Vec> expected_canonical = family_from_rows(
      {{"2/3", "-1/3"}, {"-1/3", "2/3"}, {"1/3", "1/3"}});
  checks.add("canonical_dual", families_match(param.canonical,
                                                     expected_canonical),
             family_to_json(param.canonical));

  // failure variety: exactly the lines x = -1/3, y = -1/3, x + y = 1/3
  VarietyResult vr = failure_variety_excess1(param);
  bool lines_ok =
      vr.planes.size() == 3 && vr.distinct_planes == 3 &&
      plane_equals(vr.planes[0], {Rational(1), Rational(1)}, Rational(-1, 3)) &&
      plane_equals(vr.planes[1], {Rational(0), Rational(1)}, Rational(1, 3)) &&
      plane_equals(vr.planes[2], {Rational(1), Rational(0)}, Rational(1, 3));
  checks.add("failure_lines", lines_ok,
             variety_to_json(vr, default_names(2)));

  // marked dual at (0, 2/3): explicit family, certified phase retrieval
  Matrix good(2, 1, ScalarKind::Rational);
  good.at(0, 0) = Scalar(Rational(0));
  good.at(1, 0) = Scalar(Rational(2, 3));
  std::vector<Vec> good_dual = dual_at(param, good);
  std::vector<Vec> expected_good =
      family_from_rows({{"2/3", "-1"}, {"-1/3", "0"}, {"1/3", "1"}});
  checks.add("pr_dual_vectors",
             families_match(good_dual, expected_good),
             family_to_json(good_dual));
  SearchOptions opts;
  Verdict good_verdict = dual_pr_verdict(f, good_dual, opts);
  checks.add("pr_dual_certified", good_verdict.yes_certified(),
             verdict_to_json(good_verdict));

  // marked dual at (1, -2/3): fails full spark with witness {1, 2}
  Matrix bad(2, 1, ScalarKind::Rational);
  bad.at(0, 0) = Scalar(Rational(1));
  bad.at(1, 0) = Scalar(Rational(-2, 3));
  std::vector<Vec> bad_dual = dual_at(param, bad);
  Verdict bad_verdict = dual_pr_verdict(f, bad_dual, opts);
  Verdict bad_spark = is_full_spark(make_real_frame(2, bad_dual));
  bool bad_ok = bad_verdict.no_certified() && bad_spark.no_certified() &&
                bad_spark.witness_subset.has_value() &&
                *bad_spark.witness_subset == std::vector<int>{0, 1};
  Json bad_detail = Json::object();
  bad_detail["pr"] = verdict_to_json(bad_verdict);
  bad_detail["full_spark"] = verdict_to_json(bad_spark);
  checks.add("non_pr_dual", bad_ok, bad_detail);

  Json result = Json::object();
  result["frame"] = frame_summary(f);
  result["checks"] = checks.items;
  result["all_ok"] = checks.all_ok;
  return sink.emit(result, checks.all_ok ? 0 : 1);
}

int run_examples_random_planes(const ExamplesArgs& a) {
  ReportSink sink;
  sink.command = "examples random-planes";
  sink.stable = a.stable;
  sink.report_path = a.report_path;
  sink.seed = a.seed;

  std::mt19937_64 rng(a.seed);
  Json trials = Json::array();
  bool all_ok = true;

  for (int trial = 0; trial < a.count; ++trial) {
    std::vector<Rational> alphas;
    for (int i = 0; i < 3; ++i) alphas.push_back(random_nonzero_rational(rng));

    FrameSpec frame = simplex_extension_frame(alphas);
    DualParameterization param =
        dual_parameterization_with_kernel(frame, {excess1_kernel(alphas)});
    VarietyResult vr = failure_variety_excess1(param);

    Rational norm2(0);
    for (const Rational& ai : alphas) norm2 += ai * ai;
    Rational ahat = Rational(1) / (Rational(1) + norm2);

    // expected planes: dropping g_i (i <= n) leaves x_i = -ahat alpha_i;
    // dropping the extra vector leaves alpha . x = ahat
    const int n = 3;
    bool ok = vr.planes.size() == 4 && vr.distinct_planes == 4;
    for (const AffineHyperplane& p : vr.planes) {
      if (!ok) break;
      if (p.subset.size() != 3) {
        ok = false;
        break;
      }
      int missing = 0 + 1 + 2 + 3;
      for (int i : p.subset) missing -= i;
      if (missing < n) {
        std::vector<Rational> normal(n, Rational(0));
        normal[missing] = 1;
        ok = plane_equals(p, normal, ahat * alphas[missing]);
      } else {
        std::vector<Rational> normal;
        for (const Rational& ai : alphas) normal.push_back(ai / alphas[0]);
        ok = plane_equals(p, normal, -ahat / alphas[0]);
      }
    }
    all_ok = all_ok && ok;

    Json t = Json::object();
    t["alphas"] = rational_array(alphas);
    t["alpha_hat"] = format_rational(ahat);
    t["planes"] = variety_to_json(vr, default_names(3))["planes"];
    t["ok"] = ok;
    trials.push_back(t);
  }

  Json result = Json::object();
  result["trials"] = trials;
  result["all_ok"] = all_ok;
  return sink.emit(result, all_ok ? 0 : 1);
}

FrameSpec audit_family_frame() {
  return frame_from_rational_rows(3, {{"1", "0", "0"},
                                      {"0", "1", "0"},
                                      {"0", "0", "1"},
                                      {"1", "1", "1"},
                                      {"1", "-1", "1"}});
}

// published-table entries for the audit family, transcribed verbatim;
// variables in row-major parameter order (x1, x2, y1, y2, z1, z2)
std::vector<std::vector<Polynomial>> audit_printed_duals() {
  const int x1 = 0, x2 = 1, y1 = 2, y2 = 3, z1 = 4, z2 = 5;
  auto combo = [](const Rational& c,
                  std::initializer_list<std::pair<int, int>> terms) {
    Polynomial p(6);
    if (c != 0) p.add_term(std::vector<int>(6, 0), c);
    for (const auto& [idx, sign] : terms) {
      std::vector<int> e(6, 0);
      e[idx] = 1;
      p.add_term(e, Rational(sign));
    }
    return p;
  };

  std::vector<std::vector<Polynomial>> g(5);
  g[0] = {combo(Rational(3, 5), {{x1, -1}, {x2, -1}}),
          combo(Rational(0), {{y1, -1}, {y2, -1}}),
          combo(Rational(-2, 5), {{z1, -1}, {z2, -1}})};
  g[1] = {combo(Rational(0), {{x1, -1}, {x2, 1}}),
          combo(Rational(1, 3), {{y1, -1}, {y2, 1}}),
          combo(Rational(0), {{z1, -1}, {z2, -1}})};  // printed: -z1 - z2
  g[2] = {combo(Rational(-2, 5), {{x1, -1}, {x2, -1}}),
          combo(Rational(0), {{y1, -1}, {y2, -1}}),
          combo(Rational(3, 5), {{z1, -1}, {z2, -1}})};
  g[3] = {combo(Rational(1, 5), {{x1, 1}}), combo(Rational(1, 3), {{y1, 1}}),
          combo(Rational(1, 5), {{z1, 1}})};
  g[4] = {combo(Rational(1, 5), {{x1, 1}}),  // printed: x1, derived needs x2
          combo(Rational(-1, 3), {{y2, 1}}),
          combo(Rational(1, 5), {{z2, 1}})};
  return g;
}

// published determinant polynomial for the subfamily {g2, g4, g5}
Polynomial audit_printed_det() {
  const int x1 = 0, x2 = 1, z1 = 4, z2 = 5;
  Polynomial p(6);
  auto term = [&](std::initializer_list<int> vars, const Rational& c) {
    std::vector<int> e(6, 0);
    for (int v : vars) e[v] += 1;
    p.add_term(e, c);
  };
  term({z1}, Rational(1));
  term({x2}, Rational(1));
  term({x1}, Rational(-3, 5));
  term({z2}, Rational(-3, 5));
  term({x2, z1}, Rational(3));
  term({x1, z2}, Rational(-3));
  return p;
}

// derived dual coordinates as polynomials in the flattened parameters
std::vector<std::vector<Polynomial>> derived_dual_polynomials(
    const DualParameterization& param) {
  const int n = param.base.dim;
  const int e = param.excess();
  const int vars = n * e;
  std::vector<std::vector<Polynomial>> out(param.base.count());
  for (int t = 0; t < param.base.count(); ++t) {
    for (int c = 0; c < n; ++c) {
      Polynomial p(vars);
      std::vector<int> zero(vars, 0);
      p.add_term(zero, param.canonical[t][c].rational());
      for (int s = 0; s < e; ++s) {
        Rational k = param.kernel[s][t].rational();
        if (k == 0) continue;
        std::vector<int> exp(vars, 0);
        exp[c * e + s] = 1;
        p.add_term(exp, k);
      }
      out[t].push_back(p);
    }
  }
  return out;
}

int run_examples_audit_family(const ExamplesArgs& a) {
  ReportSink sink;
  sink.command = "examples audit-family";
  sink.stable = a.stable;
  sink.report_path = a.report_path;
  sink.seed = a.seed;

  FrameSpec f = audit_family_frame();
  CheckList checks;

  // not full spark: first dependent triple is {2, 4, 5}
  SparkResult spark = spark_of(f);
  bool spark_ok = spark.spark == 3 && spark.witness == std::vector<int>{1, 3, 4};
  Json spark_json = Json::object();
  spark_json["spark"] = spark.spark;
  spark_json["witness"] = Json::array();
  for (int i : spark.witness) spark_json["witness"].push_back(i + 1);
  checks.add("not_full_spark", spark_ok, spark_json);

  // not phase retrieval: complement property fails at {1, 3}
  SearchOptions opts;
  opts.seed = a.seed;
  Verdict pr = certify_phase_retrieval(f, opts);
  bool pr_ok = pr.no_certified() && pr.witness_subset.has_value() &&
               *pr.witness_subset == std::vector<int>{0, 2};
  checks.add("not_phase_retrieval", pr_ok, verdict_to_json(pr));

  // dual parameterization in the published coordinates: g4 and g5 free
  std::vector<Vec> kernel = {
      vec_from_rationals({"-1", "-1", "-1", "1", "0"}),
      vec_from_rationals({"-1", "1", "-1", "0", "1"})};
  DualParameterization param = dual_parameterization_with_kernel(f, kernel);

  std::vector<Vec> expected_canonical =
      family_from_rows({{"3/5", "0", "-2/5"},
                        {"0", "1/3", "0"},
                        {"-2/5", "0", "3/5"},
                        {"1/5", "1/3", "1/5"},
                        {"1/5", "-1/3", "1/5"}});
  checks.add("canonical_dual",
             families_match(param.canonical, expected_canonical),
             family_to_json(param.canonical));

  // exact duality at random parameter points
  std::mt19937_64 rng(a.seed);
  int trials = 100;
  bool duality_ok = true;
  for (int t = 0; t < trials && duality_ok; ++t) {
    Matrix v(3, 2, ScalarKind::Rational);
    for (int k = 0; k < 3; ++k)
      for (int s = 0; s < 2; ++s) v.at(k, s) = Scalar(random_rational(rng));
    duality_ok = verify_dual(f, dual_at(param, v)).ok;
  }
  Json duality_json = Json::object();
  duality_json["trials"] = trials;
  duality_json["all_exact"] = duality_ok;
  checks.add("duality_random_points", duality_ok, duality_json);

  // diff the published table against the derived coordinates
  std::vector<std::string> names = {"x1", "x2", "y1", "y2", "z1", "z2"};
  std::vector<std::vector<Polynomial>> printed = audit_printed_duals();
  std::vector<std::vector<Polynomial>> derived = derived_dual_polynomials(param);
  Json mismatches = Json::array();
  int total = 0;
  for (int t = 0; t < 5; ++t)
    for (int c = 0; c < 3; ++c) {
      ++total;
      if (printed[t][c].minus(derived[t][c]).is_zero()) continue;
      Json mj = Json::object();
      mj["vector"] = t + 1;
      mj["coordinate"] = c + 1;
      mj["printed"] = printed[t][c].str(names);
      mj["derived"] = derived[t][c].str(names);
      mismatches.push_back(mj);
    }
  // exactly the two documented transcription slips: the third coordinate
  // of g2 and the first coordinate of g5
  bool diff_ok = mismatches.size() == 2 &&
                 mismatches[0]["vector"] == 2 && mismatches[0]["coordinate"] == 3 &&
                 mismatches[1]["vector"] == 5 && mismatches[1]["coordinate"] == 1;
  Json diff_json = Json::object();
  diff_json["entries_compared"] = total;
  diff_json["mismatches"] = mismatches;
  checks.add("published_table_diff", diff_ok, diff_json);

  // published determinant for the dependent triple {2, 4, 5} versus the
  // exact interpolation of the derived determinant
  Polynomial printed_det = audit_printed_det();
  Polynomial derived_det = dual_subset_det_polynomial(param, {1, 3, 4});
  Rational factor(0);
  bool equal = printed_det.minus(derived_det).is_zero();
  bool proportional = printed_det.proportional_to(derived_det, &factor);
  // spot-check the interpolated determinant against direct evaluation
  bool spot_ok = true;
  for (int t = 0; t < 20 && spot_ok; ++t) {
    std::vector<Rational> point;
    Matrix v(3, 2, ScalarKind::Rational);
    for (int k = 0; k < 3; ++k)
      for (int s = 0; s < 2; ++s) {
        Rational r = random_rational(rng);
        v.at(k, s) = Scalar(r);
      }
    // flatten in the same row-major order used by the polynomial
    for (int k = 0; k < 3; ++k)
      for (int s = 0; s < 2; ++s) point.push_back(v.at(k, s).rational());
    std::vector<Vec> dual = dual_at(param, v);
    Matrix cols = Matrix::from_columns({dual[1], dual[3], dual[4]});
    spot_ok = derived_det.evaluate(point) == det_exact(cols).rational();
  }
  bool det_ok = !equal && !proportional && spot_ok;
  Json det_json = Json::object();
  det_json["subset"] = Json::array({2, 4, 5});
  det_json["printed"] = printed_det.str(names);
  det_json["derived"] = derived_det.str(names);
  det_json["equal"] = equal;
  det_json["proportional"] = proportional;
  det_json["interpolation_spot_checked"] = spot_ok;
  checks.add("published_subset_determinant", det_ok, det_json);

  Json result = Json::object();
  result["frame"] = frame_summary(f);
  result["checks"] = checks.items;
  result["all_ok"] = checks.all_ok;
  return sink.emit(result, checks.all_ok ? 0 : 1);
}

int run_examples_figure(const ExamplesArgs& a) {
  ReportSink sink;
  sink.command = "examples figure";
  sink.stable = a.stable;
  sink.report_path = a.report_path;

  FrameSpec f = dual_lines_frame();
  DualParameterization param = dual_lines_parameterization(f);
  VarietyResult vr = failure_variety_excess1(param);

  SearchOptions opts;
  std::vector<SvgMark> marks;
  Json marks_json = Json::array();
  const std::vector<std::pair<Rational, Rational>> points = {
      {Rational(0), Rational(2, 3)}, {Rational(1), Rational(-2, 3)}};
  for (const auto& [x, y] : points) {
    Matrix pt(2, 1, ScalarKind::Rational);
    pt.at(0, 0) = Scalar(x);
    pt.at(1, 0) = Scalar(y);
    Verdict v = dual_pr_verdict(f, dual_at(param, pt), opts);
    SvgMark m;
    m.x = to_double(x);
    m.y = to_double(y);
    m.pr = v.yes_certified();
    m.label = "(" + format_rational(x) + ", " + format_rational(y) + ")";
    marks.push_back(m);
    Json mj = Json::object();
    mj["params"] = Json::array({format_rational(x), format_rational(y)});
    mj["pr"] = outcome_name(v.outcome);
    marks_json.push_back(mj);
  }
  write_text_file(a.svg_path, variety_svg(vr, marks, default_names(2)));

  Json result = Json::object();
  result["frame"] = frame_summary(f);
  result["svg"] = a.svg_path;
  result["lines"] = variety_to_json(vr, default_names(2))["planes"];
  result["marks"] = marks_json;
  return sink.emit(result, 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "framecert: exact phase-retrieval certification for finite frames"};
  app.require_subcommand(1);
  int rc = 0;

  // certify
  CertifyArgs cert;
  CLI::App* certify = app.add_subcommand(
      "certify", "certify a retrieval property of a frame");
  certify->add_option("--input", cert.input, "frame JSON file")->required();
  certify
      ->add_option("--property", cert.property,
                   "phase | norm | weak-phase | complement | full-spark | "
                   "spark | mrc")
      ->required()
      ->check(CLI::IsMember({"phase", "norm", "weak-phase", "complement",
                             "full-spark", "spark", "mrc"}));
  certify->add_option("--erasures", cert.erasures, "erasure count for mrc");
  certify->add_option("--mode", cert.mode, "exact | float (override)")
      ->check(CLI::IsMember({"exact", "float"}));
  certify->add_option("--tol", cert.tau, "float-mode tolerance");
  certify->add_option("--seed", cert.seed, "search seed");
  certify->add_option("--budget", cert.budget, "sampling budget");
  certify->add_option("--report", cert.report_path, "also write report here");
  certify->add_flag("--stable", cert.stable, "omit timing for byte-stable output");
  certify->callback([&]() { rc = run_certify(cert); });

  // duals
  DualsArgs duals;
  CLI::App* duals_cmd =
      app.add_subcommand("duals", "dual-space parameterization experiments");
  duals_cmd->require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool with_seed) {
    sub->add_option("--input", duals.input, "frame JSON file")->required();
    sub->add_option("--kernel", duals.kernel_text,
                    "dependency basis override, rows \"a,b,..;c,d,..\"");
    sub->add_option("--report", duals.report_path, "also write report here");
    sub->add_flag("--stable", duals.stable,
                  "omit timing for byte-stable output");
    if (with_seed) sub->add_option("--seed", duals.seed, "sampling seed");
  };

  CLI::App* sample = duals_cmd->add_subcommand(
      "sample", "sample parameter points and certify each dual");
  add_common(sample, true);
  sample->add_option("--count", duals.count, "number of samples");
  sample->add_option("--box", duals.box, "sampling box \"lo,hi\"");
  sample->add_option("--around", duals.around,
                     "center parameters (flattened, row-major)");
  sample->add_option("--delta", duals.delta, "half-width around the center");
  sample->callback([&]() { rc = run_duals_sample(duals, false); });

  CLI::App* density = duals_cmd->add_subcommand(
      "density", "estimate the fraction of phase-retrieval duals");
  add_common(density, true);
  density->add_option("--samples", duals.samples, "number of samples");
  density->add_option("--box", duals.box, "sampling box \"lo,hi\"");
  density->callback([&]() { rc = run_duals_sample(duals, true); });

  CLI::App* nearest = duals_cmd->add_subcommand(
      "nearest", "find a phase-retrieval dual within a radius");
  add_common(nearest, true);
  nearest
      ->add_option("--from-params", duals.from_params,
                   "start parameters (flattened, row-major)")
      ->required();
  nearest->add_option("--eps", duals.eps, "search radius (exact rational)")
      ->required();
  nearest->callback([&]() { rc = run_duals_nearest(duals); });

  CLI::App* variety = duals_cmd->add_subcommand(
      "variety", "non-injectivity hyperplanes for excess-1 frames");
  add_common(variety, false);
  variety->add_option("--names", duals.names_text, "parameter names \"x,y\"");
  variety->add_option("--csv", duals.csv_path, "write hyperplanes as CSV");
  variety->add_option("--svg", duals.svg_path,
                      "write a parameter-plane figure (two parameters only)");
  variety->add_option("--mark", duals.marks,
                      "parameter point to mark in the figure (repeatable)");
  variety->callback([&]() { rc = run_duals_variety(duals); });

  CLI::App* excess1 = duals_cmd->add_subcommand(
      "excess1", "closed-form duals of the frame [I | alpha]");
  excess1->add_option("--alphas", duals.alphas, "nonzero entries of alpha")
      ->required();
  excess1->add_option("--at", duals.at, "parameter vector x")->required();
  excess1->add_option("--report", duals.report_path, "also write report here");
  excess1->add_flag("--stable", duals.stable,
                    "omit timing for byte-stable output");
  excess1->callback([&]() { rc = run_duals_excess1(duals); });

  // recover
  RecoverArgs rec;
  CLI::App* recover = app.add_subcommand(
      "recover", "magnitude-only recovery over a real exact frame");
  recover->add_option("--input", rec.input, "frame JSON file")->required();
  recover->add_option("--magnitudes", rec.magnitudes_path,
                      "squared-magnitudes JSON file");
  recover->add_option("--signal", rec.signal,
                      "rational signal for a measure-then-recover round trip");
  recover->add_option("--report", rec.report_path, "also write report here");
  recover->add_flag("--stable", rec.stable, "omit timing for byte-stable output");
  recover->callback([&]() { rc = run_recover(rec); });

  // examples
  ExamplesArgs ex;
  CLI::App* examples = app.add_subcommand(
      "examples", "scripted reproductions with expected-vs-computed checks");
  examples
      ->add_option("id", ex.id,
                   "dual-lines | random-planes | audit-family | figure")
      ->required()
      ->check(CLI::IsMember(
          {"dual-lines", "random-planes", "audit-family", "figure"}));
  examples->add_option("--count", ex.count, "trials for random-planes");
  examples->add_option("--seed", ex.seed, "seed for randomized checks");
  examples->add_option("--svg", ex.svg_path, "figure output path");
  examples->add_option("--report", ex.report_path, "also write report here");
  examples->add_flag("--stable", ex.stable, "omit timing for byte-stable output");
  examples->callback([&]() {
    if (ex.id == "dual-lines")
      rc = run_examples_dual_lines(ex);
    else if (ex.id == "random-planes")
      rc = run_examples_random_planes(ex);
    else if (ex.id == "audit-family")
      rc = run_examples_audit_family(ex);
    else
      rc = run_examples_figure(ex);
  });

  try {
    app.parse(argc, argv);
    return rc;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  } catch (const framecert::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  } catch (const framecert::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
