#pragma once

#include <string>

#include "json.hpp"

#include "framecert/dual_space.hpp"
#include "framecert/frame.hpp"
#include "framecert/recovery.hpp"
#include "framecert/retrieval.hpp"
#include "framecert/verdict.hpp"

namespace framecert {

using Json = nlohmann::ordered_json;

// ---- parsing (throws Error on malformed input) ----

// {"dim": n, "field": "real"|"complex", "mode": "exact"|"float",
//  "vectors": [[entry, ...], ...]} with exact entries as "p/q" strings,
// integers, or {"re": ..., "im": ...}
FrameSpec frame_from_json(const Json& j, const TolerancePolicy& tol = {});
FrameSpec load_frame_file(const std::string& path,
                          const TolerancePolicy& tol = {});

// {"squared": [entry, ...]}
Magnitudes magnitudes_from_json(const Json& j);
Magnitudes load_magnitudes_file(const std::string& path);

Scalar scalar_from_json(const Json& j, FieldTag field, ModeTag mode);
Vec vector_from_json(const Json& j, FieldTag field, ModeTag mode);
Matrix matrix_from_json(const Json& j, int rows, int cols, FieldTag field);

// ---- serialization (all user-facing indices are 1-based) ----

Json scalar_to_json(const Scalar& s);
Json vec_to_json(const Vec& v);
Json family_to_json(const std::vector<Vec>& family);
Json matrix_to_json(const Matrix& m);
Json frame_to_json(const FrameSpec& f);
Json magnitudes_to_json(const Magnitudes& m);
Json pair_to_json(const CounterexamplePair& p);
Json verdict_to_json(const Verdict& v);
Json radical_to_json(const RadicalVector& x);
Json recovery_to_json(const RecoveryResult& r);
Json hyperplane_to_json(const AffineHyperplane& h,
                        const std::vector<std::string>& names = {});
Json variety_to_json(const VarietyResult& v,
                     const std::vector<std::string>& names = {});
Json sample_stats_to_json(const DualSampleStats& s);
Json nearest_to_json(const NearestDualResult& r);
Json bounds_to_json(const FrameBounds& b);

// stable fingerprint of raw input bytes, "fnv1a:<16 hex digits>"
std::string input_digest(const std::string& text);

std::string read_text_file(const std::string& path);

}  // namespace framecert
