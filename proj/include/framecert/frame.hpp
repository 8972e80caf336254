#pragma once

#include <optional>
#include <string>
#include <vector>

#include "framecert/linalg.hpp"
#include "framecert/matrix.hpp"

namespace framecert {

enum class FieldTag { Real, Complex };
enum class ModeTag { Exact, Float };

const char* field_name(FieldTag f);
const char* mode_name(ModeTag m);

// Validated finite family of vectors in R^n or C^n. "Frame" in the
// strict sense requires spanning; non-spanning families are kept with
// spans == false so they can still be inspected.
struct FrameSpec {
  int dim = 0;
  FieldTag field = FieldTag::Real;
  ModeTag mode = ModeTag::Exact;
  std::vector<Vec> vectors;
  bool spans = false;
  std::vector<std::string> warnings;

  int count() const { return static_cast<int>(vectors.size()); }
  ScalarKind scalar_kind() const;
  Matrix synthesis() const;  // n x m, columns are the vectors
  bool exact() const { return mode == ModeTag::Exact; }
};

struct RawFrame {
  int dim = 0;
  FieldTag field = FieldTag::Real;
  ModeTag mode = ModeTag::Exact;
  std::vector<Vec> vectors;
};

FrameSpec validate_frame(const RawFrame& raw, const TolerancePolicy& tol = {});

// Convenience builders (exact kinds).
FrameSpec make_real_frame(int dim, const std::vector<Vec>& vectors);
FrameSpec make_complex_frame(int dim, const std::vector<Vec>& vectors);
FrameSpec frame_from_rational_rows(int dim,
                                   const std::vector<std::vector<std::string>>& rows);

enum class DualProvenance { Canonical, Parameterized, Explicit };

struct DualFrame {
  FrameSpec base;
  std::vector<Vec> vectors;
  DualProvenance provenance = DualProvenance::Explicit;
};

// Invertible operator record with cached facts and the frame
// reindexing applied alongside it (empty permutation = identity).
struct OperatorT {
  Matrix mat;
  Scalar det;
  bool invertible = false;
  bool unitary = false;
  bool diagonal = false;
  bool positive_diagonal = false;
  std::vector<int> permutation;

  static OperatorT from_matrix(Matrix m);
  Vec apply(const Vec& v) const { return mat.apply(v); }
};

Matrix gram_matrix(const FrameSpec& frame);
Matrix frame_operator(const FrameSpec& frame);

// Canonical dual S^-1 phi_i; duality is re-verified before returning.
DualFrame canonical_dual(const FrameSpec& frame);

struct DualCheck {
  bool ok = false;
  Matrix residual;  // synthesis * candidate^* - I
};
DualCheck verify_dual(const FrameSpec& frame, const std::vector<Vec>& candidate,
                      const TolerancePolicy& tol = {});

// m - n; requires a spanning frame.
int excess(const FrameSpec& frame);

FrameSpec apply_operator(const OperatorT& op, const FrameSpec& frame);

// Finds the lexicographically first n independent vectors, moves them
// to the front (stable), and maps them to the standard basis.
struct StandardFormResult {
  OperatorT transform;   // T with the permutation recorded inside
  FrameSpec frame;       // T applied to the permuted frame
};
StandardFormResult standard_form(const FrameSpec& frame);

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
  bool tight = false;
};
// Float-only spectral bounds (extreme eigenvalues of the frame
// operator); exact inputs are converted internally, complex frames go
// through the real symmetric embedding.
FrameBounds frame_bounds(const FrameSpec& frame, const TolerancePolicy& tol = {});

bool is_dual_pair(const FrameSpec& frame, const DualFrame& dual);

}  // namespace framecert
