#include "framecert/frame.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace framecert {

const char* field_name(FieldTag f) {
  return f == FieldTag::Real ? "real" : "complex";
}

const char* mode_name(ModeTag m) { return m == ModeTag::Exact ? "exact" : "float"; }

ScalarKind FrameSpec::scalar_kind() const {
  if (mode == ModeTag::Float) return ScalarKind::Float64;
  return field == FieldTag::Real ? ScalarKind::Rational : ScalarKind::Gaussian;
}

Matrix FrameSpec::synthesis() const {
  if (vectors.empty()) throw Error("synthesis: empty frame");
  return Matrix::from_columns(vectors);
}

FrameSpec validate_frame(const RawFrame& raw, const TolerancePolicy& tol) {
  if (raw.dim <= 0) throw Error("validate_frame: dimension must be positive");
  if (raw.vectors.empty()) throw Error("validate_frame: no vectors");
  if (raw.field == FieldTag::Complex && raw.mode == ModeTag::Float)
    throw Error(
        "validate_frame: complex frames are exact-only (no complex float "
        "scalar variant)");

  FrameSpec frame;
  frame.dim = raw.dim;
  frame.field = raw.field;
  frame.mode = raw.mode;
  frame.vectors = raw.vectors;

  const ScalarKind want = frame.scalar_kind();
  for (size_t i = 0; i < frame.vectors.size(); ++i) {
    if (static_cast<int>(frame.vectors[i].size()) != frame.dim)
      throw Error("validate_frame: ragged vector lengths");
    for (const Scalar& s : frame.vectors[i]) {
      if (s.kind() != want)
        throw Error("validate_frame: mixed scalar variants");
    }
    if (vec_is_zero(frame.vectors[i])) {
      std::ostringstream os;
      os << "zero vector at index " << (i + 1);
      frame.warnings.push_back(os.str());
    }
  }
  frame.spans = rank_of(frame.synthesis(), tol) == frame.dim;
  if (!frame.spans)
    frame.warnings.push_back("family does not span the ambient space");
  return frame;
}

FrameSpec make_real_frame(int dim, const std::vector<Vec>& vectors) {
  RawFrame raw{dim, FieldTag::Real, ModeTag::Exact, vectors};
  return validate_frame(raw);
}

FrameSpec make_complex_frame(int dim, const std::vector<Vec>& vectors) {
  RawFrame raw{dim, FieldTag::Complex, ModeTag::Exact, vectors};
  return validate_frame(raw);
}

FrameSpec frame_from_rational_rows(
    int dim, const std::vector<std::vector<std::string>>& rows) {
  std::vector<Vec> vectors;
  vectors.reserve(rows.size());
  for (const auto& row : rows) vectors.push_back(vec_from_rationals(row));
  return make_real_frame(dim, vectors);
}

OperatorT OperatorT::from_matrix(Matrix m) {
  if (m.rows() != m.cols()) throw Error("operator matrix must be square");
  OperatorT op;
  op.mat = std::move(m);
  const int n = op.mat.rows();
  const ScalarKind kind = op.mat.kind();
  if (kind == ScalarKind::Float64)
    throw Error("operator matrices are exact-only");
  op.det = det_exact(op.mat);
  op.invertible = !op.det.is_zero();
  op.unitary = (op.mat * op.mat.conjugate_transpose())
                   .is_identity();
  op.diagonal = true;
  op.positive_diagonal = true;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (r != c && !op.mat.at(r, c).is_zero()) op.diagonal = false;
      if (r == c) {
        const Scalar& d = op.mat.at(r, c);
        bool positive = d.kind() == ScalarKind::Rational
                            ? d.rational() > 0
                            : (d.gaussian().is_real() && d.gaussian().re > 0);
        if (!positive) op.positive_diagonal = false;
      }
    }
  if (!op.diagonal) op.positive_diagonal = false;
  return op;
}

Matrix gram_matrix(const FrameSpec& frame) {
  const int m = frame.count();
  Matrix g(m, m, frame.scalar_kind());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      g.at(i, j) = inner_product(frame.vectors[i], frame.vectors[j]);
  return g;
}

Matrix frame_operator(const FrameSpec& frame) {
  Matrix t = frame.synthesis();
  return t * t.conjugate_transpose();
}

DualFrame canonical_dual(const FrameSpec& frame) {
  if (!frame.exact())
    throw Error("canonical_dual: exact mode required");
  if (!frame.spans) throw Error("canonical_dual: frame must span");
  Matrix sinv = inverse_exact(frame_operator(frame));
  DualFrame dual;
  dual.base = frame;
  dual.provenance = DualProvenance::Canonical;
  dual.vectors.reserve(frame.count());
  for (const Vec& v : frame.vectors) dual.vectors.push_back(sinv.apply(v));
  DualCheck check = verify_dual(frame, dual.vectors);
  if (!check.ok)
    throw InternalError("canonical_dual: internal duality verification failed");
  return dual;
}

DualCheck verify_dual(const FrameSpec& frame, const std::vector<Vec>& candidate,
                      const TolerancePolicy& tol) {
  if (static_cast<int>(candidate.size()) != frame.count())
    throw Error("verify_dual: candidate count mismatch");
  for (const Vec& v : candidate)
    if (static_cast<int>(v.size()) != frame.dim)
      throw Error("verify_dual: candidate dimension mismatch");
  Matrix synth = frame.synthesis();
  Matrix cand = Matrix::from_columns(candidate);
  DualCheck out;
  out.residual = synth * cand.conjugate_transpose() -
                 Matrix::identity(frame.dim, frame.scalar_kind());
  if (frame.exact()) {
    out.ok = out.residual.is_zero();
  } else {
    double scale = std::max(1.0, synth.max_abs());
    out.ok = out.residual.max_abs() <= tol.tau * scale;
  }
  return out;
}

int excess(const FrameSpec& frame) {
  if (!frame.spans) throw Error("excess: frame must span");
  return frame.count() - frame.dim;
}

FrameSpec apply_operator(const OperatorT& op, const FrameSpec& frame) {
  if (!op.invertible) throw Error("apply_operator: operator not invertible");
  if (op.mat.rows() != frame.dim)
    throw Error("apply_operator: dimension mismatch");
  if (op.mat.kind() != frame.scalar_kind())
    throw Error("apply_operator: scalar kind mismatch");
  std::vector<Vec> mapped;
  mapped.reserve(frame.count());
  const std::vector<int>* perm = op.permutation.empty() ? nullptr : &op.permutation;
  for (int i = 0; i < frame.count(); ++i) {
    int src = perm != nullptr ? (*perm)[i] : i;
    mapped.push_back(op.mat.apply(frame.vectors[src]));
  }
  RawFrame raw{frame.dim, frame.field, frame.mode, mapped};
  return validate_frame(raw);
}

StandardFormResult standard_form(const FrameSpec& frame) {
  if (!frame.exact()) throw Error("standard_form: exact mode required");
  if (!frame.spans) throw Error("standard_form: frame must span");
  const int n = frame.dim;
  std::vector<int> chosen;
  std::vector<Vec> picked;
  for (int i = 0; i < frame.count() && static_cast<int>(chosen.size()) < n; ++i) {
    picked.push_back(frame.vectors[i]);
    if (rank_of(Matrix::from_columns(picked)) ==
        static_cast<int>(picked.size())) {
      chosen.push_back(i);
    } else {
      picked.pop_back();
    }
  }
  if (static_cast<int>(chosen.size()) < n)
    throw InternalError("standard_form: internal rank failure");
  std::vector<int> perm = chosen;
  std::vector<bool> used(frame.count(), false);
  for (int i : chosen) used[i] = true;
  for (int i = 0; i < frame.count(); ++i)
    if (!used[i]) perm.push_back(i);

  Matrix basis = Matrix::from_columns(picked);
  OperatorT op = OperatorT::from_matrix(inverse_exact(basis));
  op.permutation = perm;

  StandardFormResult out;
  out.frame = apply_operator(op, frame);
  out.transform = std::move(op);
  return out;
}

FrameBounds frame_bounds(const FrameSpec& frame, const TolerancePolicy& tol) {
  Matrix s = frame_operator(frame);
  Matrix sym(0, 0, ScalarKind::Float64);
  const int n = frame.dim;
  if (frame.field == FieldTag::Real) {
    sym = Matrix(n, n, ScalarKind::Float64);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sym.at(i, j) = Scalar(s.at(i, j).to_double());
  } else {
    // Hermitian S embeds as [[Re S, -Im S], [Im S, Re S]]; eigenvalues
    // repeat twice, the set is unchanged.
    sym = Matrix(2 * n, 2 * n, ScalarKind::Float64);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        GaussianRational g = s.at(i, j).to_gaussian();
        double re = g.re.get_d();
        double im = g.im.get_d();
        sym.at(i, j) = Scalar(re);
        sym.at(i + n, j + n) = Scalar(re);
        sym.at(i, j + n) = Scalar(-im);
        sym.at(i + n, j) = Scalar(im);
      }
  }
  std::vector<double> eig = symmetric_eigenvalues(sym, tol);
  FrameBounds out;
  out.lower = eig.front();
  out.upper = eig.back();
  out.tight = std::fabs(out.upper - out.lower) <= tol.tau * std::fabs(out.upper);
  return out;
}

bool is_dual_pair(const FrameSpec& frame, const DualFrame& dual) {
  return verify_dual(frame, dual.vectors).ok;
}

}  // namespace framecert
