#pragma once

#include "framecert/frame.hpp"
#include "framecert/lambda_lift.hpp"
#include "framecert/verdict.hpp"

namespace framecert {

// "Weakly the same phase": one unimodular alpha aligns the phases of x
// and y on their common support. Real mode: alpha in {+1, -1}.
// Complex exact mode: decided by the cross-ratio test
// (x_j conj(y_j)) conj(x_k conj(y_k)) positive real for all common j,k.
struct PhasePredicateResult {
  bool same = false;
  // Real: +-1. Complex: the phase relation x_j conj(y_j) at the first
  // common index; exactly normalized to unit modulus when possible.
  Scalar alpha;
  bool alpha_normalized = false;
  std::vector<int> common_support;
};
PhasePredicateResult weakly_same_phase(const Vec& x, const Vec& y);

// Builds the equal-measurement pair for a subset pattern after
// verifying u _|_ phi_sigma and v _|_ phi_sigma-complement exactly.
CounterexamplePair pair_from_sigma(const FrameSpec& frame,
                                   const std::vector<int>& sigma, const Vec& u,
                                   const Vec& v);

// Checks |<x, phi_i>| == |<y, phi_i>| for all i, exactly.
bool equal_measurements(const FrameSpec& frame, const Vec& x, const Vec& y);

// Classification flags for a counterexample pair.
struct PairFlags {
  bool trivial = false;        // x == y or x == -y (real); x == theta y (complex exact scalings)
  bool phase_violation = false;
  bool norm_violation = false;
  bool weak_violation = false;
};
PairFlags classify_pair(const FrameSpec& frame, const Vec& x, const Vec& y);

// Phase retrieval: complement property for real frames (with a
// constructed counterexample pair on failure), lifted rank-2 test for
// complex frames.
Verdict certify_phase_retrieval(const FrameSpec& frame,
                                const SearchOptions& opts = {});

// Norm retrieval, real exact: for every subset pattern the two
// orthogonal complements must be mutually orthogonal.
Verdict certify_norm_retrieval_real(const FrameSpec& frame);

// Weak phase retrieval decision. Real: corank-1 patterns are decided
// exactly by the ratio interval test; larger null spaces fall back to
// seeded sampling (CertifiedNo or Unknown). Complex: falsifier only.
Verdict decide_weak_phase(const FrameSpec& frame, const SearchOptions& opts = {});

// Given a genuine phase retrieval counterexample pair, constructs an
// invertible U such that the transformed frame (U^-1)^* Phi carries a
// verified weak-phase violation (pair (Ux, Uy)).
struct LiftResult {
  OperatorT op;
  FrameSpec transformed;
  CounterexamplePair pair;
  int case_tag = 0;  // 1 = disjoint supports, 2 = shared support, 0 = identity
};
LiftResult lift_counterexample_operator(const FrameSpec& frame,
                                        const CounterexamplePair& pair);

// Orthogonal projection onto span{b1, b2} in Gram-carrying coordinates:
// vector i maps to (<phi_i, w1>, <phi_i, w2>) for the exactly
// orthogonalized basis {w1, w2}; the basis Gram diag(<w1,w1>, <w2,w2>)
// is recorded so subspace norms stay exactly computable.
struct ProjectedFrame {
  FrameSpec frame;          // 2-dim family in the carried coordinates
  Rational gram1, gram2;    // squared norms of the orthogonalized basis
  Vec w1, w2;               // the orthogonalized basis in ambient coordinates
};
ProjectedFrame project_frame(const FrameSpec& frame, const Vec& b1, const Vec& b2);

}  // namespace framecert
