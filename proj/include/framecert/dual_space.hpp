#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "framecert/combinatorics.hpp"
#include "framecert/frame.hpp"
#include "framecert/lambda_lift.hpp"
#include "framecert/linalg.hpp"
#include "framecert/polynomial.hpp"
#include "framecert/verdict.hpp"

namespace framecert {

// Affine coordinates on the set of duals of a spanning frame: every dual is
//   psi_t = canonical_t + sum_s kernel[s][t] * (column s of params)
// where params is dim x excess and kernel spans the dependencies of the
// frame vectors.
struct DualParameterization {
  FrameSpec base;
  std::vector<Vec> canonical;
  std::vector<Vec> kernel;

  int excess() const { return static_cast<int>(kernel.size()); }
  int param_count() const { return base.dim * excess(); }
};

DualParameterization dual_parameterization(const FrameSpec& frame);
// same, with a caller-chosen dependency basis (validated against the frame)
DualParameterization dual_parameterization_with_kernel(const FrameSpec& frame,
                                                       std::vector<Vec> kernel);

std::vector<Vec> dual_at(const DualParameterization& param,
                         const Matrix& params);
DualFrame dual_frame_at(const DualParameterization& param,
                        const Matrix& params);
// inverse of dual_at; throws if the family is not a dual of the base frame
Matrix params_of(const DualParameterization& param,
                 const std::vector<Vec>& dual);

// phase-retrieval status of a dual family (the family is treated as a frame
// in its own right)
Verdict dual_pr_verdict(const FrameSpec& base, const std::vector<Vec>& dual,
                        const SearchOptions& opts = {});

// product of all dim-subset determinants of the family; nonzero iff full spark
Scalar dual_det_product(const FrameSpec& base, const std::vector<Vec>& dual);

// Standard-form coordinates when the base is [I | A] with 2*dim - 1 vectors:
// the trailing dim-1 dual vectors are free and determine the rest.
Vec xi_coordinates(const FrameSpec& base, const std::vector<Vec>& dual);
std::vector<Vec> dual_from_xi(const FrameSpec& base,
                              const std::vector<Vec>& tail);

struct DualSample {
  Matrix params;
  Outcome pr;
};

struct DualSampleStats {
  int total = 0;
  int pr = 0;
  int non_pr = 0;
  int unknown = 0;
  uint64_t seed = 0;
  std::vector<DualSample> failures;  // non-PR or undecided draws

  double fraction() const { return total == 0 ? 0.0 : double(pr) / total; }
};

// Dyadic parameter sampling: each coordinate is center +- radius * j/2^20.
DualSampleStats sample_pr_duals(const DualParameterization& param, int count,
                                uint64_t seed, const Matrix* center = nullptr,
                                const Rational& radius = Rational(1));

struct AffineHyperplane {
  std::vector<int> subset;        // which frame indices form the determinant
  std::vector<Rational> normal;   // normal . x + offset = 0, normalized so the
  Rational offset;                // first nonzero coefficient is 1
  bool degenerate = false;        // determinant vanishes identically
};

struct VarietyResult {
  DualParameterization param;
  std::vector<AffineHyperplane> planes;
  int distinct_planes = 0;
};

// Excess-1 real frames only: each dim-subset determinant of the dual family
// is affine in the parameter vector, so the non-PR locus is a union of
// hyperplanes.
VarietyResult failure_variety_excess1(const DualParameterization& param);

struct NearestDualResult {
  Matrix params;
  std::vector<Vec> dual;
  Rational distance_lo;   // enclosure of sum_i ||g_i - h_i||
  Rational distance_hi;
  bool exact_distance = false;
  int attempts = 0;
};

// Finds a PR dual within the given positive radius of the start parameters,
// measured in the dual metric sum of Euclidean distances; the reported
// distance is exact for single-coordinate steps.
NearestDualResult nearest_pr_dual(const DualParameterization& param,
                                  const Matrix& start, const Rational& radius,
                                  uint64_t seed = kDefaultSeed);

// certified enclosure of sum_i ||g_i - h_i|| with total width <= width
void dual_distance_enclosure(const std::vector<Vec>& g,
                             const std::vector<Vec>& h, const Rational& width,
                             Rational* lo, Rational* hi);

// exact interpolation of one dim-subset determinant of the dual family as a
// polynomial in the parameters (flattened row-major: V[k][s] -> variable
// k*excess + s)
Polynomial dual_subset_det_polynomial(const DualParameterization& param,
                                      const std::vector<int>& subset);

}  // namespace framecert
