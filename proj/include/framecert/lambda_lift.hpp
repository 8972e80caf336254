#pragma once

#include "framecert/frame.hpp"
#include "framecert/verdict.hpp"

namespace framecert {

struct SearchOptions {
  std::uint64_t seed = kDefaultSeed;
  int sample_budget = 10000;
  int descent_restarts = 10;
};

// Coordinates for Hermitian (resp. real symmetric) matrices:
// diagonal entries first, then Re of the upper off-diagonal pairs in
// lexicographic order, then (complex only) Im of those pairs.
struct HermitianBasis {
  int n = 0;
  FieldTag field = FieldTag::Real;

  int dims() const {
    int off = n * (n - 1) / 2;
    return field == FieldTag::Real ? n + off : n + 2 * off;
  }
  // Rational coordinate vector of a Hermitian matrix.
  std::vector<Rational> coords_of(const Matrix& a) const;
  // Reconstruct the Hermitian matrix from coordinates.
  Matrix reconstruct(const std::vector<Rational>& coords) const;
  // Row of the lifted analysis map for one frame vector phi:
  // entries pair a Hermitian A against phi phi^*.
  std::vector<Rational> row_for(const Vec& phi) const;
  // Coordinates of f f^*.
  std::vector<Rational> coords_of_outer(const Vec& f) const;
};

// m x D rational matrix of the lifted measurement map
// A |-> (<A, phi_i phi_i^*>)_i.
struct LambdaMatrix {
  HermitianBasis basis;
  Matrix mat;  // rational entries even for complex frames
};

LambdaMatrix lambda_matrix(const FrameSpec& frame);

std::vector<Rational> lambda_apply(const LambdaMatrix& lam,
                                   const std::vector<Rational>& coords);

// Null space of the lifted map in Hermitian coordinates.
std::vector<std::vector<Rational>> lambda_nullspace(const LambdaMatrix& lam);

// Searches the null space for a nonzero matrix of rank <= 2.
// Exact decision for null dimension <= 1; otherwise grid + random
// sampling + float descent with rationalization (falsifier only).
Verdict rank2_search(const LambdaMatrix& lam, const SearchOptions& opts = {});

// Phase retrieval via the lift: CertifiedYes iff no rank <= 2 matrix in
// the null space (exact when the null space is small). For real frames
// the verdict is cross-checked against the complement property.
Verdict certify_pr_via_lambda(const FrameSpec& frame,
                              const SearchOptions& opts = {});

// Exact congruence split of an indefinite Hermitian matrix of rank <= 2
// into weighted outer products c1 u u^* + c2 v v^* with c1 > 0 > c2.
struct Rank2Split {
  Vec u, v;
  Rational c1, c2;
  bool pair_exact = false;  // true when sqrt(c1/-c2) is rational
  Vec x, y;                 // equal-measurement pair when pair_exact
};
Rank2Split split_rank2(const Matrix& a);

}  // namespace framecert
