#pragma once

#include <map>
#include <string>
#include <vector>

#include "framecert/frame.hpp"

namespace framecert {

struct Magnitudes {
  std::vector<Rational> squared;  // |<x, phi_i>|^2 per frame vector
};

Magnitudes measure(const FrameSpec& frame, const Vec& x);

// n = root^2 * core with core squarefree; n must be positive
void squarefree_decompose(const BigInt& n, BigInt* core, BigInt* root);

// Exact representation of sum_k sqrt(core) * coeff_k with squarefree integer
// cores; core 1 carries the rational part.
struct RadicalVector {
  int dim = 0;
  std::map<BigInt, std::vector<Rational>> parts;

  bool is_zero() const { return parts.empty(); }
  bool is_rational() const;
  std::vector<double> to_doubles() const;
  std::string str() const;
};

enum class RecoveryStatus { UniqueUpToSign, Ambiguous, Infeasible };
const char* recovery_status_name(RecoveryStatus status);

struct RecoveryResult {
  RecoveryStatus status = RecoveryStatus::Infeasible;
  std::vector<RadicalVector> candidates;  // sign-normalized, deduplicated
  double residual = 0.0;                  // float diagnostic, first candidate
  std::string note;
};

// Exact magnitude-only recovery for real exact spanning frames: enumerates
// sign patterns over a spanning subfamily and keeps exactly consistent
// signals.
RecoveryResult recover_real(const FrameSpec& frame, const Magnitudes& mags);

}  // namespace framecert
