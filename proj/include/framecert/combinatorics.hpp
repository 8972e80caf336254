#pragma once

#include <functional>

#include "framecert/frame.hpp"
#include "framecert/verdict.hpp"

namespace framecert {

// Subset sweeps are capped at this family size; beyond it the exact
// sweeps would no longer be desk-scale.
inline constexpr int kMaxSweepSize = 24;

// Visits all k-subsets of {0..m-1} in colexicographic order (equal to
// ascending bitmask order). Return false from the callback to stop.
void for_each_subset_colex(int m, int k,
                           const std::function<bool(const std::vector<int>&)>& fn);

struct SparkResult {
  int spark = 0;                // m+1 sentinel when all subsets independent
  bool independent_family = false;
  std::vector<int> witness;     // smallest dependent subset (0-based), empty if none
};

// Smallest dependent subset size, first witness in colex order.
SparkResult spark_of(const FrameSpec& frame);

// Every n-subset invertible (requires m >= n).
Verdict is_full_spark(const FrameSpec& frame);

// For every subset sigma, phi_sigma or its complement spans. Witness on
// failure is the first sigma (colex, smallest size first) where both
// sides fail.
Verdict complement_property(const FrameSpec& frame);

// Maximal robustness to r erasures: every (m-r)-subfamily still spans.
Verdict mrc_check(const FrameSpec& frame, int erasures);

std::vector<int> subset_complement(const std::vector<int>& sigma, int m);

}  // namespace framecert
