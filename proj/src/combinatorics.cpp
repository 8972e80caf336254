#include "framecert/combinatorics.hpp"

#include <sstream>

namespace framecert {

namespace {

void require_sweepable(const FrameSpec& frame, const char* op) {
  if (frame.count() > kMaxSweepSize) {
    std::ostringstream os;
    os << op << ": family size " << frame.count() << " exceeds desk-scale cap "
       << kMaxSweepSize;
    throw Error(os.str());
  }
  if (!frame.exact()) {
    std::ostringstream os;
    os << op << ": exact mode required (float frames are not certifiable)";
    throw Error(os.str());
  }
}

std::vector<int> mask_to_indices(std::uint32_t mask) {
  std::vector<int> idx;
  for (int b = 0; mask != 0; ++b, mask >>= 1)
    if (mask & 1u) idx.push_back(b);
  return idx;
}

int subset_rank(const FrameSpec& frame, const std::vector<int>& sigma) {
  if (sigma.empty()) return 0;
  return rank_of(frame.synthesis().select_columns(sigma));
}

}  // namespace

void for_each_subset_colex(
    int m, int k, const std::function<bool(const std::vector<int>&)>& fn) {
  if (m < 0 || m > kMaxSweepSize) throw Error("subset sweep: bad family size");
  if (k < 0 || k > m) return;
  if (k == 0) {
    fn({});
    return;
  }
  // Gosper's hack walks fixed-popcount masks in ascending (= colex) order.
  std::uint32_t mask = (1u << k) - 1u;
  const std::uint32_t limit = k == m ? mask : (1u << m);
  while (mask < limit || (k == m && mask == limit)) {
    if (!fn(mask_to_indices(mask))) return;
    if (k == m) break;
    std::uint32_t c = mask & static_cast<std::uint32_t>(-static_cast<std::int32_t>(mask));
    std::uint32_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
}

std::vector<int> subset_complement(const std::vector<int>& sigma, int m) {
  std::vector<bool> in(m, false);
  for (int i : sigma) in[i] = true;
  std::vector<int> out;
  out.reserve(m - sigma.size());
  for (int i = 0; i < m; ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

SparkResult spark_of(const FrameSpec& frame) {
  require_sweepable(frame, "spark");
  const int m = frame.count();
  const int n = frame.dim;
  SparkResult out;
  const int max_size = std::min(m, n + 1);
  for (int k = 1; k <= max_size; ++k) {
    bool found = false;
    std::vector<int> witness;
    for_each_subset_colex(m, k, [&](const std::vector<int>& sigma) {
      if (subset_rank(frame, sigma) < k) {
        witness = sigma;
        found = true;
        return false;
      }
      return true;
    });
    if (found) {
      out.spark = k;
      out.witness = witness;
      return out;
    }
  }
  // No dependent subset up to min(m, n+1): only possible when m <= n.
  out.spark = m + 1;
  out.independent_family = true;
  return out;
}

Verdict is_full_spark(const FrameSpec& frame) {
  require_sweepable(frame, "full_spark");
  const int m = frame.count();
  const int n = frame.dim;
  if (m < n) throw Error("full_spark: fewer vectors than the dimension");
  Verdict v = Verdict::yes();
  for_each_subset_colex(m, n, [&](const std::vector<int>& sigma) {
    if (det_exact(frame.synthesis().select_columns(sigma)).is_zero()) {
      v = Verdict::no();
      v.witness_subset = sigma;
      v.reason = "dependent n-subset";
      return false;
    }
    return true;
  });
  return v;
}

Verdict complement_property(const FrameSpec& frame) {
  require_sweepable(frame, "complement_property");
  const int m = frame.count();
  const int n = frame.dim;
  Verdict v = Verdict::yes();
  for (int k = 0; k <= m / 2; ++k) {
    bool stop = false;
    for_each_subset_colex(m, k, [&](const std::vector<int>& sigma) {
      std::vector<int> comp = subset_complement(sigma, m);
      if (subset_rank(frame, sigma) < n && subset_rank(frame, comp) < n) {
        v = Verdict::no();
        v.witness_subset = sigma;
        v.reason = "neither the subset nor its complement spans";
        stop = true;
        return false;
      }
      return true;
    });
    if (stop) break;
  }
  return v;
}

Verdict mrc_check(const FrameSpec& frame, int erasures) {
  require_sweepable(frame, "mrc_check");
  const int m = frame.count();
  const int n = frame.dim;
  if (erasures < 0) throw Error("mrc_check: negative erasure count");
  if (erasures >= m)
    throw Error("mrc_check: erasure count must leave at least one vector");
  Verdict v = Verdict::yes();
  for_each_subset_colex(m, erasures, [&](const std::vector<int>& sigma) {
    std::vector<int> kept = subset_complement(sigma, m);
    if (subset_rank(frame, kept) < n) {
      v = Verdict::no();
      v.witness_subset = sigma;
      v.reason = "erasing this subset breaks spanning";
      return false;
    }
    return true;
  });
  return v;
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Yes:
      return "yes";
    case Outcome::No:
      return "no";
    case Outcome::Unknown:
      return "unknown";
  }
  return "?";
}

const char* pair_kind_name(PairKind k) {
  switch (k) {
    case PairKind::Trivial:
      return "trivial";
    case PairKind::Phase:
      return "phase";
    case PairKind::Norm:
      return "norm";
    case PairKind::WeakPhase:
      return "weak-phase";
  }
  return "?";
}

}  // namespace framecert
