#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "framecert/matrix.hpp"

namespace framecert {

enum class Outcome { Yes, No, Unknown };

const char* outcome_name(Outcome o);

// Search accounting for randomized phases; deterministic given seed.
struct Budget {
  std::uint64_t seed = 0;
  std::uint64_t iterations = 0;
  std::string note;
};

inline constexpr std::uint64_t kDefaultSeed = 271828182845904523ull;

enum class PairKind { Trivial, Phase, Norm, WeakPhase };

const char* pair_kind_name(PairKind k);

// Equal-measurement pair built from a subset pattern sigma:
// u orthogonal to {phi_i : i in sigma}, v orthogonal to the rest,
// x = (u+v)/2, y = (v-u)/2.
struct CounterexamplePair {
  Vec x, y, u, v;
  std::vector<int> sigma;  // 0-based internally
  PairKind kind = PairKind::Phase;
};

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::optional<std::vector<int>> witness_subset;  // 0-based
  std::optional<CounterexamplePair> pair;
  std::optional<Matrix> witness_matrix;
  std::string reason;
  std::optional<Budget> budget;

  static Verdict yes() {
    Verdict v;
    v.outcome = Outcome::Yes;
    return v;
  }
  static Verdict no() {
    Verdict v;
    v.outcome = Outcome::No;
    return v;
  }
  static Verdict unknown(std::string why) {
    Verdict v;
    v.outcome = Outcome::Unknown;
    v.reason = std::move(why);
    return v;
  }
  bool yes_certified() const { return outcome == Outcome::Yes; }
  bool no_certified() const { return outcome == Outcome::No; }
};

}  // namespace framecert
