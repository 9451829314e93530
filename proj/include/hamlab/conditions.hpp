#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamlab/digraph.hpp"

namespace hamlab {

enum class ConditionKind {
  condition_m,
  meyniel,
  manoussakis_triple,
  woodall,
  ghouila_houri,
  ore_underlying,
  pair_sum_threshold,
};

struct ConditionId {
  ConditionKind kind;
  int threshold = 0;  // pair_sum_threshold only

  // Stable lowercase strings used by the CLI and JSON reports;
  // the parameterized one reads as "pair_sum_threshold:t=11".
  static ConditionId from_string(std::string_view s);
  std::string to_string() const;
};

struct ConditionViolation {
  std::vector<int> vertices;  // violating tuple, reported order
  long lhs = 0;
  long rhs = 0;
  std::string inequality;  // human-readable failed bound
};

struct ConditionResult {
  bool satisfied = true;
  bool vacuous = false;  // hypothesis class empty (e.g. no non-adjacent pairs)
  std::optional<ConditionViolation> witness;
};

// Verdict plus lexicographically smallest violating witness.
ConditionResult evaluate(const Digraph& d, const ConditionId& id);

struct MinPairSum {
  int value;
  std::pair<int, int> pair;  // lexicographically smallest achieving pair
};
std::optional<MinPairSum> min_nonadjacent_pair_sum(const Digraph& d);

// Condition (M) evaluated directly from a known non-adjacent pair set;
// used by the complement-enumeration hot path. Must agree with
// evaluate(d, condition_m).
bool condition_m_from_pairs(const Digraph& d,
                            std::span<const std::pair<int, int>> nonadjacent);

}  // namespace hamlab
