#include "hamlab/conditions.hpp"

#include <algorithm>
#include <charconv>

namespace hamlab {

ConditionId ConditionId::from_string(std::string_view s) {
  if (s == "condition_m") return {ConditionKind::condition_m};
  if (s == "meyniel") return {ConditionKind::meyniel};
  if (s == "manoussakis_triple") return {ConditionKind::manoussakis_triple};
  if (s == "woodall") return {ConditionKind::woodall};
  if (s == "ghouila_houri") return {ConditionKind::ghouila_houri};
  if (s == "ore_underlying") return {ConditionKind::ore_underlying};
  constexpr std::string_view prefix = "pair_sum_threshold:t=";
  if (s.substr(0, prefix.size()) == prefix) {
    std::string_view num = s.substr(prefix.size());
    int t = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), t);
    if (ec == std::errc() && ptr == num.data() + num.size())
      return {ConditionKind::pair_sum_threshold, t};
  }
  throw std::invalid_argument("unknown condition id '" + std::string(s) + "'");
}

std::string ConditionId::to_string() const {
  switch (kind) {
    case ConditionKind::condition_m: return "condition_m";
    case ConditionKind::meyniel: return "meyniel";
    case ConditionKind::manoussakis_triple: return "manoussakis_triple";
    case ConditionKind::woodall: return "woodall";
    case ConditionKind::ghouila_houri: return "ghouila_houri";
    case ConditionKind::ore_underlying: return "ore_underlying";
    case ConditionKind::pair_sum_threshold:
      return "pair_sum_threshold:t=" + std::to_string(threshold);
  }
  return "?";
}

namespace {

std::string ineq(const std::string& lhs_desc, long lhs, long rhs) {
  return lhs_desc + " = " + std::to_string(lhs) + " < " + std::to_string(rhs);
}

ConditionResult violated(std::vector<int> verts, long lhs, long rhs,
                         std::string desc) {
  ConditionResult r;
  r.satisfied = false;
  r.witness = ConditionViolation{std::move(verts), lhs, rhs, std::move(desc)};
  return r;
}

// Condition (M): every two distinct unordered non-adjacent pairs
// {x,y} != {w,z} (they may share a vertex) have total degree >= 4n-3.
ConditionResult eval_condition_m(const Digraph& d) {
  auto pairs = d.non_adjacent_pairs();
  if (pairs.size() < 2) return {true, true, std::nullopt};
  const long bound = 4l * d.order() - 3;
  std::vector<long> sums(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i)
    sums[i] = d.degree(pairs[i].first) + d.degree(pairs[i].second);
  for (size_t i = 0; i < pairs.size(); ++i)
    for (size_t j = i + 1; j < pairs.size(); ++j)
      if (sums[i] + sums[j] < bound) {
        auto [x, y] = pairs[i];
        auto [w, z] = pairs[j];
        return violated({x, y, w, z}, sums[i] + sums[j], bound,
                        ineq("d(" + std::to_string(x) + ")+d(" +
                                 std::to_string(y) + ")+d(" +
                                 std::to_string(w) + ")+d(" +
                                 std::to_string(z) + ")",
                             sums[i] + sums[j], bound));
      }
  return {true, false, std::nullopt};
}

ConditionResult eval_meyniel(const Digraph& d) {
  auto pairs = d.non_adjacent_pairs();
  if (pairs.empty()) return {true, true, std::nullopt};
  const long bound = 2l * d.order() - 1;
  for (auto [x, y] : pairs) {
    long s = d.degree(x) + d.degree(y);
    if (s < bound)
      return violated({x, y}, s, bound,
                      ineq("d(" + std::to_string(x) + ")+d(" +
                               std::to_string(y) + ")",
                           s, bound));
  }
  return {true, false, std::nullopt};
}

// Every ordered triple of distinct vertices x,y,z with {x,y} non-adjacent:
// xz missing => d(x)+d(y)+d+(x)+d-(z) >= 3n-2, and
// zx missing => d(x)+d(y)+d-(x)+d+(z) >= 3n-2.
ConditionResult eval_triple(const Digraph& d) {
  const int n = d.order();
  const long bound = 3l * n - 2;
  bool any = false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || d.adjacent(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        any = true;
        long base = d.degree(x) + d.degree(y);
        if (!d.arc_unchecked(x, z)) {
          long s = base + d.out_degree(x) + d.in_degree(z);
          if (s < bound)
            return violated({x, y, z}, s, bound,
                            ineq("d(" + std::to_string(x) + ")+d(" +
                                     std::to_string(y) + ")+d+(" +
                                     std::to_string(x) + ")+d-(" +
                                     std::to_string(z) + ")",
                                 s, bound));
        }
        if (!d.arc_unchecked(z, x)) {
          long s = base + d.in_degree(x) + d.out_degree(z);
          if (s < bound)
            return violated({x, y, z}, s, bound,
                            ineq("d(" + std::to_string(x) + ")+d(" +
                                     std::to_string(y) + ")+d-(" +
                                     std::to_string(x) + ")+d+(" +
                                     std::to_string(z) + ")",
                                 s, bound));
        }
      }
    }
  return {true, !any, std::nullopt};
}

// Woodall: for any ordered pair, either the arc x->y or d+(x)+d-(y) >= n.
ConditionResult eval_woodall(const Digraph& d) {
  const int n = d.order();
  bool any = false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || d.arc_unchecked(x, y)) continue;
      any = true;
      long s = d.out_degree(x) + d.in_degree(y);
      if (s < n)
        return violated({x, y}, s, n,
                        ineq("d+(" + std::to_string(x) + ")+d-(" +
                                 std::to_string(y) + ")",
                             s, n));
    }
  return {true, !any, std::nullopt};
}

ConditionResult eval_ghouila(const Digraph& d) {
  const int n = d.order();
  for (int x = 0; x < n; ++x) {
    if (2 * d.out_degree(x) < n)
      return violated({x}, d.out_degree(x) * 2, n,
                      ineq("2*d+(" + std::to_string(x) + ")",
                           2l * d.out_degree(x), n));
    if (2 * d.in_degree(x) < n)
      return violated({x}, d.in_degree(x) * 2, n,
                      ineq("2*d-(" + std::to_string(x) + ")",
                           2l * d.in_degree(x), n));
  }
  return {true, false, std::nullopt};
}

// Ore on the underlying simple graph: adjacency collapses -> and <-> to
// one edge, degrees count adjacent vertices.
ConditionResult eval_ore_underlying(const Digraph& d) {
  const int n = d.order();
  std::vector<int> udeg(n, 0);
  for (int x = 0; x < n; ++x)
    udeg[x] = std::popcount(d.out_row(x) | d.in_row(x));
  bool any = false;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (d.adjacent(x, y)) continue;
      any = true;
      long s = udeg[x] + udeg[y];
      if (s < n)
        return violated({x, y}, s, n,
                        ineq("deg(" + std::to_string(x) + ")+deg(" +
                                 std::to_string(y) + ")",
                             s, n));
    }
  return {true, !any, std::nullopt};
}

ConditionResult eval_pair_sum_threshold(const Digraph& d, int t) {
  auto min = min_nonadjacent_pair_sum(d);
  if (!min) return {true, true, std::nullopt};
  if (min->value >= t) return {true, false, std::nullopt};
  return violated({min->pair.first, min->pair.second}, min->value, t,
                  ineq("d(" + std::to_string(min->pair.first) + ")+d(" +
                           std::to_string(min->pair.second) + ")",
                       min->value, t));
}

}  // namespace

ConditionResult evaluate(const Digraph& d, const ConditionId& id) {
  if (d.order() < 2)
    throw std::invalid_argument("condition evaluation needs order >= 2");
  switch (id.kind) {
    case ConditionKind::condition_m: return eval_condition_m(d);
    case ConditionKind::meyniel: return eval_meyniel(d);
    case ConditionKind::manoussakis_triple: return eval_triple(d);
    case ConditionKind::woodall: return eval_woodall(d);
    case ConditionKind::ghouila_houri: return eval_ghouila(d);
    case ConditionKind::ore_underlying: return eval_ore_underlying(d);
    case ConditionKind::pair_sum_threshold:
      return eval_pair_sum_threshold(d, id.threshold);
  }
  throw std::logic_error("unhandled condition kind");
}

std::optional<MinPairSum> min_nonadjacent_pair_sum(const Digraph& d) {
  std::optional<MinPairSum> best;
  for (int x = 0; x < d.order(); ++x)
    for (int y = x + 1; y < d.order(); ++y) {
      if (d.adjacent(x, y)) continue;
      int s = d.degree(x) + d.degree(y);
      if (!best || s < best->value) best = MinPairSum{s, {x, y}};
    }
  return best;
}

bool condition_m_from_pairs(const Digraph& d,
                            std::span<const std::pair<int, int>> nonadjacent) {
  if (nonadjacent.size() < 2) return true;
  // (M) holds iff the two smallest pair sums together clear 4n-3.
  int s1 = INT32_MAX, s2 = INT32_MAX;
  for (auto [x, y] : nonadjacent) {
    int s = d.degree(x) + d.degree(y);
    if (s < s1) {
      s2 = s1;
      s1 = s;
    } else if (s < s2) {
      s2 = s;
    }
  }
  return s1 + s2 >= 4 * d.order() - 3;
}

}  // namespace hamlab
