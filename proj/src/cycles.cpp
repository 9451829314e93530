#include "hamlab/cycles.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "hamlab/connectivity.hpp"
#include "hamlab/cycle_factor.hpp"

namespace hamlab {

bool CycleLengthProfile::contains(int length) const {
  return std::binary_search(present.begin(), present.end(), length);
}

bool CycleLengthProfile::pancyclic(int n) const {
  if (n < 3) return false;
  for (int len = 3; len <= n; ++len)
    if (!contains(len)) return false;
  return true;
}

bool verify_certificate(const Digraph& d, const CycleCertificate& c) {
  const auto& vs = c.vertices;
  if (vs.size() < 2) return false;
  uint64_t seen = 0;
  for (int v : vs) {
    if (v < 0 || v >= d.order()) return false;
    if (seen >> v & 1) return false;
    seen |= 1ull << v;
  }
  for (size_t i = 0; i + 1 < vs.size(); ++i)
    if (!d.arc_unchecked(vs[i], vs[i + 1])) return false;
  return d.arc_unchecked(vs.back(), vs.front());
}

namespace {

// Workspace for cycles anchored at their minimum vertex. Vertices are
// re-indexed locally (ascending, anchor = local 0) so subset DP and the
// extraction DFS run over dense 64-bit masks.
struct AnchorContext {
  int m = 0;
  int verts[64];             // local -> global
  uint64_t out_local[64];    // out-neighbourhood, local ids
  uint64_t in_local[64];
  uint64_t close_local = 0;  // locals with an arc back to the anchor
  uint64_t include_local = 0;
  uint64_t full = 0;

  // allow/include are global masks; anchor must belong to allow and be
  // <= every include vertex, else the context is empty (m == 0).
  AnchorContext(const Digraph& d, int anchor, uint64_t allow,
                uint64_t include) {
    uint64_t usable = allow & ~((anchor == 0) ? 0 : ((1ull << anchor) - 1));
    if (!(usable >> anchor & 1)) return;
    if (include & ~usable) return;
    int local_of[64];
    for (uint64_t t = usable; t; t &= t - 1) {
      int g = std::countr_zero(t);
      local_of[g] = m;
      verts[m++] = g;
    }
    full = (m == 64) ? ~0ull : ((1ull << m) - 1);
    for (int j = 0; j < m; ++j) {
      uint64_t o = d.out_row(verts[j]) & usable;
      uint64_t i = d.in_row(verts[j]) & usable;
      uint64_t ol = 0, il = 0;
      while (o) {
        ol |= 1ull << local_of[std::countr_zero(o)];
        o &= o - 1;
      }
      while (i) {
        il |= 1ull << local_of[std::countr_zero(i)];
        i &= i - 1;
      }
      out_local[j] = ol;
      in_local[j] = il;
    }
    close_local = in_local[0];
    for (uint64_t t = include; t; t &= t - 1)
      include_local |= 1ull << local_of[std::countr_zero(t)];
  }
};

// Subset DP: reach[S] = endpoints of paths that start at the anchor and
// visit exactly S. Returns the mask of cycle lengths realized with this
// anchor as minimum vertex (bit L, L >= 2) respecting the include set.
uint64_t anchored_length_mask(const AnchorContext& cx,
                              std::vector<uint64_t>& reach) {
  if (cx.m == 0) return 0;
  reach.assign(size_t(1) << cx.m, 0);
  reach[1] = 1;
  uint64_t lengths = 0;
  const uint64_t full = cx.full;
  for (uint64_t s = 1; s < (size_t(1) << cx.m); s += 2) {
    uint64_t endpoints = reach[s];
    if (!endpoints) continue;
    int len = std::popcount(s);
    if (len >= 2 && (endpoints & cx.close_local) && !(cx.include_local & ~s))
      lengths |= 1ull << len;
    uint64_t cand = full & ~s;
    while (cand) {
      int j = std::countr_zero(cand);
      cand &= cand - 1;
      if (endpoints & cx.in_local[j]) reach[s | (1ull << j)] |= 1ull << j;
    }
  }
  return lengths;
}

// Lexicographically smallest exact-length cycle for one anchor, found by
// DFS in ascending vertex order. States (visited set, endpoint) proven
// uncompletable are memoized, so the search is bounded by the DP state
// space rather than the number of paths.
struct ExactCycleSearch {
  const AnchorContext& cx;
  int target_len;
  std::vector<uint64_t> fail_flat;                       // m <= 20
  std::unordered_map<uint64_t, uint64_t> fail_sparse;    // larger orders
  bool use_flat;
  std::vector<int> path;

  ExactCycleSearch(const AnchorContext& cx, int target_len)
      : cx(cx), target_len(target_len), use_flat(cx.m <= 20) {
    if (use_flat) fail_flat.assign(size_t(1) << cx.m, 0);
  }

  bool failed(uint64_t s, int v) const {
    if (use_flat) return fail_flat[s] >> v & 1;
    auto it = fail_sparse.find(s);
    return it != fail_sparse.end() && (it->second >> v & 1);
  }
  void mark_failed(uint64_t s, int v) {
    if (use_flat)
      fail_flat[s] |= 1ull << v;
    else
      fail_sparse[s] |= 1ull << v;
  }

  bool dfs(uint64_t s, int v, int depth) {
    if (depth == target_len)
      return (cx.close_local >> v & 1) && !(cx.include_local & ~s);
    if (failed(s, v)) return false;
    if (cx.m - std::popcount(s) < target_len - depth) return false;
    uint64_t cand = cx.out_local[v] & ~s;
    while (cand) {
      int u = std::countr_zero(cand);
      cand &= cand - 1;
      uint64_t pending = cx.include_local & ~(s | (1ull << u));
      if (std::popcount(pending) > target_len - depth - 1) continue;
      path.push_back(u);
      if (dfs(s | (1ull << u), u, depth + 1)) return true;
      path.pop_back();
    }
    mark_failed(s, v);
    return false;
  }

  std::optional<std::vector<int>> run() {
    if (cx.m == 0 || target_len < 2 || target_len > cx.m) return std::nullopt;
    path.clear();
    if (!dfs(1, 0, 1)) return std::nullopt;
    std::vector<int> seq{cx.verts[0]};
    for (int loc : path) seq.push_back(cx.verts[loc]);
    return seq;
  }
};

constexpr int kDpMaskLimit = 20;  // memory guard for the subset table

// Per-anchor length masks for all anchors in allow (DP regime).
std::vector<std::pair<int, uint64_t>> anchor_length_masks(const Digraph& d,
                                                          uint64_t allow,
                                                          uint64_t include) {
  std::vector<std::pair<int, uint64_t>> result;
  std::vector<uint64_t> buf;
  for (uint64_t t = allow; t; t &= t - 1) {
    int anchor = std::countr_zero(t);
    if (include && anchor > std::countr_zero(include)) break;
    AnchorContext cx(d, anchor, allow, include);
    if (cx.m == 0) continue;
    if (cx.m > kDpMaskLimit)
      throw std::invalid_argument("subset DP limited to 25 usable vertices");
    result.emplace_back(anchor, anchored_length_mask(cx, buf));
  }
  return result;
}

std::optional<CycleCertificate> extract_exact(const Digraph& d, int anchor,
                                              int length, uint64_t allow,
                                              uint64_t include) {
  AnchorContext cx(d, anchor, allow, include);
  ExactCycleSearch search(cx, length);
  auto seq = search.run();
  if (!seq) return std::nullopt;
  return CycleCertificate{std::move(*seq)};
}

// DP-free fallback for orders above the subset-DP threshold: try each
// anchor in order and let the memoized DFS settle existence.
std::optional<CycleCertificate> find_exact_backtracking(const Digraph& d,
                                                        int length,
                                                        uint64_t allow,
                                                        uint64_t include) {
  for (uint64_t t = allow; t; t &= t - 1) {
    int anchor = std::countr_zero(t);
    if (include && anchor > std::countr_zero(include)) break;
    if (auto c = extract_exact(d, anchor, length, allow, include)) return c;
  }
  return std::nullopt;
}

bool cheap_hamiltonicity_prefilters(const Digraph& d) {
  for (int v = 0; v < d.order(); ++v)
    if (d.out_degree(v) == 0 || d.in_degree(v) == 0) return false;
  if (!is_strong(d)) return false;
  return has_cycle_factor(d);
}

}  // namespace

std::optional<CycleCertificate> hamiltonian_cycle(
    const Digraph& d, const CycleSearchLimits& limits) {
  const int n = d.order();
  if (n < 2) throw std::invalid_argument("hamiltonian_cycle needs order >= 2");
  if (!cheap_hamiltonicity_prefilters(d)) return std::nullopt;
  if (n <= limits.dp_threshold) {
    AnchorContext cx(d, 0, d.vertex_mask(), 0);
    std::vector<uint64_t> buf;
    if (!(anchored_length_mask(cx, buf) >> n & 1)) return std::nullopt;
  }
  return find_exact_backtracking(d, n, d.vertex_mask(), 0);
}

std::optional<CycleCertificate> cycle_through_pair(
    const Digraph& d, int x, int y, const CycleSearchLimits& limits) {
  if (x == y)
    throw std::invalid_argument("cycle_through_pair needs distinct vertices");
  d.degrees(x);
  d.degrees(y);
  const int n = d.order();
  const uint64_t include = (1ull << x) | (1ull << y);
  if (n <= limits.dp_threshold) {
    auto masks = anchor_length_masks(d, d.vertex_mask(), include);
    uint64_t all = 0;
    for (auto& [a, m] : masks) all |= m;
    if (!all) return std::nullopt;
    int len = std::countr_zero(all);
    for (auto& [a, m] : masks)
      if (m >> len & 1) return extract_exact(d, a, len, d.vertex_mask(), include);
    return std::nullopt;
  }
  for (int len = 2; len <= n; ++len)
    if (auto c = find_exact_backtracking(d, len, d.vertex_mask(), include))
      return c;
  return std::nullopt;
}

std::optional<CycleCertificate> longest_cycle(const Digraph& d,
                                              std::optional<int> through,
                                              std::optional<int> avoiding,
                                              const CycleSearchLimits& limits) {
  if (through && avoiding && *through == *avoiding)
    throw std::invalid_argument("longest_cycle: through == avoiding");
  if (through) d.degrees(*through);
  if (avoiding) d.degrees(*avoiding);
  uint64_t allow = d.vertex_mask();
  if (avoiding) allow &= ~(1ull << *avoiding);
  uint64_t include = through ? (1ull << *through) : 0;
  const int max_len = std::popcount(allow);
  if (max_len < 2) return std::nullopt;

  if (std::popcount(allow) <= limits.dp_threshold) {
    auto masks = anchor_length_masks(d, allow, include);
    uint64_t all = 0;
    for (auto& [a, m] : masks) all |= m;
    if (!all) return std::nullopt;
    int len = 63 - std::countl_zero(all);
    for (auto& [a, m] : masks)
      if (m >> len & 1) return extract_exact(d, a, len, allow, include);
    return std::nullopt;
  }
  for (int len = max_len; len >= 2; --len)
    if (auto c = find_exact_backtracking(d, len, allow, include)) return c;
  return std::nullopt;
}

CycleLengthProfile cycle_length_profile(const Digraph& d,
                                        const CycleSearchLimits& limits) {
  const int n = d.order();
  CycleLengthProfile profile;
  if (n < 2) return profile;

  if (n <= limits.dp_threshold) {
    auto masks = anchor_length_masks(d, d.vertex_mask(), 0);
    uint64_t all = 0;
    for (auto& [a, m] : masks) all |= m;
    for (int len = 2; len <= n; ++len) {
      if (!(all >> len & 1)) continue;
      for (auto& [a, m] : masks)
        if (m >> len & 1) {
          auto c = extract_exact(d, a, len, d.vertex_mask(), 0);
          profile.present.push_back(len);
          profile.witnesses.push_back(std::move(*c));
          break;
        }
    }
    return profile;
  }
  for (int len = 2; len <= n; ++len)
    if (auto c = find_exact_backtracking(d, len, d.vertex_mask(), 0)) {
      profile.present.push_back(len);
      profile.witnesses.push_back(std::move(*c));
    }
  return profile;
}

bool has_hamiltonian_cycle(const Digraph& d) {
  const int n = d.order();
  if (n < 2) return false;
  if (!cheap_hamiltonicity_prefilters(d)) return false;
  if (n <= 16) {
    AnchorContext cx(d, 0, d.vertex_mask(), 0);
    std::vector<uint64_t> buf;
    return anchored_length_mask(cx, buf) >> n & 1;
  }
  return find_exact_backtracking(d, n, d.vertex_mask(), 0).has_value();
}

uint64_t cycle_lengths_mask(const Digraph& d, uint64_t allow,
                            uint64_t include) {
  uint64_t all = 0;
  for (auto& [a, m] : anchor_length_masks(d, allow, include)) all |= m;
  return all;
}

bool has_cycle_of_length(const Digraph& d, int length, uint64_t include,
                         uint64_t avoid) {
  uint64_t allow = d.vertex_mask() & ~avoid;
  if (include & avoid) return false;
  if (std::popcount(allow) <= kDpMaskLimit)
    return cycle_lengths_mask(d, allow, include) >> length & 1;
  return find_exact_backtracking(d, length, allow, include).has_value();
}

bool hamiltonian_exists_rows(const uint64_t* out_rows, const uint64_t* in_rows,
                             int n) {
  const uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);
  for (int v = 0; v < n; ++v) {
    if (!(out_rows[v] & full & ~(1ull << v))) return false;
    if (!(in_rows[v] & full & ~(1ull << v))) return false;
  }
  if (!strong_masked(out_rows, in_rows, full)) return false;

  // Plain backtracking from vertex 0; dense instances close greedily and
  // sparse ones are cut by the strongness filter above.
  struct Rec {
    const uint64_t* out;
    uint64_t full;
    bool go(int v, uint64_t visited) {
      if (visited == full) return out[v] & 1;
      uint64_t cand = out[v] & ~visited & full;
      while (cand) {
        int u = std::countr_zero(cand);
        cand &= cand - 1;
        if (go(u, visited | (1ull << u))) return true;
      }
      return false;
    }
  } rec{out_rows, full};
  return rec.go(0, 1);
}

uint64_t cycle_lengths_mask_rows(const uint64_t* out_rows, int n) {
  // Small-order anchored DP on stack buffers.
  if (n > 12)
    throw std::invalid_argument("cycle_lengths_mask_rows limited to n <= 12");
  uint64_t lengths = 0;
  uint64_t reach[1 << 12];
  for (int anchor = 0; anchor < n; ++anchor) {
    const int m = n - anchor;
    const uint64_t local_full = (1ull << m) - 1;
    uint64_t in_local[16];
    uint64_t close_local = 0;
    for (int j = 0; j < m; ++j) {
      uint64_t il = 0;
      for (int i = 0; i < m; ++i)
        if (i != j && (out_rows[anchor + i] >> (anchor + j) & 1))
          il |= 1ull << i;
      in_local[j] = il;
    }
    close_local = in_local[0];
    std::fill(reach, reach + (1ull << m), 0);
    reach[1] = 1;
    for (uint64_t s = 1; s < (1ull << m); s += 2) {
      uint64_t endpoints = reach[s];
      if (!endpoints) continue;
      int len = std::popcount(s);
      if (len >= 2 && (endpoints & close_local)) lengths |= 1ull << len;
      uint64_t cand = local_full & ~s;
      while (cand) {
        int j = std::countr_zero(cand);
        cand &= cand - 1;
        if (endpoints & in_local[j]) reach[s | (1ull << j)] |= 1ull << j;
      }
    }
  }
  return lengths;
}

}  // namespace hamlab
