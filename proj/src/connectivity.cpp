#include "hamlab/connectivity.hpp"

#include <algorithm>
#include <bit>

namespace hamlab {

namespace {

uint64_t closure(const uint64_t* rows, uint64_t active, int start) {
  uint64_t reach = 1ull << start;
  uint64_t frontier = reach;
  while (frontier) {
    uint64_t next = 0;
    do {
      int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= rows[u];
    } while (frontier);
    next &= active & ~reach;
    reach |= next;
    frontier = next;
  }
  return reach;
}

bool is_complete(const Digraph& d) {
  for (int u = 0; u < d.order(); ++u)
    if (d.out_row(u) != (d.vertex_mask() & ~(1ull << u))) return false;
  return true;
}

// Unit-capacity max-flow between x and y on the vertex-split network:
// node 2u = u_in, 2u+1 = u_out; u_in->u_out capacity 1 for u not in
// {x,y}; every arc u->v becomes u_out->v_in with effectively unbounded
// capacity (n is enough). Source x_out, sink y_in.
struct SplitFlow {
  int n;
  std::vector<std::vector<int>> cap;  // dense, 2n x 2n
  std::vector<int> parent;

  explicit SplitFlow(const Digraph& d, int x, int y)
      : n(d.order()), cap(2 * n, std::vector<int>(2 * n, 0)), parent(2 * n) {
    for (int u = 0; u < n; ++u) {
      if (u != x && u != y) cap[2 * u][2 * u + 1] = 1;
      uint64_t row = d.out_row(u);
      while (row) {
        int v = std::countr_zero(row);
        row &= row - 1;
        cap[2 * u + 1][2 * v] = n;
      }
    }
  }

  bool augment(int s, int t) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[s] = s;
    std::vector<int> queue{s};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      if (u == t) break;
      for (int v = 0; v < 2 * n; ++v)
        if (parent[v] < 0 && cap[u][v] > 0) {
          parent[v] = u;
          queue.push_back(v);
        }
    }
    if (parent[t] < 0) return false;
    for (int v = t; v != s; v = parent[v]) {
      cap[parent[v]][v] -= 1;
      cap[v][parent[v]] += 1;
    }
    return true;
  }

  // Max flow value, stopping early once `limit` is exceeded.
  int max_flow(int x, int y, int limit) {
    int s = 2 * x + 1, t = 2 * y, value = 0;
    while (value <= limit && augment(s, t)) ++value;
    return value;
  }

  // Min vertex cut read off the final residual graph: split vertices
  // whose in-node is reachable from the source while the out-node is not.
  std::vector<int> residual_cut(int x, int y) {
    int s = 2 * x + 1;
    std::vector<char> seen(2 * n, 0);
    seen[s] = 1;
    std::vector<int> queue{s};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int v = 0; v < 2 * n; ++v)
        if (!seen[v] && cap[u][v] > 0) {
          seen[v] = 1;
          queue.push_back(v);
        }
    }
    std::vector<int> cut;
    for (int u = 0; u < n; ++u)
      if (u != x && u != y && seen[2 * u] && !seen[2 * u + 1]) cut.push_back(u);
    return cut;
  }
};

}  // namespace

bool strong_masked(const uint64_t* out_rows, const uint64_t* in_rows,
                   uint64_t active) {
  if (std::popcount(active) <= 1) return true;
  int s = std::countr_zero(active);
  return closure(out_rows, active, s) == active &&
         closure(in_rows, active, s) == active;
}

bool is_strong(const Digraph& d) {
  return strong_masked(d.out_rows(), d.in_rows(), d.vertex_mask());
}

bool is_two_strong_rows(const uint64_t* out_rows, const uint64_t* in_rows,
                        int n) {
  const uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);
  // Necessary for n >= 3: both semi-degrees at least 2.
  for (int v = 0; v < n; ++v)
    if (std::popcount(out_rows[v] & full) < 2 ||
        std::popcount(in_rows[v] & full) < 2)
      return false;
  for (int v = 0; v < n; ++v)
    if (!strong_masked(out_rows, in_rows, full & ~(1ull << v))) return false;
  return true;
}

bool is_k_strong(const Digraph& d, int k) {
  if (k <= 0) return true;
  const int n = d.order();
  if (n < k + 1) return false;
  if (k == 1) return is_strong(d);
  if (k == 2)
    return is_two_strong_rows(d.out_rows(), d.in_rows(), n);

  // Deletion definition, every subset of size 0..k-1.
  if (!is_strong(d)) return false;
  for (int size = 1; size <= k - 1; ++size) {
    uint64_t count = 1;  // C(n, size)
    for (int i = 0; i < size; ++i) count = count * (n - i) / (i + 1);
    // Gosper's hack over size-`size` subsets of [0,n).
    uint64_t subset = (1ull << size) - 1;
    for (uint64_t it = 0; it < count; ++it) {
      if (!strong_masked(d.out_rows(), d.in_rows(), d.vertex_mask() & ~subset))
        return false;
      uint64_t c = subset & -subset;
      uint64_t r = subset + c;
      subset = (((r ^ subset) >> 2) / c) | r;
    }
  }
  return true;
}

ConnectivityResult vertex_connectivity(const Digraph& d) {
  const int n = d.order();
  if (n < 2)
    throw std::invalid_argument("vertex connectivity needs order >= 2");
  if (is_complete(d)) return {n - 1, std::nullopt};

  int kappa = n;  // above any achievable flow value
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || d.arc_unchecked(x, y)) continue;
      SplitFlow flow(d, x, y);
      kappa = std::min(kappa, flow.max_flow(x, y, kappa));
    }

  // Second pass: collect the canonical residual cut from every pair
  // achieving kappa and keep the lexicographically smallest separator.
  std::optional<std::vector<int>> best;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || d.arc_unchecked(x, y)) continue;
      SplitFlow flow(d, x, y);
      if (flow.max_flow(x, y, n) != kappa) continue;
      std::vector<int> cut = flow.residual_cut(x, y);
      if (!best || cut < *best) best = std::move(cut);
    }
  return {kappa, best};
}

int two_path_count(const Digraph& d, int x, int y) {
  if (x == y) throw std::invalid_argument("two_path_count needs distinct vertices");
  d.degrees(x);  // range checks
  d.degrees(y);
  return std::popcount(d.out_row(x) & d.in_row(y));
}

bool has_two_path_between(const Digraph& d, int u, int v) {
  if (u == v)
    throw std::invalid_argument("has_two_path_between needs distinct vertices");
  return two_path_count(d, u, v) >= 1 || two_path_count(d, v, u) >= 1;
}

}  // namespace hamlab
