#include "oracles.hpp"

#include <algorithm>

namespace hamlab::testing {

namespace {

void cycle_dfs(const Digraph& d, int anchor, std::vector<int>& path,
               std::vector<char>& on_path,
               std::vector<std::vector<int>>& out) {
  int v = path.back();
  for (int u = anchor; u < d.order(); ++u) {
    if (!d.arc_unchecked(v, u)) continue;
    if (u == anchor) {
      if (path.size() >= 2) out.push_back(path);
      continue;
    }
    if (on_path[u]) continue;
    path.push_back(u);
    on_path[u] = 1;
    cycle_dfs(d, anchor, path, on_path, out);
    on_path[u] = 0;
    path.pop_back();
  }
}

bool strong_after_deleting(const Digraph& d, const std::vector<int>& removed) {
  std::vector<char> gone(d.order(), 0);
  for (int v : removed) gone[v] = 1;
  std::vector<int> kept;
  for (int v = 0; v < d.order(); ++v)
    if (!gone[v]) kept.push_back(v);
  if (kept.size() <= 1) return true;
  // Forward and backward reachability from kept[0] by plain BFS.
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<char> seen(d.order(), 0);
    std::vector<int> queue{kept[0]};
    seen[kept[0]] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int w : kept) {
        if (seen[w]) continue;
        bool edge = dir == 0 ? d.arc_unchecked(u, w) : d.arc_unchecked(w, u);
        if (edge) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    for (int w : kept)
      if (!seen[w]) return false;
  }
  return true;
}

void subsets_of_size(int n, int k, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out, int start) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets_of_size(n, k, cur, out, i + 1);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> all_simple_cycles(const Digraph& d) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<char> on_path(d.order(), 0);
  for (int a = 0; a < d.order(); ++a) {
    path.assign(1, a);
    on_path.assign(d.order(), 0);
    on_path[a] = 1;
    cycle_dfs(d, a, path, on_path, out);
  }
  return out;
}

int deletion_connectivity(const Digraph& d) {
  const int n = d.order();
  for (int k = 0; k <= n - 2; ++k) {
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    subsets_of_size(n, k, cur, subsets, 0);
    for (const auto& s : subsets)
      if (!strong_after_deleting(d, s)) return k;
  }
  return n - 1;
}

int naive_two_path_count(const Digraph& d, int x, int y) {
  int count = 0;
  for (int z = 0; z < d.order(); ++z) {
    if (z == x || z == y) continue;
    if (d.arc_unchecked(x, z) && d.arc_unchecked(z, y)) ++count;
  }
  return count;
}

}  // namespace hamlab::testing
