#include "hamlab/cycle_factor.hpp"

#include <algorithm>
#include <bit>

namespace hamlab {

namespace {

// Kuhn's augmenting-path matching on the out/in bipartite model.
// match_of_right[v] = u means the edge u+ v- is matched (arc u->v).
struct Matching {
  const Digraph& d;
  std::vector<int> match_of_right;
  int size = 0;

  explicit Matching(const Digraph& d)
      : d(d), match_of_right(d.order(), -1) {
    std::vector<char> visited(d.order());
    for (int u = 0; u < d.order(); ++u) {
      std::fill(visited.begin(), visited.end(), 0);
      if (augment(u, visited)) ++size;
    }
  }

  bool augment(int u, std::vector<char>& visited) {
    uint64_t row = d.out_row(u);
    while (row) {
      int v = std::countr_zero(row);
      row &= row - 1;
      if (visited[v]) continue;
      visited[v] = 1;
      if (match_of_right[v] < 0 || augment(match_of_right[v], visited)) {
        match_of_right[v] = u;
        return true;
      }
    }
    return false;
  }

  bool perfect() const { return size == d.order(); }

  std::vector<int> match_of_left() const {
    std::vector<int> m(d.order(), -1);
    for (int v = 0; v < d.order(); ++v)
      if (match_of_right[v] >= 0) m[match_of_right[v]] = v;
    return m;
  }
};

std::vector<int> mask_to_vec(uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

bool has_cycle_factor(const Digraph& d) {
  if (d.order() < 2)
    throw std::invalid_argument("has_cycle_factor needs order >= 2");
  return Matching(d).perfect();
}

std::optional<CycleFactor> extract_cycle_factor(const Digraph& d) {
  if (d.order() < 2) return std::nullopt;
  Matching m(d);
  if (!m.perfect()) return std::nullopt;
  auto next = m.match_of_left();
  CycleFactor factor;
  std::vector<char> used(d.order(), 0);
  for (int start = 0; start < d.order(); ++start) {
    if (used[start]) continue;
    CycleCertificate c;
    int v = start;
    do {
      c.vertices.push_back(v);
      used[v] = 1;
      v = next[v];
    } while (v != start);
    factor.cycles.push_back(std::move(c));
  }
  return factor;
}

PartitionWitness extract_partition_witness(const Digraph& d) {
  const int n = d.order();
  Matching m(d);
  if (m.perfect())
    throw std::invalid_argument(
        "extract_partition_witness requires a digraph without a cycle factor");

  // Maximal Hall violator S: left vertices reachable from unmatched left
  // vertices by alternating paths. T = N+(S) then satisfies |T| < |S|.
  auto match_left = m.match_of_left();
  uint64_t s_mask = 0;
  std::vector<int> queue;
  for (int u = 0; u < n; ++u)
    if (match_left[u] < 0) {
      s_mask |= 1ull << u;
      queue.push_back(u);
    }
  uint64_t t_mask = 0;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    uint64_t row = d.out_row(queue[qi]) & ~t_mask;
    t_mask |= row;
    while (row) {
      int v = std::countr_zero(row);
      row &= row - 1;
      int w = m.match_of_right[v];  // matched, else an augmenting path existed
      if (w >= 0 && !(s_mask >> w & 1)) {
        s_mask |= 1ull << w;
        queue.push_back(w);
      }
    }
  }

  // Set algebra on S and T = N+(S): out-neighbours of S land in T, so
  // Y = S \ T is independent with no arcs into R1 = V \ (S ∪ T), and
  // R2 = S ∩ T has no arcs into R1 ∪ Y either; |Y| > |Z| since |S| > |T|.
  PartitionWitness w;
  w.y = mask_to_vec(s_mask & ~t_mask);
  w.z = mask_to_vec(t_mask & ~s_mask);
  w.r2 = mask_to_vec(s_mask & t_mask);
  w.r1 = mask_to_vec(d.vertex_mask() & ~(s_mask | t_mask));
  if (!verify_partition_witness(d, w))
    throw std::logic_error("derived partition witness failed verification");
  return w;
}

bool verify_partition_witness(const Digraph& d, const PartitionWitness& w) {
  const int n = d.order();
  auto to_mask = [&](const std::vector<int>& part) -> std::optional<uint64_t> {
    uint64_t m = 0;
    for (int v : part) {
      if (v < 0 || v >= n) return std::nullopt;
      if (m >> v & 1) return std::nullopt;
      m |= 1ull << v;
    }
    return m;
  };
  auto ym = to_mask(w.y), zm = to_mask(w.z), r1m = to_mask(w.r1),
       r2m = to_mask(w.r2);
  if (!ym || !zm || !r1m || !r2m) return false;
  // Pairwise disjoint with union V(D).
  if ((*ym & *zm) || (*ym & *r1m) || (*ym & *r2m) || (*zm & *r1m) ||
      (*zm & *r2m) || (*r1m & *r2m))
    return false;
  if ((*ym | *zm | *r1m | *r2m) != d.vertex_mask()) return false;
  if (w.y.size() <= w.z.size()) return false;
  for (int u : w.y) {
    if (d.out_row(u) & (*ym | *r1m)) return false;  // independence + Y->R1
    if (d.in_row(u) & *ym) return false;
  }
  for (int u : w.r2)
    if (d.out_row(u) & (*r1m | *ym)) return false;
  return true;
}

}  // namespace hamlab
