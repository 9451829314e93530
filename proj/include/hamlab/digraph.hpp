#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hamlab {

// Hard cap: adjacency rows are single 64-bit words so neighbourhood
// intersections and subset-DP transitions stay word-parallel.
inline constexpr int kMaxOrder = 64;

struct DegreeSummary {
  int out = 0;
  int in = 0;
  int total() const { return out + in; }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what), line(line), column(column) {}
  int line;    // 1-based
  int column;  // 1-based, 0 when not meaningful
};

/// Loop-free simple digraph on dense vertex labels 0..n-1.
///
/// Arcs live in two bit-matrices (out-rows and in-rows) kept in sync.
/// Values are cheap to copy and meant to be treated as immutable once
/// built; every query is const and reentrant.
class Digraph {
 public:
  explicit Digraph(int order) : n_(order) {
    if (order < 1) throw std::invalid_argument("digraph order must be >= 1");
    if (order > kMaxOrder)
      throw std::invalid_argument("digraph order above supported maximum 64");
    mask_ = (order == 64) ? ~0ull : ((1ull << order) - 1);
  }

  int order() const { return n_; }
  uint64_t vertex_mask() const { return mask_; }

  bool arc(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("arc query with equal endpoints");
    return out_[u] >> v & 1;
  }
  bool arc_unchecked(int u, int v) const { return out_[u] >> v & 1; }

  bool adjacent(int u, int v) const {
    return ((out_[u] >> v) | (out_[v] >> u)) & 1;
  }

  uint64_t out_row(int u) const { return out_[u]; }
  uint64_t in_row(int u) const { return in_[u]; }
  const uint64_t* out_rows() const { return out_.data(); }
  const uint64_t* in_rows() const { return in_.data(); }

  void add_arc(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not representable");
    set_arc_unchecked(u, v, true);
  }
  void remove_arc(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    set_arc_unchecked(u, v, false);
  }
  // No validation; used by enumeration kernels on scratch instances.
  void set_arc_unchecked(int u, int v, bool present) {
    if (present) {
      out_[u] |= 1ull << v;
      in_[v] |= 1ull << u;
    } else {
      out_[u] &= ~(1ull << v);
      in_[v] &= ~(1ull << u);
    }
  }

  int out_degree(int u) const { return std::popcount(out_[u]); }
  int in_degree(int u) const { return std::popcount(in_[u]); }
  int degree(int u) const { return out_degree(u) + in_degree(u); }

  int arc_count() const {
    int c = 0;
    for (int u = 0; u < n_; ++u) c += out_degree(u);
    return c;
  }

  DegreeSummary degrees(int x) const {
    check_vertex(x);
    return {out_degree(x), in_degree(x)};
  }
  // Degrees of x restricted to the vertices in `subset_mask`; x itself
  // contributes nothing either way (no loops).
  DegreeSummary degrees(int x, uint64_t subset_mask) const {
    check_vertex(x);
    return {std::popcount(out_[x] & subset_mask),
            std::popcount(in_[x] & subset_mask)};
  }
  DegreeSummary degrees(int x, std::span<const int> subset) const {
    return degrees(x, mask_of(subset));
  }

  uint64_t mask_of(std::span<const int> vertices) const {
    uint64_t m = 0;
    for (int v : vertices) {
      check_vertex(v);
      m |= 1ull << v;
    }
    return m;
  }

  // All unordered pairs {x,y} with neither arc present, lexicographic.
  std::vector<std::pair<int, int>> non_adjacent_pairs() const;

  // Subdigraph induced by `vertices` (nonempty, duplicate-free). New
  // labels follow ascending old labels; old_to_new (if given) is sized
  // n with -1 for dropped vertices.
  Digraph induced(std::span<const int> vertices,
                  std::vector<int>* old_to_new = nullptr) const;

  bool operator==(const Digraph& o) const {
    if (n_ != o.n_) return false;
    for (int u = 0; u < n_; ++u)
      if (out_[u] != o.out_[u]) return false;
    return true;
  }

  // DG text format, one 0/1 row per vertex.
  std::string serialize() const;
  // Accepts DG (bit rows) and DGA (arc list) headers.
  static Digraph parse(std::string_view text);

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
  }

  int n_;
  uint64_t mask_;
  std::array<uint64_t, kMaxOrder> out_{};
  std::array<uint64_t, kMaxOrder> in_{};
};

// Arc-preserving bijection D1 -> D2, if one exists. Backtracking over
// degree-pair classes; meant for small orders (<= 12 or so).
std::optional<std::vector<int>> find_isomorphism(const Digraph& d1,
                                                 const Digraph& d2);

inline bool is_isomorphic(const Digraph& d1, const Digraph& d2) {
  return find_isomorphism(d1, d2).has_value();
}

}  // namespace hamlab
