#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hamlab/digraph.hpp"
#include "hamlab/rng.hpp"

namespace hamlab {

struct FamilySpec {
  enum class Kind {
    complete,
    complete_bipartite,
    complete_bipartite_minus_arc,
    phi,
    directed_cycle,
  };
  Kind kind;
  int a = 0;  // n for complete/phi/directed_cycle, first side otherwise
  int b = 0;  // m for phi, second side for bipartite kinds

  // Stable strings, e.g. "phi:n=8,m=6", "complete_bipartite:a=3,b=3".
  static FamilySpec from_string(std::string_view s);
  std::string to_string() const;
};

Digraph generate(const FamilySpec& spec);

// Arc-maximal candidate member of Phi_n^m (2m > n+1, m <= n-1):
// the Hamiltonian cycle x_n x_{n-1} ... x_1 x_n, every forward arc except
// the forbidden pairs at index distance m-1, and no other backward arcs.
// Degree sums over non-adjacent pairs are verified, not assumed.
Digraph phi_maximal(int n, int m);

// Membership under a given labeling (labeling[i] plays x_{i+1}).
bool is_in_phi(const Digraph& d, int n, int m,
               const std::vector<int>& labeling);

enum class EnumerationMode { exhaustive, exhaustive_complement, sampled };

struct EnumerationScope {
  int n = 0;
  EnumerationMode mode = EnumerationMode::exhaustive;
  std::optional<uint64_t> sample_count;
  uint64_t seed = 0;
  int pair_budget = 3;  // complement mode: max non-adjacent pairs
  // Predicates applied before yielding: condition ids, "strong",
  // or "k_strong:<k>".
  std::vector<std::string> prefilter;

  void validate() const;
};

std::string to_string(EnumerationMode mode);
EnumerationMode enumeration_mode_from_string(std::string_view s);

// All unordered pairs {x,y}, x < y, lexicographic.
std::vector<std::pair<int, int>> all_unordered_pairs(int n);

// Complement-mode patterns: subsets of the pair universe of size
// <= pair_budget, ordered by size then lexicographically. Pattern pairs
// are forced non-adjacent; every other pair takes one of the three
// adjacent states.
std::vector<std::vector<int>> complement_pair_patterns(int n, int pair_budget);

// Deterministic per-index digraph draw used by sampled mode: a mixture of
// (a) independent arcs with a per-draw probability and (b) near-complete
// digraphs with a few planted non-adjacent pairs. See README for the
// pinned construction.
Digraph sample_digraph(int n, uint64_t seed, uint64_t index);

// Rejection sampler in the condition-(M) hypothesis class; absent when
// the attempt budget is exhausted.
std::optional<Digraph> random_condition_m_digraph(int n, uint64_t seed,
                                                  int nonadjacent_pairs);

uint64_t enumeration_chunk_count(const EnumerationScope& scope);
// Total digraphs the scope yields before prefilters.
uint64_t enumeration_size(const EnumerationScope& scope);

namespace detail {

// Visits every orientation assignment for one complement pattern.
// The same Digraph instance is mutated in place; the reference passed to
// the visitor is only valid during the call. `nonadjacent` lists the
// pattern's forced non-adjacent pairs.
template <class Visitor>
void visit_complement_pattern(int n, std::span<const int> pattern,
                              Visitor&& visit) {
  auto pairs = all_unordered_pairs(n);
  std::vector<std::pair<int, int>> nonadj, adj;
  size_t pi = 0;
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (pi < pattern.size() && static_cast<size_t>(pattern[pi]) == i) {
      nonadj.push_back(pairs[i]);
      ++pi;
    } else {
      adj.push_back(pairs[i]);
    }
  }
  Digraph d(n);
  const size_t m = adj.size();
  // Orientation states per adjacent pair {a,b}: 0 = a->b, 1 = b->a, 2 = both.
  std::vector<uint8_t> state(m, 0);
  for (auto [a, b] : adj) d.set_arc_unchecked(a, b, true);
  std::span<const std::pair<int, int>> nspan(nonadj);
  const Digraph& cd = d;
  for (;;) {
    visit(cd, nspan);
    size_t i = 0;
    while (i < m && state[i] == 2) {
      state[i] = 0;
      d.set_arc_unchecked(adj[i].second, adj[i].first, false);
      ++i;
    }
    if (i == m) break;
    auto [a, b] = adj[i];
    if (state[i] == 0) {
      d.set_arc_unchecked(a, b, false);
      d.set_arc_unchecked(b, a, true);
      state[i] = 1;
    } else {
      d.set_arc_unchecked(a, b, true);
      state[i] = 2;
    }
  }
}

// Raw exhaustive enumeration over all 2^(n(n-1)) arc assignments,
// restricted to one chunk of the code space (codes ascending).
template <class Visitor>
void visit_raw_chunk(int n, uint64_t chunk, int chunk_bits, Visitor&& visit) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) slots.emplace_back(u, v);
  const int s = static_cast<int>(slots.size());
  const int low_bits = s - chunk_bits;
  Digraph d(n);
  for (int i = 0; i < chunk_bits; ++i)
    if (chunk >> i & 1) {
      auto [u, v] = slots[low_bits + i];
      d.set_arc_unchecked(u, v, true);
    }
  std::vector<uint8_t> state(low_bits, 0);
  std::span<const std::pair<int, int>> empty;
  const Digraph& cd = d;
  for (;;) {
    visit(cd, empty);
    int i = 0;
    while (i < low_bits && state[i] == 1) {
      state[i] = 0;
      d.set_arc_unchecked(slots[i].first, slots[i].second, false);
      ++i;
    }
    if (i == low_bits) break;
    state[i] = 1;
    d.set_arc_unchecked(slots[i].first, slots[i].second, true);
  }
}

int raw_chunk_bits(int n);

template <class Visitor>
void visit_chunk(const EnumerationScope& scope, uint64_t chunk,
                 Visitor&& visit) {
  switch (scope.mode) {
    case EnumerationMode::exhaustive:
      visit_raw_chunk(scope.n, chunk, raw_chunk_bits(scope.n),
                      std::forward<Visitor>(visit));
      return;
    case EnumerationMode::exhaustive_complement: {
      auto patterns = complement_pair_patterns(scope.n, scope.pair_budget);
      visit_complement_pattern(scope.n, patterns.at(chunk),
                               std::forward<Visitor>(visit));
      return;
    }
    case EnumerationMode::sampled: {
      const uint64_t count = scope.sample_count.value();
      const uint64_t chunks = enumeration_chunk_count(scope);
      const uint64_t per = (count + chunks - 1) / chunks;
      const uint64_t lo = chunk * per;
      const uint64_t hi = std::min(count, lo + per);
      std::span<const std::pair<int, int>> empty;
      for (uint64_t i = lo; i < hi; ++i) {
        Digraph d = sample_digraph(scope.n, scope.seed, i);
        visit(static_cast<const Digraph&>(d), empty);
      }
      return;
    }
  }
}

}  // namespace detail

// Streams the scope's digraphs in deterministic order, applying the
// scope's prefilters. The reference is only valid during the callback.
void enumerate(const EnumerationScope& scope,
               const std::function<void(const Digraph&)>& fn);

// Prefilter predicate compiled from its name (see EnumerationScope).
std::function<bool(const Digraph&)> prefilter_predicate(std::string_view name);

}  // namespace hamlab
