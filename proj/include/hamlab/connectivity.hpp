#pragma once

#include <optional>
#include <vector>

#include "hamlab/digraph.hpp"

namespace hamlab {

struct ConnectivityResult {
  int kappa = 0;
  // A minimum separating set when kappa < n-1; deleting it leaves a
  // non-strong digraph. Absent exactly for complete digraphs.
  std::optional<std::vector<int>> separating_set;
};

bool is_strong(const Digraph& d);

// Strongness of the subdigraph induced by `active` (raw-row kernel
// shared by all connectivity checks and the enumeration hot loops).
bool strong_masked(const uint64_t* out_rows, const uint64_t* in_rows,
                   uint64_t active);

// k-strong per the deletion definition: n >= k+1 and removing any
// <= k-1 vertices leaves a strong digraph. Agrees with
// vertex_connectivity(d).kappa >= k.
bool is_k_strong(const Digraph& d, int k);

// 2-strong fast path on raw rows (n >= 3 assumed checked by caller).
bool is_two_strong_rows(const uint64_t* out_rows, const uint64_t* in_rows,
                        int n);

// Menger vertex connectivity via unit-capacity max-flow on the
// vertex-split network; kappa = n-1 by convention on complete digraphs.
ConnectivityResult vertex_connectivity(const Digraph& d);

// |N+(x) ∩ N-(y)|: internally disjoint (x,y)-paths of length two.
int two_path_count(const Digraph& d, int x, int y);

bool has_two_path_between(const Digraph& d, int u, int v);

}  // namespace hamlab
