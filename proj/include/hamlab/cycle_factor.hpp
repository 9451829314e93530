#pragma once

#include <optional>
#include <vector>

#include "hamlab/cycles.hpp"
#include "hamlab/digraph.hpp"

namespace hamlab {

// The four-part obstruction certifying that no cycle factor exists:
// parts partition V(D), |Y| > |Z|, Y independent, and both
// A(Y -> R1) and A(R2 -> R1 ∪ Y) are empty.
struct PartitionWitness {
  std::vector<int> y, z, r1, r2;
};

struct CycleFactor {
  std::vector<CycleCertificate> cycles;  // pairwise disjoint, cover V(D)
};

// Perfect matching test on the bipartite model: left copy x+ per vertex,
// right copy y- per vertex, edge x+y- iff x->y.
bool has_cycle_factor(const Digraph& d);  // order >= 2

// Decomposes the matching permutation into cycles; absent when no
// perfect matching exists.
std::optional<CycleFactor> extract_cycle_factor(const Digraph& d);

// Builds a verified witness from the maximal Hall violator of a maximum
// matching. Precondition: has_cycle_factor(d) is false.
PartitionWitness extract_partition_witness(const Digraph& d);

bool verify_partition_witness(const Digraph& d, const PartitionWitness& w);

}  // namespace hamlab
