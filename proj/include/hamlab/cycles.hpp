#pragma once

#include <optional>
#include <vector>

#include "hamlab/digraph.hpp"

namespace hamlab {

/// Explicit cycle witness: the vertex sequence, with the closing arc
/// from back() to front() implied. Always starts at its minimum vertex.
struct CycleCertificate {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
};

// True iff the sequence is a genuine cycle of d: length >= 2, vertices
// distinct and in range, all consecutive arcs plus the closing arc present.
bool verify_certificate(const Digraph& d, const CycleCertificate& c);

struct CycleSearchLimits {
  // Subset DP handles orders up to this; larger orders fall back to
  // memoized backtracking (exact, opportunistic).
  int dp_threshold = 16;
};

// Exact Hamiltonian cycle; lexicographically smallest certificate when
// one exists. Order must be >= 2.
std::optional<CycleCertificate> hamiltonian_cycle(
    const Digraph& d, const CycleSearchLimits& limits = {});

// Some cycle through both x and y (minimum length, then lexicographically
// smallest), absent when none exists.
std::optional<CycleCertificate> cycle_through_pair(
    const Digraph& d, int x, int y, const CycleSearchLimits& limits = {});

// Maximum-length cycle subject to the optional constraints; among
// maximum-length cycles the lexicographically smallest is returned.
std::optional<CycleCertificate> longest_cycle(
    const Digraph& d, std::optional<int> through = std::nullopt,
    std::optional<int> avoiding = std::nullopt,
    const CycleSearchLimits& limits = {});

struct CycleLengthProfile {
  // Realized cycle lengths, ascending; one verifying certificate per
  // present length in the same order.
  std::vector<int> present;
  std::vector<CycleCertificate> witnesses;

  bool contains(int length) const;
  // Cycles of every length 3..n present.
  bool pancyclic(int n) const;
};

CycleLengthProfile cycle_length_profile(const Digraph& d,
                                        const CycleSearchLimits& limits = {});

// Existence-only helpers (no certificates); exact.
bool has_hamiltonian_cycle(const Digraph& d);
// Mask of realized cycle lengths within `allow`; bit L set iff a cycle of
// length L exists whose vertices lie in allow and cover `include`.
uint64_t cycle_lengths_mask(const Digraph& d, uint64_t allow,
                            uint64_t include);
inline uint64_t cycle_lengths_mask(const Digraph& d) {
  return cycle_lengths_mask(d, d.vertex_mask(), 0);
}
bool has_cycle_of_length(const Digraph& d, int length, uint64_t include,
                         uint64_t avoid);

// Raw-row kernels used by enumeration hot loops (small orders).
bool hamiltonian_exists_rows(const uint64_t* out_rows, const uint64_t* in_rows,
                             int n);
uint64_t cycle_lengths_mask_rows(const uint64_t* out_rows, int n);  // n <= 12

}  // namespace hamlab
