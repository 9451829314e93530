#include "hamlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <thread>

#include "hamlab/conditions.hpp"
#include "hamlab/connectivity.hpp"
#include "hamlab/cycle_factor.hpp"
#include "hamlab/cycles.hpp"
#include "hamlab/version.hpp"

namespace hamlab {

namespace {

bool ham_fast(const Digraph& d) {
  return d.order() >= 2 &&
         hamiltonian_exists_rows(d.out_rows(), d.in_rows(), d.order());
}

bool hamiltonian_conclusion(const Digraph& d, std::string* detail) {
  if (ham_fast(d)) return true;
  if (detail) *detail = "no Hamiltonian cycle";
  return false;
}

uint64_t small_lengths_mask(const Digraph& d) {
  if (d.order() <= 12) return cycle_lengths_mask_rows(d.out_rows(), d.order());
  return cycle_lengths_mask(d);
}

bool pancyclic_conclusion(const Digraph& d, std::string* detail) {
  const int n = d.order();
  uint64_t mask = small_lengths_mask(d);
  for (int len = 3; len <= n; ++len)
    if (!(mask >> len & 1)) {
      if (detail) *detail = "no cycle of length " + std::to_string(len);
      return false;
    }
  return true;
}

bool condition_holds(const Digraph& d, ConditionKind kind) {
  return evaluate(d, {kind}).satisfied;
}

bool is_symmetric_digraph(const Digraph& d) {
  for (int u = 0; u < d.order(); ++u)
    if (d.out_row(u) != d.in_row(u)) return false;
  return true;
}

// Non-adjacent pairs {x,y} with d(x)+d(y) <= bound.
std::vector<std::pair<int, int>> pairs_with_sum_at_most(const Digraph& d,
                                                        int bound) {
  std::vector<std::pair<int, int>> out;
  for (auto [x, y] : d.non_adjacent_pairs())
    if (d.degree(x) + d.degree(y) <= bound) out.emplace_back(x, y);
  return out;
}

bool hyp_m_two_strong(const Digraph& d) {
  return d.order() >= 3 && condition_holds(d, ConditionKind::condition_m) &&
         is_k_strong(d, 2);
}

bool fast_hyp_m_two_strong(const Digraph& d,
                           std::span<const std::pair<int, int>> nonadj) {
  return d.order() >= 3 && condition_m_from_pairs(d, nonadj) &&
         is_k_strong(d, 2);
}

int two_cycles_through(const Digraph& d, int v) {
  return std::popcount(d.out_row(v) & d.in_row(v));
}

// trichotomy-1.10 conclusion, branch by branch.
bool trichotomy_conclusion(const Digraph& d, std::string* detail) {
  const int n = d.order();
  uint64_t mask = small_lengths_mask(d);
  bool pan = true;
  for (int len = 3; len <= n; ++len)
    if (!(mask >> len & 1)) pan = false;
  if (pan) return true;

  if (n % 2 == 0) {
    Digraph kb = generate({FamilySpec::Kind::complete_bipartite, n / 2, n / 2});
    Digraph kbm = generate(
        {FamilySpec::Kind::complete_bipartite_minus_arc, n / 2, n / 2});
    if (is_isomorphic(d, kb) || is_isomorphic(d, kbm)) return true;
  }

  // Branch (c): some Hamiltonian-cycle labeling places d in Phi_n^m.
  std::vector<std::vector<int>> ham_cycles;
  {
    struct Collect {
      const Digraph& d;
      uint64_t full;
      std::vector<int> path{0};
      std::vector<std::vector<int>>& out;
      void go(int v, uint64_t visited) {
        if (visited == full) {
          if (d.arc_unchecked(v, 0)) out.push_back(path);
          return;
        }
        uint64_t cand = d.out_row(v) & ~visited & full;
        while (cand) {
          int u = std::countr_zero(cand);
          cand &= cand - 1;
          path.push_back(u);
          go(u, visited | (1ull << u));
          path.pop_back();
        }
      }
    } collect{d, d.vertex_mask(), {0}, ham_cycles};
    collect.go(0, 1);
  }
  for (const auto& cyc : ham_cycles) {
    // The cycle runs c_0 -> c_1 -> ...; condition (ii) wants the arcs
    // x_n -> x_{n-1} -> ... -> x_1 -> x_n, so x_{n-i} = c_{(r+i) mod n}.
    for (int r = 0; r < n; ++r) {
      std::vector<int> labeling(n);
      for (int i = 0; i < n; ++i) labeling[n - 1 - i] = cyc[(r + i) % n];
      for (int m = (n + 3) / 2; m <= n - 1; ++m) {
        if (2 * m <= n + 1) continue;
        if (is_in_phi(d, n, m, labeling)) return true;
      }
    }
  }
  if (detail)
    *detail = "not pancyclic, not a bipartite exception, no Phi labeling";
  return false;
}

bool equiv_33_conclusion(const Digraph& d, std::string* detail) {
  const int n = d.order();
  const bool ham = ham_fast(d);
  for (auto [x, y] : pairs_with_sum_at_most(d, 2 * n - 2)) {
    bool through =
        cycle_lengths_mask(d, d.vertex_mask(), (1ull << x) | (1ull << y)) != 0;
    if (through != ham) {
      if (detail)
        *detail = "pair {" + std::to_string(x) + "," + std::to_string(y) +
                  "}: hamiltonian=" + (ham ? "true" : "false") +
                  " cycle_through_pair=" + (through ? "true" : "false");
      return false;
    }
  }
  return true;
}

bool nearham_36_conclusion(const Digraph& d, std::string* detail) {
  const int n = d.order();
  if (ham_fast(d)) return true;
  for (auto [u, v] : pairs_with_sum_at_most(d, 2 * n - 2)) {
    bool via_u = has_cycle_of_length(d, n - 1, 1ull << u, 1ull << v);
    bool via_v = has_cycle_of_length(d, n - 1, 1ull << v, 1ull << u);
    if (!via_u && !via_v) {
      if (detail)
        *detail = "pair {" + std::to_string(u) + "," + std::to_string(v) +
                  "}: not Hamiltonian and no (n-1)-cycle avoiding either vertex";
      return false;
    }
  }
  return true;
}

bool twocycle_37_conclusion(const Digraph& d, std::string* detail) {
  const int n = d.order();
  for (auto [u, v] : pairs_with_sum_at_most(d, 2 * n - 2)) {
    if (d.degree(u) > n - 1 || d.degree(v) > n - 1) {
      if (detail)
        *detail = "pair {" + std::to_string(u) + "," + std::to_string(v) +
                  "}: degree above n-1";
      return false;
    }
    if (two_cycles_through(d, u) > 1 || two_cycles_through(d, v) > 1) {
      if (detail)
        *detail = "pair {" + std::to_string(u) + "," + std::to_string(v) +
                  "}: more than one 2-cycle through an endpoint";
      return false;
    }
  }
  return true;
}

bool longcycle_17_conclusion(const Digraph& d, std::string* detail) {
  const int n = d.order();
  uint64_t mask = small_lengths_mask(d);
  const int want = std::max(2, n - 1);
  if (mask >> want) return true;
  if (detail) *detail = "no cycle of length >= " + std::to_string(n - 1);
  return false;
}

bool lemma_32_conclusion(const Digraph& d, std::string* detail) {
  const int n = d.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || d.arc_unchecked(x, y)) continue;
      int lower = d.out_degree(x) + d.in_degree(y) - (n - 2);
      if (lower < 1) continue;
      if (two_path_count(d, x, y) < lower) {
        if (detail)
          *detail = "pair (" + std::to_string(x) + "," + std::to_string(y) +
                    "): " + std::to_string(two_path_count(d, x, y)) +
                    " two-paths, bound " + std::to_string(lower);
        return false;
      }
    }
  return true;
}

bool lemma_35_conclusion(const Digraph& d, std::string* detail) {
  const int n = d.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (cycle_lengths_mask(d, d.vertex_mask(), (1ull << u) | (1ull << v)))
        continue;
      std::string pair_str =
          "{" + std::to_string(u) + "," + std::to_string(v) + "}";
      if (d.adjacent(u, v)) {
        if (detail) *detail = "cycle-free pair " + pair_str + " is adjacent";
        return false;
      }
      if (has_two_path_between(d, u, v)) {
        if (detail)
          *detail = "cycle-free pair " + pair_str + " has a two-path";
        return false;
      }
      if (d.degree(u) + d.degree(v) > 2 * n - 4) {
        if (detail)
          *detail = "cycle-free pair " + pair_str + " has degree sum above 2n-4";
        return false;
      }
    }
  return true;
}

// lemma-3.1 quantifies over (cycle, external vertex) instances. Cycles
// come from the length-profile witnesses rather than all cycles; the
// report carries the number of instances examined.
std::pair<uint64_t, bool> lemma_31_scan(const Digraph& d, std::string* detail) {
  const int n = d.order();
  uint64_t instances = 0;
  auto profile = cycle_length_profile(d);
  for (const auto& wit : profile.witnesses) {
    const int m = wit.length();
    if (m > n - 1) continue;
    uint64_t cmask = 0;
    for (int v : wit.vertices) cmask |= 1ull << v;
    for (int x = 0; x < n; ++x) {
      if (cmask >> x & 1) continue;
      if (d.degrees(x, cmask).total() < m + 1) continue;
      ++instances;
      uint64_t sub_mask = cycle_lengths_mask(d, cmask | (1ull << x), 0);
      for (int len = 2; len <= m + 1; ++len)
        if (!(sub_mask >> len & 1)) {
          if (detail)
            *detail = "cycle of length " + std::to_string(m) + " plus vertex " +
                      std::to_string(x) + ": missing cycle length " +
                      std::to_string(len);
          return {instances, false};
        }
    }
  }
  return {instances, true};
}

bool factor_14_conclusion(const Digraph& d, std::string* detail) {
  bool matching_route = has_cycle_factor(d);
  bool witness_route = partition_witness_exists_exhaustive(d);
  if (matching_route == witness_route) {
    if (detail)
      *detail = std::string("matching says factor=") +
                (matching_route ? "true" : "false") +
                ", partition oracle says witness=" +
                (witness_route ? "true" : "false");
    return false;
  }
  if (!matching_route) {
    PartitionWitness w = extract_partition_witness(d);
    if (!verify_partition_witness(d, w)) {
      if (detail) *detail = "extracted partition witness failed verification";
      return false;
    }
  }
  return true;
}

std::vector<TheoremCase> build_registry() {
  std::vector<TheoremCase> reg;

  {
    TheoremCase tc;
    tc.id = "manoussakis-1.12";
    tc.statement = "2-strong + condition (M) implies Hamiltonian";
    tc.hypothesis = hyp_m_two_strong;
    tc.fast_hypothesis = fast_hyp_m_two_strong;
    tc.conclusion = hamiltonian_conclusion;
    tc.fast_conclusion = ham_fast;
    reg.push_back(std::move(tc));
  }
  {
    TheoremCase tc;
    tc.id = "meyniel-1.8";
    tc.statement = "strong + all non-adjacent degree sums >= 2n-1 implies Hamiltonian";
    tc.hypothesis = [](const Digraph& d) {
      return d.order() >= 2 && is_strong(d) &&
             condition_holds(d, ConditionKind::meyniel);
    };
    tc.conclusion = hamiltonian_conclusion;
    tc.fast_conclusion = ham_fast;
    reg.push_back(std::move(tc));
  }
  {
    TheoremCase tc;
    tc.id = "triple-1.1";
    tc.statement = "strong (n>=4) + triple degree condition implies Hamiltonian";
    tc.hypothesis = [](const Digraph& d) {
      return d.order() >= 4 && is_strong(d) &&
             condition_holds(d, ConditionKind::manoussakis_triple);
    };
    tc.conclusion = hamiltonian_conclusion;
    tc.fast_conclusion = ham_fast;
    reg.push_back(std::move(tc));
  }
  {
    TheoremCase tc;
    tc.id = "trichotomy-1.10";
    tc.statement =
        "strong + Meyniel: pancyclic, or K*_{n/2,n/2} (possibly minus an arc), "
        "or a Phi_n^m member";
    tc.max_order = 12;
    tc.hypothesis = [](const Digraph& d) {
      return d.order() >= 3 && is_strong(d) &&
             condition_holds(d, ConditionKind::meyniel);
    };
    tc.conclusion = trichotomy_conclusion;
    reg.push_back(std::move(tc));
  }
  {
    TheoremCase tc;
    tc.id = "pancyclic-1.16";
    tc.statement =
        "2-strong + (M) (n>=6) with a pair of degree sum <= 2n-4 implies pancyclic";
    tc.hypothesis = [](const Digraph& d) {
      return d.order() >= 6 && hyp_m_two_strong(d) &&
             !pairs_with_sum_at_most(d, 2 * d.order() - 4).empty();
    };
    tc.fast_hypothesis = [](const Digraph& d,
                            std::span<const std::pair<int, int>> nonadj) {
      const int n = d.order();
      if (n < 6) return false;
      bool small_pair = false;
      for (auto [x, y] : nonadj)
        if (d.degree(x) + d.degree(y) <= 2 * n - 4) {
          small_pair = true;
          break;
        }
      return small_pair && fast_hyp_m_two_strong(d, nonadj);
    };
    tc.conclusion = pancyclic_conclusion;
    reg.push_back(std::move(tc));
  }
  {
    TheoremCase tc;
    tc.id = "equiv-3.3";
    tc.statement =
        "under 2-strong + (M), for every non-adjacent pair with degree sum "
        "<= 2n-2: Hamiltonian iff some cycle passes through the pair";
    tc.biconditional = true;
    tc.hypothesis = [](const Digraph& d) {
      return d.order() >= 3 && hyp_m_two_strong(d) &&
             !pairs_with_sum_at_most(d, 2 * d.order() - 2).empty();
    };
    tc.fast_hypothesis = [](const Digraph& d,
                            std::span<const std::pair<int, int>> nonadj) {
      const int n = d.order();
      if (n < 3) return false;
      bool qualifying = false;
      for (auto [x, y] : nonadj)
        if (d.degree(x) + d.degree(y) <= 2 * n - 2) {
          qualifying = true;
          break;
        }
      return qualifying && fast_hyp_m_two_strong(d, nonadj);
    };
    tc.conclusion = equiv_33_conclusion;
    reg.push_back(std::move(tc));
  }
  {
    TheoremCase tc;
    tc.id = "onepair-3.4";
    tc.statement = "2-strong with at most one non-adjacent pair implies Hamiltonian";
    tc.hypothesis = [](const Digraph& d) {
      return d.order() >= 3 && d.non_adjacent_pairs().size() <= 1 &&
             is_k_strong(d, 2);
    };
    tc.fast_hypothesis = [](const Digraph& d,
                            std::span<const std::pair<int, int>> nonadj) {
      return d.order() >= 3 && nonadj.size() <= 1 && is_k_strong(d, 2);
    };
    tc.conclusion = hamiltonian_conclusion;
    tc.fast_conclusion = ham_fast;
    reg.push_back(std::move(tc));
  }
  {
    TheoremCase tc;
    tc.id = "nearham-3.6";
    tc.statement =
        "under 2-strong + (M), a pair with degree sum <= 2n-2 forces a "
        "Hamiltonian cycle or an (n-1)-cycle through one pair vertex avoiding "
        "the other";
    tc.hypothesis = [](const Digraph& d) {
      return d.order() >= 3 && hyp_m_two_strong(d) &&
             !pairs_with_sum_at_most(d, 2 * d.order() - 2).empty();
    };
    tc.fast_hypothesis = [](const Digraph& d,
                            std::span<const std::pair<int, int>> nonadj) {
      const int n = d.order();
      if (n < 3) return false;
      bool qualifying = false;
      for (auto [x, y] : nonadj)
        if (d.degree(x) + d.degree(y) <= 2 * n - 2) {
          qualifying = true;
          break;
        }
      return qualifying && fast_hyp_m_two_strong(d, nonadj);
    };
    tc.conclusion = nearham_36_conclusion;
    tc.classify = [](const Digraph& d) { return ham_fast(d) ? 0 : 1; };
    tc.class_labels = {"hamiltonian", "near_cycle_only"};
    reg.push_back(std::move(tc));
  }
  {
    TheoremCase tc;
    tc.id = "twocycle-3.7";
    tc.statement =
        "2-strong + (M) + non-Hamiltonian: qualifying pair vertices have "
        "degree <= n-1 and at most one 2-cycle through each";
    tc.hypothesis = [](const Digraph& d) {
      return d.order() >= 3 && hyp_m_two_strong(d) && !ham_fast(d) &&
             !pairs_with_sum_at_most(d, 2 * d.order() - 2).empty();
    };
    tc.conclusion = twocycle_37_conclusion;
    reg.push_back(std::move(tc));
  }
  {
    TheoremCase tc;
    tc.id = "longcycle-1.7";
    tc.statement = "strong + (M) implies a cycle of length at least n-1";
    tc.hypothesis = [](const Digraph& d) {
      return d.order() >= 2 && is_strong(d) &&
             condition_holds(d, ConditionKind::condition_m);
    };
    tc.conclusion = longcycle_17_conclusion;
    reg.push_back(std::move(tc));
  }
  {
    TheoremCase tc;
    tc.id = "woodall-1.13";
    tc.statement =
        "every ordered pair has the arc or d+(x)+d-(y) >= n implies Hamiltonian";
    tc.hypothesis = [](const Digraph& d) {
      return d.order() >= 2 && condition_holds(d, ConditionKind::woodall);
    };
    tc.conclusion = hamiltonian_conclusion;
    tc.fast_conclusion = ham_fast;
    reg.push_back(std::move(tc));
  }
  {
    TheoremCase tc;
    tc.id = "ghouila-1.14";
    tc.statement = "all semi-degrees >= n/2 implies Hamiltonian";
    tc.hypothesis = [](const Digraph& d) {
      return d.order() >= 2 && condition_holds(d, ConditionKind::ghouila_houri);
    };
    tc.conclusion = hamiltonian_conclusion;
    tc.fast_conclusion = ham_fast;
    reg.push_back(std::move(tc));
  }
  {
    TheoremCase tc;
    tc.id = "ore-1.15";
    tc.statement =
        "symmetric digraphs whose underlying graph satisfies Ore's bound are "
        "Hamiltonian";
    tc.hypothesis = [](const Digraph& d) {
      return d.order() >= 3 && is_symmetric_digraph(d) &&
             condition_holds(d, ConditionKind::ore_underlying);
    };
    tc.conclusion = hamiltonian_conclusion;
    tc.fast_conclusion = ham_fast;
    reg.push_back(std::move(tc));
  }
  {
    TheoremCase tc;
    tc.id = "factor-1.4";
    tc.statement =
        "cycle factor exists iff no (Y,Z,R1,R2) partition witness exists";
    tc.biconditional = true;
    tc.max_order = 12;
    tc.hypothesis = [](const Digraph& d) { return d.order() >= 2; };
    tc.conclusion = factor_14_conclusion;
    reg.push_back(std::move(tc));
  }
  {
    TheoremCase tc;
    tc.id = "lemma-3.1";
    tc.statement =
        "a cycle of length m plus an external vertex of degree >= m+1 into it "
        "forces all cycle lengths 2..m+1";
    tc.max_order = 7;
    tc.hypothesis = [](const Digraph& d) {
      return d.order() >= 3 && lemma_31_scan(d, nullptr).first > 0;
    };
    tc.conclusion = [](const Digraph& d, std::string* detail) {
      return lemma_31_scan(d, detail).second;
    };
    tc.count_instances = [](const Digraph& d) {
      return lemma_31_scan(d, nullptr).first;
    };
    reg.push_back(std::move(tc));
  }
  {
    TheoremCase tc;
    tc.id = "lemma-3.2";
    tc.statement =
        "missing arc x->y forces at least d+(x)+d-(y)-(n-2) disjoint two-paths";
    tc.hypothesis = [](const Digraph& d) {
      const int n = d.order();
      if (n < 2) return false;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (x != y && !d.arc_unchecked(x, y)) return true;
      return false;
    };
    tc.conclusion = lemma_32_conclusion;
    reg.push_back(std::move(tc));
  }
  {
    TheoremCase tc;
    tc.id = "lemma-3.5";
    tc.statement =
        "in a 2-strong digraph, a pair with no common cycle is non-adjacent, "
        "two-path-free, and has degree sum <= 2n-4";
    tc.hypothesis = [](const Digraph& d) {
      return d.order() >= 3 && is_k_strong(d, 2);
    };
    tc.conclusion = lemma_35_conclusion;
    reg.push_back(std::move(tc));
  }
  return reg;
}

}  // namespace

const std::vector<TheoremCase>& theorem_registry() {
  static const std::vector<TheoremCase> registry = build_registry();
  return registry;
}

const TheoremCase* find_theorem(std::string_view id) {
  for (const auto& tc : theorem_registry())
    if (tc.id == id) return &tc;
  return nullptr;
}

const std::vector<std::string>& registry_expected_ids() {
  static const std::vector<std::string> ids = {
      "manoussakis-1.12", "meyniel-1.8",  "triple-1.1",  "trichotomy-1.10",
      "pancyclic-1.16",   "equiv-3.3",    "onepair-3.4", "nearham-3.6",
      "twocycle-3.7",     "longcycle-1.7", "woodall-1.13", "ghouila-1.14",
      "ore-1.15",         "factor-1.4",   "lemma-3.1",   "lemma-3.2",
      "lemma-3.5",
  };
  return ids;
}

bool partition_witness_exists_exhaustive(const Digraph& d) {
  const int n = d.order();
  if (n > 12)
    throw std::invalid_argument("partition oracle limited to n <= 12");

  // Assign vertices 0..n-1 to Y/R1/R2/Z in order, pruning each arc
  // emptiness and independence constraint as soon as it can fail.
  struct Search {
    const Digraph& d;
    int n;
    bool go(int v, uint64_t y, uint64_t z, uint64_t r1, uint64_t r2, int yc,
            int zc) {
      if (v == n) return yc > zc;
      if (yc + (n - v) <= zc) return false;  // |Y| can no longer beat |Z|
      const uint64_t out = d.out_row(v), in = d.in_row(v);
      // v -> Y: independent of Y, no arcs to R1, none from R2.
      if (!((out | in) & y) && !(out & r1) && !(in & r2))
        if (go(v + 1, y | (1ull << v), z, r1, r2, yc + 1, zc)) return true;
      // v -> R1: no arcs from Y or R2 into v.
      if (!(in & (y | r2)))
        if (go(v + 1, y, z, r1 | (1ull << v), r2, yc, zc)) return true;
      // v -> R2: no arcs from v into R1 or Y.
      if (!(out & (r1 | y)))
        if (go(v + 1, y, z, r1, r2 | (1ull << v), yc, zc)) return true;
      // v -> Z: unconstrained.
      return go(v + 1, y, z | (1ull << v), r1, r2, yc, zc + 1);
    }
  } search{d, n};
  return search.go(0, 0, 0, 0, 0, 0, 0);
}

namespace {

struct ChunkResult {
  uint64_t examined = 0;
  uint64_t hits = 0;
  uint64_t instances = 0;
  std::vector<FailureRecord> failures;
  std::vector<uint64_t> class_counts;
};

// problem-1.17 sampled draws: index i requests 1 + (i mod k_max) planted
// non-adjacent pairs from the condition-(M) rejection sampler.
std::optional<Digraph> explore_sample(const EnumerationScope& scope,
                                      uint64_t index) {
  const int pair_universe = scope.n * (scope.n - 1) / 2;
  const int k_max = std::max(1, std::min(scope.pair_budget, pair_universe));
  const int k = 1 + static_cast<int>(index % k_max);
  return random_condition_m_digraph(scope.n, substream_seed(scope.seed, index),
                                    k);
}

ChunkResult run_chunk(const TheoremCase& tc, const EnumerationScope& scope,
                      uint64_t chunk, bool sampled_explore) {
  ChunkResult result;
  if (tc.classify) result.class_counts.assign(tc.class_labels.size(), 0);
  std::vector<std::function<bool(const Digraph&)>> filters;
  for (const auto& name : scope.prefilter)
    filters.push_back(prefilter_predicate(name));

  auto process = [&](const Digraph& d,
                     std::span<const std::pair<int, int>> nonadj,
                     bool pattern_known) {
    for (const auto& f : filters)
      if (!f(d)) return;
    ++result.examined;
    bool hyp = (pattern_known && tc.fast_hypothesis)
                   ? tc.fast_hypothesis(d, nonadj)
                   : tc.hypothesis(d);
    if (!hyp) return;
    ++result.hits;
    if (tc.count_instances) result.instances += tc.count_instances(d);
    if (tc.classify) {
      int cls = tc.classify(d);
      if (cls >= 0 && cls < static_cast<int>(result.class_counts.size()))
        ++result.class_counts[cls];
    }
    bool ok = tc.fast_conclusion ? tc.fast_conclusion(d) : true;
    if (tc.fast_conclusion && ok) return;
    std::string detail;
    if (!tc.conclusion(d, &detail))
      result.failures.push_back({d.serialize(), detail});
  };

  if (sampled_explore) {
    const uint64_t count = scope.sample_count.value();
    const uint64_t chunks = enumeration_chunk_count(scope);
    const uint64_t per = (count + chunks - 1) / chunks;
    const uint64_t lo = chunk * per;
    const uint64_t hi = std::min(count, lo + per);
    for (uint64_t i = lo; i < hi; ++i)
      if (auto d = explore_sample(scope, i)) process(*d, {}, false);
    return result;
  }

  const bool pattern_known =
      scope.mode == EnumerationMode::exhaustive_complement;
  detail::visit_chunk(scope, chunk,
                      [&](const Digraph& d,
                          std::span<const std::pair<int, int>> nonadj) {
                        process(d, nonadj, pattern_known);
                      });
  return result;
}

VerificationReport run_case(const TheoremCase& tc,
                            const EnumerationScope& scope,
                            const VerifyOptions& options, bool exploration) {
  scope.validate();
  if (scope.n > tc.max_order)
    throw std::invalid_argument(tc.id + " runs are limited to n <= " +
                                std::to_string(tc.max_order));
  const auto start = std::chrono::steady_clock::now();

  const bool sampled_explore =
      exploration && scope.mode == EnumerationMode::sampled;
  const uint64_t chunks = enumeration_chunk_count(scope);
  std::vector<ChunkResult> results(chunks);
  const int threads =
      static_cast<int>(std::min<uint64_t>(std::max(1, options.threads), chunks));
  std::atomic<uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      uint64_t c = next.fetch_add(1);
      if (c >= chunks) break;
      results[c] = run_chunk(tc, scope, c, sampled_explore);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  VerificationReport report;
  report.theorem_id = tc.id;
  report.scope = scope;
  report.exploration = exploration;
  std::vector<uint64_t> class_counts;
  if (tc.classify) class_counts.assign(tc.class_labels.size(), 0);
  uint64_t instances = 0;
  for (const auto& r : results) {
    report.digraphs_examined += r.examined;
    report.hypothesis_hits += r.hits;
    instances += r.instances;
    for (size_t i = 0; i < r.class_counts.size(); ++i)
      class_counts[i] += r.class_counts[i];
    report.conclusion_failures.insert(report.conclusion_failures.end(),
                                      r.failures.begin(), r.failures.end());
  }
  // Canonical failure order regardless of which worker found them.
  std::sort(report.conclusion_failures.begin(),
            report.conclusion_failures.end(),
            [](const FailureRecord& a, const FailureRecord& b) {
              return std::tie(a.digraph, a.detail) <
                     std::tie(b.digraph, b.detail);
            });
  report.vacuous = report.hypothesis_hits == 0;
  if (tc.count_instances) report.hypothesis_instances = instances;
  if (tc.classify) {
    std::string notes = "class_counts:";
    for (size_t i = 0; i < tc.class_labels.size(); ++i)
      notes += " " + tc.class_labels[i] + "=" + std::to_string(class_counts[i]);
    report.notes = notes;
  }
  report.tool_version = kToolVersion;
  report.rng_name = kRngName;
  report.runtime_ms = static_cast<uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start)
          .count());

  if (!options.out_dir.empty() && !report.conclusion_failures.empty()) {
    std::filesystem::create_directories(options.out_dir);
    for (size_t i = 0; i < report.conclusion_failures.size(); ++i) {
      std::ofstream out(std::filesystem::path(options.out_dir) /
                        (tc.id + "-" + std::to_string(i) + ".dg"));
      out << report.conclusion_failures[i].digraph;
    }
  }
  return report;
}

TheoremCase problem_1_17_case() {
  TheoremCase tc;
  tc.id = "problem-1.17";
  tc.statement =
      "open: 2-strong + (M) with a pair of degree sum in [2n-3, 2n-2] -- "
      "pancyclic?";
  tc.hypothesis = [](const Digraph& d) {
    const int n = d.order();
    if (n < 3) return false;
    bool window = false;
    for (auto [x, y] : d.non_adjacent_pairs()) {
      int s = d.degree(x) + d.degree(y);
      if (2 * n - 3 <= s && s <= 2 * n - 2) {
        window = true;
        break;
      }
    }
    return window && hyp_m_two_strong(d);
  };
  tc.fast_hypothesis = [](const Digraph& d,
                          std::span<const std::pair<int, int>> nonadj) {
    const int n = d.order();
    if (n < 3) return false;
    bool window = false;
    for (auto [x, y] : nonadj) {
      int s = d.degree(x) + d.degree(y);
      if (2 * n - 3 <= s && s <= 2 * n - 2) {
        window = true;
        break;
      }
    }
    return window && fast_hyp_m_two_strong(d, nonadj);
  };
  tc.conclusion = pancyclic_conclusion;
  return tc;
}

}  // namespace

VerificationReport verify(std::string_view theorem_id,
                          const EnumerationScope& scope,
                          const VerifyOptions& options) {
  const TheoremCase* tc = find_theorem(theorem_id);
  if (!tc)
    throw std::invalid_argument("unknown theorem id '" +
                                std::string(theorem_id) + "'");
  return run_case(*tc, scope, options, false);
}

VerificationReport explore_problem_1_17(const EnumerationScope& scope,
                                        const VerifyOptions& options) {
  static const TheoremCase tc = problem_1_17_case();
  return run_case(tc, scope, options, true);
}

std::optional<Digraph> find_remark_witness(int n) {
  if (n < 5) throw std::invalid_argument("remark witness search needs n >= 5");
  if (n > 6)
    throw std::invalid_argument("remark witness search limited to n <= 6");
  const int universe = n * (n - 1) / 2;
  std::optional<Digraph> found;
  for (int pattern = 0; pattern < universe && !found; ++pattern) {
    std::vector<int> p{pattern};
    detail::visit_complement_pattern(
        n, p, [&](const Digraph& d, std::span<const std::pair<int, int>>) {
          if (found) return;
          if (!is_strong(d)) return;
          if (is_k_strong(d, 2)) return;
          if (ham_fast(d)) return;
          found = d;
        });
  }
  return found;
}

std::optional<Digraph> find_factor_sharpness_exhibit(int n, int pair_budget) {
  if (n < 3 || n > 8)
    throw std::invalid_argument("sharpness search limited to 3 <= n <= 8");
  std::optional<Digraph> found;
  auto patterns = complement_pair_patterns(n, pair_budget);
  for (size_t p = 0; p < patterns.size() && !found; ++p) {
    detail::visit_complement_pattern(
        n, patterns[p],
        [&](const Digraph& d, std::span<const std::pair<int, int>> nonadj) {
          if (found) return;
          // Two or more non-adjacent pairs are necessary: with fewer, the
          // digraph is Hamiltonian here and has a factor.
          if (nonadj.size() < 2) return;
          int s1 = INT32_MAX, s2 = INT32_MAX;
          for (auto [x, y] : nonadj) {
            int s = d.degree(x) + d.degree(y);
            if (s < s1) {
              s2 = s1;
              s1 = s;
            } else if (s < s2) {
              s2 = s;
            }
          }
          if (s1 + s2 < 4 * n - 4) return;
          if (!is_k_strong(d, 2)) return;
          if (has_cycle_factor(d)) return;
          found = d;
        });
  }
  return found;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json scope_json{
      {"n", scope.n},
      {"mode", hamlab::to_string(scope.mode)},
      {"seed", scope.seed},
      {"pair_budget", scope.pair_budget},
      {"prefilter", scope.prefilter},
  };
  if (scope.sample_count) scope_json["sample_count"] = *scope.sample_count;
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : conclusion_failures)
    failures.push_back({{"digraph", f.digraph}, {"detail", f.detail}});
  nlohmann::json j{
      {"theorem_id", theorem_id},
      {"scope", scope_json},
      {"digraphs_examined", digraphs_examined},
      {"hypothesis_hits", hypothesis_hits},
      {"conclusion_failures", failures},
      {"vacuous", vacuous},
      {"runtime_ms", runtime_ms},
      {"tool_version", tool_version},
      {"rng_name", rng_name},
  };
  if (exploration) j["exploration"] = true;
  if (hypothesis_instances) j["hypothesis_instances"] = *hypothesis_instances;
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

std::string VerificationReport::to_json_string() const {
  return to_json().dump(2);
}

std::string VerificationReport::signature() const {
  nlohmann::json j = to_json();
  j.erase("runtime_ms");
  return j.dump(2);
}

}  // namespace hamlab
