#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hamlab/digraph.hpp"
#include "hamlab/families.hpp"

#include "json.hpp"

namespace hamlab {

// One verifiable statement: a hypothesis filter and a conclusion check,
// both total on valid digraphs.
struct TheoremCase {
  std::string id;
  std::string statement;  // one-line summary for --list / docs
  bool biconditional = false;
  int max_order = kMaxOrder;  // scope guard (oracle-backed cases are tighter)

  std::function<bool(const Digraph&)> hypothesis;
  // Returns the verdict; fills `detail` (may be null) on failure.
  std::function<bool(const Digraph&, std::string*)> conclusion;

  // Optional fast paths for enumeration hot loops. They must agree with
  // the general predicates; the test suite cross-checks them.
  std::function<bool(const Digraph&, std::span<const std::pair<int, int>>)>
      fast_hypothesis;  // pattern = the digraph's exact non-adjacent pairs
  std::function<bool(const Digraph&)> fast_conclusion;

  // Optional per-hit classification tallied into report notes.
  std::function<int(const Digraph&)> classify;
  std::vector<std::string> class_labels;

  // Optional hypothesis-instance counter (statements quantified over
  // structures inside one digraph, e.g. cycle/vertex pairs).
  std::function<uint64_t(const Digraph&)> count_instances;
};

const std::vector<TheoremCase>& theorem_registry();
const TheoremCase* find_theorem(std::string_view id);
// Pinned id list the registry must cover exactly (self-tested).
const std::vector<std::string>& registry_expected_ids();

struct FailureRecord {
  std::string digraph;  // DG serialization
  std::string detail;
};

struct VerificationReport {
  std::string theorem_id;
  EnumerationScope scope;
  uint64_t digraphs_examined = 0;
  uint64_t hypothesis_hits = 0;
  std::vector<FailureRecord> conclusion_failures;
  bool vacuous = false;
  uint64_t runtime_ms = 0;
  std::string tool_version;
  std::string rng_name;
  bool exploration = false;  // open-problem run: failures are candidates
  std::optional<uint64_t> hypothesis_instances;
  std::string notes;

  nlohmann::json to_json() const;
  std::string to_json_string() const;
  // Stable serialization with runtime_ms stripped; equal signatures mean
  // equal reports for determinism purposes.
  std::string signature() const;
};

struct VerifyOptions {
  int threads = 1;
  std::string out_dir;  // persist failure digraphs as <id>-<index>.dg
};

// Streams the scope through the theorem's hypothesis/conclusion pair and
// aggregates a deterministic report (independent of thread count).
VerificationReport verify(std::string_view theorem_id,
                          const EnumerationScope& scope,
                          const VerifyOptions& options = {});

// Searches the stated regime (2-strong, condition (M), some non-adjacent
// pair with 2n-3 <= d(x)+d(y) <= 2n-2) for non-pancyclic digraphs.
// Failures are open-problem candidates, not violations. Sampled scopes
// draw from the condition-(M) rejection sampler.
VerificationReport explore_problem_1_17(const EnumerationScope& scope,
                                        const VerifyOptions& options = {});

// First digraph (complement enumeration over single-pair patterns) that
// is strong, not 2-strong, non-Hamiltonian, with exactly one non-adjacent
// pair. Absent only if the search space is exhausted.
std::optional<Digraph> find_remark_witness(int n);

// Sharpness search: first 2-strong digraph (complement enumeration up to
// pair_budget non-adjacent pairs) whose distinct non-adjacent pair sums
// all reach 4n-4 yet has no cycle factor. Shows the condition-(M)
// threshold cannot drop by one even for cycle factors.
std::optional<Digraph> find_factor_sharpness_exhibit(int n,
                                                     int pair_budget = 3);

// Exhaustive four-part partition search (the matching-free route to the
// cycle-factor characterization); limited to n <= 12.
bool partition_witness_exists_exhaustive(const Digraph& d);

}  // namespace hamlab
