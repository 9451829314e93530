#include "hamlab/families.hpp"

#include <charconv>
#include <map>

#include "hamlab/conditions.hpp"
#include "hamlab/connectivity.hpp"

namespace hamlab {

namespace {

std::map<std::string, int, std::less<>> parse_params(std::string_view s) {
  std::map<std::string, int, std::less<>> out;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    if (comma == std::string_view::npos) comma = s.size();
    std::string_view item = s.substr(pos, comma - pos);
    size_t eq = item.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("family parameter must look like k=v");
    std::string key(item.substr(0, eq));
    std::string_view num = item.substr(eq + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (ec != std::errc() || ptr != num.data() + num.size())
      throw std::invalid_argument("bad family parameter value '" +
                                  std::string(num) + "'");
    out[key] = value;
    pos = comma + 1;
  }
  return out;
}

int require_param(const std::map<std::string, int, std::less<>>& params,
                  const char* key) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument(std::string("family needs parameter ") + key);
  return it->second;
}

}  // namespace

FamilySpec FamilySpec::from_string(std::string_view s) {
  size_t colon = s.find(':');
  std::string_view name = s.substr(0, colon);
  auto params = colon == std::string_view::npos
                    ? std::map<std::string, int, std::less<>>{}
                    : parse_params(s.substr(colon + 1));
  if (name == "complete")
    return {Kind::complete, require_param(params, "n"), 0};
  if (name == "complete_bipartite")
    return {Kind::complete_bipartite, require_param(params, "a"),
            require_param(params, "b")};
  if (name == "complete_bipartite_minus_arc")
    return {Kind::complete_bipartite_minus_arc, require_param(params, "a"),
            require_param(params, "b")};
  if (name == "phi")
    return {Kind::phi, require_param(params, "n"), require_param(params, "m")};
  if (name == "directed_cycle")
    return {Kind::directed_cycle, require_param(params, "n"), 0};
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string FamilySpec::to_string() const {
  switch (kind) {
    case Kind::complete: return "complete:n=" + std::to_string(a);
    case Kind::complete_bipartite:
      return "complete_bipartite:a=" + std::to_string(a) +
             ",b=" + std::to_string(b);
    case Kind::complete_bipartite_minus_arc:
      return "complete_bipartite_minus_arc:a=" + std::to_string(a) +
             ",b=" + std::to_string(b);
    case Kind::phi:
      return "phi:n=" + std::to_string(a) + ",m=" + std::to_string(b);
    case Kind::directed_cycle: return "directed_cycle:n=" + std::to_string(a);
  }
  return "?";
}

Digraph generate(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::complete: {
      Digraph d(spec.a);
      for (int u = 0; u < spec.a; ++u)
        for (int v = 0; v < spec.a; ++v)
          if (u != v) d.set_arc_unchecked(u, v, true);
      return d;
    }
    case FamilySpec::Kind::complete_bipartite:
    case FamilySpec::Kind::complete_bipartite_minus_arc: {
      if (spec.a < 1 || spec.b < 1)
        throw std::invalid_argument("bipartite sides must be >= 1");
      Digraph d(spec.a + spec.b);
      for (int u = 0; u < spec.a; ++u)
        for (int v = spec.a; v < spec.a + spec.b; ++v) {
          d.set_arc_unchecked(u, v, true);
          d.set_arc_unchecked(v, u, true);
        }
      if (spec.kind == FamilySpec::Kind::complete_bipartite_minus_arc)
        d.set_arc_unchecked(0, spec.a, false);  // lexicographically first arc
      return d;
    }
    case FamilySpec::Kind::phi: return phi_maximal(spec.a, spec.b);
    case FamilySpec::Kind::directed_cycle: {
      if (spec.a < 2)
        throw std::invalid_argument("directed cycle needs order >= 2");
      Digraph d(spec.a);
      for (int u = 0; u < spec.a; ++u)
        d.set_arc_unchecked(u, (u + 1) % spec.a, true);
      return d;
    }
  }
  throw std::logic_error("unhandled family kind");
}

namespace {

void check_phi_range(int n, int m) {
  if (n < 3 || 2 * m <= n + 1 || m > n - 1)
    throw std::invalid_argument(
        "phi family needs (n+1)/2 < m <= n-1, got n=" + std::to_string(n) +
        " m=" + std::to_string(m));
}

}  // namespace

Digraph phi_maximal(int n, int m) {
  check_phi_range(n, m);
  // Vertex i plays x_{i+1}.
  Digraph d(n);
  for (int i = 0; i + 1 < n; ++i) d.set_arc_unchecked(i + 1, i, true);
  d.set_arc_unchecked(0, n - 1, true);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (j - i != m - 1) d.set_arc_unchecked(i, j, true);

  auto meyniel = evaluate(d, {ConditionKind::meyniel});
  if (!meyniel.satisfied)
    throw std::runtime_error(
        "phi_maximal(" + std::to_string(n) + "," + std::to_string(m) +
        "): degree-sum condition (v) failed: " + meyniel.witness->inequality);
  std::vector<int> identity(n);
  for (int i = 0; i < n; ++i) identity[i] = i;
  if (!is_in_phi(d, n, m, identity))
    throw std::runtime_error("phi_maximal construction failed its own membership check");
  return d;
}

bool is_in_phi(const Digraph& d, int n, int m,
               const std::vector<int>& labeling) {
  check_phi_range(n, m);
  if (d.order() != n) return false;
  if (static_cast<int>(labeling.size()) != n)
    throw std::invalid_argument("labeling must be a permutation of V(D)");
  uint64_t seen = 0;
  for (int v : labeling) {
    if (v < 0 || v >= n || (seen >> v & 1))
      throw std::invalid_argument("labeling must be a permutation of V(D)");
    seen |= 1ull << v;
  }
  auto x = [&](int i) { return labeling[i - 1]; };  // paper's 1-based x_i

  // (ii) x_n x_{n-1} ... x_1 x_n is a Hamiltonian cycle.
  for (int i = 1; i < n; ++i)
    if (!d.arc_unchecked(x(i + 1), x(i))) return false;
  if (!d.arc_unchecked(x(1), x(n))) return false;
  // (iii) x_k and x_{k+m-1} non-adjacent.
  for (int k = 1; k <= n - m + 1; ++k)
    if (d.adjacent(x(k), x(k + m - 1))) return false;
  // (iv) no backward arcs x_j -> x_i beyond the cycle's consecutive ones.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      if (d.arc_unchecked(x(j), x(i))) return false;
  // (v) non-adjacent degree sums at least 2n-1.
  return evaluate(d, {ConditionKind::meyniel}).satisfied;
}

std::string to_string(EnumerationMode mode) {
  switch (mode) {
    case EnumerationMode::exhaustive: return "exhaustive";
    case EnumerationMode::exhaustive_complement: return "complement";
    case EnumerationMode::sampled: return "sampled";
  }
  return "?";
}

EnumerationMode enumeration_mode_from_string(std::string_view s) {
  if (s == "exhaustive") return EnumerationMode::exhaustive;
  if (s == "complement" || s == "exhaustive_complement")
    return EnumerationMode::exhaustive_complement;
  if (s == "sampled") return EnumerationMode::sampled;
  throw std::invalid_argument("unknown enumeration mode '" + std::string(s) +
                              "'");
}

void EnumerationScope::validate() const {
  switch (mode) {
    case EnumerationMode::exhaustive:
      if (n < 1 || n > 5)
        throw std::invalid_argument("raw exhaustive enumeration limited to n <= 5");
      break;
    case EnumerationMode::exhaustive_complement:
      if (n < 2 || n > 7)
        throw std::invalid_argument(
            "complement enumeration limited to 2 <= n <= 7");
      if (pair_budget < 0)
        throw std::invalid_argument("pair budget must be >= 0");
      break;
    case EnumerationMode::sampled:
      if (n < 1 || n > kMaxOrder)
        throw std::invalid_argument("sampled order out of range");
      if (!sample_count)
        throw std::invalid_argument("sampled mode needs a sample count");
      break;
  }
  for (const auto& name : prefilter) prefilter_predicate(name);
}

std::vector<std::pair<int, int>> all_unordered_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
  return pairs;
}

std::vector<std::vector<int>> complement_pair_patterns(int n,
                                                       int pair_budget) {
  const int universe = n * (n - 1) / 2;
  const int budget = std::min(pair_budget, universe);
  std::vector<std::vector<int>> patterns;
  std::vector<int> combo;
  // Size-ascending, lexicographic within each size.
  auto rec = [&](auto&& self, int start, int remaining) -> void {
    if (remaining == 0) {
      patterns.push_back(combo);
      return;
    }
    for (int i = start; i <= universe - remaining; ++i) {
      combo.push_back(i);
      self(self, i + 1, remaining - 1);
      combo.pop_back();
    }
  };
  for (int size = 0; size <= budget; ++size) rec(rec, 0, size);
  return patterns;
}

namespace detail {

int raw_chunk_bits(int n) {
  const int slots = n * (n - 1);
  return std::max(0, slots - 14);
}

}  // namespace detail

uint64_t enumeration_chunk_count(const EnumerationScope& scope) {
  scope.validate();
  switch (scope.mode) {
    case EnumerationMode::exhaustive:
      return 1ull << detail::raw_chunk_bits(scope.n);
    case EnumerationMode::exhaustive_complement:
      return complement_pair_patterns(scope.n, scope.pair_budget).size();
    case EnumerationMode::sampled: {
      uint64_t count = *scope.sample_count;
      if (count == 0) return 1;
      return std::min<uint64_t>(64, count);
    }
  }
  return 1;
}

uint64_t enumeration_size(const EnumerationScope& scope) {
  scope.validate();
  switch (scope.mode) {
    case EnumerationMode::exhaustive:
      return 1ull << (scope.n * (scope.n - 1));
    case EnumerationMode::exhaustive_complement: {
      uint64_t total = 0;
      const int universe = scope.n * (scope.n - 1) / 2;
      for (const auto& pattern : complement_pair_patterns(scope.n,
                                                          scope.pair_budget)) {
        uint64_t orientations = 1;
        for (int i = 0; i < universe - static_cast<int>(pattern.size()); ++i)
          orientations *= 3;
        total += orientations;
      }
      return total;
    }
    case EnumerationMode::sampled: return *scope.sample_count;
  }
  return 0;
}

std::function<bool(const Digraph&)> prefilter_predicate(std::string_view name) {
  if (name == "strong") return [](const Digraph& d) { return is_strong(d); };
  constexpr std::string_view ks = "k_strong:";
  if (name.substr(0, ks.size()) == ks) {
    int k = 0;
    std::string_view num = name.substr(ks.size());
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
    if (ec != std::errc() || ptr != num.data() + num.size() || k < 1)
      throw std::invalid_argument("bad prefilter '" + std::string(name) + "'");
    return [k](const Digraph& d) { return is_k_strong(d, k); };
  }
  ConditionId id = ConditionId::from_string(name);
  return [id](const Digraph& d) { return evaluate(d, id).satisfied; };
}

void enumerate(const EnumerationScope& scope,
               const std::function<void(const Digraph&)>& fn) {
  scope.validate();
  std::vector<std::function<bool(const Digraph&)>> filters;
  for (const auto& name : scope.prefilter)
    filters.push_back(prefilter_predicate(name));
  const uint64_t chunks = enumeration_chunk_count(scope);
  for (uint64_t c = 0; c < chunks; ++c)
    detail::visit_chunk(scope, c,
                        [&](const Digraph& d, std::span<const std::pair<int, int>>) {
                          for (const auto& f : filters)
                            if (!f(d)) return;
                          fn(d);
                        });
}

Digraph sample_digraph(int n, uint64_t seed, uint64_t index) {
  SplitMix64 rng(substream_seed(seed, index));
  Digraph d(n);
  if (rng.next_bool()) {
    // Independent arcs with a per-draw probability T / 2^32.
    const uint32_t threshold = rng.next_u32();
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        if (rng.next_u32() < threshold) d.set_arc_unchecked(u, v, true);
      }
    return d;
  }
  // Near-complete draw: a few planted non-adjacent pairs, every other pair
  // adjacent and single-direction with a per-draw probability.
  auto pairs = all_unordered_pairs(n);
  const int max_planted =
      std::min<int>(3, static_cast<int>(pairs.size()));
  const int planted = static_cast<int>(rng.next_below(max_planted + 1));
  uint64_t chosen = 0;
  int chosen_count = 0;
  while (chosen_count < planted) {
    uint64_t i = rng.next_below(pairs.size());
    if (chosen >> i & 1) continue;
    chosen |= 1ull << i;
    ++chosen_count;
  }
  const uint32_t one_way = rng.next_u32();
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (chosen >> i & 1) continue;
    auto [x, y] = pairs[i];
    if (rng.next_u32() < one_way) {
      if (rng.next_bool())
        d.set_arc_unchecked(x, y, true);
      else
        d.set_arc_unchecked(y, x, true);
    } else {
      d.set_arc_unchecked(x, y, true);
      d.set_arc_unchecked(y, x, true);
    }
  }
  return d;
}

std::optional<Digraph> random_condition_m_digraph(int n, uint64_t seed,
                                                  int nonadjacent_pairs) {
  if (n < 4)
    throw std::invalid_argument("random_condition_m_digraph needs n >= 4");
  auto pairs = all_unordered_pairs(n);
  if (nonadjacent_pairs < 0 ||
      nonadjacent_pairs > static_cast<int>(pairs.size()))
    return std::nullopt;

  constexpr int kAttemptBudget = 10000;
  // Orientation states biased toward both arcs: P(<->) ~ 0.7.
  constexpr uint32_t kOneWay = static_cast<uint32_t>(0.30 * 4294967296.0);
  SplitMix64 rng(substream_seed(seed, 0x636f6e644dull));
  for (int attempt = 0; attempt < kAttemptBudget; ++attempt) {
    Digraph d(n);
    uint64_t chosen = 0;
    int chosen_count = 0;
    while (chosen_count < nonadjacent_pairs) {
      uint64_t i = rng.next_below(pairs.size());
      if (chosen >> i & 1) continue;
      chosen |= 1ull << i;
      ++chosen_count;
    }
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (chosen >> i & 1) continue;
      auto [x, y] = pairs[i];
      if (rng.next_u32() < kOneWay) {
        if (rng.next_bool())
          d.set_arc_unchecked(x, y, true);
        else
          d.set_arc_unchecked(y, x, true);
      } else {
        d.set_arc_unchecked(x, y, true);
        d.set_arc_unchecked(y, x, true);
      }
    }
    std::vector<std::pair<int, int>> nonadj;
    for (size_t i = 0; i < pairs.size(); ++i)
      if (chosen >> i & 1) nonadj.push_back(pairs[i]);
    if (!condition_m_from_pairs(d, nonadj)) continue;
    if (!is_k_strong(d, 2)) continue;
    return d;
  }
  return std::nullopt;
}

}  // namespace hamlab
