#include "doctest.h"

#include <algorithm>
#include <set>

#include "hamlab/cycles.hpp"
#include "hamlab/families.hpp"
#include "support/oracles.hpp"

using namespace hamlab;

namespace {

Digraph complete(int n) { return generate({FamilySpec::Kind::complete, n, 0}); }

Digraph directed_cycle(int n) {
  return generate({FamilySpec::Kind::directed_cycle, n, 0});
}

// Two directed triangles sharing exactly vertex 0.
Digraph two_triangles() {
  Digraph d(5);
  d.add_arc(0, 1);
  d.add_arc(1, 2);
  d.add_arc(2, 0);
  d.add_arc(0, 3);
  d.add_arc(3, 4);
  d.add_arc(4, 0);
  return d;
}

}  // namespace

TEST_CASE("certificate verification") {
  Digraph c3 = directed_cycle(3);
  CHECK(verify_certificate(c3, {{0, 1, 2}}));
  CHECK_FALSE(verify_certificate(c3, {{0, 2, 1}}));
  CHECK_FALSE(verify_certificate(complete(4), {{0, 1, 1, 2}}));
  CHECK_FALSE(verify_certificate(c3, {{0}}));
  CHECK_FALSE(verify_certificate(c3, {{0, 7}}));
}

TEST_CASE("hamiltonian cycle") {
  auto k3 = hamiltonian_cycle(complete(3));
  REQUIRE(k3.has_value());
  CHECK(k3->vertices == std::vector<int>{0, 1, 2});

  Digraph path(3);
  path.add_arc(0, 1);
  path.add_arc(1, 2);
  CHECK_FALSE(hamiltonian_cycle(path).has_value());

  auto phi = hamiltonian_cycle(phi_maximal(8, 6));
  REQUIRE(phi.has_value());
  CHECK(phi->length() == 8);
  CHECK(verify_certificate(phi_maximal(8, 6), *phi));

  CHECK_THROWS_AS(hamiltonian_cycle(Digraph(1)), std::invalid_argument);
}

TEST_CASE("cycle through a pair") {
  auto c4 = cycle_through_pair(directed_cycle(4), 0, 2);
  REQUIRE(c4.has_value());
  CHECK(c4->vertices == std::vector<int>{0, 1, 2, 3});

  auto k4 = cycle_through_pair(complete(4), 1, 3);
  REQUIRE(k4.has_value());
  CHECK(k4->vertices == std::vector<int>{1, 3});

  CHECK_FALSE(cycle_through_pair(two_triangles(), 1, 3).has_value());
  CHECK_THROWS_AS(cycle_through_pair(complete(3), 1, 1),
                  std::invalid_argument);
}

TEST_CASE("longest cycle") {
  auto c5 = longest_cycle(directed_cycle(5));
  REQUIRE(c5.has_value());
  CHECK(c5->length() == 5);

  CHECK_FALSE(longest_cycle(directed_cycle(5), std::nullopt, 3).has_value());

  auto k4 = longest_cycle(complete(4), 0, 1);
  REQUIRE(k4.has_value());
  CHECK(k4->vertices == std::vector<int>{0, 2, 3});

  CHECK_THROWS_AS(longest_cycle(complete(4), 2, 2), std::invalid_argument);
}

TEST_CASE("cycle length profiles") {
  auto k4 = cycle_length_profile(complete(4));
  CHECK(k4.present == std::vector<int>{2, 3, 4});
  CHECK(k4.pancyclic(4));

  auto k33 =
      cycle_length_profile(generate({FamilySpec::Kind::complete_bipartite, 3, 3}));
  CHECK(k33.present == std::vector<int>{2, 4, 6});
  CHECK_FALSE(k33.pancyclic(6));

  auto phi = cycle_length_profile(phi_maximal(8, 6));
  CHECK_FALSE(phi.contains(6));
  for (int len : {2, 3, 4, 5, 7, 8}) CHECK(phi.contains(len));

  Digraph d = phi_maximal(8, 6);
  for (size_t i = 0; i < phi.present.size(); ++i) {
    CHECK(phi.witnesses[i].length() == phi.present[i]);
    CHECK(verify_certificate(d, phi.witnesses[i]));
  }
}

TEST_CASE("solver results match the enumerate-all-cycles oracle") {
  for (uint64_t i = 0; i < 400; ++i) {
    int n = 2 + static_cast<int>(i % 5);
    Digraph d = sample_digraph(n, 61, i);
    auto cycles = testing::all_simple_cycles(d);

    std::set<int> oracle_lengths;
    int oracle_longest = 0;
    std::set<std::pair<int, int>> covered_pairs;
    for (const auto& c : cycles) {
      oracle_lengths.insert(static_cast<int>(c.size()));
      oracle_longest = std::max(oracle_longest, static_cast<int>(c.size()));
      for (size_t a = 0; a < c.size(); ++a)
        for (size_t b = a + 1; b < c.size(); ++b)
          covered_pairs.insert({std::min(c[a], c[b]), std::max(c[a], c[b])});
    }

    auto profile = cycle_length_profile(d);
    CHECK(std::set<int>(profile.present.begin(), profile.present.end()) ==
          oracle_lengths);
    for (const auto& w : profile.witnesses) CHECK(verify_certificate(d, w));

    bool oracle_ham = oracle_lengths.count(n) > 0;
    auto ham = hamiltonian_cycle(d);
    CHECK(ham.has_value() == oracle_ham);
    CHECK(has_hamiltonian_cycle(d) == oracle_ham);
    CHECK(ham.has_value() == profile.contains(n));
    if (ham) CHECK(verify_certificate(d, *ham));

    auto longest = longest_cycle(d);
    if (oracle_longest == 0) {
      CHECK_FALSE(longest.has_value());
    } else {
      REQUIRE(longest.has_value());
      CHECK(longest->length() == oracle_longest);
      CHECK(verify_certificate(d, *longest));
    }

    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        auto c = cycle_through_pair(d, x, y);
        CHECK(c.has_value() == (covered_pairs.count({x, y}) > 0));
        if (c) {
          CHECK(verify_certificate(d, *c));
          uint64_t got = 0;
          for (int v : c->vertices) got |= 1ull << v;
          CHECK((got >> x & 1));
          CHECK((got >> y & 1));
        }
      }
  }
}

TEST_CASE("deterministic lexicographic tie-breaking") {
  for (uint64_t i = 0; i < 50; ++i) {
    Digraph d = sample_digraph(6, 67, i);
    auto a = hamiltonian_cycle(d);
    auto b = hamiltonian_cycle(d);
    CHECK((a.has_value() == b.has_value()));
    if (a) CHECK(a->vertices == b->vertices);
    if (a) {
      // Anchored at the minimum vertex.
      CHECK(a->vertices.front() ==
            *std::min_element(a->vertices.begin(), a->vertices.end()));
    }
  }
}

TEST_CASE("raw-row kernels agree with the solvers") {
  for (uint64_t i = 0; i < 300; ++i) {
    int n = 2 + static_cast<int>(i % 6);
    Digraph d = sample_digraph(n, 71, i);
    CHECK(hamiltonian_exists_rows(d.out_rows(), d.in_rows(), n) ==
          has_hamiltonian_cycle(d));
    uint64_t mask = cycle_lengths_mask_rows(d.out_rows(), n);
    auto profile = cycle_length_profile(d);
    for (int len = 2; len <= n; ++len)
      CHECK(bool(mask >> len & 1) == profile.contains(len));
  }
}

TEST_CASE("orders above the DP threshold use exact backtracking") {
  Digraph c40 = directed_cycle(40);
  auto ham = hamiltonian_cycle(c40);
  REQUIRE(ham.has_value());
  CHECK(ham->length() == 40);
  CHECK(verify_certificate(c40, *ham));
  CHECK_FALSE(longest_cycle(c40, std::nullopt, 17).has_value());
  auto through = cycle_through_pair(c40, 0, 20);
  REQUIRE(through.has_value());
  CHECK(through->length() == 40);

  Digraph k24 = complete(24);
  auto profile = cycle_length_profile(k24);
  REQUIRE(profile.present.size() == 23);
  CHECK(profile.present.front() == 2);
  CHECK(profile.present.back() == 24);
  CHECK(profile.pancyclic(24));
  for (const auto& w : profile.witnesses) CHECK(verify_certificate(k24, w));
}

TEST_CASE("added-vertex cycle spectrum property") {
  // Whenever a cycle C of length m and an external vertex x with
  // d(x, V(C)) >= m+1 show up, the subdigraph on V(C) plus x realizes
  // every length 2..m+1.
  for (uint64_t i = 0; i < 200; ++i) {
    int n = 4 + static_cast<int>(i % 4);
    Digraph d = sample_digraph(n, 73, i);
    auto profile = cycle_length_profile(d);
    for (const auto& wit : profile.witnesses) {
      int m = wit.length();
      if (m > n - 1) continue;
      uint64_t cmask = 0;
      for (int v : wit.vertices) cmask |= 1ull << v;
      for (int x = 0; x < n; ++x) {
        if (cmask >> x & 1) continue;
        if (d.degrees(x, cmask).total() < m + 1) continue;
        uint64_t sub = cycle_lengths_mask(d, cmask | (1ull << x), 0);
        for (int len = 2; len <= m + 1; ++len) CHECK((sub >> len & 1));
      }
    }
  }
}
