#include "doctest.h"

#include "hamlab/digraph.hpp"
#include "hamlab/families.hpp"
#include "hamlab/rng.hpp"

using namespace hamlab;

namespace {

Digraph complete(int n) { return generate({FamilySpec::Kind::complete, n, 0}); }

Digraph directed_cycle(int n) {
  return generate({FamilySpec::Kind::directed_cycle, n, 0});
}

Digraph bipartite(int a, int b) {
  return generate({FamilySpec::Kind::complete_bipartite, a, b});
}

}  // namespace

TEST_CASE("arc queries") {
  CHECK(complete(3).arc(0, 1));
  CHECK_FALSE(directed_cycle(3).arc(1, 0));
  CHECK(directed_cycle(3).arc(0, 1));
  // Maximal Phi_8^6 member: x_1 and x_6 (vertices 0 and 5) non-adjacent.
  Digraph phi = phi_maximal(8, 6);
  CHECK_FALSE(phi.arc(0, 5));
  CHECK_FALSE(phi.arc(5, 0));

  CHECK_THROWS_AS((void)complete(3).arc(0, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)complete(3).arc(0, 3), std::invalid_argument);
}

TEST_CASE("degrees, full and restricted") {
  Digraph k33 = bipartite(3, 3);
  auto full = k33.degrees(0);
  CHECK(full.out == 3);
  CHECK(full.in == 3);
  CHECK(full.total() == 6);

  auto c5 = directed_cycle(5);
  auto deg = c5.degrees(2);
  CHECK(deg.out == 1);
  CHECK(deg.in == 1);
  CHECK(deg.total() == 2);

  std::vector<int> subset{1, 2, 3};
  auto restricted = k33.degrees(0, subset);
  CHECK(restricted.out == 1);
  CHECK(restricted.in == 1);
  CHECK(restricted.total() == 2);

  CHECK_THROWS_AS(k33.degrees(6), std::invalid_argument);
}

TEST_CASE("non-adjacent pairs") {
  CHECK(complete(4).non_adjacent_pairs().empty());

  auto k22 = bipartite(2, 2);
  std::vector<std::pair<int, int>> expected{{0, 1}, {2, 3}};
  CHECK(k22.non_adjacent_pairs() == expected);

  Digraph phi = phi_maximal(8, 6);
  std::vector<std::pair<int, int>> phi_expected{{0, 5}, {1, 6}, {2, 7}};
  CHECK(phi.non_adjacent_pairs() == phi_expected);
}

TEST_CASE("induced subdigraphs") {
  std::vector<int> s012{0, 1, 2};
  Digraph k3 = complete(4).induced(s012);
  CHECK(k3 == complete(3));

  std::vector<int> s01{0, 1};
  Digraph sub = directed_cycle(4).induced(s01);
  CHECK(sub.arc(0, 1));
  CHECK_FALSE(sub.arc(1, 0));
  CHECK(sub.arc_count() == 1);

  std::vector<int> map;
  std::vector<int> s013{0, 1, 3};
  Digraph mixed = bipartite(3, 3).induced(s013, &map);
  CHECK(map == std::vector<int>{0, 1, -1, 2, -1, -1});
  CHECK(mixed.arc(0, 2));
  CHECK(mixed.arc(2, 0));
  CHECK(mixed.arc(1, 2));
  CHECK(mixed.arc(2, 1));
  CHECK_FALSE(mixed.adjacent(0, 1));
  CHECK(mixed.arc_count() == 4);

  std::vector<int> empty;
  CHECK_THROWS_AS(k3.induced(empty), std::invalid_argument);
  // Identity reinduction.
  std::vector<int> all{0, 1, 2, 3};
  CHECK(directed_cycle(4).induced(all) == directed_cycle(4));
}

TEST_CASE("parse and serialize") {
  CHECK(generate({FamilySpec::Kind::complete, 2, 0}).serialize() ==
        "DG 2\n01\n10\n");
  Digraph c3 = Digraph::parse("DG 3\n010\n001\n100\n");
  CHECK(c3 == directed_cycle(3));

  CHECK_THROWS_AS(Digraph::parse("DG 2\n11\n00\n"), ParseError);
  try {
    Digraph::parse("DG 2\n11\n00\n");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 1);
  }
  CHECK_THROWS_AS(Digraph::parse("DG 2\n0\n00\n"), ParseError);
  CHECK_THROWS_AS(Digraph::parse("XX 2\n00\n00\n"), ParseError);
  CHECK_THROWS_AS(Digraph::parse("DG 2\n0a\n00\n"), ParseError);
  CHECK_THROWS_AS(Digraph::parse(""), ParseError);
  CHECK_THROWS_AS(Digraph::parse("DG 65\n"), ParseError);

  // Arc-list form.
  Digraph dga = Digraph::parse("DGA 3\n0 1\n1 2\n2 0\n");
  CHECK(dga == directed_cycle(3));
  CHECK_THROWS_AS(Digraph::parse("DGA 3\n0 0\n"), ParseError);
  CHECK_THROWS_AS(Digraph::parse("DGA 3\n0 5\n"), ParseError);
}

TEST_CASE("round trip and degree-sum invariants on a random corpus") {
  for (uint64_t i = 0; i < 300; ++i) {
    int n = 1 + static_cast<int>(i % 8);
    Digraph d = sample_digraph(n, 17, i);
    CHECK(Digraph::parse(d.serialize()) == d);

    int out_sum = 0, in_sum = 0;
    for (int v = 0; v < n; ++v) {
      out_sum += d.out_degree(v);
      in_sum += d.in_degree(v);
    }
    CHECK(out_sum == d.arc_count());
    CHECK(in_sum == d.arc_count());

    int adjacent_pairs = 0;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (d.adjacent(x, y)) ++adjacent_pairs;
    CHECK(adjacent_pairs + static_cast<int>(d.non_adjacent_pairs().size()) ==
          n * (n - 1) / 2);
  }
}

TEST_CASE("isomorphism") {
  // Relabeled complete digraph.
  CHECK(is_isomorphic(complete(3), complete(3)));

  // A directed triangle and its reversal: i -> (3 - i) mod 3 works.
  Digraph c3 = directed_cycle(3);
  Digraph rev(3);
  rev.add_arc(1, 0);
  rev.add_arc(2, 1);
  rev.add_arc(0, 2);
  auto mapping = find_isomorphism(c3, rev);
  REQUIRE(mapping.has_value());
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v)
      if (u != v)
        CHECK(c3.arc_unchecked(u, v) ==
              rev.arc_unchecked((*mapping)[u], (*mapping)[v]));

  CHECK_FALSE(is_isomorphic(bipartite(2, 2), directed_cycle(4)));
  CHECK_FALSE(is_isomorphic(complete(3), complete(4)));
}

TEST_CASE("isomorphism is reflexive/symmetric and mappings validate") {
  for (uint64_t i = 0; i < 60; ++i) {
    int n = 2 + static_cast<int>(i % 7);
    Digraph d = sample_digraph(n, 23, i);
    CHECK(is_isomorphic(d, d));

    // Shuffle labels with a seeded permutation.
    SplitMix64 rng(1000 + i);
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    for (int v = n - 1; v > 0; --v)
      std::swap(perm[v], perm[rng.next_below(v + 1)]);
    Digraph shuffled(n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && d.arc_unchecked(u, v))
          shuffled.set_arc_unchecked(perm[u], perm[v], true);

    auto fwd = find_isomorphism(d, shuffled);
    auto bwd = find_isomorphism(shuffled, d);
    REQUIRE(fwd.has_value());
    REQUIRE(bwd.has_value());
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v)
          CHECK(d.arc_unchecked(u, v) ==
                shuffled.arc_unchecked((*fwd)[u], (*fwd)[v]));
  }
}

TEST_CASE("order bounds") {
  CHECK_THROWS_AS(Digraph(0), std::invalid_argument);
  CHECK_THROWS_AS(Digraph(65), std::invalid_argument);
  CHECK(Digraph(64).order() == 64);
  CHECK(Digraph(1).serialize() == "DG 1\n0\n");
}
