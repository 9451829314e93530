#include "doctest.h"

#include "hamlab/connectivity.hpp"
#include "hamlab/families.hpp"
#include "support/oracles.hpp"

using namespace hamlab;

namespace {

Digraph directed_path(int n) {
  Digraph d(n);
  for (int i = 0; i + 1 < n; ++i) d.add_arc(i, i + 1);
  return d;
}

}  // namespace

TEST_CASE("strongness") {
  CHECK(is_strong(generate({FamilySpec::Kind::directed_cycle, 4, 0})));
  CHECK_FALSE(is_strong(directed_path(3)));
  CHECK(is_strong(phi_maximal(8, 6)));
  CHECK(is_strong(Digraph(1)));
}

TEST_CASE("vertex connectivity on the named families") {
  auto k5 = vertex_connectivity(generate({FamilySpec::Kind::complete, 5, 0}));
  CHECK(k5.kappa == 4);
  CHECK_FALSE(k5.separating_set.has_value());

  Digraph c5 = generate({FamilySpec::Kind::directed_cycle, 5, 0});
  auto r = vertex_connectivity(c5);
  CHECK(r.kappa == 1);
  REQUIRE(r.separating_set.has_value());
  CHECK(r.separating_set->size() == 1);

  auto k33 = vertex_connectivity(generate({FamilySpec::Kind::complete_bipartite, 3, 3}));
  CHECK(k33.kappa == 3);

  CHECK_THROWS_AS(vertex_connectivity(Digraph(1)), std::invalid_argument);
}

TEST_CASE("returned separators disconnect") {
  for (uint64_t i = 0; i < 150; ++i) {
    int n = 2 + static_cast<int>(i % 6);
    Digraph d = sample_digraph(n, 31, i);
    auto r = vertex_connectivity(d);
    CHECK(r.kappa == testing::deletion_connectivity(d));
    if (r.separating_set) {
      CHECK(static_cast<int>(r.separating_set->size()) == r.kappa);
      std::vector<int> kept;
      uint64_t removed = 0;
      for (int v : *r.separating_set) removed |= 1ull << v;
      CHECK_FALSE(
          strong_masked(d.out_rows(), d.in_rows(), d.vertex_mask() & ~removed));
    }
    if (n >= 2) CHECK(is_strong(d) == (r.kappa >= 1));
  }
}

TEST_CASE("k-strong matches brute-force deletion") {
  for (uint64_t i = 0; i < 120; ++i) {
    int n = 2 + static_cast<int>(i % 7);
    Digraph d = sample_digraph(n, 37, i);
    int bf = testing::deletion_connectivity(d);
    for (int k = 1; k <= n - 1; ++k)
      CHECK(is_k_strong(d, k) == (n >= k + 1 && bf >= k));
  }
}

TEST_CASE("two-path counts") {
  Digraph k4 = generate({FamilySpec::Kind::complete, 4, 0});
  CHECK(two_path_count(k4, 0, 1) == 2);
  Digraph c3 = generate({FamilySpec::Kind::directed_cycle, 3, 0});
  CHECK(two_path_count(c3, 0, 2) == 1);
  Digraph k33 = generate({FamilySpec::Kind::complete_bipartite, 3, 3});
  CHECK(two_path_count(k33, 0, 1) == 3);
  CHECK_THROWS_AS(two_path_count(k4, 2, 2), std::invalid_argument);
}

TEST_CASE("two-path existence") {
  Digraph c4 = generate({FamilySpec::Kind::directed_cycle, 4, 0});
  CHECK(has_two_path_between(c4, 0, 2));
  Digraph d(3);
  d.add_arc(0, 1);
  d.add_arc(2, 1);
  CHECK_FALSE(has_two_path_between(d, 0, 2));
  Digraph k22 = generate({FamilySpec::Kind::complete_bipartite, 2, 2});
  CHECK(has_two_path_between(k22, 0, 1));
  CHECK_THROWS_AS(has_two_path_between(k22, 1, 1), std::invalid_argument);
}

TEST_CASE("two-path lower bound holds corpus-wide") {
  for (uint64_t i = 0; i < 400; ++i) {
    int n = 2 + static_cast<int>(i % 7);
    Digraph d = sample_digraph(n, 41, i);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y || d.arc_unchecked(x, y)) continue;
        int count = two_path_count(d, x, y);
        CHECK(count == testing::naive_two_path_count(d, x, y));
        CHECK(count >= d.out_degree(x) + d.in_degree(y) - (n - 2));
      }
  }
}
