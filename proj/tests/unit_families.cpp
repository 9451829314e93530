#include "doctest.h"

#include <set>

#include "hamlab/conditions.hpp"
#include "hamlab/connectivity.hpp"
#include "hamlab/cycles.hpp"
#include "hamlab/families.hpp"

using namespace hamlab;

TEST_CASE("family strings") {
  for (const char* s : {"complete:n=3", "complete_bipartite:a=2,b=2",
                        "complete_bipartite_minus_arc:a=3,b=3", "phi:n=8,m=6",
                        "directed_cycle:n=5"}) {
    CHECK(FamilySpec::from_string(s).to_string() == s);
  }
  CHECK_THROWS_AS(FamilySpec::from_string("torus:n=3"), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::from_string("complete"), std::invalid_argument);
}

TEST_CASE("generators") {
  CHECK(generate(FamilySpec::from_string("complete:n=3")).arc_count() == 6);
  Digraph k22 = generate(FamilySpec::from_string("complete_bipartite:a=2,b=2"));
  CHECK(k22.arc_count() == 8);
  CHECK_FALSE(k22.adjacent(0, 1));
  CHECK_FALSE(k22.adjacent(2, 3));

  Digraph c5 = generate(FamilySpec::from_string("directed_cycle:n=5"));
  CHECK(c5.arc_count() == 5);
  CHECK(vertex_connectivity(c5).kappa == 1);

  Digraph minus = generate(
      FamilySpec::from_string("complete_bipartite_minus_arc:a=3,b=3"));
  CHECK(minus.arc_count() == 17);
  CHECK_FALSE(minus.arc(0, 3));
  CHECK(minus.arc(3, 0));

  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      CHECK(generate({FamilySpec::Kind::complete_bipartite, a, b}).arc_count() ==
            2 * a * b);
}

TEST_CASE("phi family members") {
  Digraph phi = phi_maximal(8, 6);
  std::vector<std::pair<int, int>> expected{{0, 5}, {1, 6}, {2, 7}};
  CHECK(phi.non_adjacent_pairs() == expected);

  // x_8 x_7 ... x_1 x_8 is a Hamiltonian cycle.
  CycleCertificate down{{7, 6, 5, 4, 3, 2, 1, 0}};
  CHECK(verify_certificate(phi, down));

  CHECK_FALSE(cycle_length_profile(phi).contains(6));

  std::vector<int> identity{0, 1, 2, 3, 4, 5, 6, 7};
  CHECK(is_in_phi(phi, 8, 6, identity));

  // Any extra backward arc breaks condition (iv).
  Digraph broken = phi;
  broken.add_arc(4, 1);
  CHECK_FALSE(is_in_phi(broken, 8, 6, identity));

  std::vector<int> id8{0, 1, 2, 3, 4, 5, 6, 7};
  CHECK_FALSE(is_in_phi(generate({FamilySpec::Kind::complete, 8, 0}), 8, 6, id8));

  CHECK_THROWS_AS(phi_maximal(8, 4), std::invalid_argument);
  CHECK_THROWS_AS(phi_maximal(8, 8), std::invalid_argument);
  std::vector<int> not_perm{0, 0, 2, 3, 4, 5, 6, 7};
  CHECK_THROWS_AS(is_in_phi(phi, 8, 6, not_perm), std::invalid_argument);

  // The arc-maximal candidate passes its own checks across the legal range.
  for (int n = 3; n <= 11; ++n)
    for (int m = 2; m <= n - 1; ++m) {
      if (2 * m <= n + 1) continue;
      Digraph member = phi_maximal(n, m);
      std::vector<int> lab(n);
      for (int i = 0; i < n; ++i) lab[i] = i;
      CHECK(is_in_phi(member, n, m, lab));
    }
}

TEST_CASE("exhaustive enumeration counts") {
  EnumerationScope scope{3, EnumerationMode::exhaustive};
  uint64_t count = 0;
  enumerate(scope, [&](const Digraph&) { ++count; });
  CHECK(count == 64);
  CHECK(enumeration_size(scope) == 64);

  scope.prefilter = {"strong"};
  count = 0;
  enumerate(scope, [&](const Digraph& d) {
    CHECK(is_strong(d));
    ++count;
  });
  CHECK(count == 18);

  EnumerationScope bad{6, EnumerationMode::exhaustive};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("complement enumeration with a full budget matches exhaustive") {
  EnumerationScope raw{3, EnumerationMode::exhaustive};
  std::set<std::string> raw_set;
  enumerate(raw, [&](const Digraph& d) { raw_set.insert(d.serialize()); });

  EnumerationScope comp{3, EnumerationMode::exhaustive_complement};
  comp.pair_budget = 3;
  std::set<std::string> comp_set;
  uint64_t count = 0;
  enumerate(comp, [&](const Digraph& d) {
    comp_set.insert(d.serialize());
    ++count;
  });
  CHECK(count == 64);
  CHECK(raw_set == comp_set);
  CHECK(enumeration_size(comp) == 64);
}

TEST_CASE("complement enumeration forces the pattern") {
  EnumerationScope comp{4, EnumerationMode::exhaustive_complement};
  comp.pair_budget = 2;
  uint64_t count = 0;
  enumerate(comp, [&](const Digraph& d) {
    CHECK(d.non_adjacent_pairs().size() <= 2);
    ++count;
  });
  CHECK(count == enumeration_size(comp));
  // 3^6 + 6*3^5 + 15*3^4 = 729 + 1458 + 1215
  CHECK(count == 3402);
}

TEST_CASE("enumeration determinism") {
  for (EnumerationMode mode :
       {EnumerationMode::exhaustive, EnumerationMode::exhaustive_complement}) {
    EnumerationScope scope{4, mode};
    std::vector<std::string> first, second;
    enumerate(scope, [&](const Digraph& d) { first.push_back(d.serialize()); });
    enumerate(scope, [&](const Digraph& d) { second.push_back(d.serialize()); });
    CHECK(first == second);
  }

  EnumerationScope sampled{7, EnumerationMode::sampled};
  sampled.sample_count = 1000;
  sampled.seed = 42;
  std::vector<std::string> a, b;
  enumerate(sampled, [&](const Digraph& d) { a.push_back(d.serialize()); });
  enumerate(sampled, [&](const Digraph& d) { b.push_back(d.serialize()); });
  CHECK(a.size() == 1000);
  CHECK(a == b);
}

TEST_CASE("targeted condition-(M) sampler") {
  auto dense = random_condition_m_digraph(6, 1, 0);
  REQUIRE(dense.has_value());
  auto m = evaluate(*dense, {ConditionKind::condition_m});
  CHECK(m.satisfied);
  CHECK(m.vacuous);
  CHECK(is_k_strong(*dense, 2));

  auto with_pairs = random_condition_m_digraph(8, 7, 2);
  REQUIRE(with_pairs.has_value());
  CHECK(evaluate(*with_pairs, {ConditionKind::condition_m}).satisfied);
  CHECK(is_k_strong(*with_pairs, 2));
  // Determinism.
  CHECK(with_pairs->serialize() ==
        random_condition_m_digraph(8, 7, 2)->serialize());

  // Six non-adjacent pairs on four vertices leave no arcs at all.
  CHECK_FALSE(random_condition_m_digraph(4, 3, 6).has_value());
}
