#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "mag/enumeration.hpp"
#include "mag/equivalence.hpp"
#include "mag/errors.hpp"
#include "mag/transform.hpp"
#include "oracles.hpp"

namespace mag {
namespace {

std::vector<std::string> keys_of(const std::vector<Mag>& mags) {
  std::vector<std::string> keys;
  for (const Mag& m : mags) keys.push_back(canonical_key(m.graph()));
  return keys;
}

TEST(Assignments, Counts) {
  EXPECT_EQ(pair_count(4), 6u);
  EXPECT_EQ(assignment_count(4), 4096u);
  EXPECT_EQ(assignment_count(1), 1u);
  EXPECT_EQ(canonical_key(graph_from_assignment(2, 0)), "2;");
  EXPECT_EQ(canonical_key(graph_from_assignment(2, 1)), "2;0>1");
  EXPECT_EQ(canonical_key(graph_from_assignment(2, 2)), "2;1>0");
  EXPECT_EQ(canonical_key(graph_from_assignment(2, 3)), "2;0<>1");
}

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(keys_of(enumerate_mags(1)), (std::vector<std::string>{"1;"}));
  EXPECT_EQ(keys_of(enumerate_mags(2)),
            (std::vector<std::string>{"2;", "2;0<>1", "2;0>1", "2;1>0"}));
  EXPECT_THROW(enumerate_mags(0), InputError);
  EXPECT_THROW(enumerate_mags(6), InputError);
}

// Frozen from the path oracle: every ancestral 3-node graph is maximal, so
// the MAG count equals the ancestral count.
TEST(Enumerate, ThreeNodeCountEqualsAncestralCount) {
  std::size_t ancestral = 0;
  for (const MixedGraph& g : oracle::all_mixed_graphs(3)) ancestral += oracle::is_ancestral(g);
  EXPECT_EQ(ancestral, 56u);
  EXPECT_EQ(enumerate_mags(3).size(), 56u);
}

TEST(Enumerate, FourNodesMatchesOracleFilter) {
  std::set<std::string> expected;
  for (const MixedGraph& g : oracle::all_mixed_graphs(4)) {
    if (oracle::is_ancestral(g) && oracle::is_maximal(g)) expected.insert(canonical_key(g));
  }
  const auto keys = keys_of(enumerate_mags(4));
  EXPECT_EQ(keys.size(), 2492u);
  EXPECT_EQ(std::set<std::string>(keys.begin(), keys.end()), expected);
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
}

TEST(Enumerate, ParallelMatchesSerial) {
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_EQ(keys_of(enumerate_mags(n)), keys_of(enumerate_mags_serial(n))) << n;
  }
}

TEST(Partition, Examples) {
  EXPECT_EQ(partition_into_classes(enumerate_mags(1)).classes.size(), 1u);

  const ClassPartition two = partition_into_classes(enumerate_mags(2));
  EXPECT_EQ(two.member_keys,
            (std::vector<std::vector<std::string>>{{"2;"}, {"2;0<>1", "2;0>1", "2;1>0"}}));

  const std::vector<Mag> mixed{Mag{fixtures::chain()}, Mag{fixtures::coll()}};
  const ClassPartition p = partition_into_classes(mixed);
  EXPECT_NE(p.class_of[0], p.class_of[1]);

  const std::vector<Mag> bad{Mag{fixtures::two()}, Mag{fixtures::chain()}};
  EXPECT_THROW(partition_into_classes(bad), InputError);
}

// Frozen from the brute-force partition.
TEST(Partition, ThreeNodeClassCount) {
  EXPECT_EQ(partition_into_classes(enumerate_mags(3)).classes.size(), 11u);
}

TEST(Partition, ParallelMatchesSerial) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto mags = enumerate_mags(n);
    const ClassPartition a = partition_into_classes(mags);
    const ClassPartition b = partition_into_classes_serial(mags);
    EXPECT_EQ(a.class_of, b.class_of);
    EXPECT_EQ(a.member_keys, b.member_keys);
  }
}

TEST(Partition, MembersShareSkeletonAndColliders) {
  const auto mags = enumerate_mags(4);
  const ClassPartition part = partition_into_classes(mags);
  for (const auto& cls : part.classes) {
    const MixedGraph& first = mags[cls.front()].graph();
    const auto colliders = unshielded_colliders(first);
    for (std::size_t i : cls) {
      const MixedGraph& g = mags[i].graph();
      for (NodeId a = 0; a < 4; ++a)
        for (NodeId b = 0; b < 4; ++b) ASSERT_EQ(g.adjacent(a, b), first.adjacent(a, b));
      ASSERT_EQ(unshielded_colliders(g), colliders);
    }
  }
}

TEST(Partition, ClassesMatchPairwiseBruteForceAtN3) {
  const auto mags = enumerate_mags(3);
  const ClassPartition part = partition_into_classes(mags);
  for (std::size_t i = 0; i < mags.size(); ++i)
    for (std::size_t j = 0; j < mags.size(); ++j)
      ASSERT_EQ(part.class_of[i] == part.class_of[j],
                markov_equivalent_bruteforce(mags[i], mags[j]));
}

TEST(Lemma1, Examples) {
  EXPECT_TRUE(check_lemma1(Mag{fixtures::two()}, 0, 1));
  EXPECT_TRUE(check_lemma1(Mag{fixtures::two_bi()}, 0, 1));
  EXPECT_THROW(check_lemma1(Mag{fixtures::nonblk()}, 0, 1), InputError);
}

TEST(Lemma1, HoldsOnEveryBlanketedEdgeUpToFourNodes) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const Mag& m : enumerate_mags(n)) {
      for (const Edge& e : m.graph().edges()) {
        if (e.kind == EdgeKind::Directed) {
          if (is_blanketed_directed(m, e.u, e.v)) ASSERT_TRUE(check_lemma1(m, e.u, e.v));
        } else {
          for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            if (is_blanketed_bidirected_against(m, x, y)) ASSERT_TRUE(check_lemma1(m, x, y));
          }
        }
      }
    }
  }
}

TEST(Lemma2, HoldsUpToFourNodes) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const CheckResult r = check_lemma2(enumerate_mags(n));
    EXPECT_EQ(r.name, "lemma2");
    EXPECT_TRUE(r.passed()) << (r.examples.empty() ? "" : r.examples.front());
  }
}

TEST(VerifyTheorems, SmallSizes) {
  const EquivalenceReport one = verify_theorems(1);
  EXPECT_EQ(one.mag_count, 1u);
  EXPECT_TRUE(one.all_passed());

  const EquivalenceReport two = verify_theorems(2);
  EXPECT_EQ(two.mag_count, 4u);
  EXPECT_EQ(two.class_count, 2u);
  EXPECT_TRUE(two.all_passed());
  EXPECT_EQ(two.checks.size(), 6u);

  const EquivalenceReport three = verify_theorems(3);
  EXPECT_EQ(three.mag_count, 56u);
  EXPECT_EQ(three.class_count, 11u);
  EXPECT_TRUE(three.all_passed());
  EXPECT_EQ(three.check("thm2_vs_oracle").cases, 56u * 56u);
  EXPECT_THROW(three.check("nope"), InputError);

  const auto j = to_json(three);
  EXPECT_TRUE(j["all_passed"].get<bool>());
  EXPECT_TRUE(j["checks"].contains("thm4_iff"));

  EXPECT_THROW(verify_theorems(5), InputError);
}

TEST(Conjecture, SmallSizes) {
  const ConjectureReport one = test_conjecture1(1);
  EXPECT_EQ(one.pairs_examined, 0u);
  EXPECT_TRUE(one.counterexamples.empty());

  const ConjectureReport two = test_conjecture1(2);
  EXPECT_EQ(two.class_count, 2u);
  EXPECT_EQ(two.pairs_examined, 6u);
  EXPECT_TRUE(two.counterexamples.empty());
  EXPECT_TRUE(two.closure_gaps.empty());

  const ConjectureReport three = test_conjecture1(3);
  EXPECT_EQ(three.classes_examined, 11u);
  const auto j = to_json(three);
  for (const char* key : {"n", "mag_count", "class_count", "classes_examined", "pairs_examined",
                          "counterexamples", "closure_gaps", "checks"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["checks"].size(), 6u);
}

}  // namespace
}  // namespace mag
