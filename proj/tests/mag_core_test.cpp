#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "mag/errors.hpp"
#include "mag/graph_io.hpp"
#include "mag/mag_core.hpp"
#include "oracles.hpp"

namespace mag {
namespace {

TEST(Ancestors, Examples) {
  EXPECT_EQ(ancestors(fixtures::chain(), 1).members(), (std::vector<NodeId>{0, 1, 2}));
  EXPECT_EQ(ancestors(fixtures::bicoll(), 2).members(), (std::vector<NodeId>{2}));
  EXPECT_THROW(ancestors(fixtures::chain(), 9), InputError);
}

TEST(Ancestors, OfSetIsUnion) {
  const MixedGraph g = fixtures::coll();  // X->Z<-Y
  EXPECT_EQ(ancestors_of_set(g, NodeSet(3, {0, 1})).members(), (std::vector<NodeId>{0, 1}));
  EXPECT_EQ(ancestors_of_set(g, NodeSet(3, {2})).size(), 3u);
  EXPECT_TRUE(ancestors_of_set(g, NodeSet(3)).empty());
}

TEST(Ancestors, ReflexiveTransitiveAndMatchesOracle) {
  for (const MixedGraph& g : oracle::all_mixed_graphs(4)) {
    const auto table = ancestor_table(g);
    for (NodeId x = 0; x < 4; ++x) {
      ASSERT_TRUE(table[x].contains(x));
      ASSERT_EQ(table[x].members(), oracle::ancestors(g, x)) << canonical_key(g);
      for (NodeId a : table[x]) ASSERT_TRUE(table[a].is_subset_of(table[x]));
    }
  }
}

TEST(Ancestral, Examples) {
  // X->Y plus Y->X would need two edges on one pair; the model forbids that, so
  // the shortest representable directed cycle has three nodes.
  MixedGraph cycle3(3);
  cycle3.add_directed(0, 1);
  cycle3.add_directed(1, 2);
  cycle3.add_directed(2, 0);
  EXPECT_FALSE(is_ancestral(cycle3));
  auto v = find_ancestral_violation(cycle3);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, AncestralViolation::Kind::DirectedCycle);

  MixedGraph spouses{{"X", "Y", "Z"},
                     {Edge::bidirected(0, 1), Edge::directed(0, 2), Edge::directed(2, 1)}};
  EXPECT_FALSE(is_ancestral(spouses));
  v = find_ancestral_violation(spouses);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, AncestralViolation::Kind::DirectedPathBetweenSpouses);
  EXPECT_EQ(describe(spouses, *v), "directed path X→Z→Y between spouses X↔Y");

  EXPECT_TRUE(is_ancestral(fixtures::nonmax()));
  EXPECT_TRUE(is_ancestral(fixtures::disc()));
}

TEST(Ancestral, MatchesOracleOnAllSmallGraphs) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const MixedGraph& g : oracle::all_mixed_graphs(n)) {
      const bool ok = is_ancestral(g);
      ASSERT_EQ(ok, oracle::is_ancestral(g)) << canonical_key(g);
      ASSERT_EQ(ok, !find_ancestral_violation(g).has_value());
    }
  }
}

TEST(InducingPath, Examples) {
  const MixedGraph g = fixtures::nonmax();
  EXPECT_TRUE(inducing_path_exists(g, 0, 3));
  EXPECT_EQ(find_inducing_path(g, 0, 3), (Path{0, 1, 2, 3}));
  EXPECT_TRUE(inducing_path_exists(fixtures::two(), 0, 1));
  EXPECT_FALSE(inducing_path_exists(fixtures::coll(), 0, 1));
  EXPECT_FALSE(inducing_path_exists(fixtures::chain(), 0, 1));
}

TEST(InducingPath, MatchesPathOracle) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const MixedGraph& g : oracle::all_mixed_graphs(n)) {
      for (NodeId x = 0; x < n; ++x) {
        for (NodeId y = x + 1; y < n; ++y) {
          const bool fast = inducing_path_exists(g, x, y);
          ASSERT_EQ(fast, oracle::inducing_path_exists(g, x, y))
              << canonical_key(g) << " " << x << "," << y;
          ASSERT_EQ(fast, inducing_path_exists(g, y, x));
          const auto p = find_inducing_path(g, x, y);
          ASSERT_EQ(fast, p.has_value());
          if (p) {
            EXPECT_EQ(p->front(), x);
            EXPECT_EQ(p->back(), y);
          }
        }
      }
    }
  }
}

TEST(Maximal, Examples) {
  EXPECT_FALSE(is_maximal(fixtures::nonmax()));
  EXPECT_TRUE(is_maximal(fixtures::coll()));
  auto v = find_maximality_violation(fixtures::nonmax());
  ASSERT_TRUE(v);
  EXPECT_EQ(v->x, 0u);
  EXPECT_EQ(v->y, 3u);
  EXPECT_EQ(format_path(fixtures::nonmax(), v->inducing_path), "α↔β↔γ↔δ");

  MixedGraph cycle3(3);
  cycle3.add_directed(0, 1);
  cycle3.add_directed(1, 2);
  cycle3.add_directed(2, 0);
  EXPECT_THROW(is_maximal(cycle3), PreconditionError);
}

TEST(Mag, Examples) {
  EXPECT_TRUE(is_mag(fixtures::cov()));
  EXPECT_FALSE(is_mag(fixtures::nonmax()));
  EXPECT_NO_THROW(Mag{fixtures::disc()});
  try {
    Mag m{fixtures::nonmax()};
    FAIL() << "expected NotAMagError";
  } catch (const NotAMagError& e) {
    EXPECT_NE(std::string(e.what()).find("not maximal"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("α↔β↔γ↔δ"), std::string::npos);
  }
}

TEST(Mag, MatchesOracleOnAllSmallGraphs) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const MixedGraph& g : oracle::all_mixed_graphs(n)) {
      const bool expected = oracle::is_ancestral(g) && oracle::is_maximal(g);
      ASSERT_EQ(is_mag(g), expected) << canonical_key(g);
    }
  }
}

}  // namespace
}  // namespace mag
