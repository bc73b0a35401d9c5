#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "mag/errors.hpp"
#include "mag/graph_io.hpp"
#include "oracles.hpp"

namespace mag {
namespace {

TEST(Json, ParsesGraph) {
  const MixedGraph g = parse_graph_json(R"({"nodes": ["X", "Y", "Z"], "edges": [
      {"u": "X", "v": "Z", "type": "directed"},
      {"u": "Z", "v": "Y", "type": "directed"}]})");
  EXPECT_EQ(g, fixtures::chain());

  const MixedGraph bi = parse_graph_json(R"({"nodes":["X","Y"],"edges":[{"u":"Y","v":"X","type":"bidirected"}]})");
  EXPECT_EQ(bi, fixtures::two_bi());

  EXPECT_EQ(parse_graph_json(R"({"nodes":["A"]})").node_count(), 1u);
}

TEST(Json, ErrorsNameTheOffendingElement) {
  auto message = [](std::string_view text) {
    try {
      parse_graph_json(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(message(R"({"nodes":["X"],"edges":[{"u":"X","v":"Q","type":"directed"}]})"),
            "edges[0]: unknown node label 'Q'");
  EXPECT_EQ(message(R"({"nodes":["X","Y"],"edges":[{"u":"X","v":"Y","type":"undirected"}]})"),
            "edges[0]: unknown edge type 'undirected'");
  EXPECT_NE(message(R"({"nodes":["X","Y"],"edges":[{"u":"X","v":"Y","type":"directed"},
                                              {"u":"Y","v":"X","type":"bidirected"}]})")
                .find("edges[1]"),
            std::string::npos);
  EXPECT_EQ(message(R"({"edges":[]})"), "graph needs a \"nodes\" array");
  EXPECT_EQ(message("{").rfind("malformed JSON", 0), 0u);
  EXPECT_THROW(parse_graph_json(R"({"nodes":["X","X"]})"), ParseError);
  EXPECT_THROW(parse_graph_json(R"({"nodes":[1]})"), ParseError);
}

TEST(Dot, Format) {
  EXPECT_EQ(to_dot(fixtures::disc()),
            "digraph mag {\n"
            "  W;\n  X;\n  Y;\n  Z;\n"
            "  W -> Z;\n"
            "  X -> Y;\n"
            "  X -> Z [dir=both];\n"
            "  Z -> Y;\n"
            "}\n");
}

TEST(Dot, QuotesAwkwardIdentifiers) {
  const MixedGraph g{{"a b", "node"}, {Edge::directed(0, 1)}};
  const std::string dot = to_dot(g);
  EXPECT_NE(dot.find("\"a b\" -> \"node\";"), std::string::npos) << dot;
  EXPECT_EQ(parse_dot(dot), g);
}

TEST(Dot, ParseErrors) {
  EXPECT_THROW(parse_dot("graph g { A -- B; }"), ParseError);
  EXPECT_THROW(parse_dot("digraph { A -> B [dir=back]; }"), ParseError);
  EXPECT_THROW(parse_dot("digraph { A -> B; B -> A; }"), ParseError);
  EXPECT_THROW(parse_graph("   "), ParseError);
}

TEST(RoundTrip, JsonAndDotPreserveCanonicalKey) {
  for (const MixedGraph& g : oracle::all_mixed_graphs(3)) {
    const std::string key = canonical_key(g);
    ASSERT_EQ(canonical_key(parse_graph(graph_to_json(g).dump())), key);
    ASSERT_EQ(canonical_key(parse_graph(to_dot(g))), key);
  }
  for (const MixedGraph& g : {fixtures::nonmax(), fixtures::disc(), fixtures::cov()}) {
    EXPECT_EQ(parse_graph(to_dot(g)), g);
    EXPECT_EQ(parse_graph(graph_to_json(g).dump()), g);
  }
}

TEST(Format, Helpers) {
  const MixedGraph g = fixtures::disc();
  EXPECT_EQ(format_path(g, {0, 3, 1, 2}), "W→Z↔X→Y");
  EXPECT_EQ(format_path(g, {2, 3}), "Y←Z");
  EXPECT_EQ(format_sequence(g, {0, 3}), "(W, Z)");
  EXPECT_EQ(format_set(g, NodeSet(4, {1, 3})), "{X, Z}");
  EXPECT_EQ(format_set(g, NodeSet(4)), "{}");
  EXPECT_EQ(format_edge(g, Edge::bidirected(1, 3)), "X↔Z");
  EXPECT_EQ(format_edge(g, Edge::directed(0, 3)), "W→Z");
}

}  // namespace
}  // namespace mag
