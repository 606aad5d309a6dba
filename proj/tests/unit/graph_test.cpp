#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "spreadbench/error.hpp"
#include "spreadbench/graph.hpp"
#include "spreadbench/synthetic.hpp"

namespace spreadbench {
namespace {

TEST(ParseEdgeList, BuildsNodesAndEdges) {
  const Graph g = parse_edge_list("a b\nb c");
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.label(0), "a");
  EXPECT_EQ(g.label(2), "c");
}

TEST(ParseEdgeList, DropsDuplicatesAndSelfLoops) {
  const Graph g = parse_edge_list("a b\nb a\na a");
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(ParseEdgeList, SkipsCommentsAndBlankLines) {
  const Graph g = parse_edge_list("# comment\n% konect header\n\n   \na b\n");
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(ParseEdgeList, AcceptsTabsAndRuns) {
  const Graph g = parse_edge_list("1\t\t2\r\n2    3\n");
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(2, 1));
}

TEST(ParseEdgeList, ReportsMalformedLine) {
  try {
    parse_edge_list("a b\nb c d\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(parse_edge_list("lonely\n"), ParseError);
}

TEST(ParseEdgeList, RejectsEmptyInput) {
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("# only a comment\n"), ParseError);
}

TEST(Graph, AdjacencyIsSortedSymmetricAndSimple) {
  const Graph g = erdos_renyi(40, 0.15, 3);
  std::size_t degree_sum = 0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const auto list = g.neighbors(u);
    degree_sum += list.size();
    EXPECT_TRUE(std::is_sorted(list.begin(), list.end()));
    EXPECT_EQ(std::adjacent_find(list.begin(), list.end()), list.end());
    for (NodeId v : list) {
      EXPECT_NE(u, v);
      EXPECT_TRUE(g.has_edge(v, u));
    }
  }
  EXPECT_EQ(degree_sum, 2 * g.edge_count());
}

TEST(Graph, EdgeListRoundTripPreservesLabelsAndDegrees) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_connected(30, 25, seed);
    const Graph back = parse_edge_list(to_edge_list(g));
    ASSERT_EQ(back.node_count(), g.node_count());
    ASSERT_EQ(back.edge_count(), g.edge_count());

    auto sorted_labels = [](const Graph& x) {
      auto labels = x.labels();
      std::sort(labels.begin(), labels.end());
      return labels;
    };
    EXPECT_EQ(sorted_labels(back), sorted_labels(g));

    // Same label set and same edge set between labels: isomorphic.
    for (NodeId u = 0; u < back.node_count(); ++u) {
      const auto original = static_cast<NodeId>(std::stoul(back.label(u)));
      EXPECT_EQ(back.degree(u), g.degree(original));
      for (NodeId v : back.neighbors(u)) {
        EXPECT_TRUE(g.has_edge(original, static_cast<NodeId>(std::stoul(back.label(v)))));
      }
    }
  }
}

TEST(GreatestConnectedComponent, PicksLargestComponent) {
  const Graph g = parse_edge_list("x y\na b\nb c\n");
  const Graph gcc = greatest_connected_component(g);
  EXPECT_EQ(gcc.node_count(), 3u);
  EXPECT_EQ(gcc.edge_count(), 2u);
  EXPECT_EQ(gcc.label(0), "a");
}

TEST(GreatestConnectedComponent, ConnectedGraphIsUnchanged) {
  const Graph g = random_connected(25, 10, 7);
  const Graph gcc = greatest_connected_component(g);
  EXPECT_EQ(gcc.node_count(), g.node_count());
  EXPECT_EQ(gcc.edge_count(), g.edge_count());
}

TEST(GreatestConnectedComponent, TiesGoToComponentWithSmallestIndex) {
  const Graph g = parse_edge_list("c d\na b\n");
  const Graph gcc = greatest_connected_component(g);
  ASSERT_EQ(gcc.node_count(), 2u);
  EXPECT_EQ(gcc.label(0), "c");
  EXPECT_EQ(gcc.label(1), "d");
}

TEST(GreatestConnectedComponent, RejectsEmptyGraph) {
  EXPECT_THROW(greatest_connected_component(Graph{}), InvalidArgument);
}

TEST(ContentHash, DependsOnStructureAndLabels) {
  const Graph a = parse_edge_list("a b\nb c\n");
  EXPECT_EQ(content_hash(a), content_hash(parse_edge_list("a b\nc b\nb a\n")));
  EXPECT_NE(content_hash(a), content_hash(parse_edge_list("a b\na c\n")));
  EXPECT_NE(content_hash(a), content_hash(parse_edge_list("a b\nb d\n")));
}

}  // namespace
}  // namespace spreadbench
