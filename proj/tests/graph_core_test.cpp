#include <gtest/gtest.h>

#include "pseudoloc/graph.hpp"
#include "pseudoloc/graph_io.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace pseudoloc;
using namespace testing_support;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(FromEdgeList, PathOnFour) {
  const Graph g = make(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(g.degree(0), 1);
  EXPECT_EQ(g.degree(1), 2);
}

TEST(FromEdgeList, PawIsCanonicalized) {
  const Graph g = make(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
  const std::vector<Edge> want = {{0, 1}, {0, 2}, {0, 3}, {1, 2}};
  EXPECT_EQ(g.edges(), want);
  EXPECT_EQ(std::vector<Vertex>(g.neighbors(0).begin(), g.neighbors(0).end()), (std::vector<Vertex>{1, 2, 3}));
}

TEST(FromEdgeList, RejectsBadInput) {
  EXPECT_EQ(kind_of([] { make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {2, 0}}); }), ErrorKind::DuplicateEdge);
  EXPECT_EQ(kind_of([] { make(3, {{0, 1}, {1, 1}, {1, 2}}); }), ErrorKind::SelfLoop);
  EXPECT_EQ(kind_of([] { make(3, {{0, 1}, {1, 3}}); }), ErrorKind::VertexOutOfRange);
  EXPECT_EQ(kind_of([] { make(4, {{0, 1}, {2, 3}}); }), ErrorKind::Disconnected);
  EXPECT_EQ(kind_of([] { make(65, {}); }), ErrorKind::SizeCapExceeded);
}

TEST(FromEdgeList, FiveEdgeGraphWithoutRepeatIsValid) {
  const Graph g = make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  EXPECT_EQ(g.size(), 5);
}

TEST(Graph6, DecodesK4) {
  const Graph g = parse_graph6("C~");
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 6);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) EXPECT_TRUE(g.has_edge(u, v));
}

TEST(Graph6, RoundTripsFixedString) {
  const Graph g = parse_graph6("DQc");
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(encode_graph6(g), "DQc");
}

TEST(Graph6, AcceptsHeaderAndTrailingWhitespace) {
  EXPECT_EQ(parse_graph6(">>graph6<<DQc\n"), parse_graph6("DQc"));
}

TEST(Graph6, RejectsMalformed) {
  EXPECT_EQ(kind_of([] { parse_graph6(""); }), ErrorKind::MalformedGraph6);
  EXPECT_EQ(kind_of([] { parse_graph6("C"); }), ErrorKind::MalformedGraph6);
  EXPECT_EQ(kind_of([] { parse_graph6("C~~"); }), ErrorKind::MalformedGraph6);
  EXPECT_EQ(kind_of([] { parse_graph6("C\x01"); }), ErrorKind::MalformedGraph6);
}

TEST(Graph6, RoundTripOnRandomConnectedGraphs) {
  Gen gen(11);
  for (int i = 0; i < 500; ++i) {
    const int n = gen.uniform(1, 12);
    const Graph g = gen.connected(n, gen.uniform(0, 2 * n));
    const std::string s = encode_graph6(g);
    EXPECT_EQ(parse_graph6(s), g) << s;
    EXPECT_EQ(encode_graph6(parse_graph6(s)), s);
  }
}

TEST(EdgeList, ParsesCommentsAndBlankLines) {
  const Graph g = parse_edge_list("# paw\n4\n\n0 1\n1 2 # side\n2 0\n0 3\n");
  EXPECT_EQ(g, paw());
  EXPECT_EQ(parse_edge_list(format_edge_list(g)), g);
}

TEST(EdgeList, RejectsMalformed) {
  EXPECT_EQ(kind_of([] { parse_edge_list(""); }), ErrorKind::MalformedEdgeList);
  EXPECT_EQ(kind_of([] { parse_edge_list("3\n0 1\n1\n"); }), ErrorKind::MalformedEdgeList);
  EXPECT_EQ(kind_of([] { parse_edge_list("x\n"); }), ErrorKind::MalformedEdgeList);
  EXPECT_EQ(kind_of([] { parse_edge_list("3\n0 1\n1 2\n0 1\n"); }), ErrorKind::DuplicateEdge);
}

TEST(Distances, Path) {
  const DistanceMatrix dm(path(4));
  const std::vector<int> row(dm.row(0).begin(), dm.row(0).end());
  EXPECT_EQ(row, (std::vector<int>{0, 1, 2, 3}));
}

TEST(Distances, Cycle) {
  const DistanceMatrix dm(cycle(5));
  EXPECT_EQ(dm(0, 2), 2);
  EXPECT_EQ(dm(0, 3), 2);
}

TEST(Distances, Paw) {
  const DistanceMatrix dm(paw());
  EXPECT_EQ(dm(3, 1), 2);
  EXPECT_EQ(dm(3, 2), 2);
  EXPECT_EQ(dm.diameter(), 2);
}

TEST(Distances, MatchFloydAndSatisfyMetricAxioms) {
  Gen gen(5);
  for (int i = 0; i < 300; ++i) {
    const int n = gen.uniform(1, 14);
    const Graph g = gen.connected(n, gen.uniform(0, n));
    const DistanceMatrix dm(g);
    const Matrix ref = floyd(g);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        ASSERT_EQ(dm(u, v), ref[u][v]);
        EXPECT_EQ(dm(u, v), dm(v, u));
        EXPECT_EQ(dm(u, v) == 0, u == v);
        EXPECT_EQ(dm(u, v) == 1, g.has_edge(u, v));
        for (int w = 0; w < n; ++w) EXPECT_LE(dm(u, w), dm(u, v) + dm(v, w));
      }
  }
}

TEST(GirthAndCycle, Examples) {
  const auto paw_cycle = girth_and_cycle(paw());
  ASSERT_TRUE(paw_cycle);
  EXPECT_EQ(paw_cycle->girth, 3);
  EXPECT_EQ(paw_cycle->cycle, (std::vector<Vertex>{0, 1, 2}));

  EXPECT_FALSE(girth_and_cycle(path(4)));

  const auto c6 = girth_and_cycle(cycle(6));
  ASSERT_TRUE(c6);
  EXPECT_EQ(c6->girth, 6);
  EXPECT_EQ(c6->cycle, (std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
}

TEST(GirthAndCycle, RejectsMoreEdgesThanVertices) {
  EXPECT_EQ(kind_of([] { girth_and_cycle(parse_graph6("C~")); }), ErrorKind::NotPseudotree);
}

TEST(GirthAndCycle, CycleIsClosedWalkOfGirthLength) {
  Gen gen(17);
  for (int i = 0; i < 300; ++i) {
    const Graph g = gen.unicyclic(gen.uniform(3, 20));
    const auto c = girth_and_cycle(g);
    ASSERT_TRUE(c);
    ASSERT_EQ(static_cast<int>(c->cycle.size()), c->girth);
    for (int j = 0; j < c->girth; ++j) EXPECT_TRUE(g.has_edge(c->cycle[j], c->cycle[(j + 1) % c->girth]));
  }
}

TEST(Bipartite, Examples) {
  EXPECT_TRUE(is_bipartite(cycle(6)));
  EXPECT_FALSE(is_bipartite(paw()));
  Gen gen(3);
  for (int i = 0; i < 50; ++i) EXPECT_TRUE(is_bipartite(gen.tree(gen.uniform(1, 20))));
}
