#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cutscope/graph.hpp"

using namespace cutscope;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::undefined;
}

}  // namespace

TEST(Graph, RejectsMalformedInput) {
  EXPECT_EQ(code_of([] { Graph(1, {}); }), Errc::invalid_graph);
  EXPECT_EQ(code_of([] { Graph(3, {}); }), Errc::invalid_graph);
  EXPECT_EQ(code_of([] { Graph(3, {{1, 1}}); }), Errc::invalid_graph);
  EXPECT_EQ(code_of([] { Graph(3, {{1, 2}, {2, 1}}); }), Errc::invalid_graph);
  EXPECT_EQ(code_of([] { Graph(3, {{1, 4}}); }), Errc::invalid_graph);
  EXPECT_EQ(code_of([] { Graph(3, {{0, 2}}); }), Errc::invalid_graph);
}

TEST(Graph, FamiliesHaveExpectedShape) {
  EXPECT_EQ(cycle(5).edge_count(), 5);
  EXPECT_EQ(cycle(5).edge(5), (Edge{1, 5}));
  EXPECT_EQ(path(4).edge_count(), 3);
  EXPECT_EQ(complete(4).edge_count(), 6);
  EXPECT_EQ(complete(3).edge(2), (Edge{1, 3}));
  EXPECT_EQ(code_of([] { cycle(2); }), Errc::invalid_family);
  for (int d : cycle(6).degrees()) EXPECT_EQ(d, 2);
}

TEST(Graph, CliqueSumLabelsFirstGraphFirst) {
  const Graph g = clique_sum(complete(2), complete(3), VertexPairing::glue(2, 1));
  EXPECT_EQ(g.vertex_count(), 4);
  ASSERT_EQ(g.edge_count(), 4);
  EXPECT_EQ(g.edge(1), (Edge{1, 2}));
  EXPECT_EQ(g.edge(2), (Edge{2, 3}));
  EXPECT_EQ(g.edge(3), (Edge{2, 4}));
  EXPECT_EQ(g.edge(4), (Edge{3, 4}));

  const Graph d = clique_sum(complete(2), complete(2), VertexPairing::disjoint());
  EXPECT_EQ(d.vertex_count(), 4);
  EXPECT_EQ(components(d).size(), 2u);
}

TEST(Graph, CliqueSumRejectsLargerOverlap) {
  VertexPairing two{{{1, 1}, {2, 2}}};
  EXPECT_EQ(code_of([&] { clique_sum(complete(3), complete(3), two); }), Errc::invalid_pairing);
  EXPECT_EQ(code_of([] { clique_sum(complete(2), complete(2), VertexPairing::glue(3, 1)); }), Errc::invalid_pairing);
}

TEST(Graph, ComponentsCountIsolatedVertices) {
  const Graph g(5, {{1, 2}, {3, 4}});
  const auto comps = components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[2], std::vector<int>{5});
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(cycle(4)));
}

TEST(Graph, BlocksOfBowtieAndTree) {
  const Graph bowtie = clique_sum(cycle(3), cycle(3), VertexPairing::glue(1, 1));
  const auto b = blocks(bowtie);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0].size(), 3u);
  EXPECT_EQ(b[1].size(), 3u);
  EXPECT_EQ(blocks(path(5)).size(), 4u);
  EXPECT_EQ(blocks(cycle(5)).size(), 1u);
}

// Every block meets the union of the earlier blocks in at most one vertex,
// and the blocks partition the edges.
TEST(Graph, BlockOrderIsCliqueSumOrder) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(rng, 8);
    std::set<int> seen_vertices, seen_edges;
    for (const auto& block : blocks(g)) {
      std::set<int> vs;
      for (int l : block) {
        EXPECT_TRUE(seen_edges.insert(l).second);
        vs.insert(g.edge(l).u);
        vs.insert(g.edge(l).v);
      }
      int shared = 0;
      for (int v : vs) shared += seen_vertices.count(v);
      EXPECT_LE(shared, 1);
      seen_vertices.insert(vs.begin(), vs.end());
    }
    EXPECT_EQ(static_cast<int>(seen_edges.size()), g.edge_count());
  }
}

TEST(Graph, EdgeSubgraphRenumbers) {
  const Graph g = edge_subgraph(cycle(5), {3, 4});
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edge(1), (Edge{1, 2}));
  EXPECT_EQ(g.edge(2), (Edge{2, 3}));
}

TEST(Graph, RandomGraphIsDeterministicPerSeed) {
  std::mt19937_64 a(11), b(11);
  for (int k = 0; k < 20; ++k) EXPECT_EQ(random_graph(a, 8), random_graph(b, 8));
}
