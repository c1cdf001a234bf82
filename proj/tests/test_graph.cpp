#include "lrc/graph.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "lrc/harary.hpp"
#include "test_util.hpp"

using lrc::DistanceRow;
using lrc::Edge;
using lrc::Graph;
using lrc::kUnreachable;

TEST(Edge, Canonicalization) {
  Edge e(5, 2);
  EXPECT_EQ(e.u, 2);
  EXPECT_EQ(e.v, 5);
  EXPECT_EQ(e, Edge(2, 5));
  EXPECT_LT(Edge(1, 3), Edge(2, 3));
  EXPECT_LT(Edge(2, 3), Edge(2, 4));
}

TEST(Graph, Construction) {
  Graph g1(1);
  EXPECT_EQ(g1.vertex_count(), 1);
  EXPECT_EQ(g1.edge_count(), 0u);

  Graph g5(5);
  for (int v = 1; v <= 5; ++v) EXPECT_EQ(g5.degree(v), 0);

  EXPECT_THROW(Graph(0), lrc::GraphError);
  EXPECT_THROW(Graph(-3), lrc::GraphError);
}

TEST(Graph, AddEdge) {
  Graph g(5);
  g.add_edge(Edge(1, 2)).add_edge(Edge(2, 3));
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.degree(2), 2);
  EXPECT_EQ(g.degree(1), 1);
  EXPECT_TRUE(g.has_edge(Edge(2, 1)));
  EXPECT_FALSE(g.has_edge(Edge(1, 3)));

  EXPECT_THROW(g.add_edge(Edge(1, 1)), lrc::SelfLoopError);
  EXPECT_THROW(g.add_edge(Edge(1, 6)), lrc::VertexRangeError);
  EXPECT_THROW(g.add_edge(Edge(0, 2)), lrc::VertexRangeError);
  EXPECT_THROW(g.add_edge(Edge(2, 1)), lrc::DuplicateEdgeError);
}

TEST(Graph, DegreeSumIsTwiceEdgeCount) {
  Graph g = lrc::harary(4, 11);
  std::size_t sum = 0;
  for (int v = 1; v <= g.vertex_count(); ++v)
    sum += static_cast<std::size_t>(g.degree(v));
  EXPECT_EQ(sum, 2 * g.edge_count());
}

TEST(Graph, RemoveEdgeIsNonDestructive) {
  Graph c3 = lrc_test::cycle(3);
  Graph cut = c3.remove_edge(Edge(1, 2));
  EXPECT_EQ(cut.edge_count(), 2u);
  EXPECT_EQ(lrc::bfs_distances(cut, 1)[2], 2);  // path 1-3-2
  // Original untouched.
  EXPECT_EQ(c3.edge_count(), 3u);
  EXPECT_TRUE(c3.has_edge(Edge(1, 2)));
}

TEST(Graph, RemoveEdgeDisconnects) {
  Graph p2 = lrc_test::path(2);
  Graph cut = p2.remove_edge(Edge(1, 2));
  EXPECT_EQ(cut.edge_count(), 0u);
  EXPECT_EQ(lrc::bfs_distances(cut, 1)[2], kUnreachable);
}

TEST(Graph, RemoveEdgeFromHarary36) {
  Graph g = lrc::harary(3, 6);
  ASSERT_EQ(g.edge_count(), 9u);
  Graph cut = g.remove_edge(Edge(1, 4));
  EXPECT_EQ(cut.edge_count(), 8u);
  EXPECT_EQ(cut.degree(1), 2);
  EXPECT_EQ(cut.degree(4), 2);
}

TEST(Graph, RemoveMissingEdge) {
  Graph g = lrc_test::path(3);
  EXPECT_THROW(g.remove_edge(Edge(1, 3)), lrc::EdgeNotFoundError);
  EXPECT_THROW(g.remove_edge(Edge(2, 2)), lrc::EdgeNotFoundError);
}

TEST(Graph, EdgesAreLexicographic) {
  Graph g(4);
  g.add_edge(Edge(3, 4)).add_edge(Edge(1, 4)).add_edge(Edge(1, 2));
  std::vector<Edge> expect{Edge(1, 2), Edge(1, 4), Edge(3, 4)};
  EXPECT_EQ(g.edges(), expect);
}

TEST(Bfs, PathAndCycle) {
  DistanceRow p = lrc::bfs_distances(lrc_test::path(4), 1);
  EXPECT_EQ(p.source, 1);
  EXPECT_EQ(p[1], 0);
  EXPECT_EQ(p[2], 1);
  EXPECT_EQ(p[3], 2);
  EXPECT_EQ(p[4], 3);

  DistanceRow c = lrc::bfs_distances(lrc_test::cycle(4), 1);
  EXPECT_EQ(c[1], 0);
  EXPECT_EQ(c[2], 1);
  EXPECT_EQ(c[3], 2);
  EXPECT_EQ(c[4], 1);
}

TEST(Bfs, UnreachableIsSentinel) {
  Graph g(2);
  DistanceRow row = lrc::bfs_distances(g, 1);
  EXPECT_EQ(row[1], 0);
  EXPECT_EQ(row[2], kUnreachable);
  EXPECT_FALSE(row.reachable(2));
  EXPECT_TRUE(row.reachable(1));
}

TEST(Bfs, SourceOutOfRange) {
  Graph g(3);
  EXPECT_THROW(lrc::bfs_distances(g, 0), lrc::VertexRangeError);
  EXPECT_THROW(lrc::bfs_distances(g, 4), lrc::VertexRangeError);
}

TEST(AllPairs, SmallExamples) {
  auto rows = lrc::all_pairs_distances(lrc_test::cycle(4));
  ASSERT_EQ(rows.size(), 4u);
  for (int i = 1; i <= 4; ++i) {
    std::multiset<int> ms(rows[i - 1].dist.begin() + 1,
                          rows[i - 1].dist.end());
    EXPECT_EQ(ms, (std::multiset<int>{0, 1, 1, 2}));
  }

  for (const auto& row : lrc::all_pairs_distances(lrc_test::complete(3)))
    for (int j = 1; j <= 3; ++j)
      EXPECT_EQ(row[j], j == row.source ? 0 : 1);

  // Every H_{3,6} vertex sees 3 neighbors and 2 vertices at distance 2.
  for (const auto& row : lrc::all_pairs_distances(lrc::harary(3, 6))) {
    int at1 = 0, at2 = 0;
    for (int j = 1; j <= 6; ++j) {
      if (j == row.source) continue;
      ASSERT_TRUE(row[j] == 1 || row[j] == 2);
      (row[j] == 1 ? at1 : at2) += 1;
    }
    EXPECT_EQ(at1, 3);
    EXPECT_EQ(at2, 2);
  }
}

TEST(GraphProperties, RandomizedInvariants) {
  std::mt19937 rng(94051);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = lrc_test::random_graph(rng, 10);
    const int n = g.vertex_count();
    auto rows = lrc::all_pairs_distances(g);
    auto fw = lrc_test::floyd_warshall(g);

    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        EXPECT_EQ(rows[i - 1][j], fw[i][j]);       // independent oracle
        EXPECT_EQ(rows[i - 1][j], rows[j - 1][i]); // symmetry
      }

    // Triangle inequality on reachable triples.
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int m = 1; m <= n; ++m)
          if (rows[i - 1][m] >= 0 && rows[m - 1][j] >= 0 &&
              rows[i - 1][j] >= 0) {
            EXPECT_LE(rows[i - 1][j], rows[i - 1][m] + rows[m - 1][j]);
          }

    for (Edge e : g.edges()) {
      // remove then re-add restores the adjacency exactly
      EXPECT_EQ(g.remove_edge(e).add_edge(e), g);
      // deletion never shortens a distance
      auto cut_rows = lrc::all_pairs_distances(g.remove_edge(e));
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (rows[i - 1][j] == kUnreachable) {
            EXPECT_EQ(cut_rows[i - 1][j], kUnreachable);
          } else if (cut_rows[i - 1][j] != kUnreachable) {
            EXPECT_GE(cut_rows[i - 1][j], rows[i - 1][j]);
          }
        }
    }
  }
}
