#include "lrc/closeness.hpp"

#include <gtest/gtest.h>

#include <random>

#include "lrc/harary.hpp"
#include "test_util.hpp"

using lrc::BigInt;
using lrc::BigRational;
using lrc::Dyadic;
using lrc::Edge;
using lrc::Graph;

namespace {
Dyadic half() { return Dyadic(BigInt(1), 1); }
}  // namespace

TEST(Closeness, KnownValues) {
  EXPECT_EQ(lrc::closeness(lrc_test::path(2)), Dyadic(1));
  EXPECT_EQ(lrc::closeness(lrc_test::cycle(4)), Dyadic(5));
  EXPECT_EQ(lrc::closeness(Graph(5)), Dyadic(0));          // edgeless
  EXPECT_EQ(lrc::closeness(lrc::harary(3, 6)), Dyadic(12));
  // H_{5,14}: 5 neighbors at distance 1, the other 8 at distance 2,
  // so every row sums to 4.5 and C = 14 * 4.5.
  EXPECT_EQ(lrc::closeness(lrc::harary(5, 14)), Dyadic(63));
  EXPECT_EQ(lrc::closeness(Graph(1)), Dyadic(0));
}

TEST(Closeness, CompleteGraphHitsUpperBound) {
  for (int n : {2, 3, 5, 7})
    EXPECT_EQ(lrc::closeness(lrc_test::complete(n)),
              Dyadic(BigInt(n * (n - 1)), 1));
  // Strictly below the bound once any pair is non-adjacent.
  EXPECT_LT(lrc::closeness(lrc_test::path(4)), Dyadic(BigInt(12), 1));
}

TEST(ClosenessAfterLinkRemoval, KnownValues) {
  Graph c4 = lrc_test::cycle(4);
  for (Edge e : c4.edges())
    EXPECT_EQ(lrc::closeness_after_link_removal(c4, e), Dyadic(BigInt(17), 2));

  Graph k3 = lrc_test::complete(3);
  for (Edge e : k3.edges())
    EXPECT_EQ(lrc::closeness_after_link_removal(k3, e), Dyadic(BigInt(5), 1));

  Graph p2 = lrc_test::path(2);
  EXPECT_EQ(lrc::closeness_after_link_removal(p2, Edge(1, 2)), Dyadic(0));

  EXPECT_THROW(lrc::closeness_after_link_removal(c4, Edge(1, 3)),
               lrc::EdgeNotFoundError);
}

TEST(LinkResidual, CycleReport) {
  auto rep = lrc::link_residual_closeness(lrc_test::cycle(4));
  EXPECT_EQ(rep.closeness, Dyadic(5));
  EXPECT_EQ(rep.residual, Dyadic(BigInt(17), 2));  // C(P_4) = 4.25
  EXPECT_EQ(rep.delta, Dyadic(BigInt(3), 2));
  EXPECT_EQ(rep.normalized, BigRational(3, 20));
  EXPECT_EQ(lrc::rational_decimal(rep.normalized), "0.15");
  // Rotational symmetry: every edge minimizes.
  std::vector<Edge> expect{Edge(1, 2), Edge(1, 4), Edge(2, 3), Edge(3, 4)};
  EXPECT_EQ(rep.argmin_edges, expect);
}

TEST(LinkResidual, SmallHararyAnchors) {
  EXPECT_EQ(lrc::link_residual_closeness(lrc::harary(3, 4)).delta, half());
  EXPECT_EQ(lrc::link_residual_closeness(lrc::harary(5, 14)).delta, Dyadic(1));
}

TEST(LinkResidual, SingleEdgeCollapse) {
  auto rep = lrc::link_residual_closeness(lrc_test::path(2));
  EXPECT_EQ(rep.residual, Dyadic(0));
  EXPECT_EQ(rep.delta, Dyadic(1));
  EXPECT_EQ(rep.normalized, BigRational(1));  // total collapse
}

TEST(LinkResidual, EdgelessGraphRejected) {
  EXPECT_THROW(lrc::link_residual_closeness(Graph(3)), std::domain_error);
}

TEST(LinkResidual, ReportInvariants) {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = lrc_test::random_graph(rng, 9);
    auto rep = lrc::link_residual_closeness(g);
    EXPECT_LE(rep.residual, rep.closeness);
    EXPECT_EQ(rep.delta, rep.closeness - rep.residual);
    EXPECT_FALSE(rep.argmin_edges.empty());
    EXPECT_TRUE(std::is_sorted(rep.argmin_edges.begin(),
                               rep.argmin_edges.end()));
    // Canonical dyadics: minimal exponent.
    for (const Dyadic* d : {&rep.closeness, &rep.residual, &rep.delta})
      EXPECT_TRUE(d->exponent() == 0 || boost::multiprecision::bit_test(
                                            boost::multiprecision::abs(
                                                d->numerator()),
                                            0));
  }
}

TEST(NormalizedResidual, Basics) {
  EXPECT_EQ(lrc::normalized_residual(Dyadic(5), Dyadic(BigInt(17), 2)),
            BigRational(3, 20));
  EXPECT_EQ(lrc::normalized_residual(Dyadic(3), Dyadic(3)), BigRational(0));
  EXPECT_EQ(lrc::normalized_residual(Dyadic(7), Dyadic(0)), BigRational(1));
  EXPECT_THROW(lrc::normalized_residual(Dyadic(0), Dyadic(0)),
               std::domain_error);
}

// Worker count must not change anything observable.
TEST(LinkResidual, DeterministicAcrossWorkers) {
  std::mt19937 rng(777);
  std::vector<Graph> corpus{lrc::harary(5, 12), lrc::harary(3, 9)};
  for (int trial = 0; trial < 6; ++trial)
    corpus.push_back(lrc_test::random_graph(rng, 10));
  for (const Graph& g : corpus) {
    auto base = lrc::link_residual_closeness(g, 1);
    for (int workers : {2, 3, 8}) {
      auto rep = lrc::link_residual_closeness(g, workers);
      EXPECT_EQ(rep.closeness, base.closeness);
      EXPECT_EQ(rep.residual, base.residual);
      EXPECT_EQ(rep.delta, base.delta);
      EXPECT_EQ(rep.normalized, base.normalized);
      EXPECT_EQ(rep.argmin_edges, base.argmin_edges);
    }
  }
}

// Deleting (r,s) moves d(r,s) from 1 to >= 2, which alone costs
// 2*(2^-1 - 2^-2) = 1/2; every other term can only shrink.
TEST(ClosenessProperties, DeletionDropsAtLeastHalf) {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = lrc_test::random_graph(rng, 12);
    Dyadic c = lrc::closeness(g);
    for (Edge e : g.edges())
      EXPECT_LE(lrc::closeness_after_link_removal(g, e), c - half());
  }
}

// The skip-edge fast path must equal the naive copy-and-recompute route.
TEST(ClosenessProperties, OracleSelfConsistency) {
  std::mt19937 rng(611953);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = lrc_test::random_graph(rng, 12);
    for (Edge e : g.edges())
      EXPECT_EQ(lrc::closeness_after_link_removal(g, e),
                lrc::closeness(g.remove_edge(e)));
  }
}
