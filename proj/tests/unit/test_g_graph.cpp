#include <gtest/gtest.h>

#include "fanograph/automorphism.hpp"
#include "fanograph/g_graph.hpp"
#include "fanograph/reference_graphs.hpp"
#include "oracles.hpp"

using namespace fanograph;

TEST(GGraph, AdjacencyMatchesOracle) {
  EXPECT_EQ(oracle::matrix(g_graph().graph()), oracle::g_matrix());
}

TEST(GGraph, OrderSizeDiameter) {
  const Graph& g = g_graph().graph();
  EXPECT_EQ(g.order(), 42);
  EXPECT_EQ(g.edge_count(), 252u);
  for (int v = 0; v < 42; ++v) EXPECT_EQ(g.degree(v), 12);
  const auto a = oracle::g_matrix();
  int diam = 0;
  for (int v = 0; v < 42; ++v) diam = std::max(diam, static_cast<int>(oracle::distribution(a, v).size()) - 1);
  EXPECT_EQ(diam, 3);
  EXPECT_EQ(diameter(g), diam);
  for (int v = 0; v < 42; ++v) EXPECT_EQ(distance_distribution(g, v), oracle::distribution(a, v));
}

TEST(GGraph, DiameterWitnessIsAGeodesic) {
  const auto w = diameter_witness();
  ASSERT_EQ(w.size(), 4u);
  const auto a = oracle::g_matrix();
  for (std::size_t i = 0; i + 1 < w.size(); ++i) EXPECT_TRUE(a[w[i]][w[i + 1]]);
  EXPECT_EQ(oracle::bfs(a, w.front())[w.back()], 3);
  EXPECT_EQ(w.front(), 0);
}

TEST(GGraph, StrongColourIsPositionwiseMeet) {
  const auto ps = oracle::pencils();
  const auto a = oracle::g_matrix();
  for (int u = 0; u < 42; ++u)
    for (int v = 0; v < 42; ++v) {
      if (!a[u][v]) {
        EXPECT_THROW(g_graph().strong(u, v), std::invalid_argument);
        continue;
      }
      const OrderedLine s = g_graph().strong(u, v);
      const auto str = s.to_string();
      std::set<int> pts;
      for (int i = 0; i < 3; ++i) {
        const int x = str[i] - '0';
        EXPECT_TRUE(ps[u].pairs[i].count(x) && ps[v].pairs[i].count(x));
        pts.insert(x);
      }
      EXPECT_NE(std::find(oracle::fano_lines().begin(), oracle::fano_lines().end(), pts), oracle::fano_lines().end());
      EXPECT_EQ(g_graph().strong(v, u), s);
    }
}

TEST(GGraph, WeakColourJoinsTheBasePoints) {
  const auto ps = oracle::pencils();
  for (auto [u, v] : g_graph().graph().edges()) {
    const WeakColor w = g_graph().weak(u, v);
    const int j = static_cast<int>(w.position);
    const int q = w.point.value();
    // p' sits in pair_j of u, p in pair_j of v, and q is in both.
    EXPECT_TRUE(ps[u].pairs[j].count(ps[v].p));
    EXPECT_TRUE(ps[v].pairs[j].count(ps[u].p));
    EXPECT_TRUE(ps[u].pairs[j].count(q) && ps[v].pairs[j].count(q));
    std::set<int> l{ps[u].p, ps[v].p, q};
    EXPECT_NE(std::find(oracle::fano_lines().begin(), oracle::fano_lines().end(), l), oracle::fano_lines().end());
    EXPECT_EQ(g_graph().weak(v, u), w);
  }
}

TEST(GGraph, ColourFunctionsRejectNonEdges) {
  EXPECT_THROW(compute_strong_color(pencil_of(0), pencil_of(1)), std::invalid_argument);
  EXPECT_THROW(compute_weak_color(pencil_of(0), pencil_of(1)), std::invalid_argument);
  EXPECT_FALSE(pencils_adjacent(pencil_of(0), pencil_of(0)));
}

TEST(GGraph, DualPresentationIsIsomorphic) {
  const auto d = build_g_dual();
  EXPECT_EQ(d.graph.order(), 42);
  EXPECT_TRUE(is_isomorphism(d.graph, g_graph().graph(), d.to_g));
  // Independent check of the rule on ordered lines.
  const auto& ols = ordered_lines();
  for (int x = 0; x < 42; ++x)
    for (int y = x + 1; y < 42; ++y) {
      const auto sx = ols[x].to_string(), sy = ols[y].to_string();
      const std::set<char> lx(sx.begin(), sx.end()), ly(sy.begin(), sy.end());
      bool adj = false;
      if (lx != ly)
        for (int i = 0; i < 3; ++i) adj = adj || (sx[i] == sy[i]);
      EXPECT_EQ(d.graph.adjacent(x, y), adj) << sx << " " << sy;
    }
}

TEST(GGraph, QuotientIsDoubledK7) {
  const auto q = quotient_unordered();
  EXPECT_TRUE(q.ok()) << q.failure;
  EXPECT_EQ(q.quotient.order(), 7);
  for (int x = 0; x < 7; ++x)
    for (int y = x + 1; y < 7; ++y) EXPECT_EQ(q.quotient.multiplicity(x, y), 2);
  // Oracle: between two fibres there are 12 edges.
  const auto ps = oracle::pencils();
  const auto a = oracle::g_matrix();
  for (int x = 1; x <= 7; ++x)
    for (int y = x + 1; y <= 7; ++y) {
      int e = 0;
      for (int u = 0; u < 42; ++u)
        for (int v = 0; v < 42; ++v) e += ps[u].p == x && ps[v].p == y && a[u][v];
      EXPECT_EQ(e, 12);
    }
}
