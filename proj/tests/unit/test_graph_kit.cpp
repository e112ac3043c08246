#include <gtest/gtest.h>

#include "fanograph/automorphism.hpp"
#include "fanograph/graph.hpp"
#include "fanograph/reference_graphs.hpp"
#include "oracles.hpp"

using namespace fanograph;

TEST(GraphKit, DistancesOfSmallGraphs) {
  EXPECT_EQ(diameter(k4()), 1);
  EXPECT_EQ(girth(k4()), 3);
  EXPECT_EQ(diameter(k222()), 2);
  EXPECT_EQ(girth(k222()), 3);
  EXPECT_EQ(diameter(cycle_graph(6)), 3);
  EXPECT_EQ(girth(cycle_graph(6)), 6);
  EXPECT_TRUE(is_bipartite(cycle_graph(6)));
  EXPECT_FALSE(is_bipartite(cycle_graph(5)));
  EXPECT_EQ(distance_distribution(k222(), 0), (std::vector<int>{1, 4, 1}));
  EXPECT_EQ(distance_distribution(cycle_graph(6), 2), (std::vector<int>{1, 2, 2, 1}));
  Graph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  EXPECT_FALSE(is_connected(two));
  EXPECT_FALSE(diameter(two).has_value());
  EXPECT_FALSE(girth(two).has_value());
}

TEST(GraphKit, GraphBasics) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
  g.add_edge(0, 1);
  g.add_edge(2, 1, 2);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_EQ(g.multiplicity(1, 2), 2);
  EXPECT_FALSE(g.is_simple());
  EXPECT_THROW(girth(g), std::invalid_argument);
  EXPECT_EQ(g.edges(), (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}));
}

TEST(GraphKit, HolesAgainstSubsetEnumeration) {
  for (const Graph& g : {cuboctahedron(), lambda_hemi(), k222(), line_graph_of_cube(3)}) {
    const auto a = oracle::matrix(g);
    for (int k = 4; k <= 7; ++k) {
      const auto hs = holes(g, k);
      EXPECT_EQ(static_cast<int>(hs.size()), oracle::count_subsets(a, k, oracle::is_induced_cycle)) << k;
      for (const auto& h : hs) {
        auto s = h.cycle;
        std::sort(s.begin(), s.end());
        EXPECT_TRUE(oracle::is_induced_cycle(a, s));
        EXPECT_EQ(canonical_cycle(h.cycle), h.cycle);
      }
    }
  }
}

TEST(GraphKit, CanonicalCycleIsDihedralInvariant) {
  const std::vector<int> c{5, 2, 9, 1, 7};
  const auto canon = canonical_cycle(c);
  EXPECT_EQ(canon.front(), 1);
  EXPECT_EQ(canonical_cycle({7, 1, 9, 2, 5}), canon);
  EXPECT_EQ(canonical_cycle({9, 1, 7, 5, 2}), canon);
}

TEST(GraphKit, InducedCopiesAgainstSubsetEnumeration) {
  const Graph co = cuboctahedron();
  const auto a = oracle::matrix(co);
  EXPECT_EQ(induced_copies(co, k3()).size(), 8u);
  EXPECT_EQ(oracle::count_subsets(a, 3, oracle::is_clique), 8);
  EXPECT_EQ(induced_copies(co, k22()).size(), 6u);
  EXPECT_EQ(static_cast<int>(induced_copies(co, cycle_graph(6)).size()),
            oracle::count_subsets(a, 6, oracle::is_induced_cycle));
  EXPECT_EQ(induced_copies(co, cycle_graph(6)).size(), 16u);
  const Graph lam = lambda_hemi();
  EXPECT_EQ(induced_copies(lam, k3()).size(), 4u);
  EXPECT_EQ(static_cast<int>(induced_copies(lam, cycle_graph(4)).size()),
            oracle::count_subsets(oracle::matrix(lam), 4, oracle::is_induced_cycle));
}

Graph cube() {
  Graph q(8);
  for (int v = 0; v < 8; ++v)
    for (int b = 1; b < 8; b <<= 1)
      if (v < (v ^ b)) q.add_edge(v, v ^ b);
  return q;
}

TEST(GraphKit, AutomorphismOrdersAgainstBruteForce) {
  for (const Graph& g : {k4(), k222(), cycle_graph(6), cycle_graph(7), cube(), complete_graph(5)}) {
    const auto aut = automorphism_group(g);
    EXPECT_EQ(static_cast<long>(aut.order), oracle::brute_force_aut_order(oracle::matrix(g)));
    for (const auto& p : aut.elements) EXPECT_TRUE(is_automorphism(g, p));
    EXPECT_EQ(aut.elements.size(), aut.order);
  }
}

TEST(GraphKit, LargerAutomorphismOrders) {
  EXPECT_EQ(automorphism_group(line_graph_of_cube(4)).order, 384u);
  EXPECT_EQ(automorphism_group(st4()).order, 144u);  // S4 x S3
  EXPECT_EQ(automorphism_group(two_k7()).order, 5040u);
}

TEST(GraphKit, ColouredSearchRespectsColours) {
  SearchOptions opts;
  opts.vertex_colors = {0, 1, 1, 1, 1, 1};
  EXPECT_EQ(automorphism_group(cycle_graph(6), opts).order, 2u);
}

TEST(GraphKit, IsomorphismSearch) {
  const Graph hemi = oracle::to_graph(oracle::hemi_rhombicuboctahedron());
  auto m = find_isomorphism(hemi, lambda_hemi());
  ASSERT_TRUE(m.has_value());
  EXPECT_TRUE(is_isomorphism(hemi, lambda_hemi(), *m));
  EXPECT_FALSE(find_isomorphism(cycle_graph(6), k222()).has_value());
  Graph two_c3(6);
  for (int i = 0; i < 3; ++i) {
    two_c3.add_edge(i, (i + 1) % 3);
    two_c3.add_edge(3 + i, 3 + (i + 1) % 3);
  }
  EXPECT_FALSE(find_isomorphism(cycle_graph(6), two_c3).has_value());
}

TEST(GraphKit, GroupHelpers) {
  const Permutation r({1, 2, 3, 0});
  const Permutation s({0, 3, 2, 1});
  EXPECT_EQ(group_closure({r, s}, 4).size(), 8u);
  EXPECT_EQ(r.element_order(), 4u);
  EXPECT_TRUE(compose(r, r.inverse()).is_identity());
  EXPECT_EQ(compose(r, s)(1), r(s(1)));
  EXPECT_EQ(orbit_count(4, {s}), 3);
  EXPECT_THROW(group_closure({r, s}, 4, 5), std::length_error);
  EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
  const auto act = induced_action({r}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, true);
  EXPECT_EQ(act.front().images(), (std::vector<int>{1, 2, 3, 0}));
  EXPECT_THROW(induced_action({r}, {{0, 1}}, true), std::invalid_argument);
}

TEST(GraphKit, ReferenceGraphShapes) {
  const auto hemi = oracle::hemi_rhombicuboctahedron();
  EXPECT_EQ(hemi.size(), 12u);
  const auto st = oracle::star_graph();
  EXPECT_TRUE(find_isomorphism(oracle::to_graph(st), st4()).has_value());
  EXPECT_EQ(cuboctahedron().order(), 12);
  EXPECT_EQ(cuboctahedron().edge_count(), 24u);
  EXPECT_EQ(line_graph_of_cube(4).order(), 32);
  EXPECT_EQ(two_k7().edge_count(), 21u);
}
