#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fanograph/automorphism.hpp"
#include "fanograph/census.hpp"
#include "fanograph/g_graph.hpp"
#include "fanograph/incidence.hpp"
#include "fanograph/symmetry.hpp"
#include "oracles.hpp"

using namespace fanograph;

namespace {

using Set = std::vector<int>;

std::vector<Set> cliques(const oracle::Adj& a, int k) {
  std::vector<Set> out;
  oracle::subsets(static_cast<int>(a.size()), k, [&](const Set& s) {
    if (oracle::is_clique(a, s)) out.push_back(s);
  });
  return out;
}

std::vector<Set> octahedra_of(const oracle::Adj& a) {
  std::vector<Set> out;
  oracle::subsets(static_cast<int>(a.size()), 6, [&](const Set& s) {
    if (oracle::is_octahedron(a, s)) out.push_back(s);
  });
  return out;
}

bool subset_of(const Set& x, const Set& y) { return std::includes(y.begin(), y.end(), x.begin(), x.end()); }

oracle::Adj levi(const std::vector<Set>& pts, const std::vector<Set>& blocks,
                 const std::function<bool(const Set&, const Set&)>& inc) {
  const std::size_t p = pts.size(), n = p + blocks.size();
  oracle::Adj a(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < blocks.size(); ++j)
      if (inc(pts[i], blocks[j])) a[i][p + j] = a[p + j][i] = true;
  return a;
}

int oracle_girth(const oracle::Adj& a) {
  int best = 1 << 20;
  const int n = static_cast<int>(a.size());
  for (int s = 0; s < n; ++s) {
    std::vector<int> d(n, -1), par(n, -1);
    std::queue<int> q;
    d[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v) {
        if (!a[u][v]) continue;
        if (d[v] < 0) {
          d[v] = d[u] + 1;
          par[v] = u;
          q.push(v);
        } else if (par[u] != v) {
          best = std::min(best, d[u] + d[v] + 1);
        }
      }
    }
  }
  return best;
}

std::map<std::vector<int>, int> distributions(const oracle::Adj& a, std::size_t from, std::size_t to) {
  std::map<std::vector<int>, int> out;
  for (std::size_t v = from; v < to; ++v) ++out[oracle::distribution(a, static_cast<int>(v))];
  return out;
}

}  // namespace

TEST(Incidence, Levi42_4AgainstOracle) {
  const auto a = oracle::g_matrix();
  std::vector<Set> verts;
  for (int v = 0; v < 42; ++v) verts.push_back({v});
  const auto k4s = cliques(a, 4);
  const auto l = levi(verts, k4s, subset_of);
  const auto d = distributions(l, 0, 84);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.begin()->first, (std::vector<int>{1, 4, 12, 24, 27, 14, 2}));
  EXPECT_EQ(oracle_girth(l), 6);

  const auto c = config_42_4();
  EXPECT_EQ(c.flags.size(), 168u);
  EXPECT_EQ(c.point_degree(), 4);
  EXPECT_EQ(c.block_degree(), 4);
  EXPECT_TRUE(find_isomorphism(levi_graph(c), oracle::to_graph(l)).has_value());
  const auto s = summarize(levi_graph(c));
  EXPECT_EQ(s.girth, 6);
  EXPECT_EQ(s.diameter, 6);
  EXPECT_EQ(s.aut_order, 2016u);
  EXPECT_TRUE(two_arc_transitive(s));
  EXPECT_FALSE(semisymmetric(s));
}

TEST(Incidence, MengerGraphsOf42_4) {
  const auto c = config_42_4();
  // Points collinear when they share a block: every edge of G lies in one K4.
  EXPECT_EQ(oracle::matrix(menger_graph(c)), oracle::g_matrix());
  const auto dm = summarize(dual_menger_graph(c));
  EXPECT_EQ(dm.order, 42);
  EXPECT_TRUE(find_isomorphism(dual_menger_graph(c), g_graph().graph()).has_value());
}

TEST(Incidence, Dualities42_4) {
  const auto c = config_42_4();
  const auto d = self_duality(c);
  ASSERT_TRUE(d.has_value());
  EXPECT_TRUE(verify_duality(c, *d));
  EXPECT_TRUE(verify_duality(c, phi_duality_42_4()));
  Duality broken = phi_duality_42_4();
  std::swap(broken.point_to_block[0], broken.point_to_block[1]);
  EXPECT_FALSE(verify_duality(c, broken));
}

TEST(Incidence, DiameterPathsAreGeodesics) {
  const auto c = config_42_4();
  const Graph l = levi_graph(c);
  const auto paths = smallest_diameter_paths(l, 0);
  ASSERT_EQ(paths.size(), 2u);
  const auto a = oracle::matrix(l);
  for (const auto& p : paths) {
    ASSERT_EQ(p.size(), 7u);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) EXPECT_TRUE(a[p[i]][p[i + 1]]);
    EXPECT_EQ(oracle::bfs(a, 0)[p.back()], 6);
  }
  EXPECT_EQ(l.name(paths[0].back()), "(1,67,23,45)");
  EXPECT_EQ(l.name(paths[1].back()), "(1,45,67,23)");
}

TEST(Incidence, Config168_6AgainstOracle) {
  const auto a = oracle::g_matrix();
  const auto k4s = cliques(a, 4);
  const auto octs = octahedra_of(a);
  const auto tris = cliques(a, 3);
  std::vector<Set> tt, ot;
  for (const auto& t : tris) {
    const bool in_k4 = std::any_of(k4s.begin(), k4s.end(), [&](const Set& k) { return subset_of(t, k); });
    const bool in_oct = std::any_of(octs.begin(), octs.end(), [&](const Set& o) { return subset_of(t, o); });
    EXPECT_NE(in_k4, in_oct);
    (in_k4 ? tt : ot).push_back(t);
  }
  ASSERT_EQ(tt.size(), 168u);
  ASSERT_EQ(ot.size(), 168u);
  const auto l = levi(tt, ot, [](const Set& x, const Set& y) {
    return oracle::meet_size({x.begin(), x.end()}, {y.begin(), y.end()}) == 2;
  });
  std::size_t flags = 0;
  for (const auto& row : l) flags += std::count(row.begin(), row.end(), true);
  EXPECT_EQ(flags / 2, 1008u);
  // Two tetrahedral triangles of one K4 and two octahedral triangles across
  // one edge form a 4-cycle in the Levi graph.
  EXPECT_EQ(oracle_girth(l), 4);
  const auto dp = distributions(l, 0, 168);
  const auto db = distributions(l, 168, 336);
  ASSERT_EQ(dp.size(), 1u);
  ASSERT_EQ(db.size(), 1u);
  std::set<std::vector<int>> both{dp.begin()->first, db.begin()->first};
  EXPECT_EQ(both, (std::set<std::vector<int>>{{1, 6, 24, 60, 108, 102, 35}, {1, 6, 24, 60, 111, 102, 32}}));

  const auto c = config_168_6();
  EXPECT_EQ(c.flags.size(), 1008u);
  EXPECT_TRUE(find_isomorphism(levi_graph(c), oracle::to_graph(l)).has_value());
  const auto s = summarize(levi_graph(c));
  EXPECT_EQ(s.girth, 4);
  EXPECT_TRUE(semisymmetric(s));
  EXPECT_EQ(s.aut_order, 1008u);
  EXPECT_FALSE(self_duality(c).has_value());
}

TEST(Incidence, FlagTransitiveConfigurations) {
  std::vector<Permutation> gens;
  for (const auto& g : printed_generators()) gens.push_back(g.element.perm);
  const auto to = config_tetra_octa();
  EXPECT_EQ(to.flags.size(), 252u);
  EXPECT_EQ(to.point_degree(), 6);
  EXPECT_EQ(to.block_degree(), 12);
  EXPECT_TRUE(flag_transitive(to));
  EXPECT_TRUE(flag_transitive_under(to, gens));
  const auto tt = config_tetra_torus();
  EXPECT_EQ(tt.point_degree(), 3);
  EXPECT_EQ(tt.block_degree(), 6);
  EXPECT_TRUE(flag_transitive_under(tt, gens));
  const auto ts = config_torus_star();
  EXPECT_EQ(ts.point_degree(), 4);
  EXPECT_EQ(ts.block_degree(), 12);
  EXPECT_TRUE(flag_transitive_under(ts, gens));
  EXPECT_FALSE(flag_transitive_under(to, {Permutation::identity(42)}));
}

TEST(Incidence, CustomConfigAndPredicates) {
  // The Fano plane itself: 2-arc-transitive Heawood graph, self-dual.
  std::vector<std::string> pts, bls;
  for (int i = 1; i <= 7; ++i) pts.push_back(std::to_string(i));
  for (const auto& l : lines()) bls.push_back(l.to_string());
  const auto c = custom_config("fano", pts, bls, [](int p, int b) { return lines()[b].contains(Point(p + 1)); });
  EXPECT_EQ(c.flags.size(), 21u);
  const auto s = summarize(levi_graph(c));
  EXPECT_EQ(s.girth, 6);
  EXPECT_EQ(s.aut_order, 336u);
  EXPECT_TRUE(two_arc_transitive(s));
  EXPECT_TRUE(flag_transitive(c));
  const auto d = self_duality(c);
  ASSERT_TRUE(d.has_value());
  EXPECT_TRUE(verify_duality(c, *d));
}
