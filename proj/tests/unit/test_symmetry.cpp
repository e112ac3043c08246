#include <gtest/gtest.h>

#include <set>

#include "fanograph/automorphism.hpp"
#include "fanograph/census.hpp"
#include "fanograph/g_graph.hpp"
#include "fanograph/reference_graphs.hpp"
#include "fanograph/symmetry.hpp"
#include "oracles.hpp"

using namespace fanograph;

namespace {

bool preserves(const oracle::Adj& a, const Permutation& p) {
  for (int u = 0; u < 42; ++u)
    for (int v = 0; v < 42; ++v)
      if (a[u][v] != a[p(u)][p(v)]) return false;
  return true;
}

}  // namespace

TEST(Symmetry, GeneratorsAreAutomorphisms) {
  const auto a = oracle::g_matrix();
  ASSERT_EQ(printed_generators().size(), 16u);
  for (const auto& g : printed_generators()) EXPECT_TRUE(preserves(a, g.element.perm)) << g.name;
}

TEST(Symmetry, GroupOrder) {
  const auto& t = automorphism_table();
  EXPECT_EQ(t.order(), 1008u);
  const auto a = oracle::g_matrix();
  std::set<std::vector<int>> distinct;
  for (const auto& e : t.elements()) {
    EXPECT_TRUE(preserves(a, e.perm));
    EXPECT_EQ(pencil_action(e.phi, e.psi), e.perm);
    distinct.insert(e.perm.images());
  }
  EXPECT_EQ(distinct.size(), 1008u);
  const auto rep = group_report();
  EXPECT_TRUE(rep.closure_equals_search) << rep.failure;
  EXPECT_EQ(rep.search_order, 1008u);
  EXPECT_TRUE(rep.all_decompose);
  EXPECT_TRUE(rep.action_is_homomorphism);
  // 168 collineations times 6 position maps.
  EXPECT_EQ(collineations().size() * 6, t.order());
}

TEST(Symmetry, OrbitStabilizer) {
  const auto grp = automorphism_table().permutations();
  const int one_a = parse_vertex("1^a"), two_a = parse_vertex("2^a");
  std::set<int> orbit;
  std::set<std::pair<int, int>> edge_orbit;
  for (const auto& p : grp) {
    orbit.insert(p(one_a));
    edge_orbit.insert(std::minmax(p(one_a), p(two_a)));
  }
  EXPECT_EQ(orbit.size(), 42u);
  EXPECT_EQ(edge_orbit.size(), 252u);
  EXPECT_EQ(setwise_stabilizer(grp, {one_a}).size(), 24u);
  const auto gamma = setwise_stabilizer(grp, {one_a, two_a});
  EXPECT_EQ(gamma.size(), 4u);
  EXPECT_TRUE(generates({tau_product({6, 16}), tau_product({5})}, gamma));
  const auto vc = vertex_cosets(one_a);
  EXPECT_TRUE(vc.bijective);
  EXPECT_EQ(vc.coset_count, 42u);
  const auto ec = edge_cosets(one_a, two_a);
  EXPECT_TRUE(ec.bijective);
  EXPECT_EQ(ec.coset_count, 252u);
  EXPECT_EQ(left_cosets(grp, gamma).size(), 252u);
}

TEST(Symmetry, OctahedronStabilizer) {
  const auto grp = automorphism_table().permutations();
  const auto& o = octahedra()[parse_octa("[123]_a")];
  const auto s = setwise_stabilizer(grp, {o.vertices.begin(), o.vertices.end()});
  EXPECT_EQ(s.size(), 48u);
  EXPECT_TRUE(generates({tau_product({1}), tau_product({2}), tau_product({5}), tau_product({6}), tau_product({16})}, s));
}

TEST(Symmetry, Ultrahomogeneity) {
  const auto grp = automorphism_table().permutations();
  const Graph& g = g_graph().graph();
  const auto u4 = uh_certify(g, k4(), "K4", grp);
  EXPECT_TRUE(u4.passed);
  EXPECT_EQ(u4.isomorphisms_checked, 42u * 42u * 24u);
  const auto u6 = uh_certify(g, k222(), "K222", grp);
  EXPECT_TRUE(u6.passed);
  EXPECT_EQ(u6.isomorphisms_checked, 21u * 21u * 48u);
}

TEST(Symmetry, NegativeControlFindsCounterexample) {
  std::vector<Permutation> phis;
  for (int i = 1; i <= 14; ++i) phis.push_back(tau_product({i}));
  const auto sub = group_closure(phis, 42);
  EXPECT_LT(sub.size(), 1008u);
  const auto neg = uh_certify(g_graph().graph(), k4(), "K4", sub);
  EXPECT_FALSE(neg.passed);
  ASSERT_TRUE(neg.counterexample.has_value());
  // Also with only the identity.
  const auto triv = uh_certify(g_graph().graph(), k4(), "K4", {Permutation::identity(42)});
  EXPECT_FALSE(triv.passed);
}

TEST(Symmetry, HnmCertificates) {
  const Graph& g = g_graph().graph();
  const auto h4 = h_n_m_certify(g, k4());
  EXPECT_TRUE(h4.ok()) << h4.failure;
  EXPECT_EQ(h4.n, 42);
  EXPECT_EQ(h4.m, 4);
  const auto h6 = h_n_m_certify(g, k222());
  EXPECT_TRUE(h6.ok()) << h6.failure;
  EXPECT_EQ(h6.n, 21);
  EXPECT_EQ(h6.m, 3);
  EXPECT_FALSE(line_graphical_report({{h4, true}, {h6, false}}).line_graphical);
  const auto lq = h_n_m_certify(line_graph_of_cube(3), k3());
  EXPECT_TRUE(lq.ok());
  EXPECT_TRUE(line_graphical_report({{lq, true}}).line_graphical);
}

TEST(Symmetry, CayleyWitnessIsRegular) {
  const auto res = cayley_search(automorphism_table().permutations(), 100000);
  ASSERT_EQ(res.witness.size(), 42u);
  const auto a = oracle::g_matrix();
  std::set<int> images;
  for (const auto& p : res.witness) {
    EXPECT_TRUE(preserves(a, p));
    if (!p.is_identity())
      for (int v = 0; v < 42; ++v) EXPECT_NE(p(v), v);
    images.insert(p(0));
  }
  EXPECT_EQ(images.size(), 42u);
  EXPECT_EQ(group_closure(res.witness_generators, 42).size(), 42u);
  const auto none = cayley_search(automorphism_table().permutations(), 0);
  EXPECT_TRUE(none.witness.empty());
  EXPECT_TRUE(none.budget_exhausted);
}
