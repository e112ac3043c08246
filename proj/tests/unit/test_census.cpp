#include <gtest/gtest.h>

#include "fanograph/automorphism.hpp"
#include "fanograph/census.hpp"
#include "fanograph/g_graph.hpp"
#include "fanograph/reference_graphs.hpp"
#include "oracles.hpp"

using namespace fanograph;

namespace {

std::vector<int> ids(std::initializer_list<const char*> names) {
  std::vector<int> out;
  for (const char* n : names) out.push_back(parse_vertex(n));
  return out;
}

}  // namespace

TEST(Census, CopyCountsBySubsetEnumeration) {
  const auto a = oracle::g_matrix();
  EXPECT_EQ(oracle::count_subsets(a, 4, oracle::is_clique), 42);
  EXPECT_EQ(oracle::count_subsets(a, 5, oracle::is_clique), 0);
  EXPECT_EQ(oracle::count_subsets(a, 6, oracle::is_octahedron), 21);
  EXPECT_EQ(tetrahedra().size(), 42u);
  EXPECT_EQ(octahedra().size(), 21u);
  for (const auto& t : tetrahedra()) EXPECT_TRUE(oracle::is_clique(a, {t.vertices.begin(), t.vertices.end()}));
  for (const auto& o : octahedra()) EXPECT_TRUE(oracle::is_octahedron(a, {o.vertices.begin(), o.vertices.end()}));
}

TEST(Census, TetrahedronNameIsTheCommonStrongColour) {
  for (const auto& t : tetrahedra())
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) EXPECT_EQ(g_graph().strong(t.vertices[i], t.vertices[j]), t.name);
}

TEST(Census, OctahedronSquaresShareAWeakColour) {
  for (const auto& o : octahedra()) {
    for (const auto& sq : o.squares) {
      for (int i = 0; i < 4; ++i) EXPECT_EQ(g_graph().weak(sq.cycle[i], sq.cycle[(i + 1) % 4]), sq.color);
      EXPECT_EQ(sq.color.position, o.position);
      EXPECT_TRUE(o.line.contains(sq.color.point));
    }
  }
}

TEST(Census, ParsingNames) {
  EXPECT_EQ(tetrahedra()[parse_tetra("⟨347⟩")].label(), "⟨347⟩");
  EXPECT_EQ(parse_tetra("<347>"), parse_tetra("⟨347⟩"));
  EXPECT_EQ(octahedra()[parse_octa("[123]_a")].label(), "[123]_a");
  EXPECT_EQ(parse_octa("[123]a"), parse_octa("[123]_a"));
  EXPECT_THROW(parse_tetra("<357>"), std::invalid_argument);
  EXPECT_THROW(parse_octa("[123]_d"), std::invalid_argument);
}

TEST(Census, PrintedCopiesAtSevenF) {
  const auto ic = incident_copies(parse_vertex("7^f"));
  std::vector<std::string> t, o;
  for (int i : ic.tetra) t.push_back(tetrahedra()[i].label());
  for (int i : ic.octa) o.push_back(octahedra()[i].label());
  EXPECT_EQ(t, (std::vector<std::string>{"⟨321⟩", "⟨426⟩", "⟨356⟩", "⟨451⟩"}));
  EXPECT_EQ(o, (std::vector<std::string>{"[347]_a", "[257]_b", "[167]_c"}));
  EXPECT_TRUE(ic.meet_only_at_v);
  std::vector<std::string> pc;
  for (const auto& l : pasch_of_vertex(parse_vertex("7^f"))) pc.push_back(l.to_string());
  EXPECT_EQ(pc, (std::vector<std::string>{"321", "426", "356", "451"}));
}

TEST(Census, EveryVertexInFourTetrahedraAndThreeOctahedra) {
  for (int v = 0; v < 42; ++v) {
    int nt = 0, no = 0;
    for (const auto& t : tetrahedra()) nt += std::count(t.vertices.begin(), t.vertices.end(), v);
    for (const auto& o : octahedra()) no += std::count(o.vertices.begin(), o.vertices.end(), v);
    EXPECT_EQ(nt, 4);
    EXPECT_EQ(no, 3);
    const auto ic = incident_copies(v);
    EXPECT_TRUE(ic.meet_only_at_v);
    for (int i : ic.tetra)
      EXPECT_TRUE(std::count(tetrahedra()[i].vertices.begin(), tetrahedra()[i].vertices.end(), v));
  }
}

TEST(Census, FastenedPairs) {
  const auto fc = fastened_certificate();
  EXPECT_TRUE(fc.ok) << fc.failure;
  EXPECT_EQ(fc.pairs.size(), 252u);
  const int u = parse_vertex("7^f"), v = parse_vertex("5^a");
  EXPECT_EQ(g_graph().weak(u, v).label(), "2_b");
  EXPECT_EQ(g_graph().strong(u, v).to_string(), "426");
  const auto fp = fastened_pair(u, v);
  EXPECT_EQ(octahedra()[fp.octa].label(), "[257]_b");
  EXPECT_EQ(tetrahedra()[fp.tetra].label(), "⟨426⟩");
  EXPECT_THROW(fastened_pair(0, 1), std::invalid_argument);
}

TEST(Census, PrintedNeighboursOfOneA) {
  std::vector<int> ns(g_graph().graph().neighbors(0).begin(), g_graph().graph().neighbors(0).end());
  auto expected = ids({"2^a", "2^b", "3^a", "3^b", "4^c", "4^e", "5^c", "5^e", "6^d", "6^f", "7^d", "7^f"});
  EXPECT_EQ(ns, expected);
}

TEST(Census, NeighbourhoodsAreHemiRhombicuboctahedra) {
  const Graph hemi = oracle::to_graph(oracle::hemi_rhombicuboctahedron());
  for (int v = 0; v < 42; ++v) {
    std::vector<int> ns(g_graph().graph().neighbors(v).begin(), g_graph().graph().neighbors(v).end());
    const Graph nb = g_graph().graph().induced(ns);
    EXPECT_TRUE(find_isomorphism(nb, hemi).has_value()) << v;
    const auto rep = neighborhood_analysis(v);
    EXPECT_TRUE(rep.ok) << rep.failure;
    EXPECT_EQ(rep.triangles.size(), 4u);
  }
}

TEST(Census, PrintedIdentificationOfLambda) {
  // g(a0) = 5^c, ..., g(c3) = 3^a; checked against the coordinate model.
  const auto g = ids({"5^c", "4^c", "5^e", "4^e", "6^d", "7^d", "7^f", "6^f", "2^b", "2^a", "3^b", "3^a"});
  const Graph nb = g_graph().graph().induced(g);
  EXPECT_TRUE(find_isomorphism(nb, oracle::to_graph(oracle::hemi_rhombicuboctahedron())).has_value());
  std::vector<int> id(12);
  std::iota(id.begin(), id.end(), 0);
  EXPECT_TRUE(is_isomorphism(lambda_hemi(), nb, id));
  EXPECT_EQ(automorphism_group(nb).order, 24u);
}
