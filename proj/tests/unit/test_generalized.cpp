#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fanograph/automorphism.hpp"
#include "fanograph/g_graph.hpp"
#include "fanograph/generalized.hpp"

using namespace fanograph;

TEST(Generalized, PlaneCaseIsG) {
  const auto res = generalized_build(3, 1);
  EXPECT_EQ(res.points, 7);
  EXPECT_EQ(res.subspaces_per_point, 3);
  EXPECT_EQ(res.universe, 42u);
  EXPECT_EQ(res.component.order(), 42);
  EXPECT_TRUE(find_isomorphism(res.component, g_graph().graph()).has_value());
  // Same lexicographic order and names, same adjacency.
  for (int v = 0; v < 42; ++v) EXPECT_EQ(res.component.name(v), pencil_of(v).long_name());
  EXPECT_EQ(res.component.edges(), g_graph().graph().edges());
}

TEST(Generalized, SpaceCaseMatchesGolden) {
  std::ifstream in(std::string(FANOGRAPH_GOLDEN_DIR) + "/generalized_4_1.json");
  ASSERT_TRUE(in) << "missing golden file";
  std::stringstream ss;
  ss << in.rdbuf();
  const auto golden = nlohmann::json::parse(ss.str());
  const auto res = generalized_build(4, 1);
  EXPECT_EQ(nlohmann::json::parse(to_json_text(res)), golden);
  EXPECT_EQ(res.universe, 15u * 5040u);
  for (auto [u, v] : res.component.edges()) EXPECT_TRUE(res.component.adjacent(v, u));
}

TEST(Generalized, Rejections) {
  EXPECT_THROW(generalized_build(2, 1), std::invalid_argument);
  EXPECT_THROW(generalized_build(3, 0), std::invalid_argument);
  EXPECT_THROW(generalized_build(3, 2), std::invalid_argument);
  EXPECT_THROW(generalized_build(5, 1), std::invalid_argument);
  EXPECT_THROW(generalized_build(6, 1), std::invalid_argument);
}

TEST(Generalized, PlanesInSpaceGiveAnIsolatedStart) {
  const auto res = generalized_build(4, 2);
  EXPECT_EQ(res.component.order(), 1);
}
