#include <gtest/gtest.h>

#include <json.hpp>

#include "fanograph/export.hpp"
#include "oracles.hpp"

using namespace fanograph;

namespace {

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Export, AdjacencyListOfG) {
  const auto g = export_object("G", {});
  const auto lines = split_lines(to_adj(g));
  ASSERT_EQ(lines.size(), 42u);
  EXPECT_EQ(lines[0], "1^a: 2^a 2^b 3^a 3^b 4^c 4^e 5^c 5^e 6^d 6^f 7^d 7^f");
  const auto a = oracle::g_matrix();
  for (int v = 0; v < 42; ++v) {
    int words = 0;
    std::istringstream is(lines[v]);
    for (std::string w; is >> w;) ++words;
    EXPECT_EQ(words - 1, std::count(a[v].begin(), a[v].end(), true));
  }
}

TEST(Export, JsonRoundTrip) {
  const auto g = export_object("G", {});
  const auto j = nlohmann::json::parse(to_json(g));
  EXPECT_EQ(j["schema"], kGraphSchema);
  EXPECT_EQ(j["order"], 42);
  EXPECT_EQ(j["edges"].size(), 252u);
  const auto& e0 = j["edges"][0];
  EXPECT_EQ(e0["u"], "1^a");
  EXPECT_EQ(e0["v"], "2^a");
  EXPECT_TRUE(e0.contains("strong"));
  EXPECT_TRUE(e0.contains("weak"));
}

TEST(Export, QuotientCarriesMultiplicity) {
  const auto q = export_object("quotient", {});
  const auto j = nlohmann::json::parse(to_json(q));
  EXPECT_EQ(j["edges"].size(), 21u);
  for (const auto& e : j["edges"]) EXPECT_EQ(e["multiplicity"], 2);
  EXPECT_NE(to_dot(q).find("multiplicity=2"), std::string::npos);
}

TEST(Export, TorusFiveC) {
  const auto t = export_object("torus", {"5", "c"});
  const auto adj = to_adj(t);
  for (const char* v : {"1^b", "2^a", "3^a"}) EXPECT_NE(adj.find(std::string(v) + ":"), std::string::npos);
  EXPECT_EQ(t.graph.order(), 12);
  EXPECT_EQ(t.graph.edge_count(), 24u);
}

TEST(Export, DotAndGraphml) {
  const auto s = export_object("star", {"246"});
  const auto dot = to_dot(s);
  EXPECT_EQ(dot.rfind("graph \"star [246]\" {", 0), 0u);
  EXPECT_NE(dot.find("strong=\""), std::string::npos);
  const auto gml = to_graphml(s);
  EXPECT_NE(gml.find("<graphml"), std::string::npos);
  std::size_t edges = 0;
  for (std::size_t p = gml.find("<edge "); p != std::string::npos; p = gml.find("<edge ", p + 1)) ++edges;
  EXPECT_EQ(edges, s.graph.edge_count());
}

TEST(Export, EveryNamedObjectSerializes) {
  for (const char* n : {"G", "G-dual", "quotient", "levi-42-4", "levi-168-6", "menger-42-4", "menger-168-6",
                        "dual-menger-42-4", "dual-menger-168-6", "lambda", "st4"}) {
    const auto g = export_object(n, {});
    for (auto f : {ExportFormat::dot, ExportFormat::graphml, ExportFormat::adj, ExportFormat::json})
      EXPECT_FALSE(serialize(g, f).empty()) << n;
  }
  EXPECT_EQ(export_object("lq", {"4"}).graph.order(), 32);
}

TEST(Export, BadRequests) {
  EXPECT_THROW(export_object("nope", {}), std::invalid_argument);
  EXPECT_THROW(export_object("G", {"x"}), std::invalid_argument);
  EXPECT_THROW(export_object("torus", {"5"}), std::invalid_argument);
  EXPECT_THROW(export_object("lq", {"9"}), std::invalid_argument);
  EXPECT_FALSE(parse_format("svg").has_value());
  EXPECT_EQ(parse_format("graphml"), ExportFormat::graphml);
}
