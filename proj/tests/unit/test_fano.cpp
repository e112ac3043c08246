#include <gtest/gtest.h>

#include <set>

#include "fanograph/fano.hpp"
#include "oracles.hpp"

using namespace fanograph;

namespace {

std::set<int> as_set(PointSet s) {
  std::set<int> out;
  for (Point p : points_of(s)) out.insert(p.value());
  return out;
}

}  // namespace

TEST(Fano, LinesMatchPrintedList) {
  const auto& ref = oracle::fano_lines();
  ASSERT_EQ(lines().size(), 7u);
  for (int i = 0; i < 7; ++i) {
    EXPECT_EQ(as_set(lines()[i].mask()), ref[i]);
    EXPECT_EQ(phi(Point(i + 1)), lines()[i]);
    EXPECT_EQ(phi_inv(lines()[i]), Point(i + 1));
  }
}

TEST(Fano, ProjectivePlaneAxioms) {
  for (int x = 1; x <= 7; ++x)
    for (int y = x + 1; y <= 7; ++y) {
      int through = 0;
      for (const auto& l : oracle::fano_lines()) through += l.count(x) && l.count(y);
      EXPECT_EQ(through, 1);
      const Line l = line_through(Point(x), Point(y));
      EXPECT_TRUE(l.contains(Point(x)) && l.contains(Point(y)));
      const Point z = third_point(Point(x), Point(y));
      EXPECT_NE(z, Point(x));
      EXPECT_NE(z, Point(y));
      EXPECT_TRUE(l.contains(z));
    }
  for (int p = 1; p <= 7; ++p)
    for (const Line& l : pencil(Point(p))) EXPECT_TRUE(l.contains(Point(p)));
}

TEST(Fano, BadInputsAreRejected) {
  EXPECT_THROW(Point(0), std::invalid_argument);
  EXPECT_THROW(Point(8), std::invalid_argument);
  EXPECT_THROW(Line::parse("357"), std::invalid_argument);
  EXPECT_THROW(OrderedLine::parse("12"), std::invalid_argument);
  EXPECT_THROW(parse_vertex("8^a"), std::invalid_argument);
  EXPECT_THROW(parse_vertex("1^g"), std::invalid_argument);
  EXPECT_THROW(parse_vertex("(1,23,45,66)"), std::invalid_argument);
}

TEST(Fano, PencilsInPrintedOrder) {
  const auto ref = oracle::pencils();
  ASSERT_EQ(ordered_pencils().size(), 42u);
  for (int v = 0; v < 42; ++v) {
    const auto& pv = pencil_of(v);
    EXPECT_EQ(pv.base.value(), ref[v].p);
    for (int j = 0; j < 3; ++j) EXPECT_EQ(as_set(pv.pairs[j]), ref[v].pairs[j]);
    EXPECT_EQ(vertex_id(pv), v);
    EXPECT_EQ(parse_vertex(pv.short_name()), v);
    EXPECT_EQ(parse_vertex(pv.long_name()), v);
  }
  EXPECT_EQ(pencil_of(0).long_name(), "(1,23,45,67)");
  EXPECT_EQ(pencil_of(1).long_name(), "(1,23,67,45)");
  EXPECT_EQ(pencil_of(5).long_name(), "(1,67,45,23)");
  EXPECT_EQ(short_name(parse_vertex("(7,34,25,16)")), "7^f");
  EXPECT_EQ(parse_vertex("1a"), 0);
}

TEST(Fano, OrderedLines) {
  const auto& ols = ordered_lines();
  ASSERT_EQ(ols.size(), 42u);
  EXPECT_TRUE(std::is_sorted(ols.begin(), ols.end()));
  for (std::size_t i = 0; i < ols.size(); ++i) EXPECT_EQ(ordered_line_id(ols[i]), static_cast<int>(i));
  EXPECT_EQ(OrderedLine::parse("347").to_string(), "347");
  EXPECT_EQ(OrderedLine::parse("725").line(), Line::parse("257"));
}

TEST(Fano, PaschIsTheFourLinesAvoidingThePoint) {
  for (int p = 1; p <= 7; ++p) {
    std::set<std::set<int>> expected;
    for (const auto& l : oracle::fano_lines())
      if (!l.count(p)) expected.insert(l);
    std::set<std::set<int>> got;
    for (const Line& l : pasch(Point(p)).lines) got.insert(as_set(l.mask()));
    EXPECT_EQ(got, expected);
  }
  std::vector<std::string> pc4;
  for (const Line& l : pasch(Point(4)).lines) pc4.push_back(l.to_string());
  EXPECT_EQ(pc4, (std::vector<std::string>{"123", "167", "257", "356"}));
}

TEST(Fano, CollineationsByBruteForce) {
  std::set<PointMap> brute;
  std::array<int, 7> img{1, 2, 3, 4, 5, 6, 7};
  do {
    bool ok = true;
    for (const auto& l : oracle::fano_lines()) {
      std::set<int> im;
      for (int x : l) im.insert(img[x - 1]);
      ok = ok && std::find(oracle::fano_lines().begin(), oracle::fano_lines().end(), im) != oracle::fano_lines().end();
    }
    if (ok) {
      PointMap m{};
      for (int i = 0; i < 7; ++i) m[i + 1] = img[i];
      brute.insert(m);
    }
  } while (std::next_permutation(img.begin(), img.end()));
  EXPECT_EQ(brute.size(), 168u);
  const auto& lib = collineations();
  EXPECT_EQ(std::set<PointMap>(lib.begin(), lib.end()), brute);
  for (const auto& m : lib) EXPECT_TRUE(is_collineation(m));
}
