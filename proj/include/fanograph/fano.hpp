// Fano plane model: points, lines, the duality map, pencils, ordered pencils
// and Pasch configurations.
//
// Points are 1..7. Point sets are bitmasks with bit p set for point p, so
// intersections of lines and pairs are single AND operations.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fanograph {

using PointSet = std::uint8_t;

class Point {
 public:
  constexpr Point() = default;
  // Throws std::invalid_argument outside 1..7.
  explicit Point(int value);

  constexpr int value() const { return value_; }
  constexpr PointSet bit() const { return static_cast<PointSet>(1u << value_); }

  friend constexpr auto operator<=>(Point, Point) = default;

 private:
  int value_ = 1;
};

enum class Position : int { a = 0, b = 1, c = 2 };

inline constexpr std::array<Position, 3> kPositions = {Position::a, Position::b, Position::c};

constexpr int index(Position j) { return static_cast<int>(j); }
char letter(Position j);
Position position_from_letter(char c);  // throws std::invalid_argument

// Points of a set in increasing order.
std::vector<Point> points_of(PointSet set);
int popcount(PointSet set);
// Digits of the set in increasing order, e.g. "23".
std::string set_string(PointSet set);

class Line {
 public:
  constexpr Line() = default;
  // Throws std::invalid_argument unless `mask` is one of the 7 Fano lines.
  explicit Line(PointSet mask);
  // Parses "123" (any digit order).
  static Line parse(std::string_view digits);

  constexpr PointSet mask() const { return mask_; }
  bool contains(Point p) const { return (mask_ & p.bit()) != 0; }
  std::array<Point, 3> points() const;
  std::string to_string() const { return set_string(mask_); }

  // Lexicographic on the sorted digit string, which is the order the
  // literature lists them in (123 < 145 < ... < 356).
  friend std::strong_ordering operator<=>(const Line& x, const Line& y);
  friend bool operator==(const Line&, const Line&) = default;

 private:
  PointSet mask_ = 0;
};

struct OrderedLine {
  std::array<Point, 3> entries;

  Line line() const;
  Point at(Position j) const { return entries[index(j)]; }
  std::string to_string() const;  // "347"
  // Throws std::invalid_argument unless the 3 digits name a Fano line.
  static OrderedLine parse(std::string_view digits);

  friend auto operator<=>(const OrderedLine&, const OrderedLine&) = default;
};

// An ordered pencil (p, q_a r_a, q_b r_b, q_c r_c): the three lines through p
// in a fixed order, stored as the pairs line \ {p}.
struct OrderedPencil {
  Point base;
  std::array<PointSet, 3> pairs{};

  PointSet pair(Position j) const { return pairs[index(j)]; }
  Line line(Position j) const { return Line(static_cast<PointSet>(pairs[index(j)] | base.bit())); }
  // Position j with x in pair j; throws std::invalid_argument if x == base.
  Position position_of(Point x) const;

  std::string long_name() const;   // "(1,23,45,67)"
  std::string short_name() const;  // "1^a"

  friend bool operator==(const OrderedPencil&, const OrderedPencil&) = default;
};

struct PaschConfig {
  Point avoided;
  std::array<Line, 4> lines;
};

// The 7 lines 123, 145, 167, 246, 257, 347, 356.
const std::array<Line, 7>& lines();
int line_index(Line l);  // position in lines()
// Line through two distinct points.
Line line_through(Point x, Point y);
// Third point on the line through x and y.
Point third_point(Point x, Point y);

// Duality map sending 1..7 to the lines in the order above.
Line phi(Point p);
Point phi_inv(Line l);

// The 3 lines through p, sorted.
std::array<Line, 3> pencil(Point p);

// All 42 ordered pencils sorted by (p, flattened pair triple). The index in
// this list is the vertex id used everywhere else.
const std::vector<OrderedPencil>& ordered_pencils();
int vertex_id(const OrderedPencil& v);
const OrderedPencil& pencil_of(int vertex);

// Short names p^s with s in a..f.
std::string short_name(int vertex);
// Accepts "1^a", "1a" and the long form "(1,23,45,67)". Throws
// std::invalid_argument on anything else.
int parse_vertex(std::string_view name);

// All 42 ordered lines, sorted lexicographically.
const std::vector<OrderedLine>& ordered_lines();
int ordered_line_id(const OrderedLine& l);

PaschConfig pasch(Point p);

// Collineations of the plane, as images of 1..7 (index 0 unused).
using PointMap = std::array<int, 8>;
bool is_collineation(const PointMap& map);
// All 168 collineations, sorted by image tuple.
const std::vector<PointMap>& collineations();

}  // namespace fanograph
