#include "fanograph/fano.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fanograph {

namespace {

constexpr std::array<PointSet, 7> kLineMasks = {
    (1 << 1) | (1 << 2) | (1 << 3), (1 << 1) | (1 << 4) | (1 << 5), (1 << 1) | (1 << 6) | (1 << 7),
    (1 << 2) | (1 << 4) | (1 << 6), (1 << 2) | (1 << 5) | (1 << 7), (1 << 3) | (1 << 4) | (1 << 7),
    (1 << 3) | (1 << 5) | (1 << 6),
};

bool is_line_mask(PointSet m) {
  return std::find(kLineMasks.begin(), kLineMasks.end(), m) != kLineMasks.end();
}

// Key used to sort ordered pencils: the flattened pair triple.
std::array<int, 6> pair_key(const OrderedPencil& v) {
  std::array<int, 6> key{};
  for (int i = 0; i < 3; ++i) {
    auto pts = points_of(v.pairs[i]);
    key[2 * i] = pts[0].value();
    key[2 * i + 1] = pts[1].value();
  }
  return key;
}

}  // namespace

Point::Point(int value) : value_(value) {
  if (value < 1 || value > 7) throw std::invalid_argument("point out of range: " + std::to_string(value));
}

char letter(Position j) { return static_cast<char>('a' + index(j)); }

Position position_from_letter(char c) {
  if (c < 'a' || c > 'c') throw std::invalid_argument(std::string("bad position letter: ") + c);
  return static_cast<Position>(c - 'a');
}

std::vector<Point> points_of(PointSet set) {
  std::vector<Point> out;
  for (int p = 1; p <= 7; ++p)
    if (set & (1u << p)) out.emplace_back(p);
  return out;
}

int popcount(PointSet set) { return std::popcount(static_cast<unsigned>(set)); }

std::string set_string(PointSet set) {
  std::string s;
  for (Point p : points_of(set)) s += static_cast<char>('0' + p.value());
  return s;
}

Line::Line(PointSet mask) : mask_(mask) {
  if (!is_line_mask(mask)) throw std::invalid_argument("not a Fano line: " + set_string(mask));
}

Line Line::parse(std::string_view digits) {
  if (digits.size() != 3) throw std::invalid_argument("line needs 3 digits: " + std::string(digits));
  PointSet m = 0;
  for (char ch : digits) m |= Point(ch - '0').bit();
  return Line(m);
}

std::array<Point, 3> Line::points() const {
  auto pts = points_of(mask_);
  return {pts[0], pts[1], pts[2]};
}

std::strong_ordering operator<=>(const Line& x, const Line& y) { return x.to_string() <=> y.to_string(); }

Line OrderedLine::line() const {
  return Line(static_cast<PointSet>(entries[0].bit() | entries[1].bit() | entries[2].bit()));
}

std::string OrderedLine::to_string() const {
  std::string s;
  for (Point p : entries) s += static_cast<char>('0' + p.value());
  return s;
}

OrderedLine OrderedLine::parse(std::string_view digits) {
  if (digits.size() != 3) throw std::invalid_argument("ordered line needs 3 digits: " + std::string(digits));
  OrderedLine l{{Point(digits[0] - '0'), Point(digits[1] - '0'), Point(digits[2] - '0')}};
  (void)l.line();
  return l;
}

Position OrderedPencil::position_of(Point x) const {
  for (Position j : kPositions)
    if (pairs[index(j)] & x.bit()) return j;
  throw std::invalid_argument("point " + std::to_string(x.value()) + " is the base of " + long_name());
}

std::string OrderedPencil::long_name() const {
  std::string s = "(" + std::to_string(base.value());
  for (PointSet pr : pairs) s += "," + set_string(pr);
  return s + ")";
}

std::string OrderedPencil::short_name() const { return fanograph::short_name(vertex_id(*this)); }

const std::array<Line, 7>& lines() {
  static const std::array<Line, 7> all = [] {
    std::array<Line, 7> out;
    for (std::size_t i = 0; i < 7; ++i) out[i] = Line(kLineMasks[i]);
    return out;
  }();
  return all;
}

int line_index(Line l) {
  const auto& all = lines();
  return static_cast<int>(std::find(all.begin(), all.end(), l) - all.begin());
}

Line line_through(Point x, Point y) {
  if (x == y) throw std::invalid_argument("line_through needs distinct points");
  for (const Line& l : lines())
    if (l.contains(x) && l.contains(y)) return l;
  throw std::logic_error("no line through two points");
}

Point third_point(Point x, Point y) {
  PointSet rest = static_cast<PointSet>(line_through(x, y).mask() & ~x.bit() & ~y.bit());
  return points_of(rest).front();
}

Line phi(Point p) { return lines()[p.value() - 1]; }

Point phi_inv(Line l) {
  for (int i = 0; i < 7; ++i)
    if (lines()[i] == l) return Point(i + 1);
  throw std::logic_error("phi_inv: unknown line");
}

std::array<Line, 3> pencil(Point p) {
  std::array<Line, 3> out;
  std::size_t k = 0;
  for (const Line& l : lines())
    if (l.contains(p)) out[k++] = l;
  return out;
}

const std::vector<OrderedPencil>& ordered_pencils() {
  static const std::vector<OrderedPencil> all = [] {
    std::vector<OrderedPencil> out;
    for (int pv = 1; pv <= 7; ++pv) {
      Point p(pv);
      auto pl = pencil(p);
      std::array<PointSet, 3> pairs;
      for (int i = 0; i < 3; ++i) pairs[i] = static_cast<PointSet>(pl[i].mask() & ~p.bit());
      std::vector<OrderedPencil> here;
      std::array<int, 3> order = {0, 1, 2};
      do {
        here.push_back(OrderedPencil{p, {pairs[order[0]], pairs[order[1]], pairs[order[2]]}});
      } while (std::next_permutation(order.begin(), order.end()));
      std::sort(here.begin(), here.end(),
                [](const OrderedPencil& x, const OrderedPencil& y) { return pair_key(x) < pair_key(y); });
      out.insert(out.end(), here.begin(), here.end());
    }
    return out;
  }();
  return all;
}

int vertex_id(const OrderedPencil& v) {
  const auto& all = ordered_pencils();
  int start = 6 * (v.base.value() - 1);
  for (int i = start; i < start + 6; ++i)
    if (all[i] == v) return i;
  throw std::invalid_argument("not an ordered pencil: " + v.long_name());
}

const OrderedPencil& pencil_of(int vertex) {
  if (vertex < 0 || vertex >= 42) throw std::out_of_range("vertex id out of range");
  return ordered_pencils()[vertex];
}

std::string short_name(int vertex) {
  const auto& v = pencil_of(vertex);
  return std::to_string(v.base.value()) + "^" + static_cast<char>('a' + vertex % 6);
}

int parse_vertex(std::string_view name) {
  auto bad = [&] { return std::invalid_argument("malformed vertex name: " + std::string(name)); };
  if (!name.empty() && name.front() == '(') {
    // (p,xy,xy,xy)
    if (name.size() != 12 || name.back() != ')') throw bad();
    if (name[2] != ',' || name[5] != ',' || name[8] != ',') throw bad();
    try {
      OrderedPencil v{Point(name[1] - '0'), {}};
      for (int i = 0; i < 3; ++i) {
        Point x(name[3 + 3 * i] - '0');
        Point y(name[4 + 3 * i] - '0');
        v.pairs[i] = static_cast<PointSet>(x.bit() | y.bit());
      }
      return vertex_id(v);
    } catch (const std::invalid_argument&) {
      throw bad();
    }
  }
  char digit = 0, suffix = 0;
  if (name.size() == 3 && name[1] == '^') {
    digit = name[0];
    suffix = name[2];
  } else if (name.size() == 2) {
    digit = name[0];
    suffix = name[1];
  } else {
    throw bad();
  }
  if (digit < '1' || digit > '7' || suffix < 'a' || suffix > 'f') throw bad();
  return 6 * (digit - '1') + (suffix - 'a');
}

const std::vector<OrderedLine>& ordered_lines() {
  static const std::vector<OrderedLine> all = [] {
    std::vector<OrderedLine> out;
    for (const Line& l : lines()) {
      auto pts = l.points();
      std::array<int, 3> order = {0, 1, 2};
      do {
        out.push_back(OrderedLine{{pts[order[0]], pts[order[1]], pts[order[2]]}});
      } while (std::next_permutation(order.begin(), order.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return all;
}

int ordered_line_id(const OrderedLine& l) {
  const auto& all = ordered_lines();
  auto it = std::lower_bound(all.begin(), all.end(), l);
  if (it == all.end() || !(*it == l)) throw std::invalid_argument("not an ordered line: " + l.to_string());
  return static_cast<int>(it - all.begin());
}

PaschConfig pasch(Point p) {
  PaschConfig pc{p, {}};
  std::size_t k = 0;
  for (const Line& l : lines())
    if (!l.contains(p)) pc.lines[k++] = l;
  return pc;
}

bool is_collineation(const PointMap& map) {
  PointSet seen = 0;
  for (int p = 1; p <= 7; ++p) {
    if (map[p] < 1 || map[p] > 7) return false;
    seen |= static_cast<PointSet>(1u << map[p]);
  }
  if (seen != 0xFE) return false;
  for (const Line& l : lines()) {
    PointSet img = 0;
    for (Point x : l.points()) img |= static_cast<PointSet>(1u << map[x.value()]);
    if (!is_line_mask(img)) return false;
  }
  return true;
}

const std::vector<PointMap>& collineations() {
  static const std::vector<PointMap> all = [] {
    std::vector<PointMap> out;
    PointMap m = {0, 1, 2, 3, 4, 5, 6, 7};
    do {
      if (is_collineation(m)) out.push_back(m);
    } while (std::next_permutation(m.begin() + 1, m.end()));
    return out;
  }();
  return all;
}

}  // namespace fanograph
