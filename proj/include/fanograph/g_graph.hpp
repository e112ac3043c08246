// The 42-vertex graph G on ordered pencils, with its strong and weak edge
// colourings, the dual presentation on ordered lines, the quotient onto
// unordered pencils and the diameter witness.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanograph/fano.hpp"
#include "fanograph/graph.hpp"

namespace fanograph {

struct WeakColor {
  Point point;
  Position position = Position::a;

  std::string to_string() const;  // "3a"
  std::string label() const;      // "3_a"
  friend auto operator<=>(const WeakColor&, const WeakColor&) = default;
};

// Adjacency rule: distinct base points and pairs meeting in exactly one point
// at each position.
bool pencils_adjacent(const OrderedPencil& v, const OrderedPencil& w);
// Positionwise intersection points. Throws std::invalid_argument when the
// pencils are not adjacent, std::logic_error if the points do not form a line.
OrderedLine compute_strong_color(const OrderedPencil& v, const OrderedPencil& w);
// The unique (q, j) with p in pair'_j, p' in pair_j and q the common point of
// those pairs. Throws std::invalid_argument for non-adjacent pencils and
// std::logic_error if j or q is not unique.
WeakColor compute_weak_color(const OrderedPencil& v, const OrderedPencil& w);

class ColoredG {
 public:
  ColoredG();

  const Graph& graph() const { return graph_; }
  // Both throw std::invalid_argument for non-adjacent pairs.
  const OrderedLine& strong(int u, int v) const;
  const WeakColor& weak(int u, int v) const;

 private:
  Graph graph_;
  std::vector<std::optional<OrderedLine>> strong_;  // 42*42, symmetric
  std::vector<std::optional<WeakColor>> weak_;
};

// Built once; immutable afterwards.
const ColoredG& g_graph();

struct DualPresentation {
  Graph graph;              // on ordered_lines(), names "347"
  std::vector<int> to_g;    // ordered line id -> G vertex
};

// Ordered lines on distinct Fano lines, adjacent when their common point sits
// at the same position in both. Two orderings of one line agreeing in a
// single position are not adjacent. Returned together
// with the isomorphism onto G induced by the duality map (a vertex of G maps
// to the ordered line of phi_inv of its three lines). Throws std::logic_error
// if that map is not an isomorphism.
DualPresentation build_g_dual();

struct QuotientCertificate {
  Graph quotient;                       // 7 vertices (points), multigraph
  std::vector<std::vector<int>> fibers; // fiber over point i+1
  bool isomorphic_to_2k7 = false;
  bool fibers_have_size_6 = false;
  bool local_bijection = false;         // edge ends at every vertex
  std::string failure;                  // first failing clause, if any

  bool ok() const { return isomorphic_to_2k7 && fibers_have_size_6 && local_bijection; }
};

// Projects each vertex to its base point. Multiplicity between points p, p'
// is the number of G-edges between their fibers divided by the fiber size.
QuotientCertificate quotient_unordered();

// Lexicographically smallest geodesic whose length is the diameter.
std::vector<int> diameter_witness();

}  // namespace fanograph
