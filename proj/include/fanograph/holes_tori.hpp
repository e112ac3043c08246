// Octahedral triangles and their Fano charts, the labeled family of 84
// octahedral 6-holes xyz_d^w, the toroidal subgraphs [w]_d and [[w]]_d, the
// star subgraphs [xyz] and [[xyz]], and the face-pairing census.
//
// A 6-hole of G is octahedral when some centre w_d is shared by a flanking
// octahedral triangle at each of its six edges; it is labeled only when that
// centre is unique. Most chordless 6-cycles of G are not octahedral.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fanograph/fano.hpp"
#include "fanograph/graph.hpp"

namespace fanograph {

using Triangle = std::array<int, 3>;  // sorted vertex ids

struct SixHoleLabel {
  Line line;
  Position d = Position::a;
  Point w;

  std::string to_string() const;  // "123_c^5"
  friend auto operator<=>(const SixHoleLabel&, const SixHoleLabel&) = default;
};

struct LabeledHole {
  std::vector<int> cycle;  // canonical
  SixHoleLabel label;
};

struct HoleCensus {
  std::size_t five_holes = 0;
  std::size_t six_holes = 0;           // all chordless 6-cycles
  std::vector<LabeledHole> octahedral; // sorted by label
  bool bijective = false;              // onto {(l, d, w) : w not on l}
  std::string failure;
};

// Built once.
const HoleCensus& hole_census();
// Index into hole_census().octahedral; throws std::invalid_argument.
int hole_index(const SixHoleLabel& label);
SixHoleLabel parse_hole_label(std::string_view text);

// The 168 octahedral triangles, sorted.
const std::vector<Triangle>& octahedral_triangles();

struct TriangleChart {
  Triangle triangle{};
  Point center;
  Position center_position = Position::a;
  // Per edge (t0 t1), (t1 t2), (t0 t2): weak-colour point and strong-colour line.
  std::array<Point, 3> midpoints;
  std::array<Line, 3> external_lines;
};

// Throws std::invalid_argument for non-octahedral triangles and
// std::logic_error when the centre is not unique.
TriangleChart triangle_chart(const Triangle& t);

struct EdgeSubgraph {
  std::vector<int> vertices;               // sorted
  std::vector<std::pair<int, int>> edges;  // sorted, u < v

  Graph graph() const;  // on `vertices`, named as in G
};

struct TorusSubgraph {
  Point w;
  Position d = Position::a;
  std::vector<int> holes;           // indices into hole_census().octahedral
  std::vector<Triangle> triangles;  // the 8 with centre w_d
  EdgeSubgraph body;
  bool holes_are_pasch = false;     // hole lines are pasch(w)
  bool kagome = false;              // each edge in one hole and one triangle

  std::string label() const;  // "[5]_c"
};

TorusSubgraph torus_subgraph(Point w, Position d);
std::vector<TorusSubgraph> all_tori();

struct Closure {
  std::vector<int> vertices;
  std::size_t induced_edges = 0;
  std::vector<int> attached_tetra;  // tetrahedron indices
  bool decomposes = false;          // body ⊎ attached pieces = induced subgraph
  bool not_induced = false;         // body has strictly fewer edges than induced
  std::string failure;
};

// [[w]]_d: body plus the six tetrahedra <x_a x_b x_c> with x_d = w, each
// meeting the body in a 4-cycle and adding two edges of weak colour w_d.
Closure torus_closure(Point w, Position d);

struct StarSubgraph {
  Line line;
  std::vector<int> holes;  // the 12 holes xyz_d^w
  EdgeSubgraph body;
  std::optional<std::vector<int>> iso_from_st4;  // st4 vertex -> G vertex

  std::string label() const;  // "[246]"
};

StarSubgraph star_subgraph(Line l);
// [[xyz]]: body ⊎ the six tetrahedra named by the orderings of xyz.
Closure star_closure(Line l);

struct FacePairingReport {
  std::size_t solids = 0;        // 21 octahedra + 21 tori + 7 stars
  std::size_t faces = 0;         // distinct 2-faces
  std::size_t paired = 0;        // faces on exactly two solid boundaries
  std::vector<std::string> unpaired;
};

FacePairingReport face_pairing_census();

}  // namespace fanograph
