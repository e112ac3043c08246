// Named copies of K4 (tetrahedra <xyz>) and K_{2,2,2} (octahedra [xyz]_j)
// in G, the fastened certificate, open-neighbourhood analysis and the
// ordered Pasch configuration of a vertex.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "fanograph/fano.hpp"
#include "fanograph/g_graph.hpp"

namespace fanograph {

struct TetraCopy {
  OrderedLine name;
  std::array<int, 4> vertices{};  // sorted

  std::string label() const;  // "⟨347⟩"
};

struct OctaSquare {
  std::array<int, 4> cycle{};          // canonical 4-cycle
  WeakColor color;                     // shared by its 4 edges
  std::array<Point, 2> diagonal_points;  // base points of the two diagonals
};

struct OctaCopy {
  Line line;
  Position position = Position::a;
  std::array<int, 6> vertices{};  // sorted
  std::array<OctaSquare, 3> squares;

  std::string label() const;  // "[123]_a"
};

// Sorted by ordered line (index = ordered_line_id). Built once; construction
// throws std::logic_error if the named family differs from the generic census
// of induced K4's.
const std::vector<TetraCopy>& tetrahedra();
// Sorted by (line, position), index 3 * line_index + position. Same contract
// against the generic census of induced K_{2,2,2}'s.
const std::vector<OctaCopy>& octahedra();

int tetra_index(const OrderedLine& name);
int octa_index(Line line, Position j);
// Accept "<347>", "⟨347⟩" and "[123]_a" / "[123]a". Throw std::invalid_argument.
int parse_tetra(std::string_view text);
int parse_octa(std::string_view text);

struct IncidentCopies {
  // Pasch order: <q_a q_b q_c>, <r_a q_b r_c>, <q_a r_b r_c>, <r_a r_b q_c>.
  std::array<int, 4> tetra{};
  std::array<int, 3> octa{};  // [p q_j r_j]_j for j = a, b, c
  // Number of the 8 (q, r) labelings of the pairs whose four lines are all
  // Fano lines naming v's tetrahedra.
  int valid_labelings = 0;
  bool meet_only_at_v = false;
};

IncidentCopies incident_copies(int v);

struct FastenedPair {
  int u = 0, v = 0;
  int octa = -1;
  int tetra = -1;
};

struct FastenedCertificate {
  std::vector<FastenedPair> pairs;  // one per edge, in edges() order
  bool ok = false;
  std::string failure;
};

// Every edge in exactly one octahedron and one tetrahedron, the two meeting
// only in that edge, and both predicted by the weak and strong colours.
FastenedCertificate fastened_certificate();
FastenedPair fastened_pair(int u, int v);  // throws for non-edges

struct NeighborhoodReport {
  int v = 0;
  std::vector<int> vertices;                 // sorted neighbours
  std::vector<int> lambda_to_g;              // Λ vertex -> G vertex
  std::vector<std::array<int, 3>> triangles; // 4, pairwise disjoint
  std::vector<std::array<int, 4>> four_holes_type1;
  std::vector<std::array<int, 4>> four_holes_type2;
  std::vector<int> to_k4;                    // G vertex in N(v) order -> 0..3
  bool ok = false;
  std::string failure;
};

NeighborhoodReport neighborhood_analysis(int v);

// v's four tetrahedron names in incident_copies order; their lines are pasch(p).
std::array<OrderedLine, 4> pasch_of_vertex(int v);

}  // namespace fanograph
