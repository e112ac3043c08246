// Point-block configurations built from G, their Levi, Menger and dual Menger
// graphs, and the transitivity and duality predicates.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fanograph/automorphism.hpp"
#include "fanograph/graph.hpp"

namespace fanograph {

struct Configuration {
  std::string name;
  std::vector<std::string> points;
  std::vector<std::string> blocks;
  std::vector<std::pair<int, int>> flags;  // (point, block), sorted, unique
  // For configurations built from G: each point and block as its sorted set
  // of G vertices, so A(G) acts on them. Empty otherwise.
  std::vector<std::vector<int>> point_keys;
  std::vector<std::vector<int>> block_keys;

  std::vector<int> point_degrees() const;
  std::vector<int> block_degrees() const;
  // Common degree, or nullopt when the side is not uniform.
  std::optional<int> point_degree() const;
  std::optional<int> block_degree() const;
};

// Levi graph: points 0..P-1, blocks P..P+B-1.
Graph levi_graph(const Configuration& c);
std::vector<int> levi_parts(const Configuration& c);  // 0 for points, 1 for blocks
Graph menger_graph(const Configuration& c);
Graph dual_menger_graph(const Configuration& c);

Configuration custom_config(std::string name, std::vector<std::string> points, std::vector<std::string> blocks,
                            const std::function<bool(int, int)>& incident);

// Vertices of G and the 42 tetrahedra, by containment.
Configuration config_42_4();
// Tetrahedral and octahedral triangles, sharing an edge.
Configuration config_168_6();
// Tetrahedra and octahedra, sharing an edge.
Configuration config_tetra_octa();
// Tetrahedra and tori [w]_d: <x_a x_b x_c> is attached in [[w]]_d iff x_d = w.
Configuration config_tetra_torus();
// Tori and stars, sharing a 6-hole.
Configuration config_torus_star();

struct GraphSummary {
  int order = 0;
  std::size_t edges = 0;
  std::optional<int> degree;    // when regular
  std::optional<int> diameter;
  std::optional<int> girth;
  // Distinct distance distributions with the number of vertices having each.
  std::vector<std::pair<std::vector<int>, int>> distributions;
  std::uint64_t aut_order = 0;
  int vertex_orbits = 0;
  int edge_orbits = 0;
  int arc_orbits = 0;
  int two_arc_orbits = 0;
  bool bipartite = false;
};

// Everything is computed from the uncoloured automorphism group.
GraphSummary summarize(const Graph& g);

bool vertex_transitive(const GraphSummary& s);
bool arc_transitive(const GraphSummary& s);
bool two_arc_transitive(const GraphSummary& s);
bool semisymmetric(const GraphSummary& s);

// Single orbit on flags under the part-preserving automorphisms of the Levi
// graph.
bool flag_transitive(const Configuration& c);
// Single orbit on flags under the action of `g_generators` (automorphisms of
// G) through point_keys and block_keys.
bool flag_transitive_under(const Configuration& c, const std::vector<Permutation>& g_generators);

// Point -> block and block -> point maps reversing incidence, from a
// part-swapping automorphism of the Levi graph; nullopt if none exists.
struct Duality {
  std::vector<int> point_to_block;
  std::vector<int> block_to_point;
};
std::optional<Duality> self_duality(const Configuration& c);
// (p, b) is a flag iff (block_to_point[b], point_to_block[p]) is a flag.
bool verify_duality(const Configuration& c, const Duality& d);

// The duality of the (42_4) configuration through the map Phi: vertex
// (p, l_a, l_b, l_c) goes to <phi_inv(l_a) phi_inv(l_b) phi_inv(l_c)> and
// <xyz> to the pencil through the common point of phi(x), phi(y), phi(z).
Duality phi_duality_42_4();

// For each vertex at maximum distance from `source`, the lexicographically
// smallest geodesic to it (by vertex id); sorted.
std::vector<std::vector<int>> smallest_diameter_paths(const Graph& g, int source);

}  // namespace fanograph
