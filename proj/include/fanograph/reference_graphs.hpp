// Small named graphs used as templates and comparison targets.

#pragma once

#include "fanograph/graph.hpp"

namespace fanograph {

Graph complete_graph(int n);
Graph k4();
// Octahedron K_{2,2,2}: vertices 0..5 with antipodal pairs {0,1}, {2,3}, {4,5}.
Graph k222();
Graph k22();
Graph k2();
Graph k3();
Graph cycle_graph(int k);

// Line graph of the d-cube: vertices are the d * 2^(d-1) cube edges, adjacent
// when they share an endpoint. Requires d >= 3.
Graph line_graph_of_cube(int d);

// The cuboctahedron built from its coordinates: the 12 permutations of
// (±1, ±1, 0), adjacent at squared distance 2.
Graph cuboctahedron();

// Star graph ST_4: the 24 permutations of {0,1,2,3} in lexicographic order,
// each adjacent to the results of swapping entry 0 with entry 1, 2 or 3.
Graph st4();

// K7 with every edge doubled.
Graph two_k7();

// The hemi-rhombicuboctahedron graph on {a,b,c} x {0..3}, ids 4*j + i for
// vertex j_i. Its edges are the pull-back of the open neighbourhood of 1^a
// along the printed identification a0 -> 5^c, ..., c3 -> 3^a.
Graph lambda_hemi();

}  // namespace fanograph
