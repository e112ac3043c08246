// Automorphism groups and isomorphisms by partition refinement and
// individualization with backtracking, plus small permutation-group helpers
// (closure, orbits, induced actions).
//
// The search follows the classic first-path scheme: refine the coloured
// vertex partition to an equitable one, individualize a vertex of the first
// smallest non-singleton cell, and repeat until the partition is discrete.
// Automorphisms are leaves whose node invariants match the first path.
// Generators are collected bottom-up along the first path and the group
// order is the product of the basic orbit lengths.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fanograph/graph.hpp"

namespace fanograph {

struct SearchOptions {
  // Optional vertex colours; automorphisms must preserve them. Empty means
  // uncoloured.
  std::vector<int> vertex_colors;
  // Explicit element lists are produced only up to this order.
  std::uint64_t element_cap = 1'000'000;
};

struct AutomorphismGroup {
  int degree = 0;
  std::uint64_t order = 1;
  std::vector<Permutation> generators;
  // All elements, sorted, when order <= element_cap; empty otherwise.
  std::vector<Permutation> elements;

  bool has_elements() const { return !elements.empty(); }
};

AutomorphismGroup automorphism_group(const Graph& g, const SearchOptions& options = {});

// A colour-preserving isomorphism g1 -> g2 (vertex map), or nullopt when the
// exhaustive search finds none.
std::optional<std::vector<int>> find_isomorphism(const Graph& g1, const Graph& g2,
                                                 const std::vector<int>& colors1 = {},
                                                 const std::vector<int>& colors2 = {});

// Every element of the group generated by `generators`, sorted. Throws
// std::length_error past `cap` elements.
std::vector<Permutation> group_closure(const std::vector<Permutation>& generators, int degree,
                                       std::uint64_t cap = 1'000'000);

// Orbit representative (smallest member) for each point.
std::vector<int> orbit_representatives(int degree, const std::vector<Permutation>& generators);
int orbit_count(int degree, const std::vector<Permutation>& generators);
std::vector<int> orbit_of(int point, const std::vector<Permutation>& generators);

// Action of `generators` on a list of objects given as vertex tuples. With
// `unordered`, tuples are compared as sets (callers pass them sorted). Throws
// std::invalid_argument if some image is not in the list.
std::vector<Permutation> induced_action(const std::vector<Permutation>& generators,
                                        const std::vector<std::vector<int>>& objects, bool unordered);

}  // namespace fanograph
