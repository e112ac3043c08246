// The construction of G carried over to the binary projective space
// P(r-1, 2): vertices are a point p with an ordering of all sigma-dimensional
// subspaces through p. Two vertices are adjacent when their points differ,
// the subspaces at each position meet in exactly one point, and those points
// span a hyperplane. Only the component of the lexicographically smallest
// vertex is built.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fanograph/graph.hpp"

namespace fanograph {

struct GeneralizedResult {
  int r = 0;
  int sigma = 0;
  int points = 0;                 // 2^r - 1
  int subspaces_per_point = 0;
  std::uint64_t universe = 0;     // points * subspaces_per_point!
  Graph component;                // vertices in lexicographic order
  std::vector<std::pair<int, int>> degree_counts;  // (degree, vertices)
  std::optional<int> diameter;
};

// Throws std::invalid_argument unless 3 <= r <= 5 and 0 < sigma < r - 1, and
// when the orderings through one point would exceed 8! (every r = 5 case).
GeneralizedResult generalized_build(int r, int sigma);

std::string to_json_text(const GeneralizedResult& res);

}  // namespace fanograph
