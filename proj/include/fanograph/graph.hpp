// Exact graph primitives: an undirected (multi)graph, vertex permutations,
// BFS statistics, chordless-cycle enumeration and induced-subgraph census.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fanograph {

// Undirected graph on 0..n-1 without loops. Edges may carry a multiplicity
// (only the 2K7 quotient uses that); simple-graph algorithms reject
// multigraphs with std::invalid_argument.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  // Number of adjacent pairs (a multi-edge counts once).
  std::size_t edge_count() const { return edge_count_; }

  // Adds `count` parallel copies of uv. Throws on loops or bad ids.
  void add_edge(int u, int v, int count = 1);

  bool adjacent(int u, int v) const;
  int multiplicity(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool is_simple() const { return multi_.empty(); }
  void require_simple(const char* what) const;

  // All adjacent pairs (u < v), sorted.
  std::vector<std::pair<int, int>> edges() const;

  // Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const int> vertices) const;

  void set_names(std::vector<std::string> names);
  bool has_names() const { return !names_.empty(); }
  // Name of v, or its decimal id when no names were set.
  std::string name(int v) const;
  const std::vector<std::string>& names() const { return names_; }

 private:
  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> bits_;  // row bitsets when n is small
  std::size_t words_ = 0;
  std::map<std::pair<int, int>, int> multi_;  // multiplicities > 1
  std::vector<std::string> names_;
};

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // throws unless a bijection
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_[v]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  Permutation inverse() const;
  // Order as a group element (lcm of cycle lengths).
  std::uint64_t element_order() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& x, const Permutation& y) { return x.images_ <=> y.images_; }

 private:
  std::vector<int> images_;
};

// outer ∘ inner: apply inner first.
Permutation compose(const Permutation& outer, const Permutation& inner);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

bool is_automorphism(const Graph& g, const Permutation& p);
// `map` sends vertices of g1 to vertices of g2; checks bijectivity and that
// multiplicities agree on every pair.
bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& map);

// BFS distances; -1 for unreachable.
std::vector<int> distances_from(const Graph& g, int source);
// Number of vertices at distance 0, 1, ..., eccentricity.
std::vector<int> distance_distribution(const Graph& g, int source);
bool is_connected(const Graph& g);
// nullopt for disconnected graphs.
std::optional<int> diameter(const Graph& g);
// nullopt for acyclic graphs. Simple graphs only.
std::optional<int> girth(const Graph& g);
bool is_bipartite(const Graph& g);

// A chordless cycle, stored as its canonical vertex sequence: the rotation
// and direction that is lexicographically smallest.
struct Hole {
  std::vector<int> cycle;
  friend auto operator<=>(const Hole&, const Hole&) = default;
};

std::vector<int> canonical_cycle(std::vector<int> cycle);
// All chordless k-cycles, sorted. k >= 3.
std::vector<Hole> holes(const Graph& g, int k);

struct SubgraphCopy {
  std::string name;
  std::vector<int> vertices;  // sorted
  std::vector<int> mapping;   // template vertex i -> host vertex
};

// Every vertex set of `host` inducing a copy of `pattern`, sorted by vertex
// set. The mapping recorded is the first embedding the search reaches.
std::vector<SubgraphCopy> induced_copies(const Graph& host, const Graph& pattern);

// Calls `visit` for every induced embedding of `pattern` into `host` (as a
// map pattern vertex -> host vertex) until it returns false.
void for_each_induced_embedding(const Graph& host, const Graph& pattern,
                                const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace fanograph
