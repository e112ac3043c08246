// A(G) as collineation-times-position-permutation pairs: the printed 16
// generators, the closed group table cross-checked against the independent
// search, stabilizers and cosets, ultrahomogeneity and {H}_n^m certificates,
// and a bounded search for a regular subgroup of order 42.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fanograph/fano.hpp"
#include "fanograph/graph.hpp"

namespace fanograph {

// psi[j] is the position that position j moves to.
using PositionMap = std::array<int, 3>;

// Vertex permutation of G induced by a collineation and a position map.
Permutation pencil_action(const PointMap& phi, const PositionMap& psi);

struct GroupElement {
  Permutation perm;
  PointMap phi{};
  PositionMap psi{};
};

struct Generator {
  std::string name;  // "tau1" .. "tau16"
  GroupElement element;
};

// The 16 printed generators. Throws std::logic_error naming the first one
// that is not an automorphism of G.
const std::vector<Generator>& printed_generators();
// Product of the named generators, applied right to left: {6, 16} is tau6∘tau16.
Permutation tau_product(std::initializer_list<int> indices);

class GroupTable {
 public:
  explicit GroupTable(std::vector<GroupElement> elements);

  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  std::vector<Permutation> permutations() const;
  // -1 when absent.
  int find(const Permutation& p) const;

 private:
  std::vector<GroupElement> elements_;  // sorted by permutation
  std::unordered_map<Permutation, int, PermutationHash> index_;
};

struct GroupReport {
  std::uint64_t closure_order = 0;
  std::uint64_t search_order = 0;
  bool closure_equals_search = false;
  bool all_decompose = false;        // every element is some (phi, psi)
  bool action_is_homomorphism = false;
  std::string failure;
};

// Closure of the printed generators, each element tagged with its (phi, psi).
// Built once.
const GroupTable& automorphism_table();
// Cross-checks the table against automorphism_group(G) and the action map.
GroupReport group_report();

// Elements mapping `set` onto itself.
std::vector<Permutation> setwise_stabilizer(const std::vector<Permutation>& group, std::vector<int> set);
// Left cosets gH, each as sorted element indices into `group`, ordered by
// smallest member.
std::vector<std::vector<int>> left_cosets(const std::vector<Permutation>& group,
                                          const std::vector<Permutation>& subgroup);
// Whether `generators` generate exactly `subgroup` (as sets).
bool generates(const std::vector<Permutation>& generators, const std::vector<Permutation>& subgroup);

struct CosetCorrespondence {
  std::size_t subgroup_order = 0;
  std::size_t coset_count = 0;
  bool bijective = false;  // coset gH -> g(object) is a bijection onto the orbit
};

CosetCorrespondence vertex_cosets(int v);
CosetCorrespondence edge_cosets(int u, int v);

struct UHCertificate {
  std::string template_name;
  std::size_t copies = 0;
  std::uint64_t isomorphisms_checked = 0;
  bool passed = false;
  // First failure: copies A, B (vertex lists) and the map h on A's vertices.
  std::optional<std::array<std::vector<int>, 3>> counterexample;
};

// For every ordered pair of induced copies (A, B) and every isomorphism
// A -> B, looks for an element of `group` extending it.
UHCertificate uh_certify(const Graph& g, const Graph& pattern, const std::string& name,
                         const std::vector<Permutation>& group);

struct HnmCertificate {
  int n = 0;
  int m = 0;
  bool edge_partition = false;   // (a)
  bool uniform_m = false;        // (b), m copies at every vertex
  bool meet_at_most_one = false; // (b), copies share at most one vertex
  bool ok() const { return edge_partition && uniform_m && meet_at_most_one; }
  std::string failure;
};

HnmCertificate h_n_m_certify(const Graph& g, const Graph& pattern);

struct LineGraphicalReport {
  int min_m = 0;
  bool complete_template_with_m2 = false;
  bool line_graphical = false;
};

// `templates` pairs each certificate with whether its template is complete.
LineGraphicalReport line_graphical_report(const std::vector<std::pair<HnmCertificate, bool>>& templates);

struct CayleySearchResult {
  std::uint64_t candidates = 0;     // semiregular elements with order dividing 42
  std::uint64_t closures_tried = 0;
  bool budget_exhausted = false;
  std::vector<Permutation> witness_generators;
  std::vector<Permutation> witness;  // sorted, order 42, regular; empty if none
};

// Bounded search: closes pairs, then triples, of candidate elements until a
// regular subgroup of order 42 appears or `budget` closures were tried.
// Absence of a witness proves nothing.
CayleySearchResult cayley_search(const std::vector<Permutation>& group, std::uint64_t budget);

}  // namespace fanograph
