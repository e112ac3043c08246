#include "fanograph/automorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace fanograph {

namespace {

struct Partition {
  std::vector<std::vector<int>> cells;
  std::uint64_t invariant = 0;

  bool discrete() const { return cells.size() == cell_count_total; }
  std::size_t cell_count_total = 0;  // number of vertices
};

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

// Refines to the coarsest equitable partition finer than `p`. Cells are split
// by the multiset of neighbour cells, sub-cells ordered by that multiset, so
// the result is equivariant under colour-preserving isomorphisms.
void refine(const Graph& g, Partition& p) {
  const int n = g.order();
  std::vector<int> cell_of(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
  while (true) {
    for (std::size_t c = 0; c < p.cells.size(); ++c)
      for (int v : p.cells[c]) cell_of[v] = static_cast<int>(c);
    for (int v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      for (int u : g.neighbors(v)) s.push_back(cell_of[u] * 64 + std::min(g.multiplicity(v, u), 63));
      std::sort(s.begin(), s.end());
    }
    std::vector<std::vector<int>> next;
    next.reserve(p.cells.size());
    for (std::size_t c = 0; c < p.cells.size(); ++c) {
      auto cell = p.cells[c];
      if (cell.size() == 1) {
        next.push_back(std::move(cell));
        continue;
      }
      std::stable_sort(cell.begin(), cell.end(), [&](int x, int y) { return sig[x] < sig[y]; });
      std::size_t start = 0;
      for (std::size_t i = 1; i <= cell.size(); ++i) {
        if (i == cell.size() || sig[cell[i]] != sig[cell[start]]) {
          next.emplace_back(cell.begin() + static_cast<long>(start), cell.begin() + static_cast<long>(i));
          p.invariant = mix(p.invariant, c);
          p.invariant = mix(p.invariant, i - start);
          for (int x : sig[cell[start]]) p.invariant = mix(p.invariant, static_cast<std::uint64_t>(x));
          start = i;
        }
      }
    }
    const bool stable = next.size() == p.cells.size();
    p.cells = std::move(next);
    if (stable) return;
  }
}

Partition initial_partition(const Graph& g, const std::vector<int>& colors) {
  const int n = g.order();
  if (!colors.empty() && static_cast<int>(colors.size()) != n)
    throw std::invalid_argument("vertex colour count does not match order");
  std::vector<int> verts(static_cast<std::size_t>(n));
  std::iota(verts.begin(), verts.end(), 0);
  auto key = [&](int v) { return std::pair{colors.empty() ? 0 : colors[v], g.degree(v)}; };
  std::stable_sort(verts.begin(), verts.end(), [&](int x, int y) { return key(x) < key(y); });
  Partition p;
  p.cell_count_total = static_cast<std::size_t>(n);
  std::size_t start = 0;
  for (std::size_t i = 1; i <= verts.size(); ++i) {
    if (i == verts.size() || key(verts[i]) != key(verts[start])) {
      p.cells.emplace_back(verts.begin() + static_cast<long>(start), verts.begin() + static_cast<long>(i));
      p.invariant = mix(p.invariant, static_cast<std::uint64_t>(key(verts[start]).first) * 1000003ull +
                                         static_cast<std::uint64_t>(key(verts[start]).second));
      p.invariant = mix(p.invariant, i - start);
      start = i;
    }
  }
  refine(g, p);
  return p;
}

int target_cell(const Partition& p) {
  int best = -1;
  for (std::size_t c = 0; c < p.cells.size(); ++c) {
    if (p.cells[c].size() < 2) continue;
    if (best < 0 || p.cells[c].size() < p.cells[static_cast<std::size_t>(best)].size()) best = static_cast<int>(c);
  }
  return best;
}

Partition individualize(const Graph& g, const Partition& p, int cell, int v) {
  Partition q;
  q.cell_count_total = p.cell_count_total;
  q.invariant = mix(p.invariant, 0xabcdefull + static_cast<std::uint64_t>(cell));
  q.cells.reserve(p.cells.size() + 1);
  for (std::size_t c = 0; c < p.cells.size(); ++c) {
    if (static_cast<int>(c) != cell) {
      q.cells.push_back(p.cells[c]);
      continue;
    }
    q.cells.push_back({v});
    std::vector<int> rest;
    for (int x : p.cells[c])
      if (x != v) rest.push_back(x);
    q.cells.push_back(std::move(rest));
  }
  refine(g, q);
  return q;
}

bool same_shape(const Partition& x, const Partition& y) {
  if (x.invariant != y.invariant || x.cells.size() != y.cells.size()) return false;
  for (std::size_t c = 0; c < x.cells.size(); ++c)
    if (x.cells[c].size() != y.cells[c].size()) return false;
  return true;
}

// The first path of a search tree: nodes[0] is the refined root.
struct FirstPath {
  std::vector<Partition> nodes;
  std::vector<int> targets;  // target cell index at each non-leaf node
  std::vector<int> chosen;   // individualized vertex at each non-leaf node
};

FirstPath build_first_path(const Graph& g, const std::vector<int>& colors) {
  FirstPath fp;
  fp.nodes.push_back(initial_partition(g, colors));
  while (!fp.nodes.back().discrete()) {
    const Partition& cur = fp.nodes.back();
    int t = target_cell(cur);
    int v = cur.cells[static_cast<std::size_t>(t)].front();
    fp.targets.push_back(t);
    fp.chosen.push_back(v);
    fp.nodes.push_back(individualize(g, cur, t, v));
  }
  return fp;
}

std::vector<int> leaf_order(const Partition& leaf) {
  std::vector<int> order;
  order.reserve(leaf.cells.size());
  for (const auto& c : leaf.cells) order.push_back(c.front());
  return order;
}

// Searches the subtree of `node` (in `host`) for a leaf whose induced map
// from the first leaf of `path` (in `source`) is an isomorphism.
std::optional<std::vector<int>> search_subtree(const Graph& source, const Graph& host, const FirstPath& path,
                                               const Partition& node, std::size_t depth) {
  if (node.discrete()) {
    auto from = leaf_order(path.nodes.back());
    auto to = leaf_order(node);
    std::vector<int> map(from.size());
    for (std::size_t k = 0; k < from.size(); ++k) map[from[k]] = to[k];
    if (is_isomorphism(source, host, map)) return map;
    return std::nullopt;
  }
  const int t = path.targets[depth];
  for (int u : node.cells[static_cast<std::size_t>(t)]) {
    Partition child = individualize(host, node, t, u);
    if (!same_shape(child, path.nodes[depth + 1])) continue;
    if (auto found = search_subtree(source, host, path, child, depth + 1)) return found;
  }
  return std::nullopt;
}

}  // namespace

AutomorphismGroup automorphism_group(const Graph& g, const SearchOptions& options) {
  AutomorphismGroup group;
  group.degree = g.order();
  if (g.order() == 0) return group;
  const FirstPath path = build_first_path(g, options.vertex_colors);

  for (std::size_t level = path.targets.size(); level-- > 0;) {
    const Partition& node = path.nodes[level];
    const int t = path.targets[level];
    const int v = path.chosen[level];
    std::vector<int> orbit = orbit_of(v, group.generators);
    std::vector<char> in_orbit(static_cast<std::size_t>(g.order()), 0);
    for (int x : orbit) in_orbit[x] = 1;
    for (int w : node.cells[static_cast<std::size_t>(t)]) {
      if (in_orbit[w]) continue;
      Partition child = individualize(g, node, t, w);
      if (!same_shape(child, path.nodes[level + 1])) continue;
      auto found = search_subtree(g, g, path, child, level + 1);
      if (!found) continue;
      group.generators.emplace_back(std::move(*found));
      orbit = orbit_of(v, group.generators);
      for (int x : orbit) in_orbit[x] = 1;
    }
    const auto len = static_cast<std::uint64_t>(orbit.size());
    if (group.order > UINT64_MAX / len) throw std::overflow_error("automorphism group order overflows 64 bits");
    group.order *= len;
  }

  if (group.order <= options.element_cap) {
    group.elements = group_closure(group.generators, g.order(), options.element_cap);
    if (group.elements.size() != group.order)
      throw std::logic_error("closure size disagrees with orbit-stabilizer order");
  }
  return group;
}

std::optional<std::vector<int>> find_isomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& colors1,
                                                 const std::vector<int>& colors2) {
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  if (colors1.size() != colors2.size()) return std::nullopt;
  if (g1.order() == 0) return std::vector<int>{};
  const FirstPath path = build_first_path(g1, colors1);
  Partition root = initial_partition(g2, colors2);
  if (!same_shape(root, path.nodes.front())) return std::nullopt;
  auto map = search_subtree(g1, g2, path, root, 0);
  if (map && !colors1.empty()) {
    for (int v = 0; v < g1.order(); ++v)
      if (colors1[v] != colors2[(*map)[v]]) return std::nullopt;
  }
  return map;
}

std::vector<Permutation> group_closure(const std::vector<Permutation>& generators, int degree, std::uint64_t cap) {
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_set<Permutation, PermutationHash> seen(elements.begin(), elements.end());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const Permutation& gen : generators) {
      Permutation next = compose(gen, elements[i]);
      if (seen.insert(next).second) {
        if (elements.size() >= cap) throw std::length_error("group closure exceeds element cap");
        elements.push_back(std::move(next));
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

std::vector<int> orbit_representatives(int degree, const std::vector<Permutation>& generators) {
  std::vector<int> parent(static_cast<std::size_t>(degree));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Permutation& gen : generators)
    for (int x = 0; x < degree; ++x) {
      int a = find(x), b = find(gen(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<int> rep(static_cast<std::size_t>(degree));
  for (int x = 0; x < degree; ++x) rep[x] = find(x);
  return rep;
}

int orbit_count(int degree, const std::vector<Permutation>& generators) {
  auto rep = orbit_representatives(degree, generators);
  int count = 0;
  for (int x = 0; x < degree; ++x)
    if (rep[x] == x) ++count;
  return count;
}

std::vector<int> orbit_of(int point, const std::vector<Permutation>& generators) {
  std::vector<int> orbit{point};
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const Permutation& gen : generators) {
      int y = gen(orbit[i]);
      if (std::find(orbit.begin(), orbit.end(), y) == orbit.end()) orbit.push_back(y);
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<Permutation> induced_action(const std::vector<Permutation>& generators,
                                        const std::vector<std::vector<int>>& objects, bool unordered) {
  std::map<std::vector<int>, int> where;
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (!where.emplace(objects[i], static_cast<int>(i)).second)
      throw std::invalid_argument("object list has duplicates");
  std::vector<Permutation> out;
  for (const Permutation& g : generators) {
    std::vector<int> images(objects.size());
    for (std::size_t i = 0; i < objects.size(); ++i) {
      std::vector<int> img;
      for (int x : objects[i]) img.push_back(g(x));
      if (unordered) std::sort(img.begin(), img.end());
      auto it = where.find(img);
      if (it == where.end()) throw std::invalid_argument("object list is not closed under the action");
      images[i] = it->second;
    }
    out.emplace_back(std::move(images));
  }
  return out;
}

}  // namespace fanograph
