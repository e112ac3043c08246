#include "fanograph/incidence.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fanograph/census.hpp"
#include "fanograph/g_graph.hpp"
#include "fanograph/holes_tori.hpp"

namespace fanograph {

namespace {

std::vector<int> degrees(const Configuration& c, bool points) {
  std::vector<int> out(points ? c.points.size() : c.blocks.size(), 0);
  for (auto [p, b] : c.flags) ++out[points ? p : b];
  return out;
}

std::optional<int> uniform(const std::vector<int>& d) {
  if (d.empty() || std::any_of(d.begin(), d.end(), [&](int x) { return x != d.front(); })) return std::nullopt;
  return d.front();
}

Graph co_incidence(const Configuration& c, bool on_points) {
  const int n = static_cast<int>(on_points ? c.points.size() : c.blocks.size());
  std::vector<std::vector<int>> groups(on_points ? c.blocks.size() : c.points.size());
  for (auto [p, b] : c.flags) {
    if (on_points)
      groups[b].push_back(p);
    else
      groups[p].push_back(b);
  }
  std::set<std::pair<int, int>> edges;
  for (const auto& grp : groups)
    for (std::size_t i = 0; i < grp.size(); ++i)
      for (std::size_t j = i + 1; j < grp.size(); ++j) edges.insert(std::minmax(grp[i], grp[j]));
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  g.set_names(on_points ? c.points : c.blocks);
  return g;
}

std::string triangle_name(const Triangle& t) {
  return "(" + short_name(t[0]) + "," + short_name(t[1]) + "," + short_name(t[2]) + ")";
}

std::vector<std::vector<int>> tetra_keys() {
  std::vector<std::vector<int>> out;
  for (const auto& t : tetrahedra()) out.emplace_back(t.vertices.begin(), t.vertices.end());
  return out;
}

std::vector<std::string> tetra_names() {
  std::vector<std::string> out;
  for (const auto& t : tetrahedra()) out.push_back(t.label());
  return out;
}

int orbit_count_on(const std::vector<Permutation>& gens, const std::vector<std::vector<int>>& objects, bool unordered) {
  return orbit_count(static_cast<int>(objects.size()), induced_action(gens, objects, unordered));
}

}  // namespace

std::vector<int> Configuration::point_degrees() const { return degrees(*this, true); }
std::vector<int> Configuration::block_degrees() const { return degrees(*this, false); }
std::optional<int> Configuration::point_degree() const { return uniform(point_degrees()); }
std::optional<int> Configuration::block_degree() const { return uniform(block_degrees()); }

Graph levi_graph(const Configuration& c) {
  const int np = static_cast<int>(c.points.size());
  Graph g(np + static_cast<int>(c.blocks.size()));
  for (auto [p, b] : c.flags) g.add_edge(p, np + b);
  std::vector<std::string> names = c.points;
  names.insert(names.end(), c.blocks.begin(), c.blocks.end());
  g.set_names(std::move(names));
  return g;
}

std::vector<int> levi_parts(const Configuration& c) {
  std::vector<int> parts(c.points.size(), 0);
  parts.resize(c.points.size() + c.blocks.size(), 1);
  return parts;
}

Graph menger_graph(const Configuration& c) { return co_incidence(c, true); }
Graph dual_menger_graph(const Configuration& c) { return co_incidence(c, false); }

Configuration custom_config(std::string name, std::vector<std::string> points, std::vector<std::string> blocks,
                            const std::function<bool(int, int)>& incident) {
  Configuration c{std::move(name), std::move(points), std::move(blocks), {}, {}, {}};
  for (int p = 0; p < static_cast<int>(c.points.size()); ++p)
    for (int b = 0; b < static_cast<int>(c.blocks.size()); ++b)
      if (incident(p, b)) c.flags.emplace_back(p, b);
  return c;
}

Configuration config_42_4() {
  std::vector<std::string> points;
  std::vector<std::vector<int>> keys;
  for (int v = 0; v < 42; ++v) {
    points.push_back(pencil_of(v).long_name());
    keys.push_back({v});
  }
  const auto& tets = tetrahedra();
  Configuration c = custom_config("(42_4)", std::move(points), tetra_names(), [&](int p, int b) {
    return std::binary_search(tets[b].vertices.begin(), tets[b].vertices.end(), p);
  });
  c.point_keys = std::move(keys);
  c.block_keys = tetra_keys();
  return c;
}

Configuration config_168_6() {
  std::vector<Triangle> tet_tris;
  std::vector<std::string> points;
  for (const auto& t : tetrahedra())
    for (int skip = 3; skip >= 0; --skip) {
      Triangle tri{};
      int k = 0;
      for (int i = 0; i < 4; ++i)
        if (i != skip) tri[k++] = t.vertices[i];
      tet_tris.push_back(tri);
      points.push_back(t.label() + triangle_name(tri));
    }
  const auto& oct_tris = octahedral_triangles();
  std::vector<std::string> blocks;
  for (const auto& t : oct_tris) blocks.push_back(triangle_name(t));
  Configuration c = custom_config("(168_6)", std::move(points), std::move(blocks), [&](int p, int b) {
    std::vector<int> meet;
    std::set_intersection(tet_tris[p].begin(), tet_tris[p].end(), oct_tris[b].begin(), oct_tris[b].end(),
                          std::back_inserter(meet));
    return meet.size() == 2;
  });
  for (const auto& t : tet_tris) c.point_keys.emplace_back(t.begin(), t.end());
  for (const auto& t : oct_tris) c.block_keys.emplace_back(t.begin(), t.end());
  return c;
}

Configuration config_tetra_octa() {
  std::set<std::pair<int, int>> flags;
  for (const auto& fp : fastened_certificate().pairs)
    if (fp.tetra >= 0) flags.insert({fp.tetra, fp.octa});
  std::vector<std::string> blocks;
  std::vector<std::vector<int>> bkeys;
  for (const auto& o : octahedra()) {
    blocks.push_back(o.label());
    bkeys.emplace_back(o.vertices.begin(), o.vertices.end());
  }
  Configuration c = custom_config("(42_6,21_12)", tetra_names(), std::move(blocks),
                                  [&](int p, int b) { return flags.count({p, b}) > 0; });
  c.point_keys = tetra_keys();
  c.block_keys = std::move(bkeys);
  return c;
}

Configuration config_tetra_torus() {
  const auto tori = all_tori();
  std::vector<std::string> blocks;
  std::vector<std::vector<int>> bkeys;
  for (const auto& t : tori) {
    blocks.push_back(t.label());
    bkeys.push_back(t.body.vertices);
  }
  const auto& tets = tetrahedra();
  Configuration c = custom_config("(42_3,21_6)", tetra_names(), std::move(blocks),
                                  [&](int p, int b) { return tets[p].name.at(tori[b].d) == tori[b].w; });
  c.point_keys = tetra_keys();
  c.block_keys = std::move(bkeys);
  return c;
}

Configuration config_torus_star() {
  const auto tori = all_tori();
  std::vector<std::string> points, blocks;
  std::vector<std::vector<int>> pkeys, bkeys;
  std::vector<std::set<int>> torus_holes, star_holes;
  for (const auto& t : tori) {
    points.push_back(t.label());
    pkeys.push_back(t.body.vertices);
    torus_holes.emplace_back(t.holes.begin(), t.holes.end());
  }
  for (const Line& l : lines()) {
    auto s = star_subgraph(l);
    blocks.push_back(s.label());
    bkeys.push_back(s.body.vertices);
    star_holes.emplace_back(s.holes.begin(), s.holes.end());
  }
  Configuration c = custom_config("(21_4,7_12)", std::move(points), std::move(blocks), [&](int p, int b) {
    return std::any_of(torus_holes[p].begin(), torus_holes[p].end(), [&](int h) { return star_holes[b].count(h); });
  });
  c.point_keys = std::move(pkeys);
  c.block_keys = std::move(bkeys);
  return c;
}

GraphSummary summarize(const Graph& g) {
  GraphSummary s;
  s.order = g.order();
  s.edges = g.edge_count();
  s.bipartite = is_bipartite(g);
  std::vector<int> degs;
  for (int v = 0; v < g.order(); ++v) degs.push_back(g.degree(v));
  s.degree = uniform(degs);
  s.diameter = diameter(g);
  s.girth = girth(g);
  std::map<std::vector<int>, int> dists;
  for (int v = 0; v < g.order(); ++v) ++dists[distance_distribution(g, v)];
  s.distributions.assign(dists.begin(), dists.end());

  SearchOptions opts;
  opts.element_cap = 0;
  const auto aut = automorphism_group(g, opts);
  s.aut_order = aut.order;
  s.vertex_orbits = orbit_count(g.order(), aut.generators);

  std::vector<std::vector<int>> edges, arcs, two_arcs;
  for (auto [u, v] : g.edges()) {
    edges.push_back({u, v});
    arcs.push_back({u, v});
    arcs.push_back({v, u});
  }
  for (int v = 0; v < g.order(); ++v)
    for (int u : g.neighbors(v))
      for (int w : g.neighbors(v))
        if (u != w) two_arcs.push_back({u, v, w});
  s.edge_orbits = orbit_count_on(aut.generators, edges, true);
  s.arc_orbits = orbit_count_on(aut.generators, arcs, false);
  s.two_arc_orbits = orbit_count_on(aut.generators, two_arcs, false);
  return s;
}

bool vertex_transitive(const GraphSummary& s) { return s.vertex_orbits == 1; }
bool arc_transitive(const GraphSummary& s) { return s.arc_orbits == 1; }
bool two_arc_transitive(const GraphSummary& s) { return s.two_arc_orbits == 1; }
bool semisymmetric(const GraphSummary& s) { return s.degree && s.edge_orbits == 1 && s.vertex_orbits > 1; }

bool flag_transitive(const Configuration& c) {
  const Graph levi = levi_graph(c);
  SearchOptions opts;
  opts.vertex_colors = levi_parts(c);
  opts.element_cap = 0;
  const auto aut = automorphism_group(levi, opts);
  std::vector<std::vector<int>> flags;
  for (auto [u, v] : levi.edges()) flags.push_back({u, v});
  return !flags.empty() && orbit_count_on(aut.generators, flags, true) == 1;
}

bool flag_transitive_under(const Configuration& c, const std::vector<Permutation>& g_generators) {
  if (c.point_keys.size() != c.points.size() || c.block_keys.size() != c.blocks.size())
    throw std::invalid_argument("configuration has no G-level keys");
  const auto on_points = induced_action(g_generators, c.point_keys, true);
  const auto on_blocks = induced_action(g_generators, c.block_keys, true);
  const int np = static_cast<int>(c.points.size());
  std::vector<Permutation> levi_gens;
  for (std::size_t i = 0; i < g_generators.size(); ++i) {
    std::vector<int> images;
    for (int p = 0; p < np; ++p) images.push_back(on_points[i](p));
    for (int b = 0; b < static_cast<int>(c.blocks.size()); ++b) images.push_back(np + on_blocks[i](b));
    levi_gens.emplace_back(std::move(images));
  }
  std::vector<std::vector<int>> flags;
  for (auto [p, b] : c.flags) flags.push_back({p, np + b});
  return !flags.empty() && orbit_count_on(levi_gens, flags, false) == 1;
}

std::optional<Duality> self_duality(const Configuration& c) {
  if (c.points.size() != c.blocks.size()) return std::nullopt;
  const Graph levi = levi_graph(c);
  auto parts = levi_parts(c);
  auto swapped = parts;
  for (int& x : swapped) x = 1 - x;
  auto map = find_isomorphism(levi, levi, parts, swapped);
  if (!map) return std::nullopt;
  const int n = static_cast<int>(c.points.size());
  Duality d;
  for (int p = 0; p < n; ++p) d.point_to_block.push_back((*map)[p] - n);
  for (int b = 0; b < n; ++b) d.block_to_point.push_back((*map)[n + b]);
  if (!verify_duality(c, d)) throw std::logic_error("part-swapping isomorphism does not reverse incidence");
  return d;
}

bool verify_duality(const Configuration& c, const Duality& d) {
  const std::size_t n = c.points.size();
  if (c.blocks.size() != n || d.point_to_block.size() != n || d.block_to_point.size() != n) return false;
  const std::set<std::pair<int, int>> flags(c.flags.begin(), c.flags.end());
  for (int p = 0; p < static_cast<int>(n); ++p)
    for (int b = 0; b < static_cast<int>(n); ++b)
      if (flags.count({p, b}) != flags.count({d.block_to_point[b], d.point_to_block[p]})) return false;
  return true;
}

Duality phi_duality_42_4() {
  Duality d;
  for (int v = 0; v < 42; ++v) {
    const auto& pv = pencil_of(v);
    OrderedLine l{};
    for (Position j : kPositions) l.entries[index(j)] = phi_inv(pv.line(j));
    d.point_to_block.push_back(tetra_index(l));
  }
  for (const auto& t : tetrahedra()) {
    PointSet common = 0xfe;
    for (Point x : t.name.entries) common = static_cast<PointSet>(common & phi(x).mask());
    if (popcount(common) != 1) throw std::logic_error("duality lines are not concurrent");
    const Point c = points_of(common).front();
    OrderedPencil pv{c, {}};
    for (int j = 0; j < 3; ++j) pv.pairs[j] = static_cast<PointSet>(phi(t.name.entries[j]).mask() & ~c.bit());
    d.block_to_point.push_back(vertex_id(pv));
  }
  return d;
}

std::vector<std::vector<int>> smallest_diameter_paths(const Graph& g, int source) {
  const auto from = distances_from(g, source);
  const int ecc = *std::max_element(from.begin(), from.end());
  std::vector<std::vector<int>> out;
  for (int t = 0; t < g.order(); ++t) {
    if (from[t] != ecc) continue;
    const auto to = distances_from(g, t);
    std::vector<int> path{source};
    while (path.back() != t) {
      const int cur = path.back();
      for (int y : g.neighbors(cur))
        if (from[y] == from[cur] + 1 && to[y] == ecc - from[y]) {
          path.push_back(y);
          break;
        }
    }
    out.push_back(std::move(path));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fanograph
