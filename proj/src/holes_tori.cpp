#include "fanograph/holes_tori.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "fanograph/automorphism.hpp"
#include "fanograph/census.hpp"
#include "fanograph/g_graph.hpp"
#include "fanograph/reference_graphs.hpp"

namespace fanograph {

namespace {

using Edge = std::pair<int, int>;

Edge edge_of(int u, int v) { return std::minmax(u, v); }

std::vector<Edge> cycle_edges(const std::vector<int>& cycle) {
  std::vector<Edge> out;
  for (std::size_t k = 0; k < cycle.size(); ++k) out.push_back(edge_of(cycle[k], cycle[(k + 1) % cycle.size()]));
  return out;
}

std::vector<Edge> triangle_edges(const Triangle& t) {
  return {edge_of(t[0], t[1]), edge_of(t[1], t[2]), edge_of(t[0], t[2])};
}

std::vector<Triangle> build_octahedral_triangles() {
  const Graph& g = g_graph().graph();
  std::set<Triangle> out;
  for (const auto& o : octahedra()) {
    std::vector<std::array<int, 2>> anti;
    for (int x = 0; x < 6; ++x)
      for (int y = x + 1; y < 6; ++y)
        if (!g.adjacent(o.vertices[x], o.vertices[y])) anti.push_back({o.vertices[x], o.vertices[y]});
    for (int mask = 0; mask < 8; ++mask) {
      Triangle t = {anti[0][mask & 1], anti[1][(mask >> 1) & 1], anti[2][(mask >> 2) & 1]};
      std::sort(t.begin(), t.end());
      out.insert(t);
    }
  }
  if (out.size() != 168) throw std::logic_error("octahedral triangles are not 168 distinct triangles");
  for (const auto& t : tetrahedra())
    for (int skip = 0; skip < 4; ++skip) {
      Triangle tt{};
      int k = 0;
      for (int i = 0; i < 4; ++i)
        if (i != skip) tt[k++] = t.vertices[i];
      if (out.count(tt)) throw std::logic_error("a triangle lies in a tetrahedron and an octahedron");
    }
  return {out.begin(), out.end()};
}

// Octahedral triangles through each edge (two per edge).
const std::map<Edge, std::vector<int>>& triangles_at_edge() {
  static const auto table = [] {
    std::map<Edge, std::vector<int>> out;
    const auto& tris = octahedral_triangles();
    for (std::size_t i = 0; i < tris.size(); ++i)
      for (const Edge& e : triangle_edges(tris[i])) out[e].push_back(static_cast<int>(i));
    return out;
  }();
  return table;
}

const std::vector<TriangleChart>& charts() {
  static const std::vector<TriangleChart> all = [] {
    std::vector<TriangleChart> out;
    for (const auto& t : octahedral_triangles()) out.push_back(triangle_chart(t));
    return out;
  }();
  return all;
}

HoleCensus build_hole_census() {
  const auto& cg = g_graph();
  HoleCensus hc;
  hc.five_holes = holes(cg.graph(), 5).size();
  const auto six = holes(cg.graph(), 6);
  hc.six_holes = six.size();

  for (const auto& h : six) {
    std::set<std::pair<int, int>> common;  // (point, position) centres
    bool first = true;
    for (const Edge& e : cycle_edges(h.cycle)) {
      std::set<std::pair<int, int>> here;
      for (int t : triangles_at_edge().at(e))
        here.insert({charts()[t].center.value(), index(charts()[t].center_position)});
      if (first) {
        common = here;
        first = false;
      } else {
        std::set<std::pair<int, int>> keep;
        std::set_intersection(common.begin(), common.end(), here.begin(), here.end(),
                              std::inserter(keep, keep.begin()));
        common = std::move(keep);
      }
    }
    if (common.size() != 1) continue;
    const auto [w, dpos] = *common.begin();

    PointSet pts = 0;
    std::set<int> positions;
    for (const Edge& e : cycle_edges(h.cycle)) {
      const WeakColor& c = cg.weak(e.first, e.second);
      pts = static_cast<PointSet>(pts | c.point.bit());
      positions.insert(index(c.position));
    }
    if (popcount(pts) != 3 || positions.size() != 2 || positions.count(dpos)) {
      if (hc.failure.empty()) hc.failure = "an octahedral 6-hole has weak colours off a line or at its centre position";
      continue;
    }
    SixHoleLabel label{Line(pts), static_cast<Position>(dpos), Point(w)};
    if (label.line.contains(label.w)) {
      if (hc.failure.empty()) hc.failure = "hole centre lies on its own line";
      continue;
    }
    hc.octahedral.push_back({h.cycle, label});
  }
  std::sort(hc.octahedral.begin(), hc.octahedral.end(),
            [](const LabeledHole& x, const LabeledHole& y) { return x.label < y.label; });

  std::set<SixHoleLabel> seen;
  for (const auto& lh : hc.octahedral) seen.insert(lh.label);
  hc.bijective = seen.size() == hc.octahedral.size() && seen.size() == 84;
  if (!hc.bijective && hc.failure.empty()) hc.failure = "octahedral 6-hole labels are not a bijection onto the 84 triples";
  return hc;
}

EdgeSubgraph from_edges(const std::set<Edge>& edges) {
  EdgeSubgraph s;
  std::set<int> verts;
  for (auto [u, v] : edges) {
    verts.insert(u);
    verts.insert(v);
  }
  s.vertices.assign(verts.begin(), verts.end());
  s.edges.assign(edges.begin(), edges.end());
  return s;
}

// Checks that the graph induced on `body`'s vertices is the edge-disjoint
// union of the body and `pieces`, each piece contributing `extra` edges.
Closure closure_of(const EdgeSubgraph& body, const std::vector<int>& tetra_ids, std::size_t overlap_each) {
  const Graph& g = g_graph().graph();
  Closure c;
  c.vertices = body.vertices;
  c.attached_tetra = tetra_ids;
  std::set<Edge> induced;
  for (std::size_t i = 0; i < c.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < c.vertices.size(); ++j)
      if (g.adjacent(c.vertices[i], c.vertices[j])) induced.insert({c.vertices[i], c.vertices[j]});
  c.induced_edges = induced.size();
  c.not_induced = body.edges.size() < induced.size();

  std::set<Edge> assembled(body.edges.begin(), body.edges.end());
  const std::set<Edge> body_set = assembled;
  c.decomposes = true;
  for (int t : tetra_ids) {
    const auto& tv = tetrahedra()[t].vertices;
    std::size_t shared = 0;
    for (int x = 0; x < 4; ++x)
      for (int y = x + 1; y < 4; ++y) {
        Edge e{tv[x], tv[y]};
        if (body_set.count(e)) {
          ++shared;
        } else if (!assembled.insert(e).second) {
          c.decomposes = false;
          c.failure = "attached tetrahedra overlap";
        }
      }
    if (shared != overlap_each) {
      c.decomposes = false;
      if (c.failure.empty()) c.failure = "tetrahedron " + tetrahedra()[t].label() + " meets the body in the wrong number of edges";
    }
  }
  if (assembled != induced) {
    c.decomposes = false;
    if (c.failure.empty()) c.failure = "body and tetrahedra do not make up the induced subgraph";
  }
  return c;
}

}  // namespace

std::string SixHoleLabel::to_string() const {
  return line.to_string() + "_" + letter(d) + "^" + std::to_string(w.value());
}

const HoleCensus& hole_census() {
  static const HoleCensus hc = build_hole_census();
  return hc;
}

int hole_index(const SixHoleLabel& label) {
  const auto& hs = hole_census().octahedral;
  auto it = std::lower_bound(hs.begin(), hs.end(), label,
                             [](const LabeledHole& h, const SixHoleLabel& l) { return h.label < l; });
  if (it == hs.end() || !(it->label == label)) throw std::invalid_argument("no 6-hole labeled " + label.to_string());
  return static_cast<int>(it - hs.begin());
}

SixHoleLabel parse_hole_label(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("malformed hole label: " + std::string(text)); };
  if (text.size() != 7 || text[3] != '_' || text[5] != '^') throw bad();
  try {
    return SixHoleLabel{Line::parse(text.substr(0, 3)), position_from_letter(text[4]), Point(text[6] - '0')};
  } catch (const std::invalid_argument&) {
    throw bad();
  }
}

const std::vector<Triangle>& octahedral_triangles() {
  static const std::vector<Triangle> all = build_octahedral_triangles();
  return all;
}

TriangleChart triangle_chart(const Triangle& t) {
  Triangle sorted = t;
  std::sort(sorted.begin(), sorted.end());
  const auto& tris = octahedral_triangles();
  if (!std::binary_search(tris.begin(), tris.end(), sorted))
    throw std::invalid_argument("not an octahedral triangle");
  TriangleChart chart;
  chart.triangle = sorted;
  int found = 0;
  for (Position i : kPositions) {
    PointSet common = 0x7f << 1;
    for (int v : sorted) common = static_cast<PointSet>(common & pencil_of(v).pair(i));
    for (Point p : points_of(common)) {
      chart.center = p;
      chart.center_position = i;
      ++found;
    }
  }
  if (found != 1) throw std::logic_error("octahedral triangle without a unique centre");
  const auto& cg = g_graph();
  const auto edges = triangle_edges(sorted);
  for (int k = 0; k < 3; ++k) {
    chart.midpoints[k] = cg.weak(edges[k].first, edges[k].second).point;
    chart.external_lines[k] = cg.strong(edges[k].first, edges[k].second).line();
  }
  return chart;
}

Graph EdgeSubgraph::graph() const {
  Graph g(static_cast<int>(vertices.size()));
  auto local = [&](int v) {
    return static_cast<int>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
  };
  for (auto [u, v] : edges) g.add_edge(local(u), local(v));
  std::vector<std::string> names;
  for (int v : vertices) names.push_back(short_name(v));
  g.set_names(std::move(names));
  return g;
}

std::string TorusSubgraph::label() const { return "[" + std::to_string(w.value()) + "]_" + letter(d); }
std::string StarSubgraph::label() const { return "[" + line.to_string() + "]"; }

TorusSubgraph torus_subgraph(Point w, Position d) {
  TorusSubgraph t;
  t.w = w;
  t.d = d;
  const auto& hc = hole_census();
  std::set<Line> hole_lines;
  std::set<Edge> hole_edges, tri_edges;
  for (std::size_t i = 0; i < hc.octahedral.size(); ++i) {
    const auto& lh = hc.octahedral[i];
    if (lh.label.w != w || lh.label.d != d) continue;
    t.holes.push_back(static_cast<int>(i));
    hole_lines.insert(lh.label.line);
    for (const Edge& e : cycle_edges(lh.cycle))
      if (!hole_edges.insert(e).second) t.kagome = false;
  }
  const auto& tris = octahedral_triangles();
  for (std::size_t i = 0; i < tris.size(); ++i)
    if (charts()[i].center == w && charts()[i].center_position == d) t.triangles.push_back(tris[i]);
  if (t.triangles.size() != 8) throw std::logic_error(t.label() + " does not have 8 octahedral triangles");

  const auto pc = pasch(w);
  t.holes_are_pasch = hole_lines == std::set<Line>(pc.lines.begin(), pc.lines.end()) && t.holes.size() == 4;

  std::size_t tri_edge_count = 0;
  for (const auto& tri : t.triangles)
    for (const Edge& e : triangle_edges(tri)) {
      tri_edges.insert(e);
      ++tri_edge_count;
    }
  t.kagome = hole_edges.size() == 24 && tri_edge_count == 24 && tri_edges == hole_edges;
  t.body = from_edges(hole_edges);
  return t;
}

std::vector<TorusSubgraph> all_tori() {
  std::vector<TorusSubgraph> out;
  for (int w = 1; w <= 7; ++w)
    for (Position d : kPositions) out.push_back(torus_subgraph(Point(w), d));
  return out;
}

Closure torus_closure(Point w, Position d) {
  const TorusSubgraph t = torus_subgraph(w, d);
  std::vector<int> attached;
  for (const auto& tc : tetrahedra())
    if (tc.name.at(d) == w) attached.push_back(tetra_index(tc.name));
  Closure c = closure_of(t.body, attached, 4);
  // The two edges each tetrahedron adds carry weak colour w_d.
  const auto& cg = g_graph();
  const std::set<Edge> body(t.body.edges.begin(), t.body.edges.end());
  for (int id : attached) {
    const auto& tv = tetrahedra()[id].vertices;
    for (int x = 0; x < 4; ++x)
      for (int y = x + 1; y < 4; ++y)
        if (!body.count({tv[x], tv[y]}) && !(cg.weak(tv[x], tv[y]) == WeakColor{w, d})) {
          c.decomposes = false;
          if (c.failure.empty()) c.failure = "an added edge of " + t.label() + " does not have weak colour w_d";
        }
  }
  return c;
}

StarSubgraph star_subgraph(Line l) {
  StarSubgraph s;
  s.line = l;
  std::set<Edge> edges;
  const auto& hc = hole_census();
  for (std::size_t i = 0; i < hc.octahedral.size(); ++i) {
    if (!(hc.octahedral[i].label.line == l)) continue;
    s.holes.push_back(static_cast<int>(i));
    for (const Edge& e : cycle_edges(hc.octahedral[i].cycle)) edges.insert(e);
  }
  s.body = from_edges(edges);
  if (auto iso = find_isomorphism(st4(), s.body.graph())) {
    std::vector<int> to_g;
    for (int x : *iso) to_g.push_back(s.body.vertices[x]);
    s.iso_from_st4 = std::move(to_g);
  }
  return s;
}

Closure star_closure(Line l) {
  const StarSubgraph s = star_subgraph(l);
  std::vector<int> attached;
  for (const auto& tc : tetrahedra())
    if (tc.name.line() == l) attached.push_back(tetra_index(tc.name));
  return closure_of(s.body, attached, 0);
}

FacePairingReport face_pairing_census() {
  FacePairingReport rep;
  std::map<std::vector<int>, int> count;
  auto tri_key = [](const Triangle& t) { return std::vector<int>(t.begin(), t.end()); };
  const auto& tris = octahedral_triangles();
  const Graph& g = g_graph().graph();
  for (const auto& o : octahedra()) {
    ++rep.solids;
    for (const auto& t : tris) {
      bool inside = true;
      for (int v : t) inside = inside && std::binary_search(o.vertices.begin(), o.vertices.end(), v);
      if (inside) ++count[tri_key(t)];
    }
  }
  const auto& hc = hole_census();
  for (const auto& t : all_tori()) {
    ++rep.solids;
    for (int h : t.holes) ++count[hc.octahedral[h].cycle];
    for (const auto& tri : t.triangles) ++count[tri_key(tri)];
  }
  for (const Line& l : lines()) {
    ++rep.solids;
    for (int h : star_subgraph(l).holes) ++count[hc.octahedral[h].cycle];
  }
  rep.faces = count.size();
  for (const auto& [face, n] : count) {
    if (n == 2) {
      ++rep.paired;
      continue;
    }
    std::string name;
    for (int v : face) name += (name.empty() ? "" : ",") + g.name(v);
    rep.unpaired.push_back("(" + name + ") x" + std::to_string(n));
  }
  return rep;
}

}  // namespace fanograph
