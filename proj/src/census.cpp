#include "fanograph/census.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "fanograph/automorphism.hpp"
#include "fanograph/reference_graphs.hpp"

namespace fanograph {

namespace {

template <std::size_t N>
bool contains(const std::array<int, N>& sorted, int v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

template <std::size_t N, std::size_t M>
std::vector<int> common(const std::array<int, N>& x, const std::array<int, M>& y) {
  std::vector<int> out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

std::set<std::vector<int>> generic_census(const Graph& pattern) {
  std::set<std::vector<int>> out;
  for (const auto& c : induced_copies(g_graph().graph(), pattern)) out.insert(c.vertices);
  return out;
}

std::vector<TetraCopy> build_tetrahedra() {
  const auto& cg = g_graph();
  std::vector<TetraCopy> out;
  std::set<std::vector<int>> named;
  for (const OrderedLine& l : ordered_lines()) {
    TetraCopy t{l, {}};
    std::size_t k = 0;
    for (int v = 0; v < 42; ++v) {
      const auto& pv = pencil_of(v);
      if (l.line().contains(pv.base)) continue;
      bool in = true;
      for (Position j : kPositions)
        if (!(pv.pair(j) & l.at(j).bit())) in = false;
      if (!in) continue;
      if (k == 4) throw std::logic_error("more than 4 vertices in " + t.label());
      t.vertices[k++] = v;
    }
    if (k != 4) throw std::logic_error("fewer than 4 vertices in " + t.label());
    for (int x = 0; x < 4; ++x)
      for (int y = x + 1; y < 4; ++y)
        if (!cg.graph().adjacent(t.vertices[x], t.vertices[y]) || !(cg.strong(t.vertices[x], t.vertices[y]) == l))
          throw std::logic_error("edge of " + t.label() + " lacks strong colour " + l.to_string());
    named.insert(std::vector<int>(t.vertices.begin(), t.vertices.end()));
    out.push_back(t);
  }
  if (named != generic_census(k4())) throw std::logic_error("named tetrahedra differ from the induced K4 census");
  return out;
}

std::vector<OctaCopy> build_octahedra() {
  const auto& cg = g_graph();
  const Graph& g = cg.graph();
  std::vector<std::optional<OctaCopy>> slots(21);
  for (const auto& verts : generic_census(k222())) {
    std::set<WeakColor> colors;
    for (std::size_t x = 0; x < verts.size(); ++x)
      for (std::size_t y = x + 1; y < verts.size(); ++y)
        if (g.adjacent(verts[x], verts[y])) colors.insert(cg.weak(verts[x], verts[y]));
    if (colors.size() != 3) throw std::logic_error("octahedron with other than 3 weak colours");
    PointSet pts = 0;
    const Position j = colors.begin()->position;
    for (const auto& c : colors) {
      if (c.position != j) throw std::logic_error("octahedron weak colours at mixed positions");
      pts = static_cast<PointSet>(pts | c.point.bit());
    }
    OctaCopy o;
    o.line = Line(pts);
    o.position = j;
    std::copy(verts.begin(), verts.end(), o.vertices.begin());

    // Antipodal pairs are the non-adjacent pairs; square k avoids pair k.
    std::vector<std::array<int, 2>> anti;
    for (int x = 0; x < 6; ++x)
      for (int y = x + 1; y < 6; ++y)
        if (!g.adjacent(o.vertices[x], o.vertices[y])) anti.push_back({o.vertices[x], o.vertices[y]});
    if (anti.size() != 3) throw std::logic_error("octahedron without 3 antipodal pairs");
    for (int k = 0; k < 3; ++k) {
      const auto& s = anti[(k + 1) % 3];
      const auto& t = anti[(k + 2) % 3];
      auto cyc = canonical_cycle({s[0], t[0], s[1], t[1]});
      OctaSquare sq;
      std::copy(cyc.begin(), cyc.end(), sq.cycle.begin());
      sq.color = cg.weak(cyc[0], cyc[1]);
      for (int e = 0; e < 4; ++e)
        if (!(cg.weak(cyc[e], cyc[(e + 1) % 4]) == sq.color))
          throw std::logic_error("square of " + o.label() + " without constant weak colour");
      for (int d = 0; d < 2; ++d) {
        Point p = pencil_of(cyc[d]).base;
        if (p != pencil_of(cyc[d + 2]).base) throw std::logic_error("square diagonal joins different base points");
        sq.diagonal_points[d] = p;
      }
      o.squares[k] = sq;
    }
    std::sort(o.squares.begin(), o.squares.end(),
              [](const OctaSquare& x, const OctaSquare& y) { return x.cycle < y.cycle; });
    int idx = octa_index(o.line, o.position);
    if (slots[idx]) throw std::logic_error("two octahedra named " + o.label());
    slots[idx] = o;
  }
  std::vector<OctaCopy> out;
  for (auto& s : slots) {
    if (!s) throw std::logic_error("an octahedron name is not realized");
    out.push_back(*s);
  }
  return out;
}

std::string strip_brackets(std::string_view text, std::string_view open, std::string_view close) {
  if (text.size() < open.size() + close.size() || text.substr(0, open.size()) != open ||
      text.substr(text.size() - close.size()) != close)
    return {};
  return std::string(text.substr(open.size(), text.size() - open.size() - close.size()));
}

// The printed identification of Λ with the neighbourhood of 1^a, as vertex
// names indexed by Λ id 4*j + i.
constexpr std::array<const char*, 12> kPrintedG = {"5^c", "4^c", "5^e", "4^e", "6^d", "7^d",
                                                   "7^f", "6^f", "2^b", "2^a", "3^b", "3^a"};

}  // namespace

std::string TetraCopy::label() const { return "⟨" + name.to_string() + "⟩"; }
std::string OctaCopy::label() const { return "[" + line.to_string() + "]_" + letter(position); }

const std::vector<TetraCopy>& tetrahedra() {
  static const std::vector<TetraCopy> all = build_tetrahedra();
  return all;
}

const std::vector<OctaCopy>& octahedra() {
  static const std::vector<OctaCopy> all = build_octahedra();
  return all;
}

int tetra_index(const OrderedLine& name) { return ordered_line_id(name); }
int octa_index(Line line, Position j) { return 3 * line_index(line) + index(j); }

int parse_tetra(std::string_view text) {
  std::string body = strip_brackets(text, "⟨", "⟩");
  if (body.empty()) body = strip_brackets(text, "<", ">");
  if (body.empty()) body = std::string(text);
  try {
    return tetra_index(OrderedLine::parse(body));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed tetrahedron name: " + std::string(text));
  }
}

int parse_octa(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("malformed octahedron name: " + std::string(text)); };
  if (text.size() < 6 || text[0] != '[' || text[4] != ']') throw bad();
  std::string_view tail = text.substr(5);
  if (!tail.empty() && tail[0] == '_') tail.remove_prefix(1);
  if (tail.size() != 1) throw bad();
  try {
    return octa_index(Line::parse(text.substr(1, 3)), position_from_letter(tail[0]));
  } catch (const std::invalid_argument&) {
    throw bad();
  }
}

IncidentCopies incident_copies(int v) {
  const auto& pv = pencil_of(v);
  IncidentCopies out;
  bool first = true;
  for (int mask = 0; mask < 8; ++mask) {
    std::array<Point, 3> q, r;
    for (int j = 0; j < 3; ++j) {
      auto pts = points_of(pv.pairs[j]);
      bool swap = (mask >> j) & 1;
      q[j] = pts[swap ? 1 : 0];
      r[j] = pts[swap ? 0 : 1];
    }
    const std::array<OrderedLine, 4> names = {OrderedLine{{q[0], q[1], q[2]}}, OrderedLine{{r[0], q[1], r[2]}},
                                              OrderedLine{{q[0], r[1], r[2]}}, OrderedLine{{r[0], r[1], q[2]}}};
    bool valid = true;
    std::array<int, 4> ids{};
    for (int k = 0; k < 4 && valid; ++k) {
      PointSet s = static_cast<PointSet>(names[k].entries[0].bit() | names[k].entries[1].bit() |
                                         names[k].entries[2].bit());
      if (popcount(s) != 3 || std::find_if(lines().begin(), lines().end(),
                                           [&](const Line& l) { return l.mask() == s; }) == lines().end()) {
        valid = false;
        continue;
      }
      ids[k] = tetra_index(names[k]);
      if (!contains(tetrahedra()[ids[k]].vertices, v)) valid = false;
    }
    if (!valid) continue;
    ++out.valid_labelings;
    if (first) out.tetra = ids;
    first = false;
  }
  if (out.valid_labelings == 0) throw std::logic_error("no valid (q, r) labeling at " + short_name(v));
  for (Position j : kPositions) out.octa[index(j)] = octa_index(pv.line(j), j);

  std::vector<std::vector<int>> sets;
  for (int t : out.tetra) sets.emplace_back(tetrahedra()[t].vertices.begin(), tetrahedra()[t].vertices.end());
  for (int o : out.octa) sets.emplace_back(octahedra()[o].vertices.begin(), octahedra()[o].vertices.end());
  // Same-family copies meet pairwise in v; a tetrahedron and an octahedron
  // through v share one edge, so across families only the total meet is v.
  out.meet_only_at_v = true;
  std::vector<int> all = sets[0];
  for (std::size_t x = 0; x < sets.size(); ++x) {
    std::vector<int> acc;
    std::set_intersection(all.begin(), all.end(), sets[x].begin(), sets[x].end(), std::back_inserter(acc));
    all = std::move(acc);
    for (std::size_t y = x + 1; y < sets.size(); ++y) {
      if ((x < 4) != (y < 4)) continue;
      std::vector<int> meet;
      std::set_intersection(sets[x].begin(), sets[x].end(), sets[y].begin(), sets[y].end(), std::back_inserter(meet));
      if (meet != std::vector<int>{v}) out.meet_only_at_v = false;
    }
  }
  if (all != std::vector<int>{v}) out.meet_only_at_v = false;
  return out;
}

FastenedPair fastened_pair(int u, int v) {
  const auto& cg = g_graph();
  if (!cg.graph().adjacent(u, v)) throw std::invalid_argument("not an edge: " + short_name(u) + " " + short_name(v));
  FastenedPair fp{std::min(u, v), std::max(u, v), -1, -1};
  int octa_hits = 0, tetra_hits = 0;
  for (std::size_t o = 0; o < octahedra().size(); ++o)
    if (contains(octahedra()[o].vertices, u) && contains(octahedra()[o].vertices, v)) {
      fp.octa = static_cast<int>(o);
      ++octa_hits;
    }
  for (std::size_t t = 0; t < tetrahedra().size(); ++t)
    if (contains(tetrahedra()[t].vertices, u) && contains(tetrahedra()[t].vertices, v)) {
      fp.tetra = static_cast<int>(t);
      ++tetra_hits;
    }
  if (octa_hits != 1 || tetra_hits != 1) fp.octa = fp.tetra = -1;
  return fp;
}

FastenedCertificate fastened_certificate() {
  const auto& cg = g_graph();
  FastenedCertificate cert;
  cert.ok = true;
  auto fail = [&](const std::string& why) {
    if (cert.ok) cert.failure = why;
    cert.ok = false;
  };
  for (auto [u, v] : cg.graph().edges()) {
    FastenedPair fp = fastened_pair(u, v);
    const std::string edge = short_name(u) + short_name(v);
    cert.pairs.push_back(fp);
    if (fp.octa < 0) {
      fail("edge " + edge + " is not in exactly one octahedron and one tetrahedron");
      continue;
    }
    if (common(octahedra()[fp.octa].vertices, tetrahedra()[fp.tetra].vertices) != std::vector<int>{u, v})
      fail("copies at edge " + edge + " share more than the edge");
    const WeakColor& w = cg.weak(u, v);
    const int predicted_octa = octa_index(line_through(pencil_of(u).base, pencil_of(v).base), w.position);
    if (predicted_octa != fp.octa) fail("weak colour does not predict the octahedron at " + edge);
    if (tetra_index(cg.strong(u, v)) != fp.tetra) fail("strong colour does not predict the tetrahedron at " + edge);
  }
  return cert;
}

NeighborhoodReport neighborhood_analysis(int v) {
  const Graph& g = g_graph().graph();
  NeighborhoodReport rep;
  rep.v = v;
  rep.vertices = g.neighbors(v);
  auto fail = [&](const std::string& why) {
    rep.ok = false;
    if (rep.failure.empty()) rep.failure = why;
    return rep;
  };
  const Graph h = g.induced(rep.vertices);
  if (h.order() != 12) return fail("neighbourhood order is not 12");
  for (int x = 0; x < 12; ++x)
    if (h.degree(x) != 4) return fail("neighbourhood is not 4-regular");

  const Graph lambda = lambda_hemi();
  std::vector<int> to_local;
  if (v == 0) {
    for (const char* name : kPrintedG) {
      int gv = parse_vertex(name);
      auto it = std::find(rep.vertices.begin(), rep.vertices.end(), gv);
      if (it == rep.vertices.end()) return fail("printed identification leaves the neighbourhood");
      to_local.push_back(static_cast<int>(it - rep.vertices.begin()));
    }
    if (!is_isomorphism(lambda, h, to_local)) return fail("printed identification is not an isomorphism");
  } else {
    auto iso = find_isomorphism(lambda, h);
    if (!iso) return fail("neighbourhood is not isomorphic to the hemi-rhombicuboctahedron graph");
    to_local = *iso;
  }
  for (int x : to_local) rep.lambda_to_g.push_back(rep.vertices[x]);

  auto tri = holes(h, 3);
  auto quad = holes(h, 4);
  if (tri.size() != 4) return fail("neighbourhood does not have 4 triangles");
  std::vector<int> cover(12, 0);
  std::set<std::pair<int, int>> tri_edges;
  for (const auto& t : tri) {
    std::array<int, 3> ids{};
    for (int k = 0; k < 3; ++k) {
      ++cover[t.cycle[k]];
      ids[k] = rep.vertices[t.cycle[k]];
      tri_edges.insert(std::minmax(t.cycle[k], t.cycle[(k + 1) % 3]));
    }
    rep.triangles.push_back(ids);
  }
  if (std::any_of(cover.begin(), cover.end(), [](int c) { return c != 1; }))
    return fail("neighbourhood triangles are not disjoint");
  if (quad.size() != 9) return fail("neighbourhood does not have 9 four-holes");

  std::set<std::pair<int, int>> type2_edges;
  for (const auto& q : quad) {
    std::array<bool, 4> side{};
    for (int k = 0; k < 4; ++k) side[k] = tri_edges.count(std::minmax(q.cycle[k], q.cycle[(k + 1) % 4])) > 0;
    std::array<int, 4> ids{};
    for (int k = 0; k < 4; ++k) ids[k] = rep.vertices[q.cycle[k]];
    const int hits = side[0] + side[1] + side[2] + side[3];
    if (hits == 2 && side[0] == side[2]) {
      rep.four_holes_type1.push_back(ids);
    } else if (hits == 0) {
      rep.four_holes_type2.push_back(ids);
      for (int k = 0; k < 4; ++k) type2_edges.insert(std::minmax(q.cycle[k], q.cycle[(k + 1) % 4]));
    } else {
      return fail("a four-hole meets the triangles in neither of the two ways");
    }
  }
  if (rep.four_holes_type1.size() != 6 || rep.four_holes_type2.size() != 3)
    return fail("four-holes do not split 6 + 3");
  std::size_t overlap = 0;
  for (const auto& e : type2_edges) overlap += tri_edges.count(e);
  if (overlap != 0 || type2_edges.size() + tri_edges.size() != h.edge_count() || type2_edges.size() != 12)
    return fail("triangles and type-2 four-holes do not decompose the edges");

  // f(j_i) = i, pushed forward along the identification.
  rep.to_k4.assign(12, -1);
  for (int x = 0; x < 12; ++x) rep.to_k4[to_local[x]] = x % 4;
  std::array<int, 4> fiber{};
  for (int c : rep.to_k4) ++fiber[c];
  for (int c : fiber)
    if (c != 3) return fail("homomorphism fibers are not of size 3");
  for (auto [a, b] : h.edges())
    if (rep.to_k4[a] == rep.to_k4[b]) return fail("map onto K4 is not a homomorphism");
  rep.ok = true;
  return rep;
}

std::array<OrderedLine, 4> pasch_of_vertex(int v) {
  auto inc = incident_copies(v);
  std::array<OrderedLine, 4> out;
  for (int k = 0; k < 4; ++k) out[k] = tetrahedra()[inc.tetra[k]].name;
  return out;
}

}  // namespace fanograph
