#include "fanograph/report.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fanograph/automorphism.hpp"
#include "fanograph/census.hpp"
#include "fanograph/g_graph.hpp"
#include "fanograph/generalized.hpp"
#include "fanograph/holes_tori.hpp"
#include "fanograph/incidence.hpp"
#include "fanograph/reference_graphs.hpp"
#include "fanograph/symmetry.hpp"

namespace fanograph {

namespace {

using json = nlohmann::ordered_json;

template <class Range, class F>
std::string join(const Range& r, F f, const char* sep = " ") {
  std::string out;
  for (const auto& x : r) {
    if (!out.empty()) out += sep;
    out += f(x);
  }
  return out;
}

std::string names(const std::vector<int>& vs) {
  return join(vs, [](int v) { return short_name(v); });
}

std::string triangle_text(const Triangle& t) {
  return "(" + join(t, [](int v) { return short_name(v); }, ",") + ")";
}

std::string yes(bool b) { return b ? "true" : "false"; }

std::string ints(const std::vector<int>& v) {
  return "(" + join(v, [](int x) { return std::to_string(x); }, ",") + ")";
}

class Builder {
 public:
  VerificationReport report;
  int criterion = 0;

  void check(std::string id, std::string desc, std::string claim, std::string computed, bool ok) {
    report.checks.push_back({criterion, std::move(id), std::move(desc), std::move(claim), std::move(computed),
                             ok ? Verdict::pass : Verdict::fail});
  }
  void equal(std::string id, std::string desc, const std::string& claim, const std::string& computed) {
    check(std::move(id), std::move(desc), claim, computed, claim == computed);
  }
  // Printed value differs from the computation because of a misprint; the
  // computed value stands.
  void noted(std::string id, std::string desc, const std::string& claim, const std::string& computed) {
    report.checks.push_back({criterion, std::move(id), std::move(desc), claim, computed,
                             claim == computed ? Verdict::pass : Verdict::discrepancy_noted});
  }
};

json summary_json(const GraphSummary& s) {
  json j;
  j["order"] = s.order;
  j["edges"] = s.edges;
  j["degree"] = s.degree ? json(*s.degree) : json(nullptr);
  j["diameter"] = s.diameter ? json(*s.diameter) : json(nullptr);
  j["girth"] = s.girth ? json(*s.girth) : json(nullptr);
  j["aut_order"] = s.aut_order;
  j["vertex_orbits"] = s.vertex_orbits;
  j["edge_orbits"] = s.edge_orbits;
  j["arc_orbits"] = s.arc_orbits;
  j["two_arc_orbits"] = s.two_arc_orbits;
  auto& d = j["distance_distributions"] = json::array();
  for (const auto& [dist, n] : s.distributions) d.push_back({{"vector", dist}, {"vertices", n}});
  j["vertex_transitive"] = vertex_transitive(s);
  j["arc_transitive"] = arc_transitive(s);
  j["two_arc_transitive"] = two_arc_transitive(s);
  j["semisymmetric"] = semisymmetric(s);
  return j;
}

std::string distributions_text(const GraphSummary& s) {
  return join(s.distributions, [](const auto& e) { return ints(e.first); }, " / ");
}

std::vector<std::string> path_names(const Graph& g, const std::vector<int>& path) {
  std::vector<std::string> out;
  for (int v : path) out.push_back(g.name(v));
  return out;
}

std::string path_text(const Graph& g, const std::vector<int>& path) {
  return "(" + join(path_names(g, path), [](const std::string& s) { return s; }, ",") + ")";
}

void graph_checks(Builder& b) {
  b.criterion = 1;
  const Graph& g = g_graph().graph();
  b.equal("g.order", "vertices of G", "42", std::to_string(g.order()));
  b.equal("g.edges", "edges of G", "252", std::to_string(g.edge_count()));
  std::set<int> degs;
  for (int v = 0; v < g.order(); ++v) degs.insert(g.degree(v));
  b.equal("g.degree", "G is regular of this degree", "12", join(degs, [](int d) { return std::to_string(d); }));
  b.equal("g.connected", "G is connected", "true", yes(is_connected(g)));
  b.equal("g.diameter", "diameter of G", "3", std::to_string(diameter(g).value_or(-1)));
  b.equal("g.girth", "girth of G", "3", std::to_string(girth(g).value_or(-1)));
  const int one_a = parse_vertex("1^a"), one_d = parse_vertex("1^d");
  b.equal("g.dist_1a_1d", "distance from 1^a to 1^d", "3", std::to_string(distances_from(g, one_a)[one_d]));
  b.equal("g.diameter_witness", "lexicographically smallest diametral geodesic", "1^a 2^a 4^a 1^d",
          names(diameter_witness()));

  b.criterion = 2;
  const auto nbrs = g.neighbors(one_a);
  std::vector<int> sorted_nbrs(nbrs.begin(), nbrs.end());
  std::sort(sorted_nbrs.begin(), sorted_nbrs.end());
  b.equal("g.neighbors_1a", "neighbours of 1^a", "2^a 2^b 3^a 3^b 4^c 4^e 5^c 5^e 6^d 6^f 7^d 7^f",
          names(sorted_nbrs));
  b.equal("g.neighbors_1a_long", "neighbours of 1^a as ordered pencils",
          "(2,13,46,57) (2,13,57,46) (3,12,47,56) (3,12,56,47) (4,26,15,37) (4,37,15,26) (5,27,14,36) "
          "(5,36,14,27) (6,24,35,17) (6,35,24,17) (7,25,34,16) (7,34,25,16)",
          join(sorted_nbrs, [](int v) { return pencil_of(v).long_name(); }));
  b.equal("g.weak_colors_1a", "weak colours of the edges at 1^a, in neighbour order",
          "3_a 3_a 2_a 2_a 5_b 5_b 4_b 4_b 7_c 7_c 6_c 6_c",
          join(sorted_nbrs, [&](int v) { return g_graph().weak(one_a, v).label(); }));
  b.noted("g.strong_colors_1a", "strong colours of the edges at 1^a, in neighbour order",
          "167 154 176 154 356 246 347 451 321 231 321",
          join(sorted_nbrs, [&](int v) { return g_graph().strong(one_a, v).to_string(); }));
  const auto dual = build_g_dual();
  b.check("g.dual_presentation", "ordered-line presentation is isomorphic to G via Phi", "true",
          yes(is_isomorphism(dual.graph, g, dual.to_g)), is_isomorphism(dual.graph, g, dual.to_g));

  b.criterion = 8;
  const auto q = quotient_unordered();
  b.check("quotient.2k7", "quotient onto unordered pencils is 2K7", "true", yes(q.isomorphic_to_2k7),
          q.isomorphic_to_2k7);
  b.check("quotient.fibers", "every fibre has 6 vertices", "true", yes(q.fibers_have_size_6), q.fibers_have_size_6);
  b.check("quotient.local_bijection", "12 edges at each vertex onto 12 edge-ends at its image", "true",
          yes(q.local_bijection), q.local_bijection);
}

void census_checks(Builder& b) {
  b.criterion = 3;
  const Graph& g = g_graph().graph();
  const auto h4 = h_n_m_certify(g, k4());
  const auto h6 = h_n_m_certify(g, k222());
  b.equal("census.k4", "induced K4 copies and copies per vertex", "42 4",
          std::to_string(h4.n) + " " + std::to_string(h4.m));
  b.equal("census.k222", "induced K222 copies and copies per vertex", "21 3",
          std::to_string(h6.n) + " " + std::to_string(h6.m));
  b.check("census.k4_partition", "K4 copies partition the edges and meet in at most one vertex", "true",
          yes(h4.ok()), h4.ok());
  b.check("census.k222_partition", "K222 copies partition the edges and meet in at most one vertex", "true",
          yes(h6.ok()), h6.ok());
  const auto fc = fastened_certificate();
  b.check("census.fastened", "each edge in one K4 and one K222 meeting only there, predicted by its colours",
          "252 edges", fc.ok ? "252 edges" : fc.failure, fc.ok);
  const auto fp = fastened_pair(parse_vertex("7^f"), parse_vertex("5^a"));
  b.equal("census.fastened_7f_5a", "copies through the edge 7^f 5^a", "[257]_b ⟨426⟩",
          octahedra()[fp.octa].label() + " " + tetrahedra()[fp.tetra].label());
  const auto ic = incident_copies(parse_vertex("7^f"));
  std::vector<std::string> labels;
  for (int t : ic.tetra) labels.push_back(tetrahedra()[t].label());
  for (int o : ic.octa) labels.push_back(octahedra()[o].label());
  b.equal("census.copies_at_7f", "copies through 7^f", "⟨321⟩ ⟨426⟩ ⟨356⟩ ⟨451⟩ [347]_a [257]_b [167]_c",
          join(labels, [](const std::string& s) { return s; }));
  bool meet = true;
  for (int v = 0; v < 42; ++v) meet = meet && incident_copies(v).meet_only_at_v;
  b.check("census.copies_meet_at_v", "the 7 copies at each vertex intersect in that vertex only", "true",
          yes(meet), meet);

  b.criterion = 0;
  const auto ic1 = incident_copies(parse_vertex("1^a"));
  std::vector<std::string> weak_sets;
  for (int o : ic1.octa) {
    std::set<WeakColor> colors;
    const auto& oc = octahedra()[o];
    for (int x : oc.vertices)
      for (int y : oc.vertices)
        if (x < y && g.adjacent(x, y)) colors.insert(g_graph().weak(x, y));
    weak_sets.push_back("{" + join(colors, [](const WeakColor& c) { return c.label(); }, ",") + "}");
  }
  b.equal("census.k222_weak_colors_1a", "weak colours of the K222 copies at 1^a", "{1_a,2_a,3_a} {1_b,4_b,5_b} {1_c,6_c,7_c}",
          join(weak_sets, [](const std::string& s) { return s; }));
  std::vector<std::string> pasch_names;
  for (const auto& l : pasch_of_vertex(parse_vertex("7^f"))) pasch_names.push_back(l.to_string());
  b.equal("census.ordered_pasch_7f", "ordered Pasch configuration of 7^f", "321 426 356 451",
          join(pasch_names, [](const std::string& s) { return s; }));
  const auto pc4 = pasch(Point(4));
  b.noted("fano.pasch_4", "lines avoiding the point 4", "123 167 257 357",
          join(pc4.lines, [](const Line& l) { return l.to_string(); }));
}

// Lambda names j_i, ids 4j + i.
int lambda_id(const std::string& s) { return 4 * (s[0] - 'a') + (s[1] - '0'); }

Permutation lambda_perm(const std::vector<std::string>& cycles) {
  std::vector<int> img(12);
  for (int i = 0; i < 12; ++i) img[i] = i;
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); k += 2) {
      const std::size_t next = (k + 2) % c.size();
      img[lambda_id(c.substr(k, 2))] = lambda_id(c.substr(next, 2));
    }
  return Permutation(img);
}

void neighborhood_checks(Builder& b) {
  b.criterion = 4;
  bool all_ok = true;
  std::string first_failure;
  for (int v = 0; v < 42; ++v) {
    const auto r = neighborhood_analysis(v);
    if (!r.ok && all_ok) first_failure = short_name(v) + ": " + r.failure;
    all_ok = all_ok && r.ok && r.triangles.size() == 4 && r.four_holes_type1.size() == 6 &&
             r.four_holes_type2.size() == 3;
  }
  b.check("nbhd.lambda", "every open neighbourhood is Lambda with 4 triangles and 6 + 3 four-holes", "42",
          all_ok ? "42" : first_failure, all_ok);
  const Graph lambda = lambda_hemi();
  b.equal("nbhd.lambda_shape", "Lambda order and degree", "12 4",
          std::to_string(lambda.order()) + " " + std::to_string(lambda.degree(0)));
  const auto aut = automorphism_group(lambda);
  b.equal("nbhd.lambda_aut", "automorphism group order of Lambda", "24", std::to_string(aut.order));
  const auto r1 = neighborhood_analysis(parse_vertex("1^a"));
  b.equal("nbhd.g_table_1a", "identification of Lambda with N(1^a)",
          "5^c 4^c 5^e 4^e 6^d 7^d 7^f 6^f 2^b 2^a 3^b 3^a", names(r1.lambda_to_g));

  // The printed generators of Aut(Lambda) and their images in S4 under f.
  const std::vector<std::pair<std::vector<std::string>, std::vector<int>>> fstar = {
      {{"a1b2c3", "b1c2a3", "c1a2b3", "a0b0c0"}, {0, 2, 3, 1}},
      {{"a0a1", "a2a3", "b0b1", "b2b3", "c0c1", "c2c3"}, {1, 0, 3, 2}},
      {{"a0a1a2a3", "c0b1c2b3", "b0c1b2c3"}, {1, 2, 3, 0}},
  };
  bool fstar_ok = true;
  std::vector<Permutation> gens;
  for (const auto& [cycles, image] : fstar) {
    const auto p = lambda_perm(cycles);
    gens.push_back(p);
    fstar_ok = fstar_ok && is_automorphism(lambda, p);
    for (int v = 0; v < 12; ++v) fstar_ok = fstar_ok && p(v) % 4 == image[v % 4];
  }
  const auto closure = group_closure(gens, 12);
  fstar_ok = fstar_ok && closure == aut.elements;
  b.check("nbhd.f_star", "printed generators of Aut(Lambda) map onto (123), (01)(23), (0123) and generate it",
          "true", yes(fstar_ok), fstar_ok);

  b.criterion = 0;
  // Printed triangles of N(1^a) and the tetrahedra containing them.
  const std::vector<std::string> printed = {"c1a2b2", "c3a0b1", "c2a1b0", "c0a3b2"};
  std::vector<std::string> found;
  for (const auto& t : printed) {
    std::vector<int> vs;
    for (std::size_t k = 0; k < t.size(); k += 2) vs.push_back(r1.lambda_to_g[lambda_id(t.substr(k, 2))]);
    std::sort(vs.begin(), vs.end());
    std::string hit = "none";
    for (const auto& tc : tetrahedra())
      if (std::includes(tc.vertices.begin(), tc.vertices.end(), vs.begin(), vs.end())) hit = tc.label();
    found.push_back(hit);
  }
  b.noted("nbhd.triangles_in_tetrahedra", "tetrahedra holding the printed triangles g(c1,a2,b2), g(c3,a0,b1), "
          "g(c2,a1,b0), g(c0,a3,b2)", "⟨347⟩ ⟨246⟩ ⟨257⟩ ⟨356⟩", join(found, [](const std::string& s) { return s; }));
  std::vector<int> fixed{r1.lambda_to_g[lambda_id("c1")], r1.lambda_to_g[lambda_id("a2")],
                         r1.lambda_to_g[lambda_id("b3")]};
  std::sort(fixed.begin(), fixed.end());
  const auto& t347 = tetrahedra()[tetra_index(OrderedLine::parse("347"))];
  b.check("nbhd.triangle_c1a2b3", "g(c1,a2,b3), the triangle meant by g(c1,a2,b2), lies in ⟨347⟩", "true",
          yes(std::includes(t347.vertices.begin(), t347.vertices.end(), fixed.begin(), fixed.end())),
          std::includes(t347.vertices.begin(), t347.vertices.end(), fixed.begin(), fixed.end()));
}

void symmetry_checks(Builder& b) {
  b.criterion = 5;
  const auto rep = group_report();
  b.equal("sym.search_order", "automorphism group order by independent search", "1008",
          std::to_string(rep.search_order));
  b.check("sym.closure", "the 16 printed generators generate the whole group", "1008",
          std::to_string(rep.closure_order), rep.closure_equals_search && rep.closure_order == 1008);
  b.check("sym.decompose", "every automorphism is a collineation with a position permutation", "true",
          yes(rep.all_decompose && rep.action_is_homomorphism), rep.all_decompose && rep.action_is_homomorphism);
  const auto grp = automorphism_table().permutations();
  const int one_a = parse_vertex("1^a"), two_a = parse_vertex("2^a");
  const auto stab = setwise_stabilizer(grp, {one_a});
  b.equal("sym.vertex_stabilizer", "stabilizer of 1^a", "24", std::to_string(stab.size()));
  const auto gamma = setwise_stabilizer(grp, {one_a, two_a});
  b.equal("sym.edge_stabilizer", "setwise stabilizer of the edge 1^a 2^a", "4", std::to_string(gamma.size()));
  const bool gamma_gen = generates({tau_product({6, 16}), tau_product({5})}, gamma);
  b.check("sym.edge_stabilizer_generators", "tau6 tau16 and tau5 generate that stabilizer", "true", yes(gamma_gen),
          gamma_gen);
  b.equal("sym.order_vs_edges", "group order over edge count", "4",
          std::to_string(grp.size() / g_graph().graph().edge_count()));
  const auto ec = edge_cosets(one_a, two_a);
  const auto vc = vertex_cosets(one_a);
  b.check("sym.cosets", "edges and vertices correspond to cosets of the two stabilizers", "252 42",
          std::to_string(ec.coset_count) + " " + std::to_string(vc.coset_count),
          ec.bijective && vc.bijective && ec.coset_count == 252 && vc.coset_count == 42);

  b.criterion = 0;
  const std::vector<Permutation> printed_stab = {tau_product({1}),         tau_product({2}),
                                                 tau_product({4, 16}),     tau_product({6, 16}),
                                                 tau_product({8, 15}),     tau_product({10, 15}),
                                                 tau_product({12, 15, 16}), tau_product({14, 15, 16})};
  int moving = 0;
  for (const auto& p : printed_stab) moving += p(one_a) != one_a;
  const auto closure = group_closure(printed_stab, 42);
  b.noted("sym.printed_vertex_stabilizer", "printed generators of the stabilizer of 1^a: order of their closure, "
          "generators moving 1^a", "24, 0", std::to_string(closure.size()) + ", " + std::to_string(moving));
  const auto& oc = octahedra()[octa_index(Line::parse("123"), Position::a)];
  const auto ostab = setwise_stabilizer(grp, std::vector<int>(oc.vertices.begin(), oc.vertices.end()));
  const bool ogen = generates({tau_product({1}), tau_product({2}), tau_product({5}), tau_product({6}),
                               tau_product({16})}, ostab);
  b.check("sym.octahedron_stabilizer", "stabilizer of [123]_a, generated by tau1, tau2, tau5, tau6, tau16", "48 true",
          std::to_string(ostab.size()) + " " + yes(ogen), ostab.size() == 48 && ogen);

  b.criterion = 6;
  const Graph& g = g_graph().graph();
  const auto u4 = uh_certify(g, k4(), "K4", grp);
  b.check("uh.k4", "every isomorphism between K4 copies extends to G", "42336",
          std::to_string(u4.isomorphisms_checked), u4.passed && u4.isomorphisms_checked == 42336);
  const auto u6 = uh_certify(g, k222(), "K222", grp);
  b.check("uh.k222", "every isomorphism between K222 copies extends to G", "21168",
          std::to_string(u6.isomorphisms_checked), u6.passed && u6.isomorphisms_checked == 21168);
  std::vector<Permutation> phis;
  for (int i = 1; i <= 14; ++i) phis.push_back(tau_product({i}));
  const auto sub = group_closure(phis, 42);
  const auto neg = uh_certify(g, k4(), "K4", sub);
  b.check("uh.negative_control", "without the position generators the K4 certificate finds a counterexample",
          "counterexample", neg.counterexample ? "counterexample (subgroup order " + std::to_string(sub.size()) + ")" : "none",
          !neg.passed && neg.counterexample.has_value() && sub.size() < grp.size());

  b.criterion = 0;
  const auto cs = cayley_search(grp, 100000);
  b.check("sym.cayley", "a regular subgroup of order 42 exists (open question)", "undecided",
          cs.witness.empty() ? "no witness within budget" : "regular subgroup of order 42 found",
          !cs.witness.empty());
}

void reference_checks(Builder& b) {
  b.criterion = 7;
  for (int d : {3, 4}) {
    const Graph lq = line_graph_of_cube(d);
    const auto grp = automorphism_group(lq).elements;
    const auto hk = h_n_m_certify(lq, complete_graph(d));
    const auto hs = h_n_m_certify(lq, k22());
    const std::string tag = "ref.lq" + std::to_string(d);
    b.check(tag + "_kd", "copies of K_d and per-vertex count in the line graph of the d-cube",
            std::to_string(1 << d) + " 2", std::to_string(hk.n) + " " + std::to_string(hk.m),
            hk.ok() && hk.n == (1 << d) && hk.m == 2);
    const int squares = d * (d - 1) * (1 << (d - 3));
    b.check(tag + "_k22", "copies of K22 and per-vertex count in the line graph of the d-cube",
            std::to_string(squares) + " " + std::to_string(d - 1), std::to_string(hs.n) + " " + std::to_string(hs.m),
            hs.ok() && hs.n == squares && hs.m == d - 1);
    const auto uk = uh_certify(lq, complete_graph(d), "K_d", grp);
    const auto us = uh_certify(lq, k22(), "K22", grp);
    b.check(tag + "_uh", "K_d- and K22-ultrahomogeneous", "true", yes(uk.passed && us.passed), uk.passed && us.passed);
    const auto lgr = line_graphical_report({{hk, true}, {hs, false}});
    b.check(tag + "_line_graphical", "line-graphical", "true", yes(lgr.line_graphical), lgr.line_graphical);
  }
  const Graph co = cuboctahedron();
  const auto co_aut = automorphism_group(co).elements;
  const auto hc = h_n_m_certify(co, cycle_graph(6));
  const auto uc = uh_certify(co, cycle_graph(6), "C6", co_aut);
  b.check("ref.cuboctahedron_c6", "induced C6 copies, per-vertex count and C6-ultrahomogeneity", "4 2 true",
          std::to_string(hc.n) + " " + std::to_string(hc.m) + " " + yes(uc.passed),
          hc.n == 4 && hc.m == 2 && hc.ok() && uc.passed);

  b.criterion = 0;
  // The great hexagons: the orbit of induced C6 copies that partitions the edges.
  std::set<std::vector<int>> all_c6;
  for (const auto& cp : induced_copies(co, cycle_graph(6))) {
    auto vs = cp.vertices;
    std::sort(vs.begin(), vs.end());
    all_c6.insert(vs);
  }
  std::vector<std::vector<int>> family;
  for (const auto& start : all_c6) {
    std::set<std::vector<int>> orbit;
    for (const auto& p : co_aut) {
      std::vector<int> img;
      for (int v : start) img.push_back(p(v));
      std::sort(img.begin(), img.end());
      orbit.insert(img);
    }
    std::size_t covered = 0;
    for (const auto& o : orbit) covered += co.induced(o).edge_count();
    if (covered == co.edge_count() && orbit.size() * 6 == co.edge_count()) {
      family.assign(orbit.begin(), orbit.end());
      break;
    }
  }
  bool family_ok = family.size() == 4;
  std::vector<int> per_vertex(co.order(), 0);
  for (const auto& f : family)
    for (int v : f) ++per_vertex[v];
  family_ok = family_ok && std::all_of(per_vertex.begin(), per_vertex.end(), [](int m) { return m == 2; });
  // Each of the 12 isomorphisms between two hexagons extends.
  for (const auto& x : family)
    for (const auto& y : family) {
      std::set<std::vector<int>> maps;
      for (const auto& p : co_aut) {
        std::vector<int> img;
        for (int v : x) img.push_back(p(v));
        auto sorted = img;
        std::sort(sorted.begin(), sorted.end());
        if (sorted == y) maps.insert(img);
      }
      family_ok = family_ok && maps.size() == 12;
    }
  b.check("ref.cuboctahedron_great_hexagons", "the 4 great hexagons: edge partition, 2 per vertex, "
          "every isomorphism between them extends", "4 2 true",
          std::to_string(family.size()) + " 2 " + yes(family_ok), family_ok);
  b.criterion = 7;
  const auto g4 = h_n_m_certify(g_graph().graph(), k4());
  const auto g6 = h_n_m_certify(g_graph().graph(), k222());
  const auto glr = line_graphical_report({{g4, true}, {g6, false}});
  b.check("ref.g_not_line_graphical", "G is not line-graphical (smallest per-vertex count 3)", "false 3",
          yes(glr.line_graphical) + " " + std::to_string(glr.min_m), !glr.line_graphical && glr.min_m == 3);
}

void configuration_checks(Builder& b) {
  b.criterion = 9;
  std::vector<Permutation> g_gens;
  for (const auto& gen : printed_generators()) g_gens.push_back(gen.element.perm);

  auto record = [&](const Configuration& c, const std::vector<std::pair<std::string, const GraphSummary*>>& graphs,
                    json extra) {
    json j;
    j["name"] = c.name;
    j["points"] = c.points.size();
    j["blocks"] = c.blocks.size();
    j["flags"] = c.flags.size();
    j["point_degree"] = c.point_degree() ? json(*c.point_degree()) : json(nullptr);
    j["block_degree"] = c.block_degree() ? json(*c.block_degree()) : json(nullptr);
    for (const auto& [name, s] : graphs) j[name] = summary_json(*s);
    for (auto& [k, v] : extra.items()) j[k] = v;
    b.report.configurations.push_back({c.name, j.dump()});
  };

  {
    const auto c = config_42_4();
    const Graph levi = levi_graph(c);
    const auto ls = summarize(levi);
    const auto ms = summarize(menger_graph(c));
    const auto ds = summarize(dual_menger_graph(c));
    b.equal("config.42_4.levi", "Levi graph: order, degree, diameter, girth", "84 4 6 6",
            std::to_string(ls.order) + " " + std::to_string(ls.degree.value_or(-1)) + " " +
                std::to_string(ls.diameter.value_or(-1)) + " " + std::to_string(ls.girth.value_or(-1)));
    b.equal("config.42_4.distribution", "Levi distance distribution at every vertex", "(1,4,12,24,27,14,2)",
            distributions_text(ls));
    b.check("config.42_4.two_arc_transitive", "Levi graph is 2-arc-transitive", "true",
            yes(two_arc_transitive(ls)), two_arc_transitive(ls));
    b.check("config.42_4.levi_aut", "Levi automorphism group order (printed as 1008 and as 2016)", "1008 / 2016",
            std::to_string(ls.aut_order), ls.aut_order == 2016 && ls.aut_order % c.flags.size() == 0);
    const bool menger_g = find_isomorphism(menger_graph(c), g_graph().graph()).has_value();
    b.check("config.42_4.menger", "Menger graph is isomorphic to G, with automorphism group order 1008",
            "true 1008", yes(menger_g) + " " + std::to_string(ms.aut_order), menger_g && ms.aut_order == 1008);
    const bool dual_iso = find_isomorphism(dual_menger_graph(c), menger_graph(c)).has_value();
    b.check("config.42_4.dual_menger", "dual Menger graph is isomorphic to the Menger graph, arc-transitive",
            "true true", yes(dual_iso) + " " + yes(arc_transitive(ds)), dual_iso && arc_transitive(ds));
    const bool phi_dual = verify_duality(c, phi_duality_42_4());
    const bool self_dual = self_duality(c).has_value();
    b.check("config.42_4.self_dual", "self-dual, with the duality induced by Phi", "true", yes(phi_dual && self_dual),
            phi_dual && self_dual);

    const int one_a = parse_vertex("1^a");
    const int t123 = 42 + tetra_index(OrderedLine::parse("123"));
    const auto from_v = smallest_diameter_paths(levi, one_a);
    const auto from_t = smallest_diameter_paths(levi, t123);
    const std::string p1 = "((1,23,45,67),⟨246⟩,(3,12,47,56),⟨145⟩,(6,17,24,35),⟨725⟩,(1,67,23,45))";
    const std::string p2 = "((1,23,45,67),⟨246⟩,(3,12,47,56),⟨176⟩,(4,15,37,26),⟨572⟩,(1,45,67,23))";
    // The printed path carries (5,36,15,27), which is not an ordered pencil.
    const std::string q1 = "(⟨123⟩,(4,15,26,37),⟨167⟩,(2,13,46,57),⟨347⟩,(5,36,14,27),⟨312⟩)";
    const std::string q2 = "(⟨123⟩,(4,15,26,37),⟨167⟩,(3,12,56,47),⟨264⟩,(5,27,36,14),⟨231⟩)";
    const std::string got_v = join(from_v, [&](const auto& p) { return path_text(levi, p); });
    b.equal("config.42_4.paths_from_vertex", "lexicographically smallest diametral paths from (1,23,45,67)",
            p1 + " " + p2, got_v);
    b.equal("config.42_4.path_from_tetrahedron", "lexicographically smallest diametral path from ⟨123⟩ "
            "(printed token (5,36,15,27) read as (5,36,14,27))", q1,
            from_t.empty() ? "" : path_text(levi, from_t.front()));
    // Phi image of the second path from (1,23,45,67).
    const auto duality = phi_duality_42_4();
    std::vector<int> image;
    for (int x : from_v.size() > 1 ? from_v[1] : std::vector<int>{})
      image.push_back(x < 42 ? 42 + duality.point_to_block[x] : duality.block_to_point[x - 42]);
    b.equal("config.42_4.phi_paths", "Phi carries the second path from (1,23,45,67) onto the printed second path "
            "from ⟨123⟩", q2, path_text(levi, image));
    b.noted("config.42_4.second_path_from_tetrahedron", "second lexicographically smallest diametral path from ⟨123⟩",
            q2, from_t.size() > 1 ? path_text(levi, from_t[1]) : "");
    record(c, {{"levi", &ls}, {"menger", &ms}, {"dual_menger", &ds}},
           json{{"self_dual", self_dual}, {"flag_transitive", flag_transitive(c)},
                {"diametral_paths_from_vertex", [&] {
                   json a = json::array();
                   for (const auto& p : from_v) a.push_back(path_names(levi, p));
                   return a;
                 }()}});
  }
  {
    const auto c = config_168_6();
    const auto ls = summarize(levi_graph(c));
    const auto ms = summarize(menger_graph(c));
    const auto ds = summarize(dual_menger_graph(c));
    b.equal("config.168_6.levi", "Levi graph: order, degree, diameter", "336 6 6",
            std::to_string(ls.order) + " " + std::to_string(ls.degree.value_or(-1)) + " " +
                std::to_string(ls.diameter.value_or(-1)));
    b.equal("config.168_6.levi_girth", "Levi graph girth", "6", std::to_string(ls.girth.value_or(-1)));
    b.equal("config.168_6.distributions", "Levi distance distributions, one per part",
            "(1,6,24,60,108,102,35) / (1,6,24,60,111,102,32)", distributions_text(ls));
    b.check("config.168_6.semisymmetric", "Levi graph is semisymmetric with automorphism group order 1008",
            "true 1008", yes(semisymmetric(ls)) + " " + std::to_string(ls.aut_order),
            semisymmetric(ls) && ls.aut_order == 1008);
    b.equal("config.168_6.menger", "Menger graphs: degree, diameter, girth, automorphism order",
            "24 3 3 1008 / 24 3 3 2016",
            std::to_string(ms.degree.value_or(-1)) + " " + std::to_string(ms.diameter.value_or(-1)) + " " +
                std::to_string(ms.girth.value_or(-1)) + " " + std::to_string(ms.aut_order) + " / " +
                std::to_string(ds.degree.value_or(-1)) + " " + std::to_string(ds.diameter.value_or(-1)) + " " +
                std::to_string(ds.girth.value_or(-1)) + " " + std::to_string(ds.aut_order));
    b.check("config.168_6.menger_vertex_transitive", "both Menger graphs are vertex-transitive", "true",
            yes(vertex_transitive(ms) && vertex_transitive(ds)), vertex_transitive(ms) && vertex_transitive(ds));
    const bool sd = self_duality(c).has_value();
    b.criterion = 0;
    b.noted("config.168_6.self_dual", "self-dual (a semisymmetric Levi graph with distinct part distributions "
            "admits no part swap)", "true", yes(sd));
    b.criterion = 9;
    record(c, {{"levi", &ls}, {"menger", &ms}, {"dual_menger", &ds}},
           json{{"self_dual", sd}, {"flag_transitive", flag_transitive(c)}});
  }
  {
    const auto c = config_tetra_octa();
    const bool ft = flag_transitive(c) && flag_transitive_under(c, g_gens);
    b.check("config.42_6_21_12", "tetrahedra and octahedra sharing an edge: flags, degrees, flag-transitive",
            "252 6 12 true",
            std::to_string(c.flags.size()) + " " + std::to_string(c.point_degree().value_or(-1)) + " " +
                std::to_string(c.block_degree().value_or(-1)) + " " + yes(ft),
            c.flags.size() == 252 && c.point_degree() == 6 && c.block_degree() == 12 && ft);
    record(c, {}, json{{"flag_transitive", ft}});
  }
  b.criterion = 10;
  for (const auto& [c, claim] : {std::pair{config_tetra_torus(), std::string("3 6 true")},
                                 std::pair{config_torus_star(), std::string("4 12 true")}}) {
    const bool ft = flag_transitive(c) && flag_transitive_under(c, g_gens);
    b.equal("config." + c.name, c.name + " configuration: degrees, flag-transitive", claim,
            std::to_string(c.point_degree().value_or(-1)) + " " + std::to_string(c.block_degree().value_or(-1)) +
                " " + yes(ft));
    record(c, {}, json{{"flag_transitive", ft}});
  }
}

std::vector<std::string> weak_cycle(const std::vector<int>& cycle) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    out.push_back(g_graph().weak(cycle[i], cycle[(i + 1) % cycle.size()]).label());
  return out;
}

bool same_up_to_dihedral(std::vector<std::string> a, const std::vector<std::string>& b) {
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (a == b) return true;
      std::rotate(a.begin(), a.begin() + 1, a.end());
    }
    std::reverse(a.begin(), a.end());
  }
  return false;
}

void hole_checks(Builder& b) {
  b.criterion = 10;
  const auto& hc = hole_census();
  b.equal("holes.five_hole_count", "chordless 5-cycles of G", "0", std::to_string(hc.five_holes));
  b.equal("holes.six_hole_count", "six_hole_count = 84: chordless 6-cycles of G", "84", std::to_string(hc.six_holes));
  b.check("holes.octahedral_six_holes", "6-holes flanked by octahedral triangles with a common centre, "
          "labeled xyz_d^w bijectively", "84", std::to_string(hc.octahedral.size()),
          hc.octahedral.size() == 84 && hc.bijective);
  const auto& h = hc.octahedral[hole_index(parse_hole_label("123_c^5"))];
  const bool cyc = same_up_to_dihedral(weak_cycle(h.cycle), {"2_a", "3_b", "1_a", "2_b", "3_a", "1_b"});
  b.check("holes.123_c5_colors", "weak colours around 123_c^5", "(2_a 3_b 1_a 2_b 3_a 1_b)",
          "(" + join(weak_cycle(h.cycle), [](const std::string& s) { return s; }) + ")", cyc);

  const auto t = torus_subgraph(Point(5), Position::c);
  std::vector<std::string> hole_labels;
  for (int i : t.holes) hole_labels.push_back(hc.octahedral[i].label.to_string());
  std::sort(hole_labels.begin(), hole_labels.end());
  b.equal("tori.5c_holes", "6-holes of [5]_c", "123_c^5 167_c^5 246_c^5 347_c^5",
          join(hole_labels, [](const std::string& s) { return s; }));
  std::set<std::string> tris;
  for (const auto& tr : t.triangles) tris.insert(triangle_text(tr));
  const bool extra = tris.count("(1^b,2^a,3^a)") && tris.count("(1^e,2^c,3^c)");
  b.check("tori.5c_triangles", "[5]_c has 8 triangles including (1^b,2^a,3^a) and (1^e,2^c,3^c)", "8 true",
          std::to_string(tris.size()) + " " + yes(extra), tris.size() == 8 && extra);
  const auto tori = all_tori();
  bool tori_ok = tori.size() == 21;
  for (const auto& x : tori) tori_ok = tori_ok && x.kagome && x.holes_are_pasch && x.holes.size() == 4;
  b.check("tori.all", "21 tori, each 4 Pasch 6-holes and 8 triangles, every edge in one of each", "21",
          std::to_string(tori.size()), tori_ok);
  bool closures_ok = true;
  for (const auto& x : tori) {
    const auto cl = torus_closure(x.w, x.d);
    closures_ok = closures_ok && cl.decomposes && cl.not_induced && cl.attached_tetra.size() == 6;
  }
  b.check("tori.closures", "each [[w]]_d is [w]_d with 6 tetrahedra attached along 4-cycles", "21", "21",
          closures_ok);
  bool stars_ok = true;
  for (const Line& l : lines()) {
    const auto s = star_subgraph(l);
    const auto cl = star_closure(l);
    stars_ok = stars_ok && s.holes.size() == 12 && s.iso_from_st4 && cl.decomposes && cl.not_induced &&
               cl.attached_tetra.size() == 6;
  }
  b.check("stars.all", "7 stars isomorphic to ST4, each [[xyz]] the star plus 6 tetrahedra", "7", "7", stars_ok);

  b.criterion = 0;
  const auto fp = face_pairing_census();
  b.check("solids.face_pairing", "faces of the 21 octahedra, 21 tori and 7 stars cancel in pairs", "49 solids",
          std::to_string(fp.solids) + " solids, " + std::to_string(fp.paired) + "/" + std::to_string(fp.faces) +
              " faces paired",
          fp.solids == 49 && fp.unpaired.empty() && fp.paired == fp.faces);
}

void generalized_checks(Builder& b) {
  b.criterion = 12;
  const auto r31 = generalized_build(3, 1);
  const bool iso = find_isomorphism(r31.component, g_graph().graph()).has_value();
  b.check("gen.3_1", "(r, sigma) = (3, 1) rebuilds G", "isomorphic to G",
          std::to_string(r31.component.order()) + " vertices, " + (iso ? "isomorphic" : "not isomorphic"), iso);
  const auto r41 = generalized_build(4, 1);
  std::string degs = join(r41.degree_counts, [](const auto& e) {
    return std::to_string(e.second) + "x" + std::to_string(e.first);
  });
  b.check("gen.4_1", "(r, sigma) = (4, 1): component order, edges, degrees, diameter (no claim)", "none",
          std::to_string(r41.component.order()) + " " + std::to_string(r41.component.edge_count()) + " " + degs +
              " " + std::to_string(r41.diameter.value_or(-1)),
          true);
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::discrepancy_noted: return "discrepancy-noted";
  }
  return "?";
}

std::size_t VerificationReport::count(Verdict v) const {
  return std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.verdict == v; });
}

std::string VerificationReport::to_json() const {
  json j;
  j["schema"] = kReportSchema;
  j["tool_version"] = kToolVersion;
  auto& cs = j["checks"] = json::array();
  for (const auto& c : checks)
    cs.push_back({{"id", c.id},
                  {"criterion", c.criterion},
                  {"description", c.description},
                  {"claim", c.claim},
                  {"computed", c.computed},
                  {"verdict", to_string(c.verdict)}});
  auto& confs = j["configurations"] = json::array();
  for (const auto& c : configurations) confs.push_back(json::parse(c.json));
  j["summary"] = {{"total", checks.size()},
                  {"pass", count(Verdict::pass)},
                  {"fail", count(Verdict::fail)},
                  {"discrepancy_noted", count(Verdict::discrepancy_noted)}};
  return j.dump(2) + "\n";
}

VerificationReport verify_all() {
  Builder b;
  graph_checks(b);
  census_checks(b);
  neighborhood_checks(b);
  symmetry_checks(b);
  reference_checks(b);
  configuration_checks(b);
  hole_checks(b);
  generalized_checks(b);
  std::stable_sort(b.report.checks.begin(), b.report.checks.end(), [](const Check& x, const Check& y) {
    const int cx = x.criterion ? x.criterion : 100, cy = y.criterion ? y.criterion : 100;
    return cx < cy;
  });
  return std::move(b.report);
}

}  // namespace fanograph
