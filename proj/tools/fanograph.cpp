// Command-line front end: verify, export, query, generalize, cayley-search.
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "fanograph/census.hpp"
#include "fanograph/export.hpp"
#include "fanograph/g_graph.hpp"
#include "fanograph/generalized.hpp"
#include "fanograph/holes_tori.hpp"
#include "fanograph/report.hpp"
#include "fanograph/symmetry.hpp"

using namespace fanograph;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int vertex(const std::string& s) {
  try {
    return parse_vertex(s);
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed vertex name: " + s);
  }
}

std::string names(std::vector<int> vs) {
  std::string out;
  for (int v : vs) out += (out.empty() ? "" : " ") + short_name(v);
  return out;
}

void need(const std::vector<std::string>& args, std::size_t n, const std::string& usage) {
  if (args.size() != n) throw UsageError("usage: query " + usage);
}

void require_edge(int u, int v) {
  if (!g_graph().graph().adjacent(u, v))
    throw UsageError(short_name(u) + " and " + short_name(v) + " are not adjacent");
}

std::string stabilizer_order(const std::vector<std::string>& args) {
  const auto grp = automorphism_table().permutations();
  std::vector<int> set;
  if (args.size() == 2) {
    const int u = vertex(args[0]), v = vertex(args[1]);
    require_edge(u, v);
    set = {u, v};
  } else if (args.size() == 1 && (args[0].front() == '[')) {
    try {
      const auto& o = octahedra()[parse_octa(args[0])];
      set.assign(o.vertices.begin(), o.vertices.end());
    } catch (const std::invalid_argument&) {
      throw UsageError("malformed octahedron name: " + args[0]);
    }
  } else if (args.size() == 1 && (args[0].front() == '<' || args[0].rfind("⟨", 0) == 0)) {
    try {
      const auto& t = tetrahedra()[parse_tetra(args[0])];
      set.assign(t.vertices.begin(), t.vertices.end());
    } catch (const std::invalid_argument&) {
      throw UsageError("malformed tetrahedron name: " + args[0]);
    }
  } else if (args.size() == 1) {
    set = {vertex(args[0])};
  } else {
    throw UsageError("usage: query stabilizer-order <vertex> | <u> <v> | <xyz> | [xyz]_d");
  }
  return std::to_string(setwise_stabilizer(grp, set).size());
}

std::string hole_label(const std::vector<std::string>& args) {
  const auto& hc = hole_census();
  if (args.size() == 1) {
    try {
      const auto& h = hc.octahedral[hole_index(parse_hole_label(args[0]))];
      return names(h.cycle);
    } catch (const std::invalid_argument&) {
      throw UsageError("malformed or unknown hole label: " + args[0]);
    }
  }
  if (args.size() != 6) throw UsageError("usage: query hole-label <xyz_d^w> | <six vertices in cycle order>");
  std::vector<int> cycle;
  for (const auto& a : args) cycle.push_back(vertex(a));
  const auto canon = canonical_cycle(cycle);
  for (const auto& h : hc.octahedral)
    if (h.cycle == canon) return h.label.to_string();
  return "not an octahedral 6-hole";
}

std::string query(const std::string& kind, const std::vector<std::string>& args) {
  const Graph& g = g_graph().graph();
  if (kind == "neighbors") {
    need(args, 1, "neighbors <vertex>");
    std::vector<int> ns(g.neighbors(vertex(args[0])).begin(), g.neighbors(vertex(args[0])).end());
    std::sort(ns.begin(), ns.end());
    return names(ns);
  }
  if (kind == "strong" || kind == "weak") {
    need(args, 2, kind + " <u> <v>");
    const int u = vertex(args[0]), v = vertex(args[1]);
    require_edge(u, v);
    return kind == "strong" ? g_graph().strong(u, v).to_string() : g_graph().weak(u, v).label();
  }
  if (kind == "copies-at") {
    need(args, 1, "copies-at <vertex>");
    const auto ic = incident_copies(vertex(args[0]));
    std::string out;
    for (int t : ic.tetra) out += tetrahedra()[t].label() + " ";
    out += "/";
    for (int o : ic.octa) out += " " + octahedra()[o].label();
    return out;
  }
  if (kind == "fastened-pair") {
    need(args, 2, "fastened-pair <u> <v>");
    const int u = vertex(args[0]), v = vertex(args[1]);
    require_edge(u, v);
    const auto fp = fastened_pair(u, v);
    return octahedra()[fp.octa].label() + ", " + tetrahedra()[fp.tetra].label();
  }
  if (kind == "hole-label") return hole_label(args);
  if (kind == "stabilizer-order") return stabilizer_order(args);
  throw UsageError("unknown query kind: " + kind +
                   " (neighbors, strong, weak, copies-at, fastened-pair, hole-label, stabilizer-order)");
}

std::string cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (int v = 0; v < p.degree(); ++v) {
    if (seen[v] || p(v) == v) continue;
    out += "(";
    for (int w = v; !seen[w]; w = p(w)) {
      seen[w] = true;
      out += (w == v ? "" : " ") + short_name(w);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

int run_verify(const std::string& json_path) {
  const auto report = verify_all();
  for (const auto& c : report.checks)
    if (c.verdict != Verdict::pass)
      std::cout << to_string(c.verdict) << " " << c.id << ": claim " << c.claim << ", computed " << c.computed << "\n";
  std::cout << report.checks.size() << " checks: " << report.count(Verdict::pass) << " pass, "
            << report.count(Verdict::fail) << " fail, " << report.count(Verdict::discrepancy_noted)
            << " discrepancy-noted\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + json_path);
    out << report.to_json();
  }
  return report.failed() ? kFailed : kOk;
}

int run_export(const std::vector<std::string>& object, const std::string& format, const std::string& path) {
  const auto f = parse_format(format);
  if (!f) throw UsageError("unknown format: " + format + " (dot, graphml, adj, json)");
  NamedGraph g;
  try {
    g = export_object(object.front(), std::vector<std::string>(object.begin() + 1, object.end()));
  } catch (const std::invalid_argument& e) {
    std::string known;
    for (const auto& n : export_object_names()) known += (known.empty() ? "" : ", ") + n;
    throw UsageError(std::string(e.what()) + " (objects: " + known + ")");
  }
  const std::string text = serialize(g, *f);
  if (path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
  }
  return kOk;
}

int run_generalize(int r, int sigma) {
  try {
    std::cout << to_json_text(generalized_build(r, sigma)) << "\n";
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return kOk;
}

int run_cayley(std::uint64_t budget) {
  const auto res = cayley_search(automorphism_table().permutations(), budget);
  nlohmann::ordered_json j;
  j["group_order"] = automorphism_table().order();
  j["candidates"] = res.candidates;
  j["closures_tried"] = res.closures_tried;
  j["budget_exhausted"] = res.budget_exhausted;
  j["witness_found"] = !res.witness.empty();
  if (!res.witness.empty()) {
    j["witness_order"] = res.witness.size();
    auto& gens = j["witness_generators"] = nlohmann::ordered_json::array();
    for (const auto& p : res.witness_generators) gens.push_back(cycles(p));
  }
  std::cout << j.dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification engine for the 42-vertex graph on ordered Fano pencils"};
  app.require_subcommand(1);

  std::string json_path;
  auto* verify = app.add_subcommand("verify", "run every check and report");
  verify->add_option("--json", json_path, "write the JSON report here");

  std::vector<std::string> object;
  std::string format, out_path;
  auto* exp = app.add_subcommand("export", "write a named graph");
  exp->add_option("object", object, "object name and parameters, e.g. G, torus 5 c, star 246")->required();
  exp->add_option("--format", format, "dot, graphml, adj or json")->required();
  exp->add_option("-o,--output", out_path, "output file, - for stdout")->required();

  std::string kind;
  std::vector<std::string> qargs;
  auto* qry = app.add_subcommand("query", "answer a single question in vertex and copy notation");
  qry->add_option("kind", kind, "neighbors, strong, weak, copies-at, fastened-pair, hole-label, stabilizer-order")
      ->required();
  qry->add_option("args", qargs, "vertex names, labels");

  int r = 0, sigma = 0;
  auto* gen = app.add_subcommand("generalize", "build the component of the generalized construction");
  gen->add_option("--r", r, "projective space P(r-1, 2)")->required();
  gen->add_option("--sigma", sigma, "subspace dimension")->required();

  std::uint64_t budget = 100000;
  auto* cay = app.add_subcommand("cayley-search", "look for a regular subgroup of order 42");
  cay->add_option("--budget", budget, "maximum number of subgroup closures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return run_verify(json_path);
    if (*exp) return run_export(object, format, out_path);
    if (*qry) {
      std::cout << query(kind, qargs) << "\n";
      return kOk;
    }
    if (*gen) return run_generalize(r, sigma);
    if (*cay) return run_cayley(budget);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal failure: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
