#include "fanograph/export.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "fanograph/census.hpp"
#include "fanograph/fano.hpp"
#include "fanograph/g_graph.hpp"
#include "fanograph/holes_tori.hpp"
#include "fanograph/incidence.hpp"
#include "fanograph/reference_graphs.hpp"

namespace fanograph {

namespace {

// Colours of a graph whose vertex i is G vertex to_g[i].
std::vector<EdgeAttributes> g_colors(const Graph& h, const std::vector<int>& to_g) {
  std::vector<EdgeAttributes> out;
  for (auto [u, v] : h.edges())
    out.push_back({g_graph().strong(to_g[u], to_g[v]).to_string(), g_graph().weak(to_g[u], to_g[v]).to_string()});
  return out;
}

NamedGraph from_g_subgraph(std::string name, const EdgeSubgraph& s) {
  Graph h = s.graph();
  auto colors = g_colors(h, s.vertices);
  return {std::move(name), std::move(h), std::move(colors)};
}

void ensure_names(Graph& g) {
  if (g.has_names()) return;
  std::vector<std::string> names;
  for (int v = 0; v < g.order(); ++v) names.push_back(std::to_string(v));
  g.set_names(std::move(names));
}

void want(const std::vector<std::string>& params, std::size_t n, const std::string& usage) {
  if (params.size() != n) throw std::invalid_argument("usage: " + usage);
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<std::string> export_object_names() {
  return {"G",          "G-dual",           "quotient",         "levi-42-4", "levi-168-6", "menger-42-4",
          "menger-168-6", "dual-menger-42-4", "dual-menger-168-6", "lambda",    "st4",        "torus w d",
          "star xyz",   "lq d"};
}

NamedGraph export_object(const std::string& name, const std::vector<std::string>& params) {
  NamedGraph out;
  out.name = name;
  const bool takes_params = name == "torus" || name == "star" || name == "lq";
  if (!takes_params && !params.empty()) throw std::invalid_argument(name + " takes no parameters");

  if (name == "G") {
    out.graph = g_graph().graph();
    std::vector<int> id(42);
    for (int v = 0; v < 42; ++v) id[v] = v;
    out.colors = g_colors(out.graph, id);
  } else if (name == "G-dual") {
    auto d = build_g_dual();
    out.graph = std::move(d.graph);
    out.colors = g_colors(out.graph, d.to_g);
  } else if (name == "quotient") {
    out.graph = quotient_unordered().quotient;
  } else if (name == "levi-42-4") {
    out.graph = levi_graph(config_42_4());
  } else if (name == "levi-168-6") {
    out.graph = levi_graph(config_168_6());
  } else if (name == "menger-42-4") {
    out.graph = menger_graph(config_42_4());
  } else if (name == "menger-168-6") {
    out.graph = menger_graph(config_168_6());
  } else if (name == "dual-menger-42-4") {
    out.graph = dual_menger_graph(config_42_4());
  } else if (name == "dual-menger-168-6") {
    out.graph = dual_menger_graph(config_168_6());
  } else if (name == "lambda") {
    out.graph = lambda_hemi();
  } else if (name == "st4") {
    out.graph = st4();
  } else if (name == "torus") {
    want(params, 2, "torus <w> <d>, e.g. torus 5 c");
    if (params[0].size() != 1 || params[1].size() != 1) throw std::invalid_argument("usage: torus <w> <d>");
    const Point w(params[0][0] - '0');
    const Position d = position_from_letter(params[1][0]);
    const auto t = torus_subgraph(w, d);
    out = from_g_subgraph("torus " + t.label(), t.body);
  } else if (name == "star") {
    want(params, 1, "star <xyz>, e.g. star 246");
    const auto s = star_subgraph(Line::parse(params[0]));
    out = from_g_subgraph("star " + s.label(), s.body);
  } else if (name == "lq") {
    want(params, 1, "lq <d>, e.g. lq 3");
    int d = 0;
    try {
      d = std::stoi(params[0]);
    } catch (const std::exception&) {
      throw std::invalid_argument("lq: d must be an integer");
    }
    if (d < 3 || d > 6) throw std::invalid_argument("lq: d must be in 3..6");
    out.graph = line_graph_of_cube(d);
    out.name = "lq " + params[0];
  } else {
    throw std::invalid_argument("unknown object: " + name);
  }
  ensure_names(out.graph);
  return out;
}

std::optional<ExportFormat> parse_format(const std::string& text) {
  if (text == "dot") return ExportFormat::dot;
  if (text == "graphml") return ExportFormat::graphml;
  if (text == "adj") return ExportFormat::adj;
  if (text == "json") return ExportFormat::json;
  return std::nullopt;
}

std::string to_dot(const NamedGraph& g) {
  std::ostringstream os;
  os << "graph " << quoted(g.name) << " {\n";
  for (int v = 0; v < g.graph.order(); ++v) os << "  " << quoted(g.graph.name(v)) << ";\n";
  const auto edges = g.graph.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    os << "  " << quoted(g.graph.name(u)) << " -- " << quoted(g.graph.name(v));
    std::vector<std::string> attrs;
    if (!g.colors.empty()) {
      attrs.push_back("strong=" + quoted(g.colors[i].strong));
      attrs.push_back("weak=" + quoted(g.colors[i].weak));
    }
    if (g.graph.multiplicity(u, v) > 1) attrs.push_back("multiplicity=" + std::to_string(g.graph.multiplicity(u, v)));
    if (!attrs.empty()) {
      os << " [";
      for (std::size_t k = 0; k < attrs.size(); ++k) os << (k ? ", " : "") << attrs[k];
      os << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_graphml(const NamedGraph& g) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
     << "  <key id=\"name\" for=\"node\" attr.name=\"name\" attr.type=\"string\"/>\n"
     << "  <key id=\"strong\" for=\"edge\" attr.name=\"strong\" attr.type=\"string\"/>\n"
     << "  <key id=\"weak\" for=\"edge\" attr.name=\"weak\" attr.type=\"string\"/>\n"
     << "  <key id=\"multiplicity\" for=\"edge\" attr.name=\"multiplicity\" attr.type=\"int\"/>\n"
     << "  <graph id=\"" << xml_escape(g.name) << "\" edgedefault=\"undirected\">\n";
  for (int v = 0; v < g.graph.order(); ++v)
    os << "    <node id=\"n" << v << "\"><data key=\"name\">" << xml_escape(g.graph.name(v)) << "</data></node>\n";
  const auto edges = g.graph.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    os << "    <edge source=\"n" << u << "\" target=\"n" << v << "\">";
    if (!g.colors.empty())
      os << "<data key=\"strong\">" << g.colors[i].strong << "</data><data key=\"weak\">" << g.colors[i].weak
         << "</data>";
    if (g.graph.multiplicity(u, v) > 1)
      os << "<data key=\"multiplicity\">" << g.graph.multiplicity(u, v) << "</data>";
    os << "</edge>\n";
  }
  os << "  </graph>\n</graphml>\n";
  return os.str();
}

std::string to_adj(const NamedGraph& g) {
  std::ostringstream os;
  for (int v = 0; v < g.graph.order(); ++v) {
    std::vector<int> ns(g.graph.neighbors(v).begin(), g.graph.neighbors(v).end());
    std::sort(ns.begin(), ns.end());
    os << g.graph.name(v) << ":";
    for (int w : ns) os << " " << g.graph.name(w);
    os << "\n";
  }
  return os.str();
}

std::string to_json(const NamedGraph& g) {
  nlohmann::ordered_json j;
  j["schema"] = kGraphSchema;
  j["name"] = g.name;
  j["order"] = g.graph.order();
  j["vertices"] = g.graph.names();
  auto& es = j["edges"] = nlohmann::ordered_json::array();
  const auto edges = g.graph.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    nlohmann::ordered_json e{{"u", g.graph.name(u)}, {"v", g.graph.name(v)}};
    if (!g.colors.empty()) {
      e["strong"] = g.colors[i].strong;
      e["weak"] = g.colors[i].weak;
    }
    if (g.graph.multiplicity(u, v) > 1) e["multiplicity"] = g.graph.multiplicity(u, v);
    es.push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

std::string serialize(const NamedGraph& g, ExportFormat f) {
  switch (f) {
    case ExportFormat::dot: return to_dot(g);
    case ExportFormat::graphml: return to_graphml(g);
    case ExportFormat::adj: return to_adj(g);
    case ExportFormat::json: return to_json(g);
  }
  return {};
}

}  // namespace fanograph
