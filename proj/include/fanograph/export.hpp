// Named graphs of the toolkit and their serializations: DOT, GraphML,
// adjacency list and JSON. Edges of G and its subgraphs carry the strong and
// weak colours; the quotient carries multiplicities.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanograph/graph.hpp"

namespace fanograph {

inline constexpr const char* kGraphSchema = "fanograph.graph/1";

struct EdgeAttributes {
  std::string strong;  // "347"
  std::string weak;    // "3a"
};

struct NamedGraph {
  std::string name;
  Graph graph;  // vertex names set
  // Parallel to graph.edges(); empty when the graph has no colours.
  std::vector<EdgeAttributes> colors;
};

// Object names: G, G-dual, quotient, levi-42-4, levi-168-6, menger-42-4,
// menger-168-6, dual-menger-42-4, dual-menger-168-6, lambda, st4, and the
// parameterized "torus w d", "star xyz", "lq d". Throws std::invalid_argument
// for unknown names or bad parameters.
NamedGraph export_object(const std::string& name, const std::vector<std::string>& params);
std::vector<std::string> export_object_names();

enum class ExportFormat { dot, graphml, adj, json };
std::optional<ExportFormat> parse_format(const std::string& text);

std::string to_dot(const NamedGraph& g);
std::string to_graphml(const NamedGraph& g);
std::string to_adj(const NamedGraph& g);
std::string to_json(const NamedGraph& g);
std::string serialize(const NamedGraph& g, ExportFormat f);

}  // namespace fanograph
