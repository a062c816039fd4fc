#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ideals/families.hpp"
#include "ideals/graph.hpp"

// DOT and JSON views of the graphs. Vertex indices in the JSON edge list
// refer to the deterministic lexicographic vertex order.

namespace ideals {

nlohmann::json stats_to_json(const GraphStats& s);
nlohmann::json graph_to_json(const IdealGraph& g);
nlohmann::json zgraph_to_json(const TruncatedZGraph& g);

/// highlight: optional vertex cycle to paint (nodes and cycle edges in red).
std::string graph_to_dot(const IdealGraph& g, const std::vector<std::size_t>* highlight = nullptr);
std::string zgraph_to_dot(const TruncatedZGraph& g);

nlohmann::json family_to_json(const ModulePair& pair, const IntersectingFamily& family);
nlohmann::json coloring_to_json(const ColoringCertificate& c);

}  // namespace ideals
