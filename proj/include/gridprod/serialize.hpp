#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "gridprod/graph.hpp"

namespace gridprod {

struct MinorModel;
struct Bramble;
struct SubgraphEmbedding;

// Canonical JSON graph format: {"n": int, "edges": [[u,v],...]} with
// u < v, sorted lexicographically.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json model_to_json(const MinorModel& m);
MinorModel model_from_json(const nlohmann::json& j);

nlohmann::json bramble_to_json(const Bramble& b);
Bramble bramble_from_json(const nlohmann::json& j);

nlohmann::json embedding_to_json(const SubgraphEmbedding& e);
SubgraphEmbedding embedding_from_json(const nlohmann::json& j);

/// Undirected DOT export. If n2 > 0, vertex labels are product pairs
/// "a,b" under the row-major encoding; otherwise labels are plain ids.
std::string graph_to_dot(const Graph& g, int n2 = 0);

}  // namespace gridprod
