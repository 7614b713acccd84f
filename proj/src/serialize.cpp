#include "gridprod/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include "gridprod/constructions.hpp"
#include "gridprod/minor_model.hpp"

namespace gridprod {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return json{{"n", g.num_vertices()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON must have \"n\" and \"edges\"");
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph JSON edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, std::move(edges));
}

json model_to_json(const MinorModel& m) {
    json sets = json::object();
    for (int x = 0; x < static_cast<int>(m.branch_sets.size()); ++x)
        sets[std::to_string(x)] = m.branch_sets[x];
    return json{{"pattern", graph_to_json(m.pattern)},
                {"host", graph_to_json(m.host)},
                {"branch_sets", sets}};
}

MinorModel model_from_json(const json& j) {
    if (!j.is_object() || !j.contains("pattern") || !j.contains("host") ||
        !j.contains("branch_sets"))
        throw std::invalid_argument("model JSON must have \"pattern\", \"host\", \"branch_sets\"");
    MinorModel m;
    m.pattern = graph_from_json(j.at("pattern"));
    m.host = graph_from_json(j.at("host"));
    m.branch_sets.assign(m.pattern.num_vertices(), {});
    for (const auto& [key, val] : j.at("branch_sets").items()) {
        int x = std::stoi(key);
        if (x < 0 || x >= m.pattern.num_vertices())
            throw std::invalid_argument("branch set key out of range: " + key);
        m.branch_sets[x] = val.get<std::vector<Vertex>>();
    }
    return m;
}

json bramble_to_json(const Bramble& b) {
    return json{{"host", graph_to_json(b.host)}, {"sets", b.sets}};
}

Bramble bramble_from_json(const json& j) {
    Bramble b;
    b.host = graph_from_json(j.at("host"));
    b.sets = j.at("sets").get<std::vector<std::vector<Vertex>>>();
    return b;
}

json embedding_to_json(const SubgraphEmbedding& e) {
    return json{{"pattern", graph_to_json(e.pattern)},
                {"host", graph_to_json(e.host)},
                {"map", e.map}};
}

SubgraphEmbedding embedding_from_json(const json& j) {
    if (!j.is_object() || !j.contains("pattern") || !j.contains("host") || !j.contains("map"))
        throw std::invalid_argument("embedding JSON must have \"pattern\", \"host\", \"map\"");
    SubgraphEmbedding e;
    e.pattern = graph_from_json(j.at("pattern"));
    e.host = graph_from_json(j.at("host"));
    e.map = j.at("map").get<std::vector<Vertex>>();
    return e;
}

std::string graph_to_dot(const Graph& g, int n2) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.num_vertices(); ++v) {
        out << "  v" << v;
        if (n2 > 0) {
            auto [a, b] = product_vertex_pair(v, n2);
            out << " [label=\"" << a << "," << b << "\"]";
        } else {
            out << " [label=\"" << v << "\"]";
        }
        out << ";\n";
    }
    for (const auto& [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace gridprod
