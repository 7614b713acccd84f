#include "gridprod/minor_model.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace gridprod {

namespace {

std::string vtx(Vertex v) { return std::to_string(v); }

std::vector<Vertex> sorted_unique(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool set_connected(const Graph& g, const std::vector<Vertex>& set) {
    if (set.empty()) return false;
    std::set<Vertex> members(set.begin(), set.end());
    std::set<Vertex> seen;
    std::queue<Vertex> q;
    q.push(set[0]);
    seen.insert(set[0]);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v))
            if (members.count(w) && !seen.count(w)) {
                seen.insert(w);
                q.push(w);
            }
    }
    return seen.size() == members.size();
}

bool sets_touch_by_edge(const Graph& g, const std::vector<Vertex>& a,
                        const std::vector<Vertex>& b) {
    std::set<Vertex> bset(b.begin(), b.end());
    for (Vertex u : a)
        for (Vertex w : g.neighbors(u))
            if (bset.count(w)) return true;
    return false;
}

}  // namespace

const char* clause_name(ValidationReport::Kind k) {
    switch (k) {
        case ValidationReport::Kind::Ok: return "ok";
        case ValidationReport::Kind::Malformed: return "malformed";
        case ValidationReport::Kind::NotDisjoint: return "clause (i): branch sets not disjoint";
        case ValidationReport::Kind::NotConnected: return "clause (ii): branch set not connected";
        case ValidationReport::Kind::EdgeUncovered: return "clause (iii): pattern edge uncovered";
    }
    return "?";
}

ValidationReport validate_model(const MinorModel& m) {
    using K = ValidationReport::Kind;
    if (static_cast<int>(m.branch_sets.size()) != m.pattern.num_vertices())
        return {K::Malformed, "branch set count " + vtx(static_cast<int>(m.branch_sets.size())) +
                                  " != pattern order " + vtx(m.pattern.num_vertices())};
    for (int x = 0; x < m.pattern.num_vertices(); ++x) {
        if (m.branch_sets[x].empty())
            return {K::Malformed, "branch set of pattern vertex " + vtx(x) + " is empty"};
        for (Vertex v : m.branch_sets[x])
            if (v < 0 || v >= m.host.num_vertices())
                return {K::Malformed, "branch set of pattern vertex " + vtx(x) +
                                          " references invalid host vertex " + vtx(v)};
        auto su = sorted_unique(m.branch_sets[x]);
        if (su.size() != m.branch_sets[x].size())
            return {K::Malformed,
                    "branch set of pattern vertex " + vtx(x) + " has repeated host vertices"};
    }
    // (i) disjoint
    std::vector<int> owner(m.host.num_vertices(), -1);
    for (int x = 0; x < m.pattern.num_vertices(); ++x)
        for (Vertex v : m.branch_sets[x]) {
            if (owner[v] != -1)
                return {K::NotDisjoint, "host vertex " + vtx(v) + " shared by branch sets of " +
                                            vtx(owner[v]) + " and " + vtx(x)};
            owner[v] = x;
        }
    // (ii) connected
    for (int x = 0; x < m.pattern.num_vertices(); ++x)
        if (!set_connected(m.host, m.branch_sets[x]))
            return {K::NotConnected, "branch set of pattern vertex " + vtx(x) +
                                         " induces a disconnected host subgraph"};
    // (iii) every pattern edge covered by a host edge
    for (const auto& [x, y] : m.pattern.edges())
        if (!sets_touch_by_edge(m.host, m.branch_sets[x], m.branch_sets[y]))
            return {K::EdgeUncovered, "no host edge between branch sets of pattern edge (" +
                                          vtx(x) + "," + vtx(y) + ")"};
    return ValidationReport::good();
}

MinorModel identity_model(const Graph& g) {
    MinorModel m{g, g, {}};
    m.branch_sets.resize(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) m.branch_sets[v] = {v};
    return m;
}

MinorModel subgraph_model(const Graph& g, const InducedSubgraph& sub) {
    for (const auto& [u, v] : sub.graph.edges())
        if (!g.has_edge(sub.original[u], sub.original[v]))
            throw std::invalid_argument("subgraph_model: not a subgraph of the host");
    MinorModel m{sub.graph, g, {}};
    m.branch_sets.resize(sub.graph.num_vertices());
    for (int v = 0; v < sub.graph.num_vertices(); ++v) m.branch_sets[v] = {sub.original[v]};
    return m;
}

MinorModel compose_models(const MinorModel& inner, const MinorModel& outer) {
    if (inner.host != outer.pattern)
        throw std::invalid_argument("compose_models: inner.host differs from outer.pattern");
    MinorModel m{inner.pattern, outer.host, {}};
    m.branch_sets.resize(inner.pattern.num_vertices());
    for (int x = 0; x < inner.pattern.num_vertices(); ++x) {
        std::vector<Vertex> acc;
        for (Vertex u : inner.branch_sets[x])
            acc.insert(acc.end(), outer.branch_sets[u].begin(), outer.branch_sets[u].end());
        std::sort(acc.begin(), acc.end());
        m.branch_sets[x] = std::move(acc);
    }
    return m;
}

MinorModel lift_model_through_product(const MinorModel& m, const Graph& h) {
    auto report = validate_model(m);
    if (!report.ok())
        throw std::invalid_argument("lift_model_through_product: invalid input model: " +
                                    report.message);
    const int nh = h.num_vertices();
    MinorModel out{cartesian_product(m.pattern, h), cartesian_product(m.host, h), {}};
    out.branch_sets.resize(m.pattern.num_vertices() * nh);
    for (int x = 0; x < m.pattern.num_vertices(); ++x)
        for (int w = 0; w < nh; ++w) {
            auto& bs = out.branch_sets[product_vertex_id(x, w, nh)];
            for (Vertex v : m.branch_sets[x]) bs.push_back(product_vertex_id(v, w, nh));
            std::sort(bs.begin(), bs.end());
        }
    return out;
}

MinorModel product_of_models(const MinorModel& m1, const MinorModel& m2) {
    const int ph2 = m2.pattern.num_vertices();
    const int gh2 = m2.host.num_vertices();
    MinorModel out{cartesian_product(m1.pattern, m2.pattern),
                   cartesian_product(m1.host, m2.host),
                   {}};
    out.branch_sets.resize(m1.pattern.num_vertices() * ph2);
    for (int x = 0; x < m1.pattern.num_vertices(); ++x)
        for (int w = 0; w < ph2; ++w) {
            auto& bs = out.branch_sets[product_vertex_id(x, w, ph2)];
            for (Vertex a : m1.branch_sets[x])
                for (Vertex b : m2.branch_sets[w]) bs.push_back(product_vertex_id(a, b, gh2));
            std::sort(bs.begin(), bs.end());
        }
    return out;
}

MinorModel swap_product_model(const MinorModel& m, const Graph& host_g1, const Graph& host_g2) {
    const int n1 = host_g1.num_vertices(), n2 = host_g2.num_vertices();
    if (m.host.num_vertices() != n1 * n2)
        throw std::invalid_argument("swap_product_model: host size mismatch");
    MinorModel out{m.pattern, cartesian_product(host_g1, host_g2), {}};
    out.branch_sets.resize(m.pattern.num_vertices());
    for (int x = 0; x < m.pattern.num_vertices(); ++x) {
        for (Vertex v : m.branch_sets[x]) {
            auto [b, a] = product_vertex_pair(v, n1);  // m.host is g2 box g1
            out.branch_sets[x].push_back(product_vertex_id(a, b, n2));
        }
        std::sort(out.branch_sets[x].begin(), out.branch_sets[x].end());
    }
    return out;
}

MinorModel clique_minor_to_grid_model(const MinorModel& m) {
    const int q = m.pattern.num_vertices();
    if (m.pattern.num_edges() != q * (q - 1) / 2)
        throw std::invalid_argument("clique_minor_to_grid_model: pattern is not complete");
    int k = 1;
    while ((k + 1) * (k + 1) <= q) ++k;
    MinorModel out{make_grid(k), m.host, {}};
    out.branch_sets.resize(k * k);
    for (int x = 1; x <= k; ++x)
        for (int y = 1; y <= k; ++y) {
            int gid = grid_vertex_id(k, x, y);
            out.branch_sets[gid] = m.branch_sets[gid];  // row-major injection
        }
    return out;
}

ValidationReport validate_bramble(const Bramble& b) {
    using K = ValidationReport::Kind;
    for (int i = 0; i < static_cast<int>(b.sets.size()); ++i) {
        if (b.sets[i].empty()) return {K::Malformed, "bramble set " + vtx(i) + " is empty"};
        for (Vertex v : b.sets[i])
            if (v < 0 || v >= b.host.num_vertices())
                return {K::Malformed, "bramble set " + vtx(i) + " references invalid host vertex"};
        if (!set_connected(b.host, b.sets[i]))
            return {K::NotConnected, "bramble set " + vtx(i) + " is disconnected"};
    }
    for (int i = 0; i < static_cast<int>(b.sets.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(b.sets.size()); ++j) {
            std::set<Vertex> si(b.sets[i].begin(), b.sets[i].end());
            bool touch = false;
            for (Vertex v : b.sets[j])
                if (si.count(v)) touch = true;
            if (!touch) touch = sets_touch_by_edge(b.host, b.sets[i], b.sets[j]);
            if (!touch)
                return {K::EdgeUncovered,
                        "bramble sets " + vtx(i) + " and " + vtx(j) + " do not touch"};
        }
    return ValidationReport::good();
}

namespace {

// Deterministic spanning-tree leaf: the highest-id leaf of the BFS tree
// from vertex 0.
Vertex spanning_tree_leaf(const Graph& g) {
    if (g.num_vertices() == 1) return 0;
    auto pruned = spanning_tree_pruned(g, g.num_vertices());
    const Graph& t = pruned.graph;
    Vertex best = -1;
    for (int v = 0; v < t.num_vertices(); ++v)
        if (t.degree(v) == 1) best = std::max(best, v);
    return best;
}

}  // namespace

Bramble product_bramble(const Graph& g1, const Graph& g2) {
    if (!is_connected(g1) || !is_connected(g2) || g1.num_vertices() < 2 || g2.num_vertices() < 2)
        throw std::invalid_argument("product_bramble: factors must be connected with >= 2 vertices");
    const int n2 = g2.num_vertices();
    Vertex v1 = spanning_tree_leaf(g1);
    Vertex v2 = spanning_tree_leaf(g2);
    Bramble b{cartesian_product(g1, g2), {}};
    // Crosses B_x union B_y over x in G1 - v1, y in G2 - v2.
    for (Vertex x = 0; x < g1.num_vertices(); ++x) {
        if (x == v1) continue;
        for (Vertex y = 0; y < n2; ++y) {
            if (y == v2) continue;
            std::vector<Vertex> s;
            for (Vertex w = 0; w < n2; ++w)
                if (w != v2) s.push_back(product_vertex_id(x, w, n2));
            for (Vertex u = 0; u < g1.num_vertices(); ++u)
                if (u != v1) s.push_back(product_vertex_id(u, y, n2));
            b.sets.push_back(sorted_unique(std::move(s)));
        }
    }
    std::vector<Vertex> b1, b2;
    for (Vertex w = 0; w < n2; ++w) b1.push_back(product_vertex_id(v1, w, n2));
    for (Vertex u = 0; u < g1.num_vertices(); ++u)
        if (u != v1) b2.push_back(product_vertex_id(u, v2, n2));
    b.sets.push_back(std::move(b1));
    b.sets.push_back(std::move(b2));
    return b;
}

bool minor_edge_density_check(const MinorModel& m, int t, int delta, const Graph& h,
                              int star_leaves) {
    Graph expected = lexicographic_product(make_star(star_leaves), h);
    if (m.host != expected)
        throw std::invalid_argument(
            "minor_edge_density_check: host is not the stated star-lex product");
    long long lhs = m.pattern.num_edges();
    long long rhs = static_cast<long long>(t) * m.pattern.num_vertices() +
                    static_cast<long long>(delta - t) * h.num_vertices();
    return lhs < rhs;
}

}  // namespace gridprod
