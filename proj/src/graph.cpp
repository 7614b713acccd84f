#include "gridprod/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace gridprod {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

int grid_vertex_id(int k, int x, int y) { return (x - 1) * k + (y - 1); }

Graph make_grid(int k) {
    if (k < 1) throw std::invalid_argument("grid side must be positive");
    std::vector<Edge> edges;
    for (int x = 1; x <= k; ++x)
        for (int y = 1; y <= k; ++y) {
            if (x < k) edges.emplace_back(grid_vertex_id(k, x, y), grid_vertex_id(k, x + 1, y));
            if (y < k) edges.emplace_back(grid_vertex_id(k, x, y), grid_vertex_id(k, x, y + 1));
        }
    return Graph(k * k, std::move(edges));
}

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path order must be positive");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph make_star(int l) {
    if (l < 1) throw std::invalid_argument("star must have at least one leaf");
    std::vector<Edge> edges;
    for (int i = 1; i <= l; ++i) edges.emplace_back(0, i);
    return Graph(l + 1, std::move(edges));
}

int substar_vertex_id(int l, int p, int i, int j) {
    (void)l;
    return 1 + (i - 1) * p + (j - 1);
}

Graph make_subdivided_star(int l, int p) {
    if (l < 1 || p < 1) throw std::invalid_argument("subdivided star parameters must be positive");
    std::vector<Edge> edges;
    for (int i = 1; i <= l; ++i) {
        edges.emplace_back(0, substar_vertex_id(l, p, i, 1));
        for (int j = 1; j < p; ++j)
            edges.emplace_back(substar_vertex_id(l, p, i, j), substar_vertex_id(l, p, i, j + 1));
    }
    return Graph(1 + l * p, std::move(edges));
}

Graph make_complete(int q) {
    if (q < 1) throw std::invalid_argument("complete graph order must be positive");
    std::vector<Edge> edges;
    for (int u = 0; u < q; ++u)
        for (int v = u + 1; v < q; ++v) edges.emplace_back(u, v);
    return Graph(q, std::move(edges));
}

namespace {

// splitmix64; fixed so that seeded output never depends on the standard
// library's distribution implementations.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

}  // namespace

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("tree order must be positive");
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {{0, 1}});
    SplitMix64 rng{seed};
    std::vector<int> pruefer(n - 2);
    for (auto& x : pruefer) x = rng.below(n);

    std::vector<int> deg(n, 1);
    for (int x : pruefer) ++deg[x];
    std::vector<Edge> edges;
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.push(v);
    for (int x : pruefer) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        if (--deg[x] == 1) leaves.push(x);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    edges.emplace_back(std::min(a, b), std::max(a, b));
    return Graph(n, std::move(edges));
}

int product_vertex_id(Vertex a, Vertex b, int n2) { return a * n2 + b; }

std::pair<Vertex, Vertex> product_vertex_pair(Vertex id, int n2) {
    return {id / n2, id % n2};
}

namespace {

void check_factors(const Graph& g1, const Graph& g2) {
    if (g1.num_vertices() == 0 || g2.num_vertices() == 0)
        throw std::invalid_argument("product factors must be nonempty");
}

void add_edge(std::vector<Edge>& edges, int u, int v) {
    edges.push_back({std::min(u, v), std::max(u, v)});
}

// Edges inside every copy of g2 plus edges between copies along g1
// edges -- the two families every product kind shares.
std::vector<Edge> copy_and_layer_edges(const Graph& g1, const Graph& g2) {
    const int n1 = g1.num_vertices(), n2 = g2.num_vertices();
    std::vector<Edge> edges;
    for (int a = 0; a < n1; ++a)
        for (const auto& [u2, v2] : g2.edges())
            add_edge(edges, product_vertex_id(a, u2, n2), product_vertex_id(a, v2, n2));
    for (const auto& [u1, v1] : g1.edges())
        for (int b = 0; b < n2; ++b)
            add_edge(edges, product_vertex_id(u1, b, n2), product_vertex_id(v1, b, n2));
    return edges;
}

}  // namespace

Graph cartesian_product(const Graph& g1, const Graph& g2) {
    check_factors(g1, g2);
    return Graph(g1.num_vertices() * g2.num_vertices(), copy_and_layer_edges(g1, g2));
}

Graph strong_product(const Graph& g1, const Graph& g2) {
    check_factors(g1, g2);
    const int n2 = g2.num_vertices();
    std::vector<Edge> edges = copy_and_layer_edges(g1, g2);
    for (const auto& [u1, v1] : g1.edges())
        for (const auto& [u2, v2] : g2.edges()) {
            add_edge(edges, product_vertex_id(u1, u2, n2), product_vertex_id(v1, v2, n2));
            add_edge(edges, product_vertex_id(u1, v2, n2), product_vertex_id(v1, u2, n2));
        }
    return Graph(g1.num_vertices() * n2, std::move(edges));
}

Graph lexicographic_product(const Graph& g1, const Graph& g2) {
    check_factors(g1, g2);
    const int n1 = g1.num_vertices(), n2 = g2.num_vertices();
    std::vector<Edge> edges;
    for (int a = 0; a < n1; ++a)
        for (const auto& [u2, v2] : g2.edges())
            add_edge(edges, product_vertex_id(a, u2, n2), product_vertex_id(a, v2, n2));
    for (const auto& [u1, v1] : g1.edges())
        for (int b = 0; b < n2; ++b)
            for (int c = 0; c < n2; ++c)
                add_edge(edges, product_vertex_id(u1, b, n2), product_vertex_id(v1, c, n2));
    return Graph(n1 * n2, std::move(edges));
}

bool is_connected(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::queue<Vertex> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
    }
    return count == n;
}

bool is_tree(const Graph& g) {
    return g.num_vertices() >= 1 && g.num_edges() == g.num_vertices() - 1 && is_connected(g);
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& verts) {
    std::vector<int> index(g.num_vertices(), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
        if (verts[i] < 0 || verts[i] >= g.num_vertices())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        if (index[verts[i]] != -1) throw std::invalid_argument("induced_subgraph: duplicate vertex");
        index[verts[i]] = i;
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (index[u] != -1 && index[v] != -1)
            edges.emplace_back(std::min(index[u], index[v]), std::max(index[u], index[v]));
    return {Graph(static_cast<int>(verts.size()), std::move(edges)), verts};
}

InducedSubgraph spanning_tree_pruned(const Graph& g, int n) {
    if (!is_connected(g) || g.num_vertices() == 0)
        throw std::invalid_argument("spanning_tree_pruned: graph must be connected and nonempty");
    if (n < 1 || n > g.num_vertices())
        throw std::invalid_argument("spanning_tree_pruned: target size out of range");

    // BFS spanning tree from vertex 0.
    std::vector<int> parent(g.num_vertices(), -1);
    std::vector<char> seen(g.num_vertices(), 0);
    std::queue<Vertex> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                q.push(w);
            }
    }
    std::vector<int> child_count(g.num_vertices(), 0);
    for (int v = 0; v < g.num_vertices(); ++v)
        if (parent[v] != -1) ++child_count[parent[v]];

    // Delete the highest-id leaf of the current tree until n vertices remain.
    std::set<Vertex> leaves;
    std::vector<char> alive(g.num_vertices(), 1);
    for (int v = 0; v < g.num_vertices(); ++v)
        if (child_count[v] == 0 && v != 0) leaves.insert(v);
    if (g.num_vertices() == 1) leaves.insert(0);
    int remaining = g.num_vertices();
    while (remaining > n) {
        Vertex v = *leaves.rbegin();
        leaves.erase(v);
        alive[v] = 0;
        --remaining;
        int p = parent[v];
        if (p != -1 && --child_count[p] == 0 && p != 0) leaves.insert(p);
    }
    std::vector<Vertex> keep;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (alive[v]) keep.push_back(v);
    std::vector<Edge> edges;
    std::vector<int> index(g.num_vertices(), -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) index[keep[i]] = i;
    for (Vertex v : keep)
        if (parent[v] != -1 && alive[parent[v]])
            edges.emplace_back(std::min(index[v], index[parent[v]]),
                               std::max(index[v], index[parent[v]]));
    return {Graph(n, std::move(edges)), std::move(keep)};
}

}  // namespace gridprod
