#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gridprod {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // normalized: first < second

/// Undirected simple graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on self-loops, duplicate edges, or
    /// endpoints outside [0, n).
    Graph(int n, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    /// Edges sorted lexicographically with u < v in each pair.
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(Vertex u, Vertex v) const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

// ---- Generators ----

/// k x k grid on {1..k}^2 with unit-L1 adjacency. Vertex id of column x,
/// row y (1-based) is grid_vertex_id(k, x, y).
Graph make_grid(int k);
int grid_vertex_id(int k, int x, int y);

/// Path on n vertices 0-1-2-...-(n-1).
Graph make_path(int n);

/// Star with l leaves; vertex 0 is the root, leaves are 1..l.
Graph make_star(int l);

/// Subdivided star S_{l,p}: l arms, each a path of p vertices from the
/// root. Root is vertex 0; arm vertex (i, j), i in [1,l], j in [1,p],
/// has id substar_vertex_id(l, p, i, j).
Graph make_subdivided_star(int l, int p);
int substar_vertex_id(int l, int p, int i, int j);

/// Complete graph on q vertices.
Graph make_complete(int q);

/// Uniformly random labeled tree on n vertices via Pruefer decoding.
/// Deterministic per seed (uses a fixed generator, not libstdc++
/// distributions, so results are stable across platforms).
Graph random_tree(int n, std::uint64_t seed);

// ---- Products ----
// Vertex (a, b) of a product of G1 and G2 has id a * |V(G2)| + b.

int product_vertex_id(Vertex a, Vertex b, int n2);
std::pair<Vertex, Vertex> product_vertex_pair(Vertex id, int n2);

Graph cartesian_product(const Graph& g1, const Graph& g2);
Graph strong_product(const Graph& g1, const Graph& g2);
Graph lexicographic_product(const Graph& g1, const Graph& g2);

// ---- Utilities ----

/// True iff g has at most one connected component. The empty graph
/// counts as connected by convention.
bool is_connected(const Graph& g);

bool is_tree(const Graph& g);

/// Subgraph of `g` on a vertex subset, relabeled to 0..k-1.
/// original[i] is the vertex of `g` that vertex i corresponds to.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& verts);

/// BFS spanning tree from vertex 0, then repeatedly delete the
/// highest-id leaf until exactly n vertices remain. Requires g
/// connected and 1 <= n <= |V(g)|.
InducedSubgraph spanning_tree_pruned(const Graph& g, int n);

}  // namespace gridprod
