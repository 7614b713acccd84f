#pragma once

#include <vector>

#include "gridprod/graph.hpp"
#include "gridprod/minor_model.hpp"

namespace gridprod {

/// A tree with a designated root, plus parent/depth maps derived from it.
class RootedTree {
public:
    RootedTree(Graph tree, Vertex root);

    const Graph& graph() const { return tree_; }
    Vertex root() const { return root_; }
    int order() const { return tree_.num_vertices(); }
    /// Parent of v, or -1 for the root.
    Vertex parent(Vertex v) const { return parent_[v]; }
    int depth(Vertex v) const { return depth_[v]; }
    const std::vector<Vertex>& children(Vertex v) const { return children_[v]; }
    /// h_T(v): maximum order of a vertical path with upper endpoint v.
    /// Leaves have height 1.
    int height(Vertex v) const { return height_[v]; }

    bool is_ancestor(Vertex a, Vertex d) const;
    bool related(Vertex u, Vertex v) const { return is_ancestor(u, v) || is_ancestor(v, u); }

private:
    Graph tree_;
    Vertex root_;
    std::vector<Vertex> parent_;
    std::vector<int> depth_;
    std::vector<std::vector<Vertex>> children_;
    std::vector<int> height_;
};

int height(const RootedTree& t, Vertex v);

/// H_i(T): all vertices of height exactly i, ascending by id.
std::vector<Vertex> height_class(const RootedTree& t, int i);

/// A vertical path stored top to bottom (upper endpoint first).
struct VerticalPath {
    std::vector<Vertex> vertices;
    Vertex upper() const { return vertices.front(); }
    Vertex lower() const { return vertices.back(); }
    int order() const { return static_cast<int>(vertices.size()); }
};

enum class PathRelation { Related, Unrelated };

/// Pairwise vertex-disjoint vertical paths together with the certified
/// completely-related / completely-unrelated classification matrix.
/// Construction re-verifies every cross pair by the ancestor test and
/// rejects path sets with a mixed pair.
struct VerticalPathSet {
    std::vector<VerticalPath> paths;
    std::vector<std::vector<PathRelation>> relation;

    static VerticalPathSet certify(const RootedTree& t, std::vector<VerticalPath> paths);
};

struct UnrelatedPathsResult {
    VerticalPathSet paths;
    MinorModel model;  // S_{count,i} in T
};

/// The n_i(T) pairwise completely unrelated vertical paths of order i
/// headed by the height-i class, plus the subdivided-star model they
/// induce. If count >= 0 only the first `count` class vertices (by id)
/// are used. Throws when the class is empty or the pattern cannot fit
/// (the bare-path corner case where the tree itself is the single path).
UnrelatedPathsResult unrelated_vertical_paths(const RootedTree& t, int i, int count = -1);

/// True iff n_i(T) <= (3/2) n / (pi i)^2 for all i in 1..p-1.
bool check_height_hypothesis(const RootedTree& t, int p);

/// At least ceil(n/4p) pairwise vertex-disjoint vertical paths of order
/// exactly p, pairwise completely related or completely unrelated.
/// Requires check_height_hypothesis(t, p).
VerticalPathSet disjoint_p_paths(const RootedTree& t, int p);

}  // namespace gridprod
