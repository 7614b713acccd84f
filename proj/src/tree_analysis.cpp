#include "gridprod/tree_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>

namespace gridprod {

RootedTree::RootedTree(Graph tree, Vertex root) : tree_(std::move(tree)), root_(root) {
    if (!is_tree(tree_)) throw std::invalid_argument("RootedTree: graph is not a tree");
    if (root < 0 || root >= tree_.num_vertices())
        throw std::invalid_argument("RootedTree: root out of range");
    const int n = tree_.num_vertices();
    parent_.assign(n, -1);
    depth_.assign(n, 0);
    children_.assign(n, {});
    std::queue<Vertex> q;
    std::vector<char> seen(n, 0);
    q.push(root_);
    seen[root_] = 1;
    std::vector<Vertex> order;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        order.push_back(v);
        for (Vertex w : tree_.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                parent_[w] = v;
                depth_[w] = depth_[v] + 1;
                children_[v].push_back(w);
                q.push(w);
            }
    }
    height_.assign(n, 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        for (Vertex c : children_[*it]) height_[*it] = std::max(height_[*it], height_[c] + 1);
}

bool RootedTree::is_ancestor(Vertex a, Vertex d) const {
    while (d != -1 && depth_[d] >= depth_[a]) {
        if (d == a) return true;
        d = parent_[d];
    }
    return false;
}

int height(const RootedTree& t, Vertex v) {
    if (v < 0 || v >= t.order()) throw std::invalid_argument("height: vertex out of range");
    return t.height(v);
}

std::vector<Vertex> height_class(const RootedTree& t, int i) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < t.order(); ++v)
        if (t.height(v) == i) out.push_back(v);
    return out;
}

VerticalPathSet VerticalPathSet::certify(const RootedTree& t, std::vector<VerticalPath> paths) {
    std::vector<char> used(t.order(), 0);
    for (const auto& p : paths) {
        if (p.vertices.empty()) throw std::logic_error("vertical path is empty");
        for (size_t j = 0; j + 1 < p.vertices.size(); ++j)
            if (t.parent(p.vertices[j + 1]) != p.vertices[j])
                throw std::logic_error("path is not vertical (consecutive vertices not parent/child)");
        for (Vertex v : p.vertices) {
            if (used[v]) throw std::logic_error("vertical paths are not vertex-disjoint");
            used[v] = 1;
        }
    }
    const int m = static_cast<int>(paths.size());
    std::vector<std::vector<PathRelation>> rel(m, std::vector<PathRelation>(m, PathRelation::Related));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            int related = 0, unrelated = 0;
            for (Vertex u : paths[i].vertices)
                for (Vertex v : paths[j].vertices) (t.related(u, v) ? related : unrelated)++;
            if (related && unrelated)
                throw std::logic_error("path pair is neither completely related nor unrelated");
            rel[i][j] = rel[j][i] = related ? PathRelation::Related : PathRelation::Unrelated;
        }
    return VerticalPathSet{std::move(paths), std::move(rel)};
}

namespace {

// Descending vertical path of order `len` with upper endpoint v; at each
// step takes the smallest-id child of sufficient height.
VerticalPath descend_path(const RootedTree& t, Vertex v, int len) {
    VerticalPath p;
    p.vertices.push_back(v);
    while (static_cast<int>(p.vertices.size()) < len) {
        int need = len - static_cast<int>(p.vertices.size());
        Vertex next = -1;
        for (Vertex c : t.children(p.vertices.back()))
            if (t.height(c) >= need && (next == -1 || c < next)) next = c;
        if (next == -1) throw std::logic_error("descend_path: no child of sufficient height");
        p.vertices.push_back(next);
    }
    return p;
}

}  // namespace

UnrelatedPathsResult unrelated_vertical_paths(const RootedTree& t, int i, int count) {
    if (i < 1) throw std::invalid_argument("unrelated_vertical_paths: i must be positive");
    auto cls = height_class(t, i);
    if (cls.empty()) throw std::invalid_argument("unrelated_vertical_paths: empty height class");
    if (count < 0) count = static_cast<int>(cls.size());
    if (count < 1 || count > static_cast<int>(cls.size()))
        throw std::invalid_argument("unrelated_vertical_paths: count out of range");
    cls.resize(count);

    std::vector<VerticalPath> paths;
    std::vector<char> on_path(t.order(), 0);
    bool root_on_path = false;
    for (Vertex v : cls) {
        paths.push_back(descend_path(t, v, i));
        for (Vertex u : paths.back().vertices) on_path[u] = 1;
        if (v == t.root()) root_on_path = true;
    }

    // Root branch set: the component of the root among off-path vertices;
    // when the root itself heads the (necessarily unique) path, any spare
    // neighbor of the root serves instead.
    std::vector<Vertex> root_set;
    if (!root_on_path) {
        std::queue<Vertex> q;
        std::vector<char> seen(t.order(), 0);
        q.push(t.root());
        seen[t.root()] = 1;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            root_set.push_back(v);
            for (Vertex w : t.graph().neighbors(v))
                if (!seen[w] && !on_path[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
    } else {
        for (Vertex w : t.graph().neighbors(t.root()))
            if (!on_path[w]) {
                root_set = {w};
                break;
            }
        if (root_set.empty())
            throw std::invalid_argument(
                "unrelated_vertical_paths: pattern does not fit (tree is the single path)");
    }
    std::sort(root_set.begin(), root_set.end());

    MinorModel m{make_subdivided_star(count, i), t.graph(), {}};
    m.branch_sets.resize(1 + count * i);
    m.branch_sets[0] = root_set;
    for (int a = 1; a <= count; ++a)
        for (int j = 1; j <= i; ++j)
            m.branch_sets[substar_vertex_id(count, i, a, j)] = {paths[a - 1].vertices[j - 1]};

    return {VerticalPathSet::certify(t, std::move(paths)), std::move(m)};
}

bool check_height_hypothesis(const RootedTree& t, int p) {
    const double n = t.order();
    for (int i = 1; i <= p - 1; ++i) {
        auto ni = static_cast<double>(height_class(t, i).size());
        if (ni > 1.5 * n / (std::numbers::pi * i * std::numbers::pi * i)) return false;
    }
    return true;
}

VerticalPathSet disjoint_p_paths(const RootedTree& t, int p) {
    if (p < 1) throw std::invalid_argument("disjoint_p_paths: p must be positive");
    if (!check_height_hypothesis(t, p))
        throw std::invalid_argument("disjoint_p_paths: height hypothesis violated");
    const int n = t.order();

    // T': the (upward-closed, hence connected) set of vertices of height >= p.
    std::vector<char> in_core(t.order(), 0);
    int core_size = 0;
    for (Vertex v = 0; v < t.order(); ++v)
        if (t.height(v) >= p) {
            in_core[v] = 1;
            ++core_size;
        }
    if (core_size == 0) throw std::logic_error("disjoint_p_paths: no vertex of height >= p");

    std::vector<int> core_children(t.order(), 0);
    for (Vertex v = 0; v < t.order(); ++v)
        if (in_core[v] && t.parent(v) != -1) ++core_children[t.parent(v)];

    std::vector<Vertex> leaves;  // non-root leaves of T'
    for (Vertex v = 0; v < t.order(); ++v)
        if (in_core[v] && core_children[v] == 0 && v != t.root()) leaves.push_back(v);
    // Corner case: T' is the root alone (possible only for n = 1).
    if (in_core[t.root()] && core_children[t.root()] == 0) leaves.push_back(t.root());

    std::vector<VerticalPath> result;
    if (4.0 * p * static_cast<double>(leaves.size()) >= n) {
        for (Vertex u : leaves) result.push_back(descend_path(t, u, p));
        return VerticalPathSet::certify(t, std::move(result));
    }

    std::vector<Vertex> branchers;  // >= 2 children within T'
    for (Vertex v = 0; v < t.order(); ++v)
        if (in_core[v] && core_children[v] >= 2) branchers.push_back(v);
    if (branchers.size() >= leaves.size())
        throw std::logic_error("disjoint_p_paths: |S| >= |L| violates the leaf-count bound");

    std::vector<char> stop(t.order(), 0);
    for (Vertex v : leaves) stop[v] = 1;
    for (Vertex v : branchers) stop[v] = 1;

    // Partition of T' into vertical paths {P_v : v in S u L}; chunks of
    // order p are cut starting from the lower endpoint so that every
    // non-lower-endpoint vertex keeps exactly one child in T'.
    std::vector<Vertex> anchors(leaves);
    anchors.insert(anchors.end(), branchers.begin(), branchers.end());
    std::sort(anchors.begin(), anchors.end());
    for (Vertex v : anchors) {
        std::vector<Vertex> bottom_up{v};
        Vertex u = t.parent(v);
        while (u != -1 && in_core[u] && !stop[u]) {
            bottom_up.push_back(u);
            u = t.parent(u);
        }
        int chunks = static_cast<int>(bottom_up.size()) / p;
        for (int c = 0; c < chunks; ++c) {
            VerticalPath chunk;
            for (int j = (c + 1) * p - 1; j >= c * p; --j) chunk.vertices.push_back(bottom_up[j]);
            result.push_back(std::move(chunk));
        }
    }
    return VerticalPathSet::certify(t, std::move(result));
}

}  // namespace gridprod
