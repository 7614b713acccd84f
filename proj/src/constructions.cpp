#include "gridprod/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>
#include <tuple>

namespace gridprod {

namespace {

void sort_unique(std::vector<Vertex>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

void finalize(MinorModel& m) {
    for (auto& s : m.branch_sets) sort_unique(s);
}

/// Vertices of the unique tree path from u to w, inclusive.
std::vector<Vertex> tree_path(const RootedTree& t, Vertex u, Vertex w) {
    std::vector<Vertex> up, down;
    Vertex a = u, b = w;
    while (t.depth(a) > t.depth(b)) {
        up.push_back(a);
        a = t.parent(a);
    }
    while (t.depth(b) > t.depth(a)) {
        down.push_back(b);
        b = t.parent(b);
    }
    while (a != b) {
        up.push_back(a);
        down.push_back(b);
        a = t.parent(a);
        b = t.parent(b);
    }
    up.push_back(a);
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
}

/// S_l as a minor of S_{l,p}: arm i contracts onto leaf i.
MinorModel star_in_substar(int l, int p) {
    MinorModel m;
    m.pattern = make_star(l);
    m.host = make_subdivided_star(l, p);
    m.branch_sets.assign(l + 1, {});
    m.branch_sets[0] = {0};
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= p; ++j) m.branch_sets[i].push_back(substar_vertex_id(l, p, i, j));
    finalize(m);
    return m;
}

/// S_{l1,p1} as a subgraph of S_{l2,p2} (l1 <= l2, p1 <= p2).
MinorModel substar_injection(int l1, int p1, int l2, int p2) {
    if (l1 > l2 || p1 > p2) throw std::invalid_argument("substar_injection: pattern too large");
    MinorModel m;
    m.pattern = make_subdivided_star(l1, p1);
    m.host = make_subdivided_star(l2, p2);
    m.branch_sets.assign(m.pattern.num_vertices(), {});
    m.branch_sets[0] = {0};
    for (int i = 1; i <= l1; ++i)
        for (int j = 1; j <= p1; ++j)
            m.branch_sets[substar_vertex_id(l1, p1, i, j)] = {substar_vertex_id(l2, p2, i, j)};
    return m;
}

struct Cell {
    int x, y;
    bool operator<(const Cell& o) const { return x < o.x || (x == o.x && y < o.y); }
    bool operator==(const Cell&) const = default;
};

/// Orders a set of grid cells that induce a path (under unit-L1
/// adjacency) from one endpoint to the other.
std::vector<Cell> walk_induced_path(std::vector<Cell> cells) {
    if (cells.size() <= 1) return cells;
    std::set<Cell> in(cells.begin(), cells.end());
    auto nbrs = [&](const Cell& c) {
        std::vector<Cell> out;
        for (Cell d : {Cell{c.x + 1, c.y}, Cell{c.x - 1, c.y}, Cell{c.x, c.y + 1},
                       Cell{c.x, c.y - 1}})
            if (in.count(d)) out.push_back(d);
        return out;
    };
    Cell start = cells.front();
    bool found = false;
    for (const Cell& c : cells)
        if (nbrs(c).size() == 1) {
            start = c;
            found = true;
            break;
        }
    if (!found) throw std::logic_error("walk_induced_path: no endpoint");
    std::vector<Cell> order{start};
    Cell prev{-1, -1};
    while (order.size() < cells.size()) {
        bool advanced = false;
        for (const Cell& d : nbrs(order.back()))
            if (!(d == prev)) {
                prev = order.back();
                order.push_back(d);
                advanced = true;
                break;
            }
        if (!advanced) throw std::logic_error("walk_induced_path: not a path");
    }
    return order;
}

}  // namespace

ValidationReport validate_embedding(const SubgraphEmbedding& e) {
    using K = ValidationReport::Kind;
    int np = e.pattern.num_vertices(), nh = e.host.num_vertices();
    if (static_cast<int>(e.map.size()) != np)
        return {K::Malformed, "map size " + std::to_string(e.map.size()) + " != pattern order " +
                                  std::to_string(np)};
    std::vector<char> used(nh, 0);
    for (int v = 0; v < np; ++v) {
        Vertex h = e.map[v];
        if (h < 0 || h >= nh)
            return {K::Malformed, "vertex " + std::to_string(v) + " maps out of range"};
        if (used[h])
            return {K::NotDisjoint,
                    "map not injective at host vertex " + std::to_string(h)};
        used[h] = 1;
    }
    for (const auto& [u, v] : e.pattern.edges())
        if (!e.host.has_edge(e.map[u], e.map[v]))
            return {K::EdgeUncovered, "edge {" + std::to_string(u) + "," + std::to_string(v) +
                                          "} not mapped to a host edge"};
    return ValidationReport::good();
}

MinorModel clique_in_product(const Graph& g) {
    int n = g.num_vertices();
    if (n == 0 || !is_connected(g)) throw std::invalid_argument("clique_in_product: need a connected graph");
    MinorModel m;
    m.pattern = make_complete(n);
    Graph star = make_star(n);
    m.host = cartesian_product(g, star);
    int n2 = star.num_vertices();
    m.branch_sets.assign(n, {});
    for (int i = 0; i < n; ++i) {
        for (Vertex v = 0; v < n; ++v) m.branch_sets[i].push_back(product_vertex_id(v, i + 1, n2));
        m.branch_sets[i].push_back(product_vertex_id(i, 0, n2));
        sort_unique(m.branch_sets[i]);
    }
    return m;
}

MinorModel bipartite_in_star_tree(const Graph& gbip, const std::vector<Vertex>& a,
                                  const std::vector<Vertex>& b, const Graph& star,
                                  const Graph& tree) {
    int n = gbip.num_vertices();
    std::vector<int> side(n, -1);
    for (size_t i = 0; i < a.size(); ++i) side.at(a[i]) = 0;
    for (size_t i = 0; i < b.size(); ++i) {
        if (side.at(b[i]) != -1) throw std::invalid_argument("bipartite_in_star_tree: parts overlap");
        side[b[i]] = 1;
    }
    if (static_cast<int>(a.size() + b.size()) != n)
        throw std::invalid_argument("bipartite_in_star_tree: parts do not cover the graph");
    for (const auto& [u, v] : gbip.edges())
        if (side[u] == side[v])
            throw std::invalid_argument("bipartite_in_star_tree: a part is not independent");
    int leaves = star.num_vertices() - 1;
    if (star != make_star(leaves)) throw std::invalid_argument("bipartite_in_star_tree: not a star");
    if (!is_tree(tree) || tree.num_vertices() == 0)
        throw std::invalid_argument("bipartite_in_star_tree: not a tree");
    if (static_cast<int>(a.size()) > leaves || static_cast<int>(b.size()) > tree.num_vertices())
        throw std::invalid_argument("bipartite_in_star_tree: host too small");

    MinorModel m;
    m.pattern = gbip;
    m.host = cartesian_product(star, tree);
    int n2 = tree.num_vertices();
    m.branch_sets.assign(n, {});
    for (size_t i = 0; i < a.size(); ++i) {
        for (Vertex w = 0; w < n2; ++w)
            m.branch_sets[a[i]].push_back(product_vertex_id(static_cast<int>(i) + 1, w, n2));
    }
    for (size_t i = 0; i < b.size(); ++i)
        m.branch_sets[b[i]] = {product_vertex_id(0, static_cast<int>(i), n2)};
    finalize(m);
    return m;
}

GridModelCertificate grid_in_star_tree_cartesian(const Graph& tree, const Graph& star) {
    if (!is_tree(tree) || tree.num_vertices() == 0)
        throw std::invalid_argument("grid_in_star_tree_cartesian: not a tree");
    int n = tree.num_vertices();
    int leaves = star.num_vertices() - 1;
    int k = static_cast<int>(std::sqrt(2.0 * n));
    while (k > 1 && (k * k + 1) / 2 > std::min(n, leaves)) --k;
    if (k < 1) k = 1;
    Graph grid = make_grid(k);
    std::vector<Vertex> even, odd;
    for (int x = 1; x <= k; ++x)
        for (int y = 1; y <= k; ++y)
            ((x + y) % 2 == 0 ? even : odd).push_back(grid_vertex_id(k, x, y));
    // The larger parity class rides the tree copies at the leaves.
    if (even.size() < odd.size()) std::swap(even, odd);
    GridModelCertificate cert;
    cert.k = k;
    cert.model = bipartite_in_star_tree(grid, even, odd, star, tree);
    cert.provenance = "star-tree-cart";
    cert.parameters = {{"n", n}, {"k", k}};
    return cert;
}

GridModelCertificate grid_in_star_path_strong(int n) {
    if (n < 1) throw std::invalid_argument("grid_in_star_path_strong: need n >= 1");
    int k = std::max(1, static_cast<int>(std::sqrt(std::max(0, n - 2) * 5.0 / 2.0)));

    // Pick the diagonal phase with the fewest middle vertices, among
    // phases where every skipped diagonal has an adjacent strip with
    // middles (needed for k = 2, where the sparsest phase is degenerate).
    auto diag_size = [&](int kk, int j) { return kk - std::abs(kk - 1 - j); };
    auto pick_phase = [&](int kk) {
        int best_l = -1, best_alpha = -1;
        for (int l = 0; l < 5; ++l) {
            int alpha = 0;
            bool feasible = true;
            for (int j = 0; j <= 2 * kk - 2; ++j) {
                int role = ((j - l) % 5 + 5) % 5;
                if (role == 1 || role == 2) alpha += diag_size(kk, j);
                if (role == 4) {
                    bool spanned = false;
                    for (int mj : {j - 3, j - 2, j + 2, j + 3})
                        if (mj >= 0 && mj <= 2 * kk - 2) spanned = true;
                    feasible = feasible && spanned;
                }
            }
            if (feasible && (best_alpha < 0 || alpha < best_alpha)) {
                best_alpha = alpha;
                best_l = l;
            }
        }
        return std::pair<int, int>{best_l, best_alpha};
    };
    auto [best_l, best_alpha] = pick_phase(k);
    while (k > 1 && (best_l < 0 || best_alpha + 2 > n)) {
        --k;
        std::tie(best_l, best_alpha) = pick_phase(k);
    }

    GridModelCertificate cert;
    cert.k = k;
    cert.provenance = "star-path-strong";
    cert.parameters = {{"n", n}, {"k", k}, {"l", best_l}};
    MinorModel& m = cert.model;
    m.pattern = make_grid(k);
    Graph star = make_star(2 * k + 1);
    m.host = strong_product(star, make_path(n));
    auto host_id = [&](int sv, int pos) { return product_vertex_id(sv, pos, n); };
    m.branch_sets.assign(k * k, {});
    if (k == 1) {
        m.branch_sets[0] = {host_id(0, 0)};
        return cert;
    }

    const int l = best_l;
    auto role_of = [&](int j) { return ((j - l) % 5 + 5) % 5; };
    auto strip_of = [&](int j) {
        int d = j - l;
        return d >= 0 ? d / 5 : -((-d + 4) / 5);
    };
    auto cells_of_diag = [&](int j) {
        std::vector<Cell> out;
        for (int x = 1; x <= k; ++x) {
            int y = x + (k - 1 - j);
            if (y >= 1 && y <= k) out.push_back({x, y});
        }
        return out;
    };
    auto gid = [&](const Cell& c) { return grid_vertex_id(k, c.x, c.y); };

    // Middle diagonals: per strip, walk the zigzag and assign consecutive
    // path positions, reserving position 0 for boundary borrow.
    std::map<Cell, int> middle_pos;
    std::map<int, std::pair<int, int>> block;  // strip -> [lo, hi] positions
    int next_pos = 1;
    int a_min = strip_of(0) - 1, a_max = strip_of(2 * k - 2) + 1;
    for (int a = a_min; a <= a_max; ++a) {
        std::vector<Cell> cells;
        for (int j : {l + 5 * a + 1, l + 5 * a + 2})
            if (j >= 0 && j <= 2 * k - 2)
                for (const Cell& c : cells_of_diag(j)) cells.push_back(c);
        if (cells.empty()) continue;
        auto path = walk_induced_path(cells);
        block[a] = {next_pos, next_pos + static_cast<int>(path.size()) - 1};
        for (const Cell& c : path) middle_pos[c] = next_pos++;
    }
    if (next_pos > n)
        throw std::logic_error("grid_in_star_path_strong: middles overflow the path");

    // Skipped diagonals: each vertex gets one star leaf times the full
    // position span of the two adjacent strips. Leaf parity alternates
    // with the strip so consecutive skipped diagonals stay disjoint.
    auto skip_span = [&](int j) {
        int a = strip_of(j);
        int lo = -1, hi = -1;
        for (int aa : {a, a + 1})
            if (block.count(aa)) {
                auto [blo, bhi] = block[aa];
                lo = lo < 0 ? blo : std::min(lo, blo);
                hi = std::max(hi, bhi);
            }
        if (lo < 0) throw std::logic_error("grid_in_star_path_strong: skipped diagonal has no span");
        return std::pair<int, int>{lo, hi};
    };
    for (int j = 0; j <= 2 * k - 2; ++j) {
        if (role_of(j) != 4) continue;
        auto [lo, hi] = skip_span(j);
        int parity = ((strip_of(j) % 2) + 2) % 2;
        int idx = 1;
        for (const Cell& c : cells_of_diag(j)) {
            int leaf = parity == 0 ? 2 * idx : 2 * idx + 1;
            for (int pos = lo; pos <= hi; ++pos) m.branch_sets[gid(c)].push_back(host_id(leaf, pos));
            ++idx;
        }
    }

    // Outer diagonals: singletons on the hub copy, positions picked by
    // greedy interval assignment against the middle-neighbor constraints.
    struct Slot {
        int lo, hi;
        Cell cell;
    };
    std::vector<Slot> slots;
    for (int j = 0; j <= 2 * k - 2; ++j) {
        int role = role_of(j);
        if (role != 0 && role != 3) continue;
        for (const Cell& c : cells_of_diag(j)) {
            int lo = 0, hi = n - 1;
            for (Cell d : {Cell{c.x + 1, c.y}, Cell{c.x - 1, c.y}, Cell{c.x, c.y + 1},
                           Cell{c.x, c.y - 1}}) {
                if (d.x < 1 || d.x > k || d.y < 1 || d.y > k) continue;
                int dj = k - 1 - (d.y - d.x);
                int drole = role_of(dj);
                if (drole == 1 || drole == 2) {
                    lo = std::max(lo, middle_pos.at(d) - 1);
                    hi = std::min(hi, middle_pos.at(d) + 1);
                } else if (drole == 4) {
                    auto [slo, shi] = skip_span(dj);
                    lo = std::max(lo, slo - 1);
                    hi = std::min(hi, shi + 1);
                } else {
                    throw std::logic_error("grid_in_star_path_strong: outer-outer adjacency");
                }
            }
            slots.push_back({lo, hi, c});
        }
    }
    std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
        return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
    });
    std::set<int> taken;
    for (const Slot& s : slots) {
        int pos = -1;
        for (int q = s.lo; q <= s.hi; ++q)
            if (!taken.count(q)) {
                pos = q;
                break;
            }
        if (pos < 0) throw std::logic_error("grid_in_star_path_strong: outer placement failed");
        taken.insert(pos);
        m.branch_sets[gid(s.cell)] = {host_id(0, pos)};
    }

    for (const auto& [c, pos] : middle_pos) m.branch_sets[gid(c)] = {host_id(1, pos)};
    finalize(m);
    return cert;
}

SubgraphEmbedding grid_subgraph_in_P3_lex_path(int n) {
    if (n < 1) throw std::invalid_argument("grid_subgraph_in_P3_lex_path: need n >= 1");
    int k = std::max(1, static_cast<int>(std::sqrt(3.0 * n - 2)));
    while (k > 1 && (k * k + 2) / 3 > n) --k;

    SubgraphEmbedding e;
    e.pattern = make_grid(k);
    e.host = lexicographic_product(make_path(3), make_path(n));
    e.map.assign(k * k, -1);
    auto place = [&](const Cell& c, int copy, int pos) {
        if (pos >= n) throw std::logic_error("grid_subgraph_in_P3_lex_path: copy overflow");
        e.map[grid_vertex_id(k, c.x, c.y)] = copy * n + pos;
    };

    // Diagonal classes by d = y - x mod 3: class 0 goes to the middle
    // copy (any order), the positive zigzags to copy 0, the negative
    // zigzags to copy 2; zigzag order makes same-copy grid edges map to
    // consecutive path positions.
    int mid = 0;
    for (int x = 1; x <= k; ++x)
        for (int y = 1; y <= k; ++y)
            if ((((y - x) % 3) + 3) % 3 == 0) place({x, y}, 1, mid++);
    for (int sign : {1, -1}) {
        int pos = 0;
        for (int j = 0; 3 * j + 1 <= k - 1; ++j) {
            std::vector<Cell> cells;
            for (int d : {3 * j + 1, 3 * j + 2}) {
                if (d > k - 1) continue;
                for (int x = 1; x <= k; ++x) {
                    int y = x + sign * d;
                    if (y >= 1 && y <= k) cells.push_back({x, y});
                }
            }
            for (const Cell& c : walk_induced_path(cells)) place(c, sign > 0 ? 0 : 2, pos++);
        }
    }
    return e;
}

GridModelCertificate grid_in_tree_star_product(const RootedTree& t, const VerticalPathSet& paths,
                                               int s, int p) {
    if (s < 1 || p < 1) throw std::invalid_argument("grid_in_tree_star_product: need s, p >= 1");
    int npaths = s * s;
    if (static_cast<int>(paths.paths.size()) < npaths)
        throw std::invalid_argument("grid_in_tree_star_product: not enough paths");
    std::vector<std::vector<Vertex>> pv(npaths);  // trimmed, 0-based
    for (int i = 0; i < npaths; ++i) {
        const auto& vs = paths.paths[i].vertices;
        if (static_cast<int>(vs.size()) < 6 * p)
            throw std::invalid_argument("grid_in_tree_star_product: path too short");
        pv[i].assign(vs.begin(), vs.begin() + 6 * p);
    }

    int l = 5 * s * s;
    int k = s * p;
    GridModelCertificate cert;
    cert.k = k;
    cert.provenance = "star-times-star";
    cert.parameters = {{"s", s}, {"p", p}, {"l", l}};
    MinorModel& m = cert.model;
    m.pattern = make_grid(k);
    Graph star = make_subdivided_star(l, 2 * p);
    m.host = cartesian_product(t.graph(), star);
    int n2 = star.num_vertices();
    m.branch_sets.assign(k * k, {});

    const int hub = 0;
    // pvert(i, idx): idx-th (1-based) vertex of trimmed path i (1-based).
    auto pvert = [&](int i, int idx) { return pv[i - 1][idx - 1]; };
    auto arm = [&](int b, int j) { return substar_vertex_id(l, 2 * p, b, j); };
    auto hid = [&](Vertex tv, int sv) { return product_vertex_id(tv, sv, n2); };
    // Branch set of global grid column X, row Y (rows grow downward).
    auto set_of = [&](int X, int Y) -> std::vector<Vertex>& {
        return m.branch_sets[grid_vertex_id(k, X, Y)];
    };

    for (int gr = 1; gr <= s; ++gr)
        for (int gc = 1; gc <= s; ++gc) {
            int i = (gr - 1) * s + gc;
            auto local = [&](int c, int r) -> std::vector<Vertex>& {
                return set_of((gc - 1) * p + c, (gr - 1) * p + r);
            };
            // The p x p subgrid lives in arm block i, tree columns p+1..2p.
            for (int c = 1; c <= p; ++c)
                for (int r = 1; r <= p; ++r) local(c, r).push_back(hid(pvert(i, p + c), arm(i, r)));
            for (int q = 1; q <= p; ++q) {
                // Left escape: out along row q, up the column, hub anchor.
                auto& le = local(1, q);
                for (int idx = p; idx >= p - q + 1; --idx) le.push_back(hid(pvert(i, idx), arm(i, q)));
                for (int r = q - 1; r >= 1; --r) le.push_back(hid(pvert(i, p - q + 1), arm(i, r)));
                le.push_back(hid(pvert(i, p - q + 1), hub));
                // Top escape: straight to the hub row.
                local(q, 1).push_back(hid(pvert(i, p + q), hub));
                // Right escape.
                auto& re = local(p, q);
                for (int idx = 2 * p + 1; idx <= 2 * p + q; ++idx)
                    re.push_back(hid(pvert(i, idx), arm(i, q)));
                for (int r = q - 1; r >= 1; --r) re.push_back(hid(pvert(i, 2 * p + q), arm(i, r)));
                re.push_back(hid(pvert(i, 2 * p + q), hub));
                // Bottom escape: drop below the subgrid, swing right past
                // the right escapes, climb to the hub.
                auto& be = local(q, p);
                for (int r = p + 1; r <= 2 * p - q + 1; ++r) be.push_back(hid(pvert(i, p + q), arm(i, r)));
                for (int idx = p + q + 1; idx <= 4 * p - q + 1; ++idx)
                    be.push_back(hid(pvert(i, idx), arm(i, 2 * p - q + 1)));
                for (int r = 2 * p - q; r >= 1; --r)
                    be.push_back(hid(pvert(i, 4 * p - q + 1), arm(i, r)));
                be.push_back(hid(pvert(i, 4 * p - q + 1), hub));
            }
        }

    auto add_span = [&](std::vector<Vertex>& set, Vertex tv, int b, int rows) {
        for (int r = 1; r <= rows; ++r) set.push_back(hid(tv, arm(b, r)));
    };
    auto add_tree_row = [&](std::vector<Vertex>& set, Vertex u, Vertex w, int b, int row) {
        for (Vertex tv : tree_path(t, u, w)) set.push_back(hid(tv, arm(b, row)));
    };
    // True iff trimmed path j lies strictly above trimmed path i.
    auto above = [&](int j, int i) { return t.is_ancestor(pvert(j, 1), pvert(i, 1)); };

    for (int gr = 1; gr <= s; ++gr)
        for (int gc = 1; gc <= s; ++gc) {
            int i = (gr - 1) * s + gc;
            if (gc >= 2) {
                // Stitch the left boundary of subgrid i to the right
                // boundary of its left neighbor j through reserved blocks.
                int j = i - 1;
                bool related = paths.relation[i - 1][j - 1] == PathRelation::Related;
                int b1 = s * s + 4 * i - 3, b2 = s * s + 4 * i - 2;
                for (int q = 1; q <= p; ++q) {
                    auto& xs = set_of((gc - 1) * p + 1, (gr - 1) * p + q);
                    Vertex xk = pvert(i, p - q + 1), yk = pvert(j, 2 * p + q);
                    if (related) {
                        int row = above(j, i) ? p - q + 1 : q;
                        add_span(xs, xk, b1, row);
                        add_tree_row(xs, xk, yk, b1, row);
                        add_span(xs, yk, b1, row);
                    } else {
                        Vertex ck = pvert(i, 4 * p + q);
                        add_span(xs, xk, b1, q);
                        add_tree_row(xs, xk, ck, b1, q);
                        add_span(xs, ck, b1, q);
                        xs.push_back(hid(ck, hub));
                        add_span(xs, ck, b2, q);
                        add_tree_row(xs, ck, yk, b2, q);
                        add_span(xs, yk, b2, q);
                    }
                }
            }
            if (gr >= 2) {
                // Stitch the top boundary of subgrid i to the bottom
                // boundary of the subgrid above it.
                int j = i - s;
                bool related = paths.relation[i - 1][j - 1] == PathRelation::Related;
                int b3 = s * s + 4 * i - 1, b4 = s * s + 4 * i;
                for (int q = 1; q <= p; ++q) {
                    auto& xs = set_of((gc - 1) * p + q, (gr - 1) * p + 1);
                    Vertex xk = pvert(i, p + q), yk = pvert(j, 4 * p - q + 1);
                    if (related) {
                        int row = above(j, i) ? q : p - q + 1;
                        add_span(xs, xk, b3, row);
                        add_tree_row(xs, xk, yk, b3, row);
                        add_span(xs, yk, b3, row);
                    } else {
                        Vertex ck = pvert(i, 6 * p - q + 1);
                        int row = p - q + 1;
                        add_span(xs, xk, b3, row);
                        add_tree_row(xs, xk, ck, b3, row);
                        add_span(xs, ck, b3, row);
                        xs.push_back(hid(ck, hub));
                        add_span(xs, ck, b4, row);
                        add_tree_row(xs, ck, yk, b4, row);
                        add_span(xs, yk, b4, row);
                    }
                }
            }
        }

    finalize(m);
    return cert;
}

GridModelCertificate omega_sqrt_n_grid(const Graph& g1, const Graph& g2) {
    if (g1.num_vertices() == 0 || g2.num_vertices() == 0)
        throw std::invalid_argument("omega_sqrt_n_grid: empty factor");
    if (!is_connected(g1) || !is_connected(g2))
        throw std::invalid_argument("omega_sqrt_n_grid: factors must be connected");
    int n = std::min(g1.num_vertices(), g2.num_vertices());
    Graph host = cartesian_product(g1, g2);

    if (n == 1) {
        GridModelCertificate cert;
        cert.k = 1;
        cert.model.pattern = make_grid(1);
        cert.model.host = host;
        cert.model.branch_sets = {{0}};
        cert.provenance = "clique";
        cert.parameters = {{"n", 1}, {"k", 1}};
        return cert;
    }

    const double pi = std::numbers::pi;
    auto first_dense_class = [&](const RootedTree& t) {
        for (int i = 1; i <= t.order(); ++i) {
            double need = 1.5 * n / ((pi * i) * (pi * i));
            if (static_cast<double>(height_class(t, i).size()) >= need) return i;
        }
        throw std::logic_error("omega_sqrt_n_grid: no dense height class");
    };

    InducedSubgraph sub1 = spanning_tree_pruned(g1, n);
    InducedSubgraph sub2 = spanning_tree_pruned(g2, n);
    RootedTree t1(sub1.graph, 0), t2(sub2.graph, 0);
    int p1 = first_dense_class(t1), p2 = first_dense_class(t2);
    bool swapped = p2 > p1;
    const Graph& G1 = swapped ? g2 : g1;
    const Graph& G2 = swapped ? g1 : g2;
    if (swapped) {
        std::swap(sub1, sub2);
        std::swap(p1, p2);
        RootedTree tmp = t1;
        t1 = t2;
        t2 = tmp;
    }

    int l = static_cast<int>(std::ceil(1.5 * n / ((pi * p2) * (pi * p2))));
    l = std::max(1, std::min(l, static_cast<int>(height_class(t2, p2).size())));

    // S_{l,p2} as a minor of G2, through the pruned spanning tree.
    auto urp = unrelated_vertical_paths(t2, p2, l);
    MinorModel m_substar_in_G2 = compose_models(urp.model, subgraph_model(G2, sub2));
    MinorModel m_t1_in_G1 = subgraph_model(G1, sub1);

    // Clique route: prune T1 to l vertices, take K_l in T1' box S_l and
    // push the star through an arm of the subdivided star.
    InducedSubgraph sub1l = spanning_tree_pruned(sub1.graph, l);
    MinorModel mK = clique_in_product(sub1l.graph);
    MinorModel mG = clique_minor_to_grid_model(mK);
    MinorModel step = product_of_models(identity_model(sub1l.graph), star_in_substar(l, p2));
    MinorModel in_sub = compose_models(mG, step);
    MinorModel m_t1l_in_G1 = compose_models(subgraph_model(sub1.graph, sub1l), m_t1_in_G1);
    MinorModel best = compose_models(in_sub, product_of_models(m_t1l_in_G1, m_substar_in_G2));
    int best_k = static_cast<int>(std::sqrt(static_cast<double>(l)));
    while ((best_k + 1) * (best_k + 1) <= l) ++best_k;
    while (best_k * best_k > l) --best_k;
    std::string provenance = "clique";
    std::map<std::string, int> params = {{"n", n},   {"l", l},        {"p1", p1},
                                         {"p2", p2}, {"k", best_k},   {"s", 0},
                                         {"p", 0}};

    // Vertical-paths route: when the dense class sits high enough, s^2
    // disjoint order-p2 paths carry an (sp x sp) grid.
    if (p2 >= 6 && check_height_hypothesis(t1, p2)) {
        int p = p2 / 6;
        int s = static_cast<int>(std::min(std::sqrt(l / 5.0), std::sqrt(n / (4.0 * p2))));
        auto ps = disjoint_p_paths(t1, p2);
        while (s >= 1 && (5 * s * s > l || s * s > static_cast<int>(ps.paths.size()))) --s;
        if (s >= 1 && s * p > best_k) {
            auto cert0 = grid_in_tree_star_product(t1, ps, s, p);
            MinorModel chain2 =
                compose_models(substar_injection(5 * s * s, 2 * p, l, p2), m_substar_in_G2);
            best = compose_models(cert0.model, product_of_models(m_t1_in_G1, chain2));
            best_k = s * p;
            provenance = "star-times-star";
            params["k"] = best_k;
            params["s"] = s;
            params["p"] = p;
        }
    }

    if (swapped) best = swap_product_model(best, g1, g2);
    GridModelCertificate cert;
    cert.k = best_k;
    cert.model = std::move(best);
    cert.provenance = provenance;
    cert.parameters = params;
    return cert;
}

}  // namespace gridprod
