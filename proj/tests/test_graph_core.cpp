#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "gridprod/graph.hpp"
#include "gridprod/serialize.hpp"

using namespace gridprod;

namespace {

// Independent oracle: count grid edges straight from the |x-x'|+|y-y'|=1
// rule over all coordinate pairs.
int grid_edges_by_rule(int k) {
    int count = 0;
    for (int x = 1; x <= k; ++x)
        for (int y = 1; y <= k; ++y)
            for (int x2 = 1; x2 <= k; ++x2)
                for (int y2 = 1; y2 <= k; ++y2)
                    if (std::abs(x - x2) + std::abs(y - y2) == 1) ++count;
    return count / 2;
}

// Independent oracle: enumerate a product's edge set directly from the
// adjacency clauses, bypassing the library's product builder.
enum class ProductKind { Cartesian, Strong, Lex };

std::set<Edge> product_edges_by_rule(const Graph& g1, const Graph& g2, ProductKind kind) {
    std::set<Edge> out;
    int n2 = g2.num_vertices();
    for (int u = 0; u < g1.num_vertices() * n2; ++u)
        for (int v = 0; v < g1.num_vertices() * n2; ++v) {
            if (u == v) continue;
            auto [u1, u2] = product_vertex_pair(u, n2);
            auto [v1, v2] = product_vertex_pair(v, n2);
            bool adj = false;
            bool c1 = u1 == v1 && g2.has_edge(u2, v2);
            bool c2 = u2 == v2 && g1.has_edge(u1, v1);
            bool c3 = g1.has_edge(u1, v1) && g2.has_edge(u2, v2);
            switch (kind) {
                case ProductKind::Cartesian: adj = c1 || c2; break;
                case ProductKind::Strong: adj = c1 || c2 || c3; break;
                case ProductKind::Lex: adj = g1.has_edge(u1, v1) || c1; break;
            }
            if (adj) out.insert({std::min(u, v), std::max(u, v)});
        }
    return out;
}

std::set<Edge> edge_set(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

bool isomorphic_by_swap(const Graph& ab, const Graph& ba, int na, int nb) {
    if (ab.num_vertices() != ba.num_vertices()) return false;
    std::set<Edge> mapped;
    for (auto [u, v] : ba.edges()) {
        auto [b1, a1] = product_vertex_pair(u, na);
        auto [b2, a2] = product_vertex_pair(v, na);
        int mu = product_vertex_id(a1, b1, nb), mv = product_vertex_id(a2, b2, nb);
        mapped.insert({std::min(mu, mv), std::max(mu, mv)});
    }
    return mapped == edge_set(ab);
}

}  // namespace

TEST_CASE("graph invariants are enforced") {
    CHECK_THROWS(Graph(3, {{0, 0}}));
    CHECK_THROWS(Graph(3, {{0, 1}, {1, 0}}));
    CHECK_THROWS(Graph(3, {{0, 3}}));
    Graph g(3, {{2, 0}, {0, 1}});
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(1, 2));
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
}

TEST_CASE("make_grid") {
    CHECK_THROWS(make_grid(0));
    Graph g1 = make_grid(1);
    CHECK(g1.num_vertices() == 1);
    CHECK(g1.num_edges() == 0);
    Graph g2 = make_grid(2);
    CHECK(g2.num_vertices() == 4);
    CHECK(g2.num_edges() == 4);
    for (int v = 0; v < 4; ++v) CHECK(g2.degree(v) == 2);  // a 4-cycle
    Graph g4 = make_grid(4);
    CHECK(g4.num_vertices() == 16);
    CHECK(g4.num_edges() == grid_edges_by_rule(4));
    CHECK(g4.num_edges() == 24);
    for (int k = 1; k <= 6; ++k) CHECK(make_grid(k).num_edges() == grid_edges_by_rule(k));
}

TEST_CASE("make_star") {
    CHECK_THROWS(make_star(0));
    CHECK(make_star(1).num_edges() == 1);
    Graph s3 = make_star(3);
    std::vector<int> degs;
    for (int v = 0; v < 4; ++v) degs.push_back(s3.degree(v));
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{1, 1, 1, 3});
    Graph s5 = make_star(5);
    CHECK(s5.num_vertices() == 6);
    CHECK(s5.num_edges() == 5);
    CHECK(s5.degree(0) == 5);
}

TEST_CASE("make_subdivided_star") {
    CHECK_THROWS(make_subdivided_star(0, 1));
    CHECK_THROWS(make_subdivided_star(1, 0));
    // S_{1,n-1} is a path on n vertices.
    Graph s = make_subdivided_star(1, 5);
    CHECK(s.num_vertices() == 6);
    CHECK(s.num_edges() == 5);
    int deg1 = 0, deg2 = 0;
    for (int v = 0; v < 6; ++v) (s.degree(v) == 1 ? deg1 : deg2)++;
    CHECK(deg1 == 2);
    // S_{n,1} is the star S_n.
    CHECK(make_subdivided_star(4, 1) == make_star(4));
    // S_{2,3}: 7 vertices, 6 edges, two leaves.
    Graph s23 = make_subdivided_star(2, 3);
    CHECK(s23.num_vertices() == 7);
    CHECK(s23.num_edges() == 6);
    int leaves = 0;
    for (int v = 0; v < 7; ++v)
        if (s23.degree(v) == 1) ++leaves;
    CHECK(leaves == 2);
}

TEST_CASE("cartesian product") {
    CHECK(cartesian_product(make_path(4), make_path(4)) == make_grid(4));
    Graph g = make_subdivided_star(2, 2);
    CHECK(cartesian_product(make_path(1), g) == g);
    Graph sp = cartesian_product(make_star(3), make_path(4));
    CHECK(sp.num_vertices() == 16);
    CHECK(sp.num_edges() == 24);
}

TEST_CASE("strong product") {
    Graph k4 = strong_product(make_path(2), make_path(2));
    CHECK(k4 == make_complete(4));
    Graph g = make_grid(2);
    CHECK(strong_product(make_path(1), g) == g);
    CHECK(strong_product(make_path(4), make_path(4)).num_edges() == 42);
}

TEST_CASE("lexicographic product") {
    Graph g = make_subdivided_star(3, 2);
    CHECK(lexicographic_product(make_path(1), g) == g);
    CHECK(lexicographic_product(make_star(1), make_path(2)) == make_complete(4));
    Graph p3p2 = lexicographic_product(make_path(3), make_path(2));
    CHECK(p3p2.num_vertices() == 6);
    CHECK(p3p2.num_edges() == 11);
}

TEST_CASE("product edge sets match direct rule enumeration and nest") {
    std::vector<Graph> factors = {make_path(3), make_star(2), make_grid(2),
                                  random_tree(5, 11), random_tree(6, 3)};
    for (const auto& g1 : factors)
        for (const auto& g2 : factors) {
            Graph c = cartesian_product(g1, g2);
            Graph s = strong_product(g1, g2);
            Graph l = lexicographic_product(g1, g2);
            CHECK(edge_set(c) == product_edges_by_rule(g1, g2, ProductKind::Cartesian));
            CHECK(edge_set(s) == product_edges_by_rule(g1, g2, ProductKind::Strong));
            CHECK(edge_set(l) == product_edges_by_rule(g1, g2, ProductKind::Lex));
            int n1 = g1.num_vertices(), n2 = g2.num_vertices();
            int e1 = g1.num_edges(), e2 = g2.num_edges();
            CHECK(c.num_edges() == n1 * e2 + n2 * e1);
            CHECK(s.num_edges() == n1 * e2 + n2 * e1 + 2 * e1 * e2);
            CHECK(l.num_edges() == e1 * n2 * n2 + n1 * e2);
            auto ce = edge_set(c), se = edge_set(s), le = edge_set(l);
            CHECK(std::includes(se.begin(), se.end(), ce.begin(), ce.end()));
            CHECK(std::includes(le.begin(), le.end(), se.begin(), se.end()));
        }
}

TEST_CASE("cartesian and strong products commute up to coordinate swap; lex does not") {
    Graph a = make_star(2), b = make_path(3);
    CHECK(isomorphic_by_swap(cartesian_product(a, b), cartesian_product(b, a),
                             a.num_vertices(), b.num_vertices()));
    CHECK(isomorphic_by_swap(strong_product(a, b), strong_product(b, a), a.num_vertices(),
                             b.num_vertices()));
    // Witness of lex non-commutativity: P_2 . P_3 and P_3 . P_2 differ
    // even as abstract graphs (13 vs 11 edges).
    Graph l1 = lexicographic_product(make_path(2), b), l2 = lexicographic_product(b, make_path(2));
    CHECK(l1.num_edges() == 13);
    CHECK(l2.num_edges() == 11);
}

TEST_CASE("random_tree") {
    CHECK_THROWS(random_tree(0, 1));
    CHECK(random_tree(1, 5).num_vertices() == 1);
    CHECK(random_tree(2, 5) == make_path(2));
    CHECK(random_tree(10, 7) == random_tree(10, 7));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph t = random_tree(9, seed);
        CHECK(t.num_edges() == 8);
        CHECK(is_connected(t));
    }
    CHECK(random_tree(10, 1) != random_tree(10, 2));
}

TEST_CASE("is_connected conventions") {
    CHECK(is_connected(Graph(0, {})));
    CHECK(is_connected(make_path(1)));
    CHECK_FALSE(is_connected(Graph(2, {})));
    CHECK(is_connected(make_grid(3)));
}

TEST_CASE("spanning_tree_pruned") {
    Graph t = random_tree(8, 4);
    auto full = spanning_tree_pruned(t, 8);
    CHECK(full.graph == t);
    auto one = spanning_tree_pruned(make_grid(3), 1);
    CHECK(one.graph.num_vertices() == 1);
    auto five = spanning_tree_pruned(make_grid(3), 5);
    CHECK(is_tree(five.graph));
    for (auto [u, v] : five.graph.edges())
        CHECK(make_grid(3).has_edge(five.original[u], five.original[v]));
    CHECK_THROWS(spanning_tree_pruned(Graph(2, {}), 1));
    CHECK_THROWS(spanning_tree_pruned(make_path(3), 4));
}

TEST_CASE("graph JSON round trip is canonical") {
    Graph g = strong_product(make_star(2), make_path(3));
    auto j = graph_to_json(g);
    CHECK(graph_from_json(j) == g);
    auto prev = std::pair<int, int>{-1, -1};
    for (const auto& e : j["edges"]) {
        auto cur = std::pair<int, int>{e[0].get<int>(), e[1].get<int>()};
        CHECK(cur.first < cur.second);
        CHECK(prev < cur);
        prev = cur;
    }
}

TEST_CASE("dot export mentions every edge") {
    Graph g = cartesian_product(make_path(2), make_path(3));
    std::string dot = graph_to_dot(g, 3);
    CHECK(dot.find("graph G") != std::string::npos);
    CHECK(dot.find("label=\"0,0\"") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
}
