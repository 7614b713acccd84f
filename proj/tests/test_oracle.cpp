#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gridprod/graph.hpp"
#include "gridprod/minor_model.hpp"
#include "gridprod/oracle.hpp"

using namespace gridprod;

TEST_CASE("has_minor basic answers") {
    // K_1 is a minor of anything.
    auto r = has_minor(make_star(3), make_complete(1));
    CHECK(r.answer == Answer::Yes);
    CHECK(validate_model(*r.model).ok());

    // Trees are acyclic, 2x2 grid is C_4.
    CHECK(has_minor(random_tree(10, 3), make_grid(2)).answer == Answer::No);

    // P_4 box P_4 is the 4x4 grid.
    auto g = has_minor(cartesian_product(make_path(4), make_path(4)), make_grid(4));
    CHECK(g.answer == Answer::Yes);
    CHECK(validate_model(*g.model).ok());

    CHECK_THROWS(has_minor(make_path(2), make_path(3)));
}

TEST_CASE("has_minor finds contractions, not just subgraphs") {
    // K_4 is a minor (but not a subgraph) of the 3x3 grid... it is not:
    // the 3x3 grid is planar and K_4 is too; check the classic case
    // K_4 in the 2x2 grid plus a diagonal-free setting instead:
    // C_4 contracts to C_3? No: contraction of C_4 edge gives C_3. So
    // K_3 is a minor of C_4 = grid(2), though not a subgraph.
    auto r = has_minor(make_grid(2), make_complete(3));
    CHECK(r.answer == Answer::Yes);
    CHECK(validate_model(*r.model).ok());
    // But K_4 is not a minor of C_4 (cycle rank 1 < 3).
    CHECK(has_minor(make_grid(2), make_complete(4)).answer == Answer::No);
}

TEST_CASE("has_minor respects the budget") {
    SearchBudget tiny;
    tiny.max_nodes = 1;
    auto r = has_minor(make_grid(3), make_grid(3), tiny);
    CHECK(r.answer == Answer::BudgetExhausted);

    SearchBudget small_host;
    small_host.max_host_vertices = 4;
    CHECK(has_minor(make_grid(3), make_grid(2), small_host).answer == Answer::BudgetExhausted);
}

TEST_CASE("has_minor is monotone under host edge additions") {
    // Spot check: whenever host has pattern as a minor, so does host
    // plus one extra edge.
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Graph host = random_tree(8, seed);
        Graph pattern = make_path(4);
        auto base = has_minor(host, pattern);
        REQUIRE(base.answer != Answer::BudgetExhausted);
        for (int u = 0; u < 8 && base.answer == Answer::Yes; ++u)
            for (int v = u + 1; v < 8; ++v) {
                if (host.has_edge(u, v)) continue;
                auto edges = host.edges();
                edges.push_back({u, v});
                CHECK(has_minor(Graph(8, edges), pattern).answer == Answer::Yes);
            }
    }
}

TEST_CASE("gm_exact small cases") {
    for (int n : {2, 5, 9}) {
        auto r = gm_exact(make_path(n));
        CHECK(r.exact);
        CHECK(r.lower == 1);
    }
    for (int k : {1, 2, 3}) {
        auto r = gm_exact(make_grid(k));
        CHECK(r.exact);
        CHECK(r.lower == k);
        CHECK(validate_model(*r.witness).ok());
    }
    auto t = gm_exact(random_tree(12, 5));
    CHECK(t.exact);
    CHECK(t.lower == 1);
}

TEST_CASE("gm_exact brackets on exhaustion") {
    SearchBudget tiny;
    tiny.max_nodes = 2;
    auto r = gm_exact(make_grid(3), tiny);
    CHECK_FALSE(r.exact);
    CHECK(r.lower <= 3);
    CHECK(r.upper == 3);
}

TEST_CASE("treewidth_exact") {
    for (int n : {2, 5, 9}) CHECK(treewidth_exact(make_path(n)).width == 1);
    for (int q : {2, 3, 5}) CHECK(treewidth_exact(make_complete(q)).width == q - 1);
    auto g3 = treewidth_exact(make_grid(3));
    CHECK(g3.width == 3);
    CHECK(validate_tree_decomposition(make_grid(3), g3.decomposition).ok());
    CHECK(decomposition_width(g3.decomposition) == 3);
    CHECK(treewidth_exact(make_star(6)).width == 1);

    SearchBudget small;
    small.max_host_vertices = 4;
    CHECK(treewidth_exact(make_grid(3), small).answer == Answer::BudgetExhausted);
}

TEST_CASE("treewidth upper-bounds gm") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        Graph g = cartesian_product(random_tree(3, seed), random_tree(4, seed + 10));
        auto gm = gm_exact(g);
        auto tw = treewidth_exact(g);
        REQUIRE(gm.exact);
        REQUIRE(tw.answer == Answer::Yes);
        CHECK(gm.lower <= tw.width);
    }
}

TEST_CASE("decomposition checker rejects tampering") {
    auto r = treewidth_exact(make_path(4));
    auto td = r.decomposition;
    REQUIRE(validate_tree_decomposition(make_path(4), td).ok());
    td.bags[0].clear();
    CHECK_FALSE(validate_tree_decomposition(make_path(4), td).ok());
}

TEST_CASE("min_fvs") {
    CHECK(min_fvs(random_tree(9, 2)).size == 0);
    CHECK(min_fvs(make_grid(2)).size == 1);  // C_4
    auto g3 = min_fvs(make_grid(3));
    CHECK(g3.size >= 2);
    CHECK(g3.size <= 4);
    // Witness really is a feedback vertex set: removing it leaves a forest.
    Graph g = make_grid(3);
    std::vector<Vertex> keep;
    for (int v = 0; v < 9; ++v)
        if (std::find(g3.witness.begin(), g3.witness.end(), v) == g3.witness.end())
            keep.push_back(v);
    auto sub = induced_subgraph(g, keep);
    CHECK(sub.graph.num_edges() <= sub.graph.num_vertices() - 1);
}

TEST_CASE("bramble_order") {
    Bramble singleton{make_path(1), {{0}}};
    CHECK(bramble_order(singleton).order == 1);
    CHECK(bramble_order(product_bramble(make_path(2), make_path(2))).order >= 3);
    CHECK(bramble_order(product_bramble(make_path(3), make_path(3))).order >= 4);
    Bramble bad{make_path(4), {{0}, {3}}};
    CHECK_THROWS(bramble_order(bad));
}
