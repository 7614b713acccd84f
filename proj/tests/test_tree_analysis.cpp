#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "gridprod/graph.hpp"
#include "gridprod/minor_model.hpp"
#include "gridprod/tree_analysis.hpp"

using namespace gridprod;

TEST_CASE("RootedTree basics on a path rooted at one end") {
    RootedTree t(make_path(5), 0);
    CHECK(t.parent(0) == -1);
    CHECK(t.parent(4) == 3);
    CHECK(t.depth(4) == 4);
    CHECK(t.height(0) == 5);
    CHECK(t.height(4) == 1);
    CHECK(t.is_ancestor(1, 4));
    CHECK_FALSE(t.is_ancestor(4, 1));
    CHECK(t.related(0, 3));
    CHECK_THROWS(RootedTree(make_grid(2), 0));
    CHECK_THROWS(RootedTree(make_path(3), 5));
}

TEST_CASE("heights on a star rooted at the center") {
    RootedTree t(make_star(4), 0);
    CHECK(t.height(0) == 2);
    for (Vertex v = 1; v <= 4; ++v) CHECK(t.height(v) == 1);
    CHECK(height_class(t, 1).size() == 4);
    CHECK(height_class(t, 2) == std::vector<Vertex>{0});
    CHECK(height_class(t, 3).empty());
    CHECK_FALSE(t.related(1, 2));
}

TEST_CASE("heights on a path rooted at the middle") {
    RootedTree t(make_path(5), 2);
    CHECK(t.height(2) == 3);
    CHECK(height_class(t, 2) == std::vector<Vertex>{1, 3});
    CHECK(height_class(t, 1) == std::vector<Vertex>{0, 4});
}

TEST_CASE("certify rejects bad path sets") {
    RootedTree t(make_path(5), 0);
    // Not vertical: skips a vertex.
    CHECK_THROWS(VerticalPathSet::certify(t, {VerticalPath{{0, 2}}}));
    // Not disjoint.
    CHECK_THROWS(VerticalPathSet::certify(t, {VerticalPath{{0, 1}}, VerticalPath{{1, 2}}}));
    // Wrong orientation (child before parent).
    CHECK_THROWS(VerticalPathSet::certify(t, {VerticalPath{{2, 1}}}));
    auto ok = VerticalPathSet::certify(t, {VerticalPath{{0, 1}}, VerticalPath{{3, 4}}});
    CHECK(ok.relation[0][1] == PathRelation::Related);
}

TEST_CASE("certify rejects mixed pairs") {
    // Spider: root 0 with arms 1-2 and 3-4; path {0,1} vs {3,4} is mixed
    // only if some pair is related and some not; here 0 is an ancestor of
    // 3 but 1 is unrelated to 3, so the pair is mixed.
    Graph spider(5, {{0, 1}, {1, 2}, {0, 3}, {3, 4}});
    RootedTree t(spider, 0);
    CHECK_THROWS(VerticalPathSet::certify(t, {VerticalPath{{0, 1}}, VerticalPath{{3, 4}}}));
    auto ok = VerticalPathSet::certify(t, {VerticalPath{{1, 2}}, VerticalPath{{3, 4}}});
    CHECK(ok.relation[0][1] == PathRelation::Unrelated);
}

TEST_CASE("unrelated_vertical_paths yields a valid subdivided-star model") {
    // Balanced binary-ish tree: root 0, children 1,2, grandchildren 3..6.
    Graph t(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
    RootedTree rt(t, 0);
    auto res = unrelated_vertical_paths(rt, 1);
    CHECK(res.paths.paths.size() == 4);
    CHECK(res.model.pattern == make_subdivided_star(4, 1));
    CHECK(validate_model(res.model).ok());
    for (size_t i = 0; i < res.paths.paths.size(); ++i)
        for (size_t j = i + 1; j < res.paths.paths.size(); ++j)
            CHECK(res.paths.relation[i][j] == PathRelation::Unrelated);

    auto res2 = unrelated_vertical_paths(rt, 2, 2);
    CHECK(res2.model.pattern == make_subdivided_star(2, 2));
    CHECK(validate_model(res2.model).ok());
}

TEST_CASE("unrelated_vertical_paths corner cases") {
    RootedTree path(make_path(4), 0);
    // Height class 4 = {root}; the whole tree is the single path, so the
    // root of the pattern star has nowhere to live.
    CHECK_THROWS(unrelated_vertical_paths(path, 4));
    // i = 3 works: path 0-1-2 plus root set from the leftovers... the root
    // heads the path again but vertex 3 is off-path? No: 3 is a child of
    // 2, not a root neighbor. Exercise via a tree with a spare branch.
    Graph spare(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}});
    RootedTree rt(spare, 0);
    auto res = unrelated_vertical_paths(rt, 4);
    CHECK(res.model.pattern == make_subdivided_star(1, 4));
    CHECK(validate_model(res.model).ok());
    CHECK_THROWS(unrelated_vertical_paths(rt, 9));
}

TEST_CASE("check_height_hypothesis") {
    // Star rooted at center: n_1 = l is huge, so the hypothesis fails
    // already at i = 1 for p >= 2 once 1.5 n / pi^2 < l.
    RootedTree star(make_star(20), 0);
    CHECK(check_height_hypothesis(star, 1));  // vacuous
    CHECK_FALSE(check_height_hypothesis(star, 2));
    // Path rooted at an end: every class has size 1, so the bound at
    // class i reads (pi i)^2 <= 1.5 n.
    CHECK(check_height_hypothesis(RootedTree(make_path(160), 0), 5));
    CHECK_FALSE(check_height_hypothesis(RootedTree(make_path(40), 0), 5));
    CHECK(check_height_hypothesis(RootedTree(make_path(40), 0), 3));
    CHECK_FALSE(check_height_hypothesis(RootedTree(make_path(5), 0), 2));
}

TEST_CASE("disjoint_p_paths on paths") {
    RootedTree t(make_path(8), 0);
    auto ps = disjoint_p_paths(t, 2);
    CHECK(static_cast<int>(ps.paths.size()) >= 1);
    for (const auto& p : ps.paths) CHECK(p.order() == 2);

    RootedTree t160(make_path(160), 0);
    auto ps160 = disjoint_p_paths(t160, 4);
    CHECK(static_cast<int>(ps160.paths.size()) >= 10);  // ceil(n/4p)
    CHECK(disjoint_p_paths(RootedTree(make_path(1), 0), 1).paths.size() == 1);
}

TEST_CASE("disjoint_p_paths on random trees meets the count bound") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        int n = 10 + static_cast<int>(seed) * 3;
        RootedTree t(random_tree(n, seed), 0);
        for (int p = 1; p <= 4; ++p) {
            if (!check_height_hypothesis(t, p)) continue;
            auto ps = disjoint_p_paths(t, p);
            int need = (n + 4 * p - 1) / (4 * p);
            CHECK(static_cast<int>(ps.paths.size()) >= need);
            for (const auto& path : ps.paths) CHECK(path.order() == p);
        }
    }
}

TEST_CASE("disjoint_p_paths rejects a violated hypothesis") {
    CHECK_THROWS(disjoint_p_paths(RootedTree(make_star(20), 0), 2));
}
