#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "psombor/extremal.hpp"
#include "psombor/spectral.hpp"
#include "test_support.hpp"

using namespace psombor;
using psombor::testing::isomorphic;

namespace {

// Free trees counted by brute force: every (n-1)-edge subset of K_n that is
// connected, grouped by isomorphism.
std::size_t brute_force_tree_count(std::size_t n) {
    std::vector<Edge> all;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) all.push_back({u, v});
    std::vector<Graph> reps;
    std::vector<bool> pick(all.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(n - 1), true);
    do {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (pick[i]) edges.push_back(all[i]);
        const Graph g = Graph::from_edges(n, edges);
        if (!is_connected(g)) continue;
        if (std::none_of(reps.begin(), reps.end(), [&](const Graph& r) { return isomorphic(r, g); })) reps.push_back(g);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return reps.size();
}

Graph relabel(const Graph& g, std::uint64_t seed) {
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
    return Graph::from_edges(g.order(), edges);
}

}  // namespace

TEST_CASE("tree counts") {
    const std::vector<std::size_t> known{1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    for (std::size_t n = 2; n <= 12; ++n) CHECK(enumerate_trees(n).size() == known[n - 2]);
    for (std::size_t n = 2; n <= 7; ++n) CHECK(enumerate_trees(n).size() == brute_force_tree_count(n));
    CHECK(enumerate_trees(8, 4).size() == 18);
    CHECK(enumerate_trees(6, 2).size() == 1);
    CHECK_THROWS(enumerate_trees(1));
    CHECK_THROWS(enumerate_trees(13));
}

TEST_CASE("the two enumeration routes agree") {
    for (std::size_t n = 4; n <= 9; ++n) {
        std::set<std::string> prufer;
        std::set<std::string> grown;
        for (const Graph& t : trees_by_prufer(n)) prufer.insert(tree_canonical_key(t));
        for (const Graph& t : trees_by_leaf_extension(n)) grown.insert(tree_canonical_key(t));
        CHECK(prufer == grown);
    }
    CHECK(trees_by_leaf_extension(10).size() == 106);
    CHECK_THROWS(trees_by_prufer(10));
}

TEST_CASE("catalog invariants") {
    for (std::size_t n = 2; n <= 10; ++n) {
        const TreeCatalog cat = enumerate_trees(n);
        REQUIRE(cat.canonical_keys.size() == cat.size());
        std::set<std::string> keys(cat.canonical_keys.begin(), cat.canonical_keys.end());
        CHECK(keys.size() == cat.size());
        for (std::size_t i = 0; i < cat.size(); ++i) {
            const Graph& t = cat.trees[i];
            CHECK(t.order() == n);
            CHECK(is_tree(t));
            CHECK(canonical_tree(t) == t);
            CHECK(tree_canonical_key(t) == cat.canonical_keys[i]);
        }
    }
    const TreeCatalog small = enumerate_trees(4);
    CHECK(std::any_of(small.trees.begin(), small.trees.end(), [](const Graph& t) { return isomorphic(t, path_graph(4)); }));
    CHECK(std::any_of(small.trees.begin(), small.trees.end(), [](const Graph& t) { return isomorphic(t, star_graph(4)); }));
}

TEST_CASE("canonical forms ignore labels") {
    CHECK(tree_canonical_key(path_graph(3)) == "(()())");
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph t = random_tree(11, seed);
        const Graph u = relabel(t, seed + 1000);
        CHECK(tree_code(t) == tree_code(u));
        CHECK(tree_canonical_key(t) == tree_canonical_key(u));
        CHECK(canonical_tree(t) == canonical_tree(u));
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph t = random_tree(7, seed);
        CHECK(isomorphic(canonical_tree(t), t));
    }
    CHECK_FALSE(tree_code(path_graph(6)) == tree_code(star_graph(6)));
    CHECK_FALSE(is_tree(cycle_graph(4)));
    CHECK_FALSE(is_tree(disjoint_union(path_graph(2), path_graph(2))));
    CHECK_THROWS_AS(tree_code(cycle_graph(4)), GraphError);
}

TEST_CASE("path and star are the unique extremes") {
    const auto four = verify_tree_extremes(4, 2.0);
    CHECK(four.path_radius == doctest::Approx(4.059965).epsilon(1e-6));
    CHECK(four.star_radius == doctest::Approx(std::sqrt(30.0)));
    CHECK(four.ok());

    const auto five = verify_tree_extremes(5, 2.0);
    CHECK(five.tree_count == 3);
    CHECK(five.ok());

    const auto eight = verify_tree_extremes(8, 1.0);
    CHECK(eight.tree_count == 23);
    CHECK(eight.min_is_path);
    CHECK(eight.max_is_star);
    CHECK(eight.min_attained == 1);
    CHECK(eight.max_attained == 1);
    CHECK(eight.hard);

    CHECK_FALSE(verify_tree_extremes(6, 0.5).hard);
}

TEST_CASE("bridge shift raises the spectral radius") {
    SUBCASE("P4") {
        const ShiftReport r = shift_experiment(path_graph(4), 2.0);
        CHECK(r.applicable);
        CHECK(r.perron_positive);
        REQUIRE(r.shifts.size() == 1);
        CHECK(r.radius == doctest::Approx(4.059965).epsilon(1e-6));
        CHECK(r.shifts[0].radius_after == doctest::Approx(5.477226).epsilon(1e-6));
        CHECK(r.shifts[0].increased);
        CHECK(isomorphic(r.shifts[0].result, star_graph(4)));
        CHECK(r.shifts[0].x_u >= r.shifts[0].x_v);
    }
    SUBCASE("two triangles joined by a bridge") {
        const Graph g = psombor::testing::two_triangles_with_bridge();
        for (double p : {1.0, 2.0, 3.0}) {
            const ShiftReport r = shift_experiment(g, p);
            REQUIRE(r.shifts.size() == 1);
            CHECK(r.shifts[0].radius_after > r.radius * (1.0 + 1e-10));
            CHECK(r.ok());
            const auto after = sombor_spectrum(r.shifts[0].result, p);
            CHECK(after.largest() == doctest::Approx(r.shifts[0].radius_after));
        }
    }
    SUBCASE("random trees") {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const Graph t = random_tree(9, seed);
            for (double p : {1.0, 2.0, 3.0}) {
                const ShiftReport r = shift_experiment(t, p);
                CHECK(r.perron_positive);
                CHECK(r.ok());
            }
        }
    }
    SUBCASE("no eligible edge") {
        CHECK_FALSE(shift_experiment(star_graph(6), 2.0).applicable);
        CHECK_FALSE(shift_experiment(cycle_graph(6), 2.0).applicable);
        CHECK_FALSE(shift_experiment(disjoint_union(path_graph(4), path_graph(4)), 2.0).applicable);
        CHECK(shift_experiment(star_graph(6), 2.0).ok());
    }
}

TEST_CASE("repeated shifts on a tree end at the star") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph t = random_tree(10, seed);
        const ShiftChain chain = shift_until_stable(t, 2.0);
        CHECK(chain.monotone);
        CHECK(is_tree(chain.final_graph));
        CHECK(chain.final_graph.max_degree() == 9);
        CHECK(std::is_sorted(chain.radii.begin(), chain.radii.end()));
    }
}
