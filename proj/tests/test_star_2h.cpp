#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "starcol/gen.hpp"
#include "starcol/oracle.hpp"
#include "starcol/star_2h.hpp"

using namespace starcol;

namespace {

TwoHProfile profile(std::vector<int> n) {
    TwoHProfile p;
    p.t = static_cast<int>(n.size());
    p.n = std::move(n);
    std::sort(p.n.begin(), p.n.end());
    return p;
}

// colors on the non-spoke edges at neighbor i of the materialized tree
std::set<int> leaf_colors(const Color2hResult& res, int i) {
    std::set<int> cs;
    for (const auto& [e, c] : res.coloring.assignment)
        if (e.first == i && e.second > res.tree.degree(0)) cs.insert(c);
    return cs;
}

}  // namespace

TEST_CASE("min_k") {
    CHECK(min_k(profile({2, 3, 3})) == 2);
    CHECK(min_k(profile({0, 0, 0, 0, 0})) == 0);
    CHECK(min_k(profile({2, 2, 2})) == 1);
    CHECK(min_k(profile({1, 1})) == 1);
    CHECK_THROWS_AS(min_k(TwoHProfile{}), DomainError);
}

TEST_CASE("min_k is consistent with the exhaustive oracle") {
    // every profile small enough for the bruteforce guard
    for (int t = 1; t <= 6; ++t) {
        std::vector<int> n(static_cast<size_t>(t), 0);
        auto sweep = [&](auto&& self, int pos, int lo) -> void {
            if (pos == t) {
                TwoHProfile p = profile(n);
                if (p.t + p.sigma() > 16) return;  // oracle guard
                CAPTURE(p.n);
                REQUIRE(p.t + min_k(p) == exact_index_bruteforce(materialize_profile(p)));
                return;
            }
            for (int v = lo; v <= 4; ++v) {
                n[static_cast<size_t>(pos)] = v;
                self(self, pos + 1, v);
            }
        };
        sweep(sweep, 0, 0);
    }
}

TEST_CASE("color_2h on the running example") {
    Color2hResult res = color_2h(profile({2, 3, 3}));
    CHECK(res.index == 5);
    CHECK(res.coloring.palette_size == 5);
    CHECK(leaf_colors(res, 1) == std::set<int>{4, 5});
    CHECK(leaf_colors(res, 2) == std::set<int>{1, 4, 5});
    CHECK(leaf_colors(res, 3) == std::set<int>{1, 4, 5});
    CHECK(validate_coloring(res.tree, res.coloring).valid);
}

TEST_CASE("color_2h degenerate shapes") {
    SECTION("stars take exactly t colors on the spokes") {
        Color2hResult res = color_2h(profile({0, 0, 0, 0}));
        CHECK(res.index == 4);
        for (int i = 1; i <= 4; ++i) CHECK(res.coloring.get(0, i) == i);
    }
    SECTION("the four-edge path needs three colors") {
        Color2hResult res = color_2h(profile({1, 1}));
        CHECK(res.index == 3);
        CHECK(validate_coloring(res.tree, res.coloring).valid);
        CHECK(res.index == exact_index_bruteforce(res.tree));
    }
}

TEST_CASE("coloring_from_realization") {
    SECTION("the example realization reproduces the example coloring") {
        auto out = realize({{2, 1}, {3, 2}, {3, 3}, {0, 4}, {0, 5}});
        REQUIRE(out.realizable);
        TwoHProfile p = profile({2, 3, 3});
        EdgeColoring c = coloring_from_realization(out.graph, p);
        CHECK(c.palette_size == 5);
        Tree t = materialize_profile(p);
        CHECK(validate_coloring(t, c).valid);
        for (int i = 1; i <= 3; ++i) CHECK(c.get(0, i) == i);
    }
    SECTION("empty graph and all-zero profile color only the spokes") {
        TwoHProfile p = profile({0, 0, 0});
        OrientedGraph g({1, 2, 3});
        EdgeColoring c = coloring_from_realization(g, p);
        CHECK(c.size() == 3);
        for (int i = 1; i <= 3; ++i) CHECK(c.get(0, i) == i);
    }
    SECTION("outdegree mismatch is rejected") {
        OrientedGraph g({1, 2});
        g.add_edge(1, 2);
        CHECK_THROWS_AS(coloring_from_realization(g, profile({0, 0})), ProfileMismatch);
    }
}

TEST_CASE("realization_from_coloring") {
    SECTION("recovers the outdegree sequence of the example") {
        Color2hResult res = color_2h(profile({2, 3, 3}));
        OrientedGraph g = realization_from_coloring(res.coloring, profile({2, 3, 3}));
        std::vector<int> outdegs;
        for (int v = 1; v <= 5; ++v) outdegs.push_back(g.out_degree(v));
        CHECK(outdegs == std::vector<int>{2, 3, 3, 0, 0});
        g.check_invariants();
    }
    SECTION("a star coloring maps to the empty graph") {
        Color2hResult res = color_2h(profile({0, 0, 0, 0}));
        OrientedGraph g = realization_from_coloring(res.coloring, profile({0, 0, 0, 0}));
        CHECK(g.edge_count() == 0);
    }
    SECTION("a bi-colored path is rejected") {
        // spokes colored 1,2; both leaf edges reuse the opposite spoke color
        TwoHProfile p = profile({1, 1});
        EdgeColoring bad;
        bad.palette_size = 2;
        bad.set(0, 1, 1);
        bad.set(0, 2, 2);
        bad.set(1, 3, 2);
        bad.set(2, 4, 1);
        CHECK_THROWS_AS(realization_from_coloring(bad, p), NotStarColoring);
    }
}

TEST_CASE("realization round-trip preserves the digraph") {
    std::mt19937_64 seq(99);
    for (int i = 0; i < 300; ++i) {
        TwoHProfile p = random_profile(6, 5, seq());
        int k = min_k(p);
        auto out = realize(extension_sequence(p, k));
        REQUIRE(out.realizable);
        EdgeColoring c = coloring_from_realization(out.graph, p);
        OrientedGraph back = realization_from_coloring(c, p);
        CHECK(back == out.graph);
    }
}

TEST_CASE("emitted colorings always validate with the reported palette") {
    std::mt19937_64 seq(5150);
    for (int i = 0; i < 300; ++i) {
        TwoHProfile p = random_profile(8, 8, seq());
        Color2hResult res = color_2h(p);
        REQUIRE(validate_coloring(res.tree, res.coloring).valid);
        REQUIRE(res.coloring.palette_size == res.index);
        std::vector<int> used = res.coloring.used_colors();
        REQUIRE(used.back() <= res.index);
    }
}

TEST_CASE("the minimal k really is minimal") {
    std::mt19937_64 seq(424242);
    for (int i = 0; i < 300; ++i) {
        TwoHProfile p = random_profile(8, 8, seq());
        int k = min_k(p);
        if (k > 0) CHECK_FALSE(realize(extension_sequence(p, k - 1)).realizable);
    }
}
