#include <doctest.h>

#include <sstream>

#include "prym/generators.hpp"
#include "prym/tower_io.hpp"

using namespace prym;

TEST_CASE("tower files round trip") {
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        SignedTower t = random_etale_tower(rng, rng.range(2, 4), 3, 7, false);
        std::istringstream in(render_tower(t));
        TowerFile tf = load_tower(in);
        REQUIRE(tf.is_signed());
        CHECK(towers_isomorphic(tf.tower->smooth, t));
        CHECK(render_tower(*tf.tower) == render_tower(t));
    }
    // plain covers round trip too
    for (int i = 0; i < 10; ++i) {
        MonodromyCover c = random_connected_cover(rng, 4, 3, 7);
        std::istringstream in(render_tower(c));
        TowerFile tf = load_tower(in);
        REQUIRE(!tf.is_signed());
        CHECK(covers_isomorphic(tf.cover->smooth, c));
    }
}

TEST_CASE("glue lines round trip") {
    Rng rng(7);
    MonodromyCover x = random_connected_cover(rng, 2, 4, 6);
    // add two marked fibers for the gluing
    x.base.branch_labels.push_back("p");
    x.base.branch_labels.push_back("q");
    x.branches.push_back(Perm(2));
    x.branches.push_back(Perm(2));
    validate_cover(x);
    GluedTower w = wirtinger_cover(x, FiberPoint{static_cast<int>(x.branches.size()) - 2, 0},
                                   FiberPoint{static_cast<int>(x.branches.size()) - 1, 0});
    std::istringstream in(render_tower(w));
    TowerFile tf = load_tower(in);
    REQUIRE(tf.is_signed());
    CHECK(tf.tower->pairs.size() == 2);
    CHECK(towers_isomorphic(*tf.tower, w));
}

TEST_CASE("load errors carry context") {
    auto try_load = [](const std::string& text) {
        std::istringstream in(text);
        return load_tower(in);
    };
    CHECK_THROWS_WITH_AS(try_load(""), "tower file: empty input", std::runtime_error);
    CHECK_THROWS_AS(try_load("tower v2\n"), std::runtime_error);
    // the product-relation violation names the residual permutation
    std::string bad =
        "tower v1\nbase_genus 0\ndegree 2\nbranch a (1 2)\nbranch b ()\n";
    try {
        try_load(bad);
        FAIL("expected a residual error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("residual") != std::string::npos);
        CHECK(std::string(e.what()).find("(1 2)") != std::string::npos);
    }
    // unknown labels in glue lines
    std::string bad_glue =
        "tower v1\nbase_genus 0\ndegree 2\nbranch a (1 2)\nbranch b (1 2)\n"
        "glue z 1 a 1\n";
    CHECK_THROWS_AS(try_load(bad_glue), std::runtime_error);
    // malformed permutations carry the line number
    std::string bad_perm = "tower v1\nbase_genus 0\ndegree 2\nbranch a (1 5)\nbranch b ()\n";
    try {
        try_load(bad_perm);
        FAIL("expected a parse error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
    // duplicate points in glue lines
    std::string dup =
        "tower v1\nbase_genus 0\ndegree 2\n"
        "branch r1 () signs 10\nbranch r2 () signs 10\n"
        "branch k1 (1 2) signs 00\nbranch k2 (1 2) signs 00\n"
        "glue r1 1 r2 1\nglue r1 1 r2 2\n";
    CHECK_THROWS_AS(try_load(dup), std::runtime_error);
}

TEST_CASE("comments and handle lines") {
    std::string text =
        "# a genus-1 base with one handle pair; the branch element cancels\n"
        "# the handle commutator\n"
        "tower v1\n"
        "base_genus 1\n"
        "degree 2\n"
        "handle a 1 (1 2) signs 00\n"
        "handle b 1 () signs 10\n"
        "branch k1 () signs 11\n";
    std::istringstream in(text);
    TowerFile tf = load_tower(in);
    REQUIRE(tf.is_signed());
    CHECK(tf.tower->smooth.base.genus == 1);
    CHECK(tf.tower->smooth.handles.size() == 2);
}
