#include <doctest.h>

#include <set>

#include "prym/cover.hpp"
#include "prym/generators.hpp"

using namespace prym;

namespace {

MonodromyCover simple_cover(int degree, std::vector<Perm> branches,
                            std::vector<std::string> labels = {}) {
    MonodromyCover c;
    c.base.genus = 0;
    if (labels.empty())
        for (std::size_t i = 0; i < branches.size(); ++i)
            labels.push_back("b" + std::to_string(i + 1));
    c.base.branch_labels = std::move(labels);
    c.degree = degree;
    c.branches = std::move(branches);
    validate_cover(c);
    return c;
}

// Euler characteristic by the cell decomposition lifted from the base: one
// vertex and one edge per branch point, two faces.
int genus_by_cells(const MonodromyCover& c) {
    REQUIRE(c.base.genus == 0);
    REQUIRE(orbits(monodromy_tuple(c)).size() == 1);
    int b = static_cast<int>(c.branches.size());
    int vertices = 0;
    for (const auto& s : c.branches) vertices += static_cast<int>(cycles(s).size());
    int edges = c.degree * b;
    int faces = 2 * c.degree;
    int chi = vertices - edges + faces;
    REQUIRE((2 - chi) % 2 == 0);
    return (2 - chi) / 2;
}

}  // namespace

TEST_CASE("hurwitz genus") {
    // degree-1 cover of P1
    CHECK(genus(simple_cover(1, {Perm(1), Perm(1)})) == std::vector<int>{0});
    // hyperelliptic: 2g+2 transposition branch points
    Perm sw(std::vector<int>{1, 0});
    for (int g = 0; g <= 3; ++g) {
        std::vector<Perm> br(2 * g + 2, sw);
        MonodromyCover c = simple_cover(2, br);
        CHECK(genus_connected(c) == g);
        CHECK(genus_by_cells(c) == g);
    }
    // random connected covers against the cell-count oracle
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        MonodromyCover c = random_connected_cover(rng, rng.range(2, 5), 3, 8);
        CHECK(genus_connected(c) == genus_by_cells(c));
    }
    // genus is invariant under simultaneous conjugation
    for (int i = 0; i < 20; ++i) {
        MonodromyCover c = random_connected_cover(rng, 4, 3, 7);
        Perm g = random_perm(rng, 4);
        MonodromyCover d = c;
        for (auto& s : d.branches) s = conjugate(g, s);
        CHECK(genus(c) == genus(d));
    }
}

TEST_CASE("etale double covers") {
    // connected etale double cover of a genus-g base curve has genus 2g-1
    Rng rng(5);
    for (int i = 0; i < 40; ++i) {
        SignedTower t = random_etale_tower(rng, rng.range(2, 4), 4, 9, true);
        int gc = genus_connected(cover_c(t));
        CHECK(genus_connected(cover_ctilde(t)) == 2 * gc - 1);
    }
    // sign criteria
    SignedTower t;
    t.base.genus = 0;
    t.base.branch_labels = {"a", "b"};
    t.degree = 2;
    Perm sw(std::vector<int>{1, 0});
    t.branches = {SignedPerm(sw, {1, 1}), SignedPerm(sw, {1, 1})};
    validate_tower(t);
    CHECK(is_etale_double(t));  // 2-cycle with signs (1,1)
    // the embedded element has two cycles over the 2-cycle
    CHECK(cycles(cover_ctilde(t).branches[0]).size() == 2);
    t.branches = {SignedPerm(Perm(2), {1, 0}), SignedPerm(Perm(2), {1, 0})};
    validate_tower(t);
    CHECK(!is_etale_double(t));  // fixed point carrying sign 1
    CHECK(cycles(cover_ctilde(t).branches[0]).size() == 3);
}

TEST_CASE("arithmetic genus") {
    // pentagon: five disjoint lines over P1, glued at the ten crossings
    MonodromyCover a;
    a.base.genus = 0;
    a.degree = 5;
    for (int j = 0; j < 5; ++j) {
        a.base.branch_labels.push_back("p" + std::to_string(j + 1));
        a.branches.push_back(Perm(5));
    }
    validate_cover(a);
    GluedCover pentagon{a, {}};
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            pentagon.pairs.push_back(
                GluePair{FiberPoint{j, i}, FiberPoint{i, j}});  // p_{i,j} ~ p_{j,i}
    validate_glue(pentagon);
    CHECK(arithmetic_genus(pentagon) == 6);
    CHECK(arithmetic_genus(a) == -4);  // smooth p_a of five disjoint lines
    // Wirtinger base: X of genus g-1 with p ~ q has p_a = g
    Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        MonodromyCover x = random_connected_cover(rng, 3, 3, 7);
        GluedCover gc{x, {}};
        auto cs0 = cycles(x.branches[0]);
        auto cs1 = cycles(x.branches[1]);
        if (cs0.size() < 1 || cs1.size() < 1) continue;
        gc.pairs.push_back(GluePair{FiberPoint{0, 0}, FiberPoint{1, 0}});
        CHECK(arithmetic_genus(gc) == genus_connected(x) + 1);
    }
}

TEST_CASE("tower involution") {
    // etale double cover of the base itself (n = 1)
    SignedTower t;
    t.base.genus = 0;
    t.base.branch_labels = {"a", "b"};
    t.degree = 1;
    t.branches = {SignedPerm(Perm(1), {1}), SignedPerm(Perm(1), {1})};
    validate_tower(t);
    InvolutionReport rep = tower_involution(t);
    CHECK(rep.flip == Perm(std::vector<int>{1, 0}));
    for (const auto& fx : rep.fixed)
        for (bool b : fx) CHECK(b);  // ramified points are iota-fixed
    // unramified cycles give swapped points
    SignedTower e;
    e.base.genus = 0;
    e.base.branch_labels = {"a"};
    e.degree = 2;
    e.branches = {SignedPerm(Perm(2), {0, 0})};
    validate_tower(e);
    auto rep2 = tower_involution(e);
    for (bool b : rep2.fixed[0]) CHECK(!b);
}

TEST_CASE("boundary examples and errors") {
    Perm sw(std::vector<int>{1, 0}), id2(2);
    MonodromyCover x = simple_cover(2, {sw, sw, sw, sw, id2, id2},
                                    {"k1", "k2", "k3", "k4", "p", "q"});
    CHECK_THROWS(wirtinger_cover(x, FiberPoint{4, 0}, FiberPoint{4, 0}));  // p = q rejected
    GluedTower w = wirtinger_cover(x, FiberPoint{4, 0}, FiberPoint{5, 1});
    CHECK(degeneration_type(w) == BoundaryType::dI);
    CHECK(is_allowable(w).allowable);
    // two nodes upstairs, one downstairs
    CHECK(w.pairs.size() == 2);
    CHECK(glued_c(w).pairs.size() == 1);

    // kind II needs a nonsplit tower
    SignedTower split;
    split.base = x.base;
    split.degree = 2;
    for (const auto& s : x.branches)
        split.branches.emplace_back(s, std::vector<std::uint8_t>(2, 0));
    validate_tower(split);
    CHECK_THROWS(boundary_ii(split, FiberPoint{4, 0}, FiberPoint{5, 0}));

    // kind III needs exactly two ramification points
    CHECK_THROWS(boundary_iii(split));

    // an incompatible gluing is rejected by is_allowable
    SignedTower r;
    r.base.genus = 0;
    r.base.branch_labels = {"r1", "r2", "k1", "k2"};
    r.degree = 2;
    r.branches = {SignedPerm(id2, {1, 0}), SignedPerm(id2, {1, 0}), SignedPerm(sw, {0, 0}),
                  SignedPerm(sw, {0, 0})};
    validate_tower(r);
    GluedTower bad{r, {GluePair{FiberPoint{0, 0}, FiberPoint{1, 1}}}};
    // glues the r1 ramification point to an unramified r2 point: iota moves
    // the partner, so the pairing cannot be equivariant
    CHECK_THROWS(is_allowable(bad));
}

TEST_CASE("tower isomorphism") {
    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        SignedTower t = random_etale_tower(rng, 3, 4, 8, true);
        CHECK(towers_isomorphic(t, t));
        // conjugating every generator by a fixed signed permutation gives an
        // isomorphic tower
        SignedPerm c = random_signed(rng, 3);
        SignedTower u = t;
        for (auto& g : u.branches) g = sp_compose(sp_compose(c, g), sp_inverse(c));
        validate_tower(u);
        CHECK(towers_isomorphic(t, u));
    }
    // different C~ genus is never isomorphic
    SignedTower a = random_etale_tower(rng, 2, 4, 4, true);
    SignedTower b = random_etale_tower(rng, 2, 6, 6, true);
    b.base.branch_labels = a.base.branch_labels;
    b.branches.resize(4);
    // rebalance b
    SignedPerm acc(2);
    for (std::size_t i = 0; i + 1 < b.branches.size(); ++i)
        acc = sp_compose(b.branches[i], acc);
    b.branches.back() = sp_inverse(acc);
    validate_tower(b);
    if (genus(cover_ctilde(a)) != genus(cover_ctilde(b)))
        CHECK(!towers_isomorphic(a, b));
}

TEST_CASE("node types distinguish the three boundary classes") {
    Rng rng(13);
    // dII from a connected etale tower glued parallel
    for (int i = 0; i < 10; ++i) {
        SignedTower t = random_etale_tower(rng, 2, 4, 8, true);
        MonodromyCover c = cover_c(t);
        FiberPoint p{0, 0}, q{1, 0};
        GluedTower b = boundary_ii(t, p, q);
        CHECK(degeneration_type(b) == BoundaryType::dII);
        CHECK(!is_allowable(b).allowable);
    }
    // multi-node towers report per-node tags
    Perm id2(2), sw(std::vector<int>{1, 0});
    SignedTower t;
    t.base.genus = 0;
    t.base.branch_labels = {"r1", "r2", "r3", "r4", "k1", "k2"};
    t.degree = 2;
    t.branches = {SignedPerm(id2, {1, 0}), SignedPerm(id2, {1, 0}), SignedPerm(id2, {0, 1}),
                  SignedPerm(id2, {0, 1}), SignedPerm(sw, {0, 0}), SignedPerm(sw, {0, 0})};
    validate_tower(t);
    auto rams = ramification_points(t);
    REQUIRE(rams.size() == 4);
    GluedTower two_nodes{t, {GluePair{rams[0], rams[1]}, GluePair{rams[2], rams[3]}}};
    auto types = node_types(two_nodes);
    REQUIRE(types.size() == 2);
    CHECK(types[0] == BoundaryType::dIII);
    CHECK(types[1] == BoundaryType::dIII);
    CHECK_THROWS(degeneration_type(two_nodes));  // one-node towers only
}
