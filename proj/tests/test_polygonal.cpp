#include <doctest.h>

#include <algorithm>
#include <set>

#include "prym/generators.hpp"
#include "prym/polygonal.hpp"

using namespace prym;

namespace {

SignedTower split_tower(const MonodromyCover& c) {
    SignedTower t;
    t.base = c.base;
    t.degree = c.degree;
    for (const auto& h : c.handles)
        t.handles.emplace_back(h, std::vector<std::uint8_t>(c.degree, 0));
    for (const auto& s : c.branches)
        t.branches.emplace_back(s, std::vector<std::uint8_t>(c.degree, 0));
    validate_tower(t);
    return t;
}

std::vector<int> component_sizes(const MonodromyCover& c) {
    std::vector<int> out;
    for (const auto& o : orbits(monodromy_tuple(c))) out.push_back(static_cast<int>(o.size()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("direct image structure") {
    Rng rng(3);
    // all-identity generators, n = 3: eight trivial components
    {
        SignedTower t;
        t.base.genus = 0;
        t.base.branch_labels = {"a", "b"};
        t.degree = 3;
        t.branches = {SignedPerm(Perm(3), {0, 0, 0}), SignedPerm(Perm(3), {0, 0, 0})};
        validate_tower(t);
        DirectImage d = direct_image(t);
        CHECK(orbits(monodromy_tuple(d.cover)).size() == 8);
    }
    for (int n = 2; n <= 4; ++n) {
        SignedTower t = random_etale_tower(rng, n, 4, 7, false);
        DirectImage d = direct_image(t);
        CHECK(d.cover.degree == (1 << n));
        CHECK(d.class_quotient.degree == (1 << (n - 1)));
        CHECK(d.orientation.degree == 2);
        // iota commutes with every generator
        for (const auto& g : d.cover.branches) CHECK(compose(g, d.iota) == compose(d.iota, g));
        // class quotient is the image of the section action
        for (std::size_t b = 0; b < t.branches.size(); ++b)
            CHECK(d.class_quotient.branches[b] == class_action(t.branches[b]));
        // orientation branch permutations realize the orientation character
        for (std::size_t b = 0; b < t.branches.size(); ++b)
            CHECK((orientation_char(t.branches[b]) == 1) ==
                  !d.orientation.branches[b].is_identity());
    }
    // iota exchanges the parity blocks for odd n, preserves them for even n
    for (int i = 0; i < 10; ++i) {
        SignedTower t3 = random_etale_tower(rng, 3, 4, 7, false);
        DirectImage d3 = direct_image(t3);
        for (int s = 0; s < 8; ++s)
            CHECK((std::popcount(unsigned(s)) & 1) != (std::popcount(unsigned(d3.iota(s))) & 1));
        SignedTower t4 = random_etale_tower(rng, 4, 4, 7, false);
        DirectImage d4 = direct_image(t4);
        for (int s = 0; s < 16; ++s)
            CHECK((std::popcount(unsigned(s)) & 1) == (std::popcount(unsigned(d4.iota(s))) & 1));
    }
}

TEST_CASE("orientation cover") {
    Rng rng(7);
    // etale towers over genus 0 are orientable: the composite's orientation splits
    for (int i = 0; i < 15; ++i) {
        SignedTower t = random_etale_tower(rng, rng.range(2, 4), 4, 8, false);
        MonodromyCover o = orientation_cover(cover_ctilde(t));
        CHECK(orbits(monodromy_tuple(o)).size() == 2);
    }
    // cancelling ramification contributes the identity
    SignedTower t;
    t.base.genus = 0;
    t.base.branch_labels = {"a", "b"};
    t.degree = 2;
    t.branches = {SignedPerm(Perm(2), {1, 1}), SignedPerm(Perm(2), {1, 1})};
    validate_tower(t);
    MonodromyCover o = orientation_cover(cover_ctilde(t));
    for (const auto& p : o.branches) CHECK(p.is_identity());
    // a single odd branch point cannot satisfy the product relation
    MonodromyCover bad;
    bad.base.genus = 0;
    bad.base.branch_labels = {"a"};
    bad.degree = 2;
    bad.branches = {Perm(std::vector<int>{1, 0})};
    CHECK_THROWS(validate_cover(bad));
}

TEST_CASE("bigonal diagram") {
    Rng rng(11);
    SignedTower t = random_bigonal_tower(rng, 0, 4, 8);
    auto diagram = bigonal_diagram(t);
    REQUIRE(diagram.size() == 8);
    std::vector<int> degrees;
    for (const auto& qc : diagram) degrees.push_back(qc.cover.degree);
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<int>{1, 2, 2, 2, 4, 4, 4, 8});
    // the C~ quotient is the embedded tower and C the underlying cover
    for (const auto& qc : diagram) {
        if (qc.name == "C~") CHECK(covers_isomorphic(qc.cover, cover_ctilde(t)));
        if (qc.name == "C") CHECK(covers_isomorphic(qc.cover, cover_c(t)));
    }
    // orientable case: C~' splits into two components (2.8.2)
    SignedTower e = random_etale_tower(rng, 2, 4, 8, true);
    for (const auto& qc : bigonal_diagram(e)) {
        if (qc.name == "C~'") CHECK(orbits(monodromy_tuple(qc.cover)).size() == 2);
        if (qc.name == "C'") CHECK(orbits(monodromy_tuple(qc.cover)).size() == 2);
    }
    // the embedded WC_2 has exactly 8 conjugacy classes of subgroups
    {
        auto elems = wc_elements_embedded(2);
        std::set<std::set<Perm>> subgroups;
        for (int mask = 0; mask < (1 << 8); ++mask) {
            std::set<Perm> s;
            for (int k = 0; k < 8; ++k)
                if ((mask >> k) & 1) s.insert(elems[k]);
            if (s.empty() || !s.count(Perm(4))) continue;
            bool closed = true;
            for (const auto& x : s)
                for (const auto& y : s)
                    if (!s.count(compose(x, y))) closed = false;
            if (closed) subgroups.insert(s);
        }
        CHECK(subgroups.size() == 10);
        std::set<std::set<std::set<Perm>>> classes;
        for (const auto& s : subgroups) {
            std::set<std::set<Perm>> cls;
            for (const auto& w : elems) {
                std::set<Perm> conj;
                for (const auto& x : s) conj.insert(conjugate(w, x));
                cls.insert(conj);
            }
            classes.insert(cls);
        }
        CHECK(classes.size() == 8);
    }
}

TEST_CASE("trigonal examples") {
    // trivial double cover: X is disconnected, P1 u C
    Rng rng(13);
    for (int i = 0; i < 10; ++i) {
        MonodromyCover c = random_connected_cover(rng, 3, 4, 8);
        SignedTower t = split_tower(c);
        MonodromyCover x = trigonal_forward(t);
        auto sizes = component_sizes(x);
        REQUIRE(sizes == std::vector<int>{1, 3});
        // the degree-3 component is the curve C itself
        auto orbs = orbits(monodromy_tuple(x));
        const auto& big = orbs[0].size() == 3 ? orbs[0] : orbs[1];
        PermTuple restr = restrict_to(monodromy_tuple(x), big);
        MonodromyCover xc;
        xc.base = c.base;
        xc.degree = 3;
        xc.branches = restr.entries;
        CHECK(covers_isomorphic(xc, c));
    }
    // a degree-4 cover factoring through a hyperelliptic curve gives a
    // reducible C = H u P1 (2.10(iii))
    for (int i = 0; i < 20; ++i) {
        auto inst = random_cartesian_bihyperelliptic(rng, 2 + 2 * (i % 2), 4);
        MonodromyCover x = cover_c(inst.tower);  // degree 4, factors through H
        GluedTower back = trigonal_inverse(x);
        auto sizes = component_sizes(cover_c(back.smooth));
        CHECK(sizes == std::vector<int>{1, 2});
    }
    // full S4 monodromy maps onto S3 under the partition (Klein) action
    for (int i = 0; i < 10; ++i) {
        MonodromyCover x = random_connected_cover(rng, 4, 4, 8, true);
        GluedTower t = trigonal_inverse(x);
        CHECK(group_order(monodromy_tuple(cover_c(t.smooth))) == 6);
    }
}

TEST_CASE("trigonal rejects out-of-scope inputs") {
    Rng rng(17);
    // positive-genus base
    SignedTower t = random_etale_tower(rng, 3, 4, 6, false);
    SignedTower bad = t;
    bad.base.genus = 1;
    bad.handles = {SignedPerm(Perm(3), {0, 0, 0}), SignedPerm(Perm(3), {0, 0, 0})};
    validate_tower(bad);
    CHECK_THROWS(trigonal_forward(bad));
    // pi ramified at unglued points
    SignedTower ram;
    ram.base.genus = 0;
    ram.base.branch_labels = {"a", "b"};
    ram.degree = 3;
    ram.branches = {SignedPerm(Perm(3), {1, 0, 0}), SignedPerm(Perm(3), {1, 0, 0})};
    validate_tower(ram);
    CHECK_THROWS(trigonal_forward(ram));
    // a dI-glued tower is not in the construction's domain
    {
        Perm sw(std::vector<int>{1, 0, 2});
        MonodromyCover c;
        c.base.genus = 0;
        c.base.branch_labels = {"k1", "k2", "m"};
        c.degree = 3;
        c.branches = {sw, sw, Perm(3)};
        validate_cover(c);
        GluedTower w = wirtinger_cover(c, FiberPoint{2, 0}, FiberPoint{2, 1});
        CHECK(degeneration_type(w) == BoundaryType::dI);
        CHECK_THROWS(trigonal_forward(w));
    }
}

TEST_CASE("tetragonal output labeling") {
    // C0 is the block whose classes contain the even-weight sections; for a
    // split input that block carries the trigonal package (2.15(1))
    Rng rng(19);
    MonodromyCover c = random_connected_cover(rng, 4, 4, 8, true);
    TetragonalPair p = tetragonal(split_tower(c));
    CHECK(component_sizes(cover_c(p.c0.smooth)) == std::vector<int>{1, 3});
    CHECK(component_sizes(cover_c(p.c1.smooth)) == std::vector<int>{4});
    CHECK(towers_isomorphic(p.c1, GluedTower{split_tower(c), {}}));
    // the trigonal part of C0 matches the pair/partition construction
    GluedTower tri = trigonal_inverse(c);
    auto orbs = orbits(monodromy_tuple(cover_c(p.c0.smooth)));
    const auto& big = orbs[0].size() == 3 ? orbs[0] : orbs[1];
    PermTuple restr = restrict_to(monodromy_tuple(cover_c(p.c0.smooth)), big);
    MonodromyCover c0big;
    c0big.base = c.base;
    c0big.degree = 3;
    c0big.branches = restr.entries;
    CHECK(covers_isomorphic(c0big, cover_c(tri.smooth)));
}

TEST_CASE("cartesian detection") {
    Rng rng(23);
    for (int i = 0; i < 20; ++i) {
        SignedTower t = random_etale_tower(rng, 2, 4, 9, false);
        auto cf = is_cartesian(t);
        REQUIRE(cf.cartesian);
        // C~ really is the fiber product: its points biject with pairs
        CHECK(cf.factor0.degree == 2);
        CHECK(cf.factor1.degree == 2);
    }
    // handles with odd character are not Cartesian
    SignedTower t;
    t.base.genus = 1;
    t.base.branch_labels = {"a", "b"};
    t.degree = 2;
    SignedPerm alpha(Perm(2), {1, 0});
    SignedPerm beta(Perm(std::vector<int>{1, 0}), {0, 0});
    t.handles = {alpha, beta};
    // commutator of (alpha, beta) followed by the branch elements must be id
    SignedPerm comm(2);
    for (const auto& g : {alpha, beta, sp_inverse(alpha), sp_inverse(beta)})
        comm = sp_compose(g, comm);
    t.branches = {sp_inverse(comm), SignedPerm(Perm(2), {0, 0})};
    validate_tower(t);
    CHECK(orientation_char(alpha) == 1);
    CHECK(!is_cartesian(t).cartesian);
}

TEST_CASE("hyperelliptic factorization") {
    // monodromy inside the block stabilizer
    MonodromyCover c;
    c.base.genus = 0;
    c.base.branch_labels = {"a", "b", "c", "d"};
    c.degree = 4;
    Perm s01(std::vector<int>{1, 0, 2, 3}), swap_blocks(std::vector<int>{2, 3, 0, 1});
    c.branches = {s01, s01, swap_blocks, swap_blocks};
    validate_cover(c);
    auto f = factors_through_hyperelliptic(c);
    REQUIRE(f.has_value());
    CHECK(f->h.degree == 2);
    CHECK(f->needed_identifications.empty());
    // full S4 monodromy has no size-2 blocks
    Rng rng(29);
    MonodromyCover s4 = random_connected_cover(rng, 4, 4, 8, true);
    CHECK(!factors_through_hyperelliptic(s4).has_value());
    // tetragonal outputs of a bihyperelliptic input both factor (Lemma 3.5)
    for (int i = 0; i < 10; ++i) {
        auto inst = random_cartesian_bihyperelliptic(rng, 4, 4);
        TetragonalPair p = tetragonal(inst.tower);
        for (const auto* side : {&p.c0, &p.c1}) {
            auto facs = hyperelliptic_factorizations(glued_c(*side));
            CHECK(!facs.empty());
        }
    }
}

TEST_CASE("pentagonal construction through the direct image") {
    // five elliptic curves over five lines: the 32-section cover splits into
    // two connected degree-16 curves of genus 5
    SignedTower t;
    t.base.genus = 0;
    t.degree = 5;
    for (int j = 0; j < 5; ++j) t.base.branch_labels.push_back("p" + std::to_string(j + 1));
    for (int j = 0; j < 5; ++j) {
        std::vector<std::uint8_t> eps(5, 1);
        eps[j] = 0;
        t.branches.emplace_back(Perm(5), std::move(eps));
    }
    validate_tower(t);
    DirectImage d = direct_image(t);
    auto orbs = orbits(monodromy_tuple(d.cover));
    REQUIRE(orbs.size() == 2);
    CHECK(orbs[0].size() == 16);
    CHECK(orbs[1].size() == 16);
    PermTuple blk = restrict_to(monodromy_tuple(d.cover), orbs[0]);
    MonodromyCover humbert;
    humbert.base = t.base;
    humbert.degree = 16;
    humbert.branches = blk.entries;
    validate_cover(humbert);
    CHECK(genus_connected(humbert) == 5);
}

TEST_CASE("pantazis shadow on ramified towers") {
    Rng rng(31);
    for (int i = 0; i < 30; ++i) {
        SignedTower t = random_bigonal_tower(rng, i % 3, 3, 8);
        GluedTower gt{t, {}};
        GluedTower b = bigonal(gt);
        int d_in = arithmetic_genus(glued_ctilde(gt)) - arithmetic_genus(glued_c(gt));
        int d_out = arithmetic_genus(glued_ctilde(b)) - arithmetic_genus(glued_c(b));
        CHECK(d_in == d_out);
    }
}

TEST_CASE("cor 3.9 shape: two-branch-point covers of hyperelliptic curves") {
    // take H and C^0 rational in the 3.6 setup: the reducible partner is a
    // hyperelliptic curve plus a rational component meeting it twice
    Rng rng(37);
    for (int i = 0; i < 10; ++i) {
        auto inst = random_cartesian_bihyperelliptic(rng, 2, 6);
        if (inst.genus_c0 != 0 && inst.genus_c1 != 0) { --i; continue; }
        TetragonalPair p = tetragonal(inst.tower);
        auto reducible = [](const GluedTower& t) {
            return genus(cover_c(t.smooth)).size() == 2;
        };
        const GluedTower* red = reducible(p.c0) ? &p.c0 : reducible(p.c1) ? &p.c1 : nullptr;
        REQUIRE(red != nullptr);
        CHECK(red->pairs.size() == 2);  // #B = 2 intersection points
        auto gs = genus(cover_c(red->smooth));
        CHECK((gs[0] == 0 || gs[1] == 0));
    }
}
