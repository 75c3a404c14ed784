#include <doctest.h>

#include <algorithm>
#include <set>

#include "prym/generators.hpp"
#include "prym/perm.hpp"

using namespace prym;

namespace {

Perm p(std::vector<int> im) { return Perm(std::move(im)); }

// every set partition of {0..n-1}, for the block-system oracle (indexing
// avoids iterator invalidation while the recursion grows acc)
void all_partitions(int n, std::vector<std::vector<std::vector<int>>>& out) {
    std::vector<std::vector<int>> acc;
    auto rec = [&](auto&& self, int x) -> void {
        if (x == n) {
            out.push_back(acc);
            return;
        }
        for (std::size_t k = 0; k < acc.size(); ++k) {
            acc[k].push_back(x);
            self(self, x + 1);
            acc[k].pop_back();
        }
        acc.push_back({x});
        self(self, x + 1);
        acc.pop_back();
    };
    rec(rec, 0);
}

std::set<std::vector<std::vector<int>>> oracle_block_systems(const PermTuple& t) {
    std::vector<std::vector<std::vector<int>>> parts;
    all_partitions(t.degree, parts);
    std::set<std::vector<std::vector<int>>> out;
    for (auto sys : parts) {
        if (sys.size() < 2 || sys.size() == static_cast<std::size_t>(t.degree)) continue;
        std::size_t bs = sys.front().size();
        bool equal = true;
        for (const auto& blk : sys)
            if (blk.size() != bs) equal = false;
        if (!equal) continue;
        bool invariant = true;
        for (const auto& g : t.entries) {
            for (const auto& blk : sys) {
                std::vector<int> img;
                for (int x : blk) img.push_back(g(x));
                std::sort(img.begin(), img.end());
                bool found = false;
                for (const auto& other : sys)
                    if (other == img) found = true;
                if (!found) invariant = false;
            }
        }
        if (!invariant) continue;
        std::sort(sys.begin(), sys.end());
        out.insert(sys);
    }
    return out;
}

std::set<std::vector<std::vector<int>>> as_set(std::vector<std::vector<std::vector<int>>> v) {
    std::set<std::vector<std::vector<int>>> out;
    for (auto sys : v) {
        for (auto& blk : sys) std::sort(blk.begin(), blk.end());
        std::sort(sys.begin(), sys.end());
        out.insert(sys);
    }
    return out;
}

}  // namespace

TEST_CASE("composition applies the right factor first") {
    Perm id3(3);
    Perm t01 = p({1, 0, 2});
    Perm t12 = p({0, 2, 1});
    CHECK(compose(id3, t01) == t01);
    CHECK(compose(t01, t01) == id3);
    // (0 1) after (1 2): evaluated by hand on all three points
    CHECK(compose(t01, t12) == p({1, 2, 0}));
}

TEST_CASE("sign is multiplicative") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        int n = rng.range(1, 8);
        Perm a = random_perm(rng, n), b = random_perm(rng, n);
        CHECK(perm_sign(compose(a, b)) == perm_sign(a) * perm_sign(b));
    }
}

TEST_CASE("cycle types and signs") {
    auto r = cycle_type_and_sign(Perm(4));
    CHECK(r.cycle_lengths == std::vector<int>{1, 1, 1, 1});
    CHECK(r.sign == 1);
    r = cycle_type_and_sign(p({1, 0, 2, 3}));
    CHECK(r.cycle_lengths == std::vector<int>{2, 1, 1});
    CHECK(r.sign == -1);
    r = cycle_type_and_sign(p({1, 2, 0}));
    CHECK(r.cycle_lengths == std::vector<int>{3});
    CHECK(r.sign == 1);
}

TEST_CASE("orbits") {
    PermTuple ids(3, {Perm(3), Perm(3)});
    CHECK(orbits(ids).size() == 3);
    PermTuple one(3, {p({1, 0, 2})});
    auto o = orbits(one);
    REQUIRE(o.size() == 2);
    CHECK(o[0] == std::vector<int>{0, 1});
    PermTuple two(3, {p({1, 0, 2}), p({0, 2, 1})});
    CHECK(is_transitive(two));
}

TEST_CASE("orbits is the finest invariant partition") {
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        int n = rng.range(2, 9);
        std::vector<Perm> gens;
        for (int k = 0; k < rng.range(1, 3); ++k) gens.push_back(random_perm(rng, n));
        PermTuple t(n, gens);
        for (const auto& orb : orbits(t)) {
            std::set<int> s(orb.begin(), orb.end());
            for (const auto& g : t.entries)
                for (int x : orb) CHECK(s.count(g(x)));
            CHECK(is_transitive(restrict_to(t, orb)));
        }
    }
}

TEST_CASE("block systems against the all-partitions oracle") {
    // dihedral action of <(0 1 2 3), (0 2)>
    PermTuple dihedral(4, {p({1, 2, 3, 0}), p({2, 1, 0, 3})});
    auto got = as_set(block_systems(dihedral));
    CHECK(got == oracle_block_systems(dihedral));
    std::vector<std::vector<int>> want{{0, 2}, {1, 3}};
    CHECK(got.count(want));

    // S4 natural action has none
    PermTuple s4(4, {p({1, 0, 2, 3}), p({1, 2, 3, 0})});
    CHECK(block_systems(s4).empty());
    CHECK(oracle_block_systems(s4).empty());

    // Klein four group: three systems of block size 2
    PermTuple klein(4, {p({1, 0, 3, 2}), p({2, 3, 0, 1})});
    auto kg = block_systems(klein);
    CHECK(kg.size() == 3);
    CHECK(as_set(kg) == oracle_block_systems(klein));

    Rng rng(17);
    for (int i = 0; i < 25; ++i) {
        int n = rng.range(4, 8);
        std::vector<Perm> gens{random_perm(rng, n), random_perm(rng, n)};
        PermTuple t(n, gens);
        if (!is_transitive(t)) continue;
        CHECK(as_set(block_systems(t)) == oracle_block_systems(t));
    }
}

TEST_CASE("group order by stabilizer chain") {
    PermTuple s4(4, {p({1, 0, 2, 3}), p({1, 2, 3, 0})});
    CHECK(group_order(s4) == 24);
    PermTuple empty(5, {});
    CHECK(group_order(empty) == 1);
    // agreement with closure enumeration on random small groups
    Rng rng(23);
    for (int i = 0; i < 40; ++i) {
        int n = rng.range(2, 8);
        std::vector<Perm> gens{random_perm(rng, n), random_perm(rng, n)};
        PermTuple t(n, gens);
        std::vector<Perm> elems;
        try {
            elems = enumerate_elements(t, 5000);
        } catch (const std::exception&) {
            continue;  // group larger than the oracle bound
        }
        CHECK(group_order(t) == elems.size());
    }
}

TEST_CASE("simultaneous conjugacy") {
    PermTuple s3(3, {p({1, 0, 2}), p({1, 2, 0})});
    PermTuple a(3, {p({1, 0, 2})});
    CHECK(simultaneous_conjugacy(a, a, s3).value().degree() == 3);
    PermTuple b(3, {p({0, 2, 1})});
    auto c = simultaneous_conjugacy(a, b, s3);
    REQUIRE(c.has_value());
    CHECK(conjugate(*c, a.entries[0]) == b.entries[0]);
    // different cycle types are never conjugate
    PermTuple s4(4, {p({1, 0, 2, 3}), p({1, 2, 3, 0})});
    PermTuple x(4, {p({1, 0, 2, 3})});
    PermTuple y(4, {p({1, 0, 3, 2})});
    CHECK(!simultaneous_conjugacy(x, y, s4).has_value());
}

TEST_CASE("cycle notation round trip") {
    CHECK(render_cycles(Perm(4)) == "()");
    CHECK(render_cycles(p({1, 0, 2})) == "(1 2)");
    CHECK(render_cycles(p({1, 2, 0, 4, 3})) == "(1 2 3)(4 5)");
    CHECK(parse_cycles("(1 2 3)(4 5)", 5) == p({1, 2, 0, 4, 3}));
    CHECK(parse_cycles("()", 3) == Perm(3));
    Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        int n = rng.range(1, 12);
        Perm q = random_perm(rng, n);
        CHECK(parse_cycles(render_cycles(q), n) == q);
    }
    CHECK_THROWS(parse_cycles("(1 2", 3));
    CHECK_THROWS(parse_cycles("(0 1)", 3));
    CHECK_THROWS(parse_cycles("(1 2)(2 3)", 3));
}
