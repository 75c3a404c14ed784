#include <doctest.h>

#include <bit>
#include <set>

#include "prym/f2.hpp"
#include "prym/generators.hpp"

using namespace prym;

namespace {

SymplecticF2 random_symplectic(Rng& rng, int dim) {
    for (;;) {
        std::vector<F2Vec> rows(dim, 0);
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j)
                if (rng.coin()) {
                    rows[i] |= F2Vec{1} << j;
                    rows[j] |= F2Vec{1} << i;
                }
        if (f2_rank(rows) == dim) return SymplecticF2(dim, std::move(rows));
    }
}

}  // namespace

TEST_CASE("pairing basics") {
    SymplecticF2 sp = standard_symplectic(2);
    for (F2Vec x = 0; x < 16; ++x) CHECK(pair(sp, x, x) == 0);
    CHECK(pair(sp, 1, 2) == 1);   // <e_1, f_1>
    CHECK(pair(sp, 4, 8) == 1);   // <e_2, f_2>
    CHECK(pair(sp, 1, 4) == 0);
    Rng rng(2);
    for (int i = 0; i < 100; ++i) {
        F2Vec x = rng.uniform(16), y = rng.uniform(16), z = rng.uniform(16);
        CHECK(pair(sp, static_cast<F2Vec>(x ^ y), z) == (pair(sp, x, z) ^ pair(sp, y, z)));
    }
}

TEST_CASE("quadratic forms polarize the pairing") {
    Rng rng(7);
    for (int g = 1; g <= 2; ++g) {
        SymplecticF2 sp = standard_symplectic(g);
        for (int q0 = 0; q0 < (1 << sp.dim); ++q0) {
            QuadraticFormF2 q{sp, static_cast<F2Vec>(q0)};
            for (F2Vec x = 0; x < (F2Vec{1} << sp.dim); ++x)
                for (F2Vec y = 0; y < (F2Vec{1} << sp.dim); ++y)
                    CHECK((q_eval(q, x ^ y) ^ q_eval(q, x) ^ q_eval(q, y)) == pair(sp, x, y));
        }
    }
    // randomized on larger, non-standard gram matrices
    for (int trial = 0; trial < 10; ++trial) {
        SymplecticF2 sp = random_symplectic(rng, 8 + 2 * (trial % 3));
        QuadraticFormF2 q{sp, static_cast<F2Vec>(rng.uniform(1 << sp.dim))};
        for (int i = 0; i < 100; ++i) {
            F2Vec x = rng.uniform(1 << sp.dim), y = rng.uniform(1 << sp.dim);
            CHECK((q_eval(q, x ^ y) ^ q_eval(q, x) ^ q_eval(q, y)) == pair(sp, x, y));
        }
    }
}

TEST_CASE("arf invariant") {
    SymplecticF2 sp1 = standard_symplectic(1);
    QuadraticFormF2 split{sp1, 0};
    CHECK(arf(split) == 0);
    int zeros = 0;
    for (F2Vec x = 0; x < 4; ++x)
        if (q_eval(split, x) == 0) ++zeros;
    CHECK(zeros == 3);
    // counts of even and odd forms on dim 2g
    for (int g = 1; g <= 3; ++g) {
        SymplecticF2 sp = standard_symplectic(g);
        int even = 0, odd = 0;
        for (int q0 = 0; q0 < (1 << sp.dim); ++q0) {
            QuadraticFormF2 q{sp, static_cast<F2Vec>(q0)};
            (arf(q) == 0 ? even : odd) += 1;
        }
        CHECK(even == (1 << (g - 1)) * ((1 << g) + 1));
        CHECK(odd == (1 << (g - 1)) * ((1 << g) - 1));
    }
    // count and reduction routes agree, also on random gram matrices
    Rng rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        SymplecticF2 sp = random_symplectic(rng, 4 + 2 * (trial % 3));
        QuadraticFormF2 q{sp, static_cast<F2Vec>(rng.uniform(1 << sp.dim))};
        CHECK(arf_by_count(q) == arf_by_reduction(q));
    }
}

TEST_CASE("symplectic basis") {
    Rng rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        SymplecticF2 sp = random_symplectic(rng, 4 + 2 * (trial % 4));
        auto basis = symplectic_basis(sp);
        REQUIRE(static_cast<int>(basis.size()) == sp.dim);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) {
                int want = 0;
                if ((i / 2 == j / 2) && i != j) want = 1;
                CHECK(pair(sp, basis[i], basis[j]) == want);
            }
    }
}

TEST_CASE("translation of forms") {
    SymplecticF2 sp = standard_symplectic(2);
    QuadraticFormF2 q{sp, 5};
    CHECK(translate_form(q, 0).basis_values == q.basis_values);
    for (F2Vec v = 0; v < 16; ++v) {
        CHECK(translate_form(translate_form(q, v), v).basis_values == q.basis_values);
        for (F2Vec x = 0; x < 16; ++x)
            CHECK(q_eval(translate_form(q, v), x) == (q_eval(q, x) ^ pair(sp, x, v)));
        CHECK((arf(translate_form(q, v)) ^ arf(q)) == q_eval(q, v));
    }
    // simply transitive on forms with the fixed polarization (g <= 2)
    std::set<F2Vec> orbit;
    for (F2Vec v = 0; v < 16; ++v) orbit.insert(translate_form(q, v).basis_values);
    CHECK(orbit.size() == 16);
}

TEST_CASE("descent of spaces and forms") {
    // g = 1: zero-dimensional quotient
    {
        SymplecticF2 sp = standard_symplectic(1);
        Descent d = descend_space(sp, 1);
        CHECK(d.down.dim == 0);
        CHECK_THROWS(descend_space(sp, 0));
    }
    Rng rng(41);
    for (int g = 2; g <= 5; ++g) {
        SymplecticF2 sp = standard_symplectic(g);
        for (int i = 0; i < 15; ++i) {
            F2Vec mu = 1 + rng.uniform((1 << sp.dim) - 1);
            Descent d = descend_space(sp, mu);
            CHECK(d.down.dim == sp.dim - 2);
            CHECK(f2_rank(d.down.gram) == d.down.dim);  // nondegenerate
        }
    }
    // a non-descendable form is rejected
    {
        SymplecticF2 sp = standard_symplectic(2);
        F2Vec mu = 1;
        Descent d = descend_space(sp, mu);
        QuadraticFormF2 bad{sp, 1};  // q(e_1) = 1
        CHECK(q_eval(bad, mu) == 1);
        CHECK_THROWS(descend_form(bad, d));
    }
}

TEST_CASE("isotropic subspaces") {
    for (int g = 1; g <= 3; ++g) {
        SymplecticF2 sp = standard_symplectic(g);
        CHECK(enumerate_isotropic(sp, 1).size() == (1u << sp.dim) - 1);
        CHECK(enumerate_isotropic(sp, g + 1).empty());
    }
    SymplecticF2 sp = standard_symplectic(2);
    // double-count oracle: over F2 a pair (v, w) with v != 0, w not in {0, v}
    // is independent, and each rank-2 subspace has 6 ordered bases
    int ordered = 0;
    for (F2Vec v = 1; v < 16; ++v)
        for (F2Vec w = 1; w < 16; ++w)
            if (w != v && pair(sp, v, w) == 0) ++ordered;
    CHECK(enumerate_isotropic(sp, 2).size() == static_cast<std::size_t>(ordered / 6));
    CHECK(enumerate_isotropic(sp, 2).size() == 15);
    // every returned basis is isotropic and independent
    for (const auto& s : enumerate_isotropic(sp, 2)) {
        REQUIRE(s.basis.size() == 2);
        CHECK(pair(sp, s.basis[0], s.basis[1]) == 0);
        CHECK(s.basis[0] != s.basis[1]);
    }
}

TEST_CASE("fano solver") {
    auto sols = fano_solve(true);
    REQUIRE(sols.size() == 7);
    CHECK(fano_orbit_count(sols) == 1);
    auto all = fano_solve(false);
    CHECK(all.size() == 8);
    bool has_all_q = false;
    for (const auto& d : all) {
        bool allq = true;
        for (auto v : d.vertex_labels)
            if (v == VertexLabel::T) allq = false;
        bool noc = true;
        for (auto e : d.edge_labels)
            if (e == EdgeLabel::C) noc = false;
        if (allq && noc) has_all_q = true;
    }
    CHECK(has_all_q);
    // rules hold on every returned diagram
    for (const auto& d : sols) {
        for (int l = 0; l < 7; ++l) {
            int tcount = 0;
            bool has_t = false;
            for (int p : d.lines[l])
                if (d.vertex_labels[p] == VertexLabel::T) { ++tcount; has_t = true; }
            if (has_t) CHECK(d.edge_labels[l] == EdgeLabel::C);
            if (d.edge_labels[l] == EdgeLabel::C) CHECK(tcount == 2);
        }
    }
}
