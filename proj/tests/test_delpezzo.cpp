#include <doctest.h>

#include <algorithm>
#include <set>

#include "prym/delpezzo.hpp"

using namespace prym;

namespace {

DivisorClass cls(std::vector<int> v) { return v; }

}  // namespace

TEST_CASE("line enumeration") {
    CHECK(lines(PicLattice(0)).empty());
    CHECK(lines(PicLattice(4)).size() == 10);
    CHECK(lines(PicLattice(5)).size() == 16);
    CHECK(lines(PicLattice(6)).size() == 27);
    // every enumerated class has the defining intersection numbers, and the
    // list matches an unbounded-window search
    PicLattice lat(6);
    DivisorClass k = canonical_class(lat);
    auto ls = lines(lat);
    for (const auto& d : ls) {
        CHECK(intersect(d, d) == -1);
        CHECK(intersect(d, k) == -1);
    }
    std::set<DivisorClass> wide;
    for (int d = -6; d <= 6; ++d) {
        DivisorClass cur(7, 0);
        cur[0] = d;
        auto rec = [&](auto&& self, int idx) -> void {
            if (idx == 7) {
                if (intersect(cur, cur) == -1 && intersect(cur, k) == -1) wide.insert(cur);
                return;
            }
            for (int m = -6; m <= 6; ++m) {
                cur[idx] = m;
                // Cauchy-Schwarz prune: sum of squares cannot exceed d^2+1
                int sq = 0;
                for (int j = 1; j <= idx; ++j) sq += cur[j] * cur[j];
                if (sq <= d * d + 1) self(self, idx + 1);
            }
            cur[idx] = 0;
        };
        rec(rec, 1);
    }
    CHECK(std::set<DivisorClass>(ls.begin(), ls.end()) == wide);
}

TEST_CASE("intersection arithmetic") {
    // e1 . (h - e1 - e2) = 1, e1 . e2 = 0
    DivisorClass e1 = cls({0, 1, 0, 0, 0, 0, 0});
    DivisorClass e2 = cls({0, 0, 1, 0, 0, 0, 0});
    DivisorClass h12 = cls({1, -1, -1, 0, 0, 0, 0});
    CHECK(intersect(e1, h12) == 1);
    CHECK(intersect(e1, e2) == 0);
    // a tritangent through e1 and h-e1-e2: the third member is forced
    DivisorClass third = cls({2, -1, 0, -1, -1, -1, -1});
    DivisorClass sum(7, 0);
    for (int i = 0; i < 7; ++i) sum[i] = e1[i] + h12[i] + third[i];
    DivisorClass mk = canonical_class(PicLattice(6));
    for (auto& v : mk) v = -v;
    CHECK(sum == mk);
    CHECK(intersect(e1, third) == 1);
    CHECK(intersect(h12, third) == 1);
}

TEST_CASE("mark classification structure") {
    PicLattice lat(6);
    auto ls = lines(lat);
    DivisorClass e6 = cls({0, 0, 0, 0, 0, 0, 1});
    auto mc = mark_and_classify(lat, ls, e6);
    CHECK(mc.meeting.size() == 10);
    CHECK(mc.disjoint.size() == 16);
    // the ten meeting lines: five h-e_i-e_6 and five 2h-(four e_i)-e_6
    int conics = 0, lines_through = 0;
    for (int i : mc.meeting) {
        if (ls[i][0] == 1) ++lines_through;
        if (ls[i][0] == 2) ++conics;
    }
    CHECK(lines_through == 5);
    CHECK(conics == 5);
    // a non-line mark is rejected
    CHECK_THROWS(mark_and_classify(lat, ls, cls({1, 0, 0, 0, 0, 0, 0})));
}

TEST_CASE("weyl reflections permute the lines") {
    PicLattice lat(6);
    auto ls = lines(lat);
    PermTuple act = weyl_action_on_lines(lat, ls);
    CHECK(act.degree == 27);
    CHECK(group_order(act) == 51840);
    auto w5 = weyl_orders(PicLattice(5));
    CHECK(w5.group_order == 1920);
    CHECK(weyl_orders(lat).line_stabilizer_order == 1920);
}

TEST_CASE("nodal specialization") {
    auto ns = nodal_specialize();
    REQUIRE(ns.names.size() == 21);
    CHECK(ns.quotient_consistent);
    // stated incidence rules
    auto adj = [&](int a, int b) {
        return std::find(ns.adjacency[a].begin(), ns.adjacency[a].end(), b) !=
               ns.adjacency[a].end();
    };
    for (std::size_t k = 0; k < ns.pair_index.size(); ++k) {
        auto [i, j] = ns.pair_index[k];
        int obj = static_cast<int>(k) + 6;
        CHECK(adj(obj, i));
        CHECK(adj(obj, j));
        for (std::size_t l = 0; l < ns.pair_index.size(); ++l) {
            if (l == k) continue;
            auto [a, b] = ns.pair_index[l];
            bool disjoint_pairs = a != i && a != j && b != i && b != j;
            CHECK(adj(obj, static_cast<int>(l) + 6) == disjoint_pairs);
        }
    }
    // full S6 equivariance via generators
    CHECK(nodal_s6_equivariant(ns, Perm(std::vector<int>{1, 0, 2, 3, 4, 5})));
    CHECK(nodal_s6_equivariant(ns, Perm(std::vector<int>{1, 2, 3, 4, 5, 0})));
}

TEST_CASE("segre bookkeeping") {
    auto ss = segre_structure();
    CHECK(ss.rulings.size() == 6);
    CHECK(ss.planes.size() == 15);
    CHECK(ss.ruling_plane_incidence.size() == 30);  // five planes through each ruling
    CHECK(ss.pentagon_triples.size() == 15);
    CHECK(ss.wheel_triples.size() == 15);  // partitions of a 6-set into three pairs
    CHECK(ss.pentagon_pa == 6);
    CHECK(ss.wheel_components.size() == 4);
    CHECK(ss.wheel_concurrent.size() == 3);
    // every wheel triple is a genuine partition
    for (const auto& w : ss.wheel_triples) {
        std::set<int> used;
        for (int pidx : w) {
            used.insert(ss.planes[pidx].first);
            used.insert(ss.planes[pidx].second);
        }
        CHECK(used.size() == 6);
    }
}

TEST_CASE("dot export") {
    auto g = incidence_graph(PicLattice(5));
    std::string dot = to_dot(g, "quartic");
    CHECK(dot.find("graph quartic") != std::string::npos);
    CHECK(dot.find("n0") != std::string::npos);
}
