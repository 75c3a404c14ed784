#include "prym/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "prym/polygonal.hpp"

namespace prym {

Perm random_perm(Rng& rng, int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(im[i], im[rng.uniform(i + 1)]);
    return Perm(std::move(im));
}

SignedPerm random_signed(Rng& rng, int n) {
    std::vector<std::uint8_t> eps(n);
    for (auto& b : eps) b = static_cast<std::uint8_t>(rng.coin());
    return SignedPerm(random_perm(rng, n), std::move(eps));
}

SignedPerm random_etale_signed(Rng& rng, int n) {
    Perm sigma = random_perm(rng, n);
    std::vector<std::uint8_t> eps(n);
    for (auto& b : eps) b = static_cast<std::uint8_t>(rng.coin());
    for (const auto& cyc : cycles(sigma)) {
        int s = 0;
        for (int i : cyc) s ^= eps[i];
        if (s) eps[cyc.front()] ^= 1;
    }
    return SignedPerm(std::move(sigma), std::move(eps));
}

namespace {

std::vector<std::string> make_labels(int count) {
    std::vector<std::string> out;
    for (int i = 1; i <= count; ++i) out.push_back("b" + std::to_string(i));
    return out;
}

Perm product_right_first(const std::vector<Perm>& items, int degree) {
    Perm acc(degree);
    for (const auto& x : items) acc = compose(x, acc);
    return acc;
}

SignedPerm sp_product_right_first(const std::vector<SignedPerm>& items, int n) {
    SignedPerm acc(n);
    for (const auto& x : items) acc = sp_compose(x, acc);
    return acc;
}

}  // namespace

MonodromyCover random_connected_cover(Rng& rng, int degree, int min_branches,
                                      int max_branches, bool require_full_group) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        int nb = rng.range(min_branches, max_branches);
        MonodromyCover c;
        c.base.genus = 0;
        c.base.branch_labels = make_labels(nb);
        c.degree = degree;
        for (int i = 0; i + 1 < nb; ++i) c.branches.push_back(random_perm(rng, degree));
        c.branches.push_back(inverse(product_right_first(c.branches, degree)));
        if (!is_transitive(monodromy_tuple(c))) continue;
        if (require_full_group) {
            std::uint64_t full = 1;
            for (int k = 2; k <= degree; ++k) full *= k;
            if (group_order(monodromy_tuple(c)) != full) continue;
        }
        validate_cover(c);
        return c;
    }
    throw std::runtime_error("random_connected_cover: rejection sampling failed");
}

SignedTower random_etale_tower(Rng& rng, int degree, int min_branches, int max_branches,
                               bool require_connected_ctilde) {
    for (int attempt = 0; attempt < 20000; ++attempt) {
        int nb = rng.range(min_branches, max_branches);
        SignedTower t;
        t.base.genus = 0;
        t.base.branch_labels = make_labels(nb);
        t.degree = degree;
        for (int i = 0; i + 1 < nb; ++i) t.branches.push_back(random_etale_signed(rng, degree));
        t.branches.push_back(sp_inverse(sp_product_right_first(t.branches, degree)));
        SignedTower candidate = t;
        bool ok = true;
        // the balancing element must itself be etale
        for (const auto& cyc : cycles(candidate.branches.back().sigma)) {
            int s = 0;
            for (int i : cyc) s ^= candidate.branches.back().eps[i];
            if (s) { ok = false; break; }
        }
        if (!ok) continue;
        if (!is_transitive(monodromy_tuple(cover_c(candidate)))) continue;
        if (require_connected_ctilde &&
            !is_transitive(monodromy_tuple(cover_ctilde(candidate))))
            continue;
        validate_tower(candidate);
        return candidate;
    }
    throw std::runtime_error("random_etale_tower: rejection sampling failed");
}

SignedTower random_bigonal_tower(Rng& rng, int base_genus, int min_branches,
                                 int max_branches) {
    for (int attempt = 0; attempt < 20000; ++attempt) {
        int nb = rng.range(min_branches, max_branches);
        SignedTower t;
        t.base.genus = base_genus;
        t.base.branch_labels = make_labels(nb);
        t.degree = 2;
        for (int i = 0; i < 2 * base_genus; ++i) t.handles.push_back(random_signed(rng, 2));
        for (int i = 0; i + 1 < nb; ++i) t.branches.push_back(random_signed(rng, 2));
        // balance: commutators first, then branches; pick the last branch to
        // cancel the whole product
        std::vector<SignedPerm> items;
        for (std::size_t i = 0; i + 1 < t.handles.size(); i += 2) {
            const auto& a = t.handles[i];
            const auto& b = t.handles[i + 1];
            items.push_back(sp_product_right_first(
                {a, b, sp_inverse(a), sp_inverse(b)}, 2));
        }
        for (const auto& g : t.branches) items.push_back(g);
        t.branches.push_back(sp_inverse(sp_product_right_first(items, 2)));
        if (!is_transitive(monodromy_tuple(cover_c(t)))) continue;
        validate_tower(t);
        return t;
    }
    throw std::runtime_error("random_bigonal_tower: rejection sampling failed");
}

SignedTower random_two_point_ramified_tower(Rng& rng, int min_branches, int max_branches) {
    for (int attempt = 0; attempt < 20000; ++attempt) {
        int nb = rng.range(std::max(min_branches, 3), max_branches);
        int degree = rng.range(2, 4);
        SignedTower t;
        t.base.genus = 0;
        t.base.branch_labels = make_labels(nb);
        t.degree = degree;
        // two designated labels carry exactly one odd cycle each
        int r1 = 0, r2 = 1;
        for (int i = 0; i + 1 < nb; ++i) {
            SignedPerm g = random_etale_signed(rng, degree);
            if (i == r1 || i == r2) {
                auto cs = cycles(g.sigma);
                const auto& cyc = cs[rng.uniform(static_cast<int>(cs.size()))];
                g.eps[cyc.front()] ^= 1;
            }
            t.branches.push_back(g);
        }
        t.branches.push_back(sp_inverse(sp_product_right_first(t.branches, degree)));
        bool last_etale = true;
        for (const auto& cyc : cycles(t.branches.back().sigma)) {
            int s = 0;
            for (int i : cyc) s ^= t.branches.back().eps[i];
            if (s) { last_etale = false; break; }
        }
        if (!last_etale) continue;
        if (!is_transitive(monodromy_tuple(cover_c(t)))) continue;
        if (ramification_points(t).size() != 2) continue;
        validate_tower(t);
        return t;
    }
    throw std::runtime_error("random_two_point_ramified_tower: rejection sampling failed");
}

namespace {

// Fiberwise data of a Cartesian bihyperelliptic tower at one label.
struct FiberLabel {
    Perm sigma_h{2};
    std::array<std::uint8_t, 2> d0{0, 0}, d1{0, 0};
};

SignedPerm fiber_product_element(const FiberLabel& f) {
    // sheets (h,c) -> 2h+c; sigma(2h+c) = 2 sigma_h(h) + (c ^ d0[h] ^ d1[h]);
    // pi-signs eps(2h+c) = d0[h]
    std::vector<int> im(4);
    std::vector<std::uint8_t> eps(4);
    for (int h = 0; h < 2; ++h)
        for (int c = 0; c < 2; ++c) {
            im[2 * h + c] = 2 * f.sigma_h(h) + (c ^ f.d0[h] ^ f.d1[h]);
            eps[2 * h + c] = f.d0[h];
        }
    return SignedPerm(Perm(std::move(im)), std::move(eps));
}

FiberLabel invert_label(const std::vector<FiberLabel>& labels) {
    // componentwise inverse of the product, as WC_2 data sharing sigma_h
    auto as_wc2 = [](const FiberLabel& f, bool first) {
        std::vector<std::uint8_t> e{first ? f.d0[0] : f.d1[0], first ? f.d0[1] : f.d1[1]};
        return SignedPerm(f.sigma_h, std::move(e));
    };
    SignedPerm p0(2), p1(2);
    for (const auto& f : labels) {
        p0 = sp_compose(as_wc2(f, true), p0);
        p1 = sp_compose(as_wc2(f, false), p1);
    }
    SignedPerm i0 = sp_inverse(p0), i1 = sp_inverse(p1);
    FiberLabel out;
    out.sigma_h = i0.sigma;
    out.d0 = {i0.eps[0], i0.eps[1]};
    out.d1 = {i1.eps[0], i1.eps[1]};
    return out;
}

bool branch_loci_disjoint(const FiberLabel& f) {
    for (const auto& cyc : cycles(f.sigma_h)) {
        int s0 = 0, s1 = 0;
        for (int h : cyc) {
            s0 ^= f.d0[h];
            s1 ^= f.d1[h];
        }
        if (s0 && s1) return false;
    }
    return true;
}

}  // namespace

namespace {

// Generic label shapes for a Cartesian bihyperelliptic tower: each branch
// point of P1 sees exactly one of (H ramified), (C0 ramified over one
// H-sheet), (C1 ramified over one H-sheet); coincidences in one fiber
// would create extra degenerations the shape propositions exclude.
enum class FiberShape { HBranch, C0Branch, C1Branch, Trivial, Other };

FiberShape classify_fiber(const FiberLabel& f) {
    bool swap = !f.sigma_h.is_identity();
    int w0 = f.d0[0] + f.d0[1], w1 = f.d1[0] + f.d1[1];
    if (swap) {
        // etale lift of the H-ramification: cycle-even sign vectors only
        if (f.d0[0] == f.d0[1] && f.d1[0] == f.d1[1]) return FiberShape::HBranch;
        return FiberShape::Other;
    }
    if (w0 == 0 && w1 == 0) return FiberShape::Trivial;
    if (w0 == 1 && w1 == 0) return FiberShape::C0Branch;
    if (w0 == 0 && w1 == 1) return FiberShape::C1Branch;
    return FiberShape::Other;
}

}  // namespace

BihyperellipticInstance random_cartesian_bihyperelliptic(Rng& rng, int num_h_branch,
                                                         int extra_labels) {
    if (num_h_branch < 2 || num_h_branch % 2 != 0)
        throw std::invalid_argument(
            "random_cartesian_bihyperelliptic: H branch count must be even >= 2");
    for (int attempt = 0; attempt < 50000; ++attempt) {
        int nb = num_h_branch + extra_labels;
        std::vector<FiberLabel> labels;
        // num_h_branch-1 swap labels and extra_labels factor-branch labels
        // (split evenly between the factors, both counts even and >= 2),
        // shuffled; the balancing label must come out as the last swap
        if (extra_labels % 2 != 0 || extra_labels < 4)
            throw std::invalid_argument(
                "random_cartesian_bihyperelliptic: factor branch total must be even >= 4");
        int r0_target = 2 * rng.range(1, extra_labels / 2 - 1);
        std::vector<int> kinds;
        for (int i = 0; i < num_h_branch - 1; ++i) kinds.push_back(0);
        for (int i = 0; i < extra_labels; ++i) kinds.push_back(i < r0_target ? 1 : 2);
        for (int i = static_cast<int>(kinds.size()) - 1; i > 0; --i)
            std::swap(kinds[i], kinds[rng.uniform(i + 1)]);
        for (int kind : kinds) {
            FiberLabel f;
            if (kind == 0) {
                f.sigma_h = Perm(std::vector<int>{1, 0});
                std::uint8_t a = static_cast<std::uint8_t>(rng.coin());
                std::uint8_t b = static_cast<std::uint8_t>(rng.coin());
                f.d0 = {a, a};
                f.d1 = {b, b};
            } else {
                int slot = rng.uniform(2);
                if (kind == 1) f.d0[slot] = 1;
                else f.d1[slot] = 1;
            }
            labels.push_back(f);
        }
        FiberLabel last = invert_label(labels);
        labels.push_back(last);
        if (classify_fiber(last) != FiberShape::HBranch) continue;

        BihyperellipticInstance inst;
        inst.tower.base.genus = 0;
        inst.tower.base.branch_labels = make_labels(nb);
        inst.tower.degree = 4;
        for (const auto& f : labels) inst.tower.branches.push_back(fiber_product_element(f));
        if (!is_transitive(monodromy_tuple(cover_c(inst.tower)))) continue;
        if (!is_etale_double(inst.tower)) continue;
        validate_tower(inst.tower);

        inst.h_cover.base = inst.tower.base;
        inst.h_cover.degree = 2;
        int r0 = 0, r1 = 0;
        for (const auto& f : labels) {
            inst.h_cover.branches.push_back(f.sigma_h);
            switch (classify_fiber(f)) {
                case FiberShape::C0Branch: ++r0; break;
                case FiberShape::C1Branch: ++r1; break;
                default: break;
            }
        }
        validate_cover(inst.h_cover);
        inst.genus_h = (num_h_branch - 2) / 2;
        if (r0 % 2 != 0 || r1 % 2 != 0) continue;
        if (r0 == 0 || r1 == 0) continue;  // factors must be connected
        inst.genus_c0 = 2 * inst.genus_h + r0 / 2 - 1;
        inst.genus_c1 = 2 * inst.genus_h + r1 / 2 - 1;
        return inst;
    }
    throw std::runtime_error("random_cartesian_bihyperelliptic: rejection sampling failed");
}

namespace {

// Generic sigma shapes for an etale double cover of a bielliptic curve:
// block swaps (E ramified, C etale over the ramification) and single
// within-block transpositions (one branch point of C -> E per fiber).
bool bielliptic_generic_sigma(const Perm& s, bool& is_swap) {
    static const std::vector<std::vector<int>> swaps{
        {2, 3, 0, 1}, {3, 2, 1, 0}, {2, 3, 1, 0}, {3, 2, 0, 1}};
    static const std::vector<std::vector<int>> cbranch{{1, 0, 2, 3}, {0, 1, 3, 2}};
    for (const auto& im : swaps)
        if (s.images() == im) { is_swap = true; return true; }
    for (const auto& im : cbranch)
        if (s.images() == im) { is_swap = false; return true; }
    if (s.is_identity()) { is_swap = false; return true; }
    return false;
}

SignedPerm with_etale_signs(Rng& rng, Perm sigma) {
    std::vector<std::uint8_t> eps(sigma.degree());
    for (auto& b : eps) b = static_cast<std::uint8_t>(rng.coin());
    for (const auto& cyc : cycles(sigma)) {
        int s = 0;
        for (int k : cyc) s ^= eps[k];
        if (s) eps[cyc.front()] ^= 1;
    }
    return SignedPerm(std::move(sigma), std::move(eps));
}

}  // namespace

BiellipticInstance random_noncartesian_bielliptic(Rng& rng, int extra_labels) {
    const std::vector<std::vector<int>> swap_sigmas{
        {2, 3, 0, 1}, {3, 2, 1, 0}, {2, 3, 1, 0}, {3, 2, 0, 1}};
    const std::vector<std::vector<int>> cbranch_sigmas{{1, 0, 2, 3}, {0, 1, 3, 2}};
    for (int attempt = 0; attempt < 100000; ++attempt) {
        int nb = 4 + extra_labels;
        BiellipticInstance inst;
        inst.tower.base.genus = 0;
        inst.tower.base.branch_labels = make_labels(nb);
        inst.tower.degree = 4;
        // 3 swap labels + extra C-branch labels in random order; the
        // balancing label must come out as the fourth swap
        std::vector<int> kinds(3, 0);
        for (int i = 0; i < extra_labels; ++i) kinds.push_back(1);
        for (int i = static_cast<int>(kinds.size()) - 1; i > 0; --i)
            std::swap(kinds[i], kinds[rng.uniform(i + 1)]);
        for (int kind : kinds) {
            const auto& pool = kind == 0 ? swap_sigmas : cbranch_sigmas;
            Perm sigma(pool[rng.uniform(static_cast<int>(pool.size()))]);
            inst.tower.branches.push_back(with_etale_signs(rng, std::move(sigma)));
        }
        inst.tower.branches.push_back(
            sp_inverse(sp_product_right_first(inst.tower.branches, 4)));
        const SignedPerm& last = inst.tower.branches.back();
        bool last_swap = false;
        if (!bielliptic_generic_sigma(last.sigma, last_swap) || !last_swap) continue;
        bool last_etale = true;
        for (const auto& cyc : cycles(last.sigma)) {
            int s = 0;
            for (int k : cyc) s ^= last.eps[k];
            if (s) { last_etale = false; break; }
        }
        if (!last_etale) continue;
        if (!is_transitive(monodromy_tuple(cover_c(inst.tower)))) continue;
        if (!is_transitive(monodromy_tuple(cover_ctilde(inst.tower)))) continue;
        if (is_cartesian_relative(inst.tower, inst.blocks)) continue;
        validate_tower(inst.tower);
        return inst;
    }
    throw std::runtime_error("random_noncartesian_bielliptic: rejection sampling failed");
}

FiberPoint random_fiber_point(Rng& rng, const MonodromyCover& c) {
    int label = rng.uniform(static_cast<int>(c.branches.size()));
    auto cs = cycles(c.branches[label]);
    FiberPoint fp;
    fp.label = label;
    fp.cycle = rng.uniform(static_cast<int>(cs.size()));
    return fp;
}

}  // namespace prym
