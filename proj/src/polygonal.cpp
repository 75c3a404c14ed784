#include "prym/polygonal.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace prym {

namespace {

int popcount_int(int x) { return std::popcount(static_cast<unsigned>(x)); }

// Decodes a permutation of 2m points into a WC_m element relative to a
// pairing: sheet i has member 0 at point pairing[i][0], member 1 at
// pairing[i][1].
SignedPerm decode_paired(const Perm& p, const std::vector<std::array<int, 2>>& pairing) {
    int m = static_cast<int>(pairing.size());
    std::map<int, std::pair<int, int>> where;  // point -> (sheet, member)
    for (int i = 0; i < m; ++i) {
        where[pairing[i][0]] = {i, 0};
        where[pairing[i][1]] = {i, 1};
    }
    std::vector<int> sigma(m);
    std::vector<std::uint8_t> eps(m);
    for (int i = 0; i < m; ++i) {
        auto it = where.find(p(pairing[i][0]));
        if (it == where.end())
            throw std::logic_error("decode_paired: action does not preserve the pairing");
        sigma[i] = it->second.first;
        eps[i] = static_cast<std::uint8_t>(it->second.second);
        // consistency: member 1 must go to the complementary member
        auto jt = where.find(p(pairing[i][1]));
        if (jt == where.end() || jt->second.first != sigma[i] ||
            jt->second.second != (1 - it->second.second))
            throw std::logic_error("decode_paired: action does not preserve the pairing");
    }
    return SignedPerm(Perm(std::move(sigma)), std::move(eps));
}

// Complement classes of the full section set: class c of sections
// {c, c ^ mask}, c < 2^(n-1).
std::vector<std::array<int, 2>> class_pairing(int n) {
    int mask = (1 << n) - 1;
    std::vector<std::array<int, 2>> out;
    for (int c = 0; c < (1 << (n - 1)); ++c) out.push_back({c, c ^ mask});
    return out;
}

int cycle_sign_sum(const SignedPerm& g, const std::vector<int>& cyc) {
    int s = 0;
    for (int i : cyc) s ^= g.eps[i];
    return s;
}

std::vector<FiberPoint> ram_points_at(const SignedTower& t, int label) {
    std::vector<FiberPoint> out;
    for (const auto& fp : ramification_points(t))
        if (fp.label == label) out.push_back(fp);
    return out;
}

// Local shape of a glued tower at one label:
//   - "etale": all cycles of the branch element have even sign sum, no glue
//   - "smooth": no glue but some odd cycle (allowed only where a
//     construction's local case list says so)
//   - "dIII": exactly two odd cycles, glued to each other
enum class LocalShape { Etale, SmoothRamified, DIII };

LocalShape local_shape(const GluedTower& t, int label) {
    const SignedPerm& g = t.smooth.branches[label];
    int odd = 0;
    for (const auto& cyc : cycles(g.sigma)) odd += cycle_sign_sum(g, cyc);
    std::vector<GluePair> here;
    for (const auto& pr : t.pairs) {
        if (pr.a.label == label || pr.b.label == label) {
            if (pr.a.label != pr.b.label)
                throw std::invalid_argument(
                    "construction input: node joins fiber points over different labels; "
                    "only the enumerated local pictures are supported");
            here.push_back(pr);
        }
    }
    if (here.empty()) return odd == 0 ? LocalShape::Etale : LocalShape::SmoothRamified;
    if (here.size() != 1)
        throw std::invalid_argument(
            "construction input: more than one node over a label is not a local picture");
    auto rams = ram_points_at(t.smooth, label);
    if (rams.size() != 2)
        throw std::invalid_argument(
            "construction input: glued label must carry exactly two pi-ramification points");
    std::set<FiberPoint> rs{rams[0], rams[1]}, gs{here[0].a, here[0].b};
    if (rs != gs)
        throw std::invalid_argument(
            "construction input: node must glue the two pi-ramification points over its label");
    return LocalShape::DIII;
}

}  // namespace

DirectImage direct_image(const SignedTower& t) {
    validate_tower(t);
    if (t.degree > 8)
        throw std::invalid_argument("direct_image: degree above supported bound (8)");
    int n = t.degree;
    DirectImage d;
    d.cover.base = t.base;
    d.cover.degree = 1 << n;
    d.class_quotient.base = t.base;
    d.class_quotient.degree = 1 << (n - 1);
    d.orientation.base = t.base;
    d.orientation.degree = 2;
    auto orient = [](const SignedPerm& g) {
        return orientation_char(g) ? Perm(std::vector<int>{1, 0}) : Perm(2);
    };
    for (const auto& g : t.handles) {
        d.cover.handles.push_back(section_action(g));
        d.class_quotient.handles.push_back(class_action(g));
        d.orientation.handles.push_back(orient(g));
    }
    for (const auto& g : t.branches) {
        d.cover.branches.push_back(section_action(g));
        d.class_quotient.branches.push_back(class_action(g));
        d.orientation.branches.push_back(orient(g));
    }
    std::vector<int> flip(1 << n);
    for (int s = 0; s < (1 << n); ++s) flip[s] = s ^ ((1 << n) - 1);
    d.iota = Perm(std::move(flip));
    validate_cover(d.cover);
    validate_cover(d.class_quotient);
    validate_cover(d.orientation);
    return d;
}

MonodromyCover orientation_cover(const MonodromyCover& c) {
    validate_cover(c);
    MonodromyCover o;
    o.base = c.base;
    o.degree = 2;
    auto orient = [](const Perm& p) {
        return perm_sign(p) < 0 ? Perm(std::vector<int>{1, 0}) : Perm(2);
    };
    for (const auto& p : c.handles) o.handles.push_back(orient(p));
    for (const auto& p : c.branches) o.branches.push_back(orient(p));
    validate_cover(o);
    return o;
}

// ----- bigonal -----

GluedTower bigonal(const SignedTower& t) { return bigonal(GluedTower{t, {}}); }

GluedTower bigonal(const GluedTower& t) {
    validate_glue(t);
    if (t.smooth.degree != 2)
        throw std::invalid_argument("bigonal: input tower must have degree 2");
    auto pairing = class_pairing(2);
    GluedTower out;
    out.smooth.base = t.smooth.base;
    out.smooth.degree = 2;
    for (const auto& g : t.smooth.handles)
        out.smooth.handles.push_back(decode_paired(section_action(g), pairing));
    for (const auto& g : t.smooth.branches)
        out.smooth.branches.push_back(decode_paired(section_action(g), pairing));
    validate_tower(out.smooth);

    for (std::size_t b = 0; b < t.smooth.branches.size(); ++b) {
        LocalShape shape = local_shape(t, static_cast<int>(b));
        auto out_rams = ram_points_at(out.smooth, static_cast<int>(b));
        switch (shape) {
            case LocalShape::DIII:
                // case (vi): the node opens up; output is smooth there
                if (out_rams.size() != 2)
                    throw std::logic_error("bigonal: case (vi) output shape unexpected");
                break;
            case LocalShape::Etale:
            case LocalShape::SmoothRamified:
                // case (v): two pi-ramification points appear and are glued
                if (out_rams.size() == 2) {
                    const SignedPerm& g = t.smooth.branches[b];
                    bool case_v = g.sigma.is_identity() && g.eps[0] && g.eps[1];
                    if (!case_v)
                        throw std::logic_error("bigonal: unexpected ramified output");
                    out.pairs.push_back(GluePair{out_rams[0], out_rams[1]});
                }
                break;
        }
    }
    validate_glue(out);
    return out;
}

std::vector<LocalBranchData> branch_data(const GluedTower& t) {
    validate_glue(t);
    std::vector<LocalBranchData> out(t.smooth.branches.size());
    for (std::size_t b = 0; b < t.smooth.branches.size(); ++b) {
        const SignedPerm& g = t.smooth.branches[b];
        for (const auto& cyc : cycles(g.sigma))
            out[b].f_mult += static_cast<int>(cyc.size()) - 1;
    }
    // nodes of C add multiplicity 2 to the base map; glued pi-ramification
    // points drop out of the pi-branch count
    GluedCover down = glued_c(t);
    for (const auto& pr : down.pairs) {
        if (pr.a.label == pr.b.label) out[pr.a.label].f_mult += 2;
        else {
            out[pr.a.label].f_mult += 1;
            out[pr.b.label].f_mult += 1;
        }
    }
    std::set<FiberPoint> glued;
    for (const auto& pr : t.pairs) {
        glued.insert(pr.a);
        glued.insert(pr.b);
    }
    for (const auto& fp : ramification_points(t.smooth))
        if (!glued.count(fp)) ++out[fp.label].g_count;
    return out;
}

std::vector<QuotientCurve> bigonal_diagram(const SignedTower& t) {
    validate_tower(t);
    if (t.degree != 2) throw std::invalid_argument("bigonal_diagram: degree must be 2");
    // The embedded WC_2 on 4 points and representatives of its 8 conjugacy
    // classes of subgroups.
    auto W = wc_elements_embedded(2);  // order 8
    auto perm4 = [](std::initializer_list<int> im) { return Perm(std::vector<int>(im)); };
    Perm e(4);
    struct Rep {
        std::string name;
        std::vector<Perm> elems;
    };
    std::vector<Rep> reps;
    reps.push_back({"Ctt", {e}});
    reps.push_back({"C~", {e, perm4({0, 1, 3, 2})}});                      // Stab(x1+)
    reps.push_back({"CxC'", {e, perm4({1, 0, 3, 2})}});                    // center
    reps.push_back({"C~'", {e, perm4({2, 3, 0, 1})}});                     // section stab
    reps.push_back({"C", {e, perm4({1, 0, 2, 3}), perm4({0, 1, 3, 2}), perm4({1, 0, 3, 2})}});
    reps.push_back({"C''", {e, perm4({3, 2, 0, 1}), perm4({1, 0, 3, 2}), perm4({2, 3, 1, 0})}});
    reps.push_back({"C'", {e, perm4({1, 0, 3, 2}), perm4({2, 3, 0, 1}), perm4({3, 2, 1, 0})}});
    {
        Rep full{"K", {}};
        full.elems = W;
        reps.push_back(std::move(full));
    }

    std::vector<QuotientCurve> out;
    for (const auto& rep : reps) {
        std::set<Perm> H(rep.elems.begin(), rep.elems.end());
        // left cosets
        std::vector<std::set<Perm>> cosets;
        std::set<Perm> assigned;
        for (const auto& w : W) {
            if (assigned.count(w)) continue;
            std::set<Perm> cs;
            for (const auto& h : H) cs.insert(compose(w, h));
            for (const auto& x : cs) assigned.insert(x);
            cosets.push_back(std::move(cs));
        }
        auto coset_of = [&](const Perm& x) {
            for (std::size_t k = 0; k < cosets.size(); ++k)
                if (cosets[k].count(x)) return static_cast<int>(k);
            throw std::logic_error("bigonal_diagram: element escaped the coset table");
        };
        auto act = [&](const SignedPerm& g) {
            Perm w = embed_2n(g);
            std::vector<int> im(cosets.size());
            for (std::size_t k = 0; k < cosets.size(); ++k)
                im[k] = coset_of(compose(w, *cosets[k].begin()));
            return Perm(std::move(im));
        };
        QuotientCurve qc;
        qc.name = rep.name;
        qc.cover.base = t.base;
        qc.cover.degree = static_cast<int>(cosets.size());
        for (const auto& g : t.handles) qc.cover.handles.push_back(act(g));
        for (const auto& g : t.branches) qc.cover.branches.push_back(act(g));
        validate_cover(qc.cover);
        out.push_back(std::move(qc));
    }
    return out;
}

// ----- trigonal -----

namespace {

// Restriction of the section cover to a subset of sections, re-indexed in
// increasing section order.
MonodromyCover restrict_sections(const SignedTower& t, const std::vector<int>& sections) {
    MonodromyCover out;
    out.base = t.base;
    out.degree = static_cast<int>(sections.size());
    std::map<int, int> pos;
    for (std::size_t k = 0; k < sections.size(); ++k) pos[sections[k]] = static_cast<int>(k);
    auto restrict = [&](const SignedPerm& g) {
        Perm s = section_action(g);
        std::vector<int> im(sections.size());
        for (std::size_t k = 0; k < sections.size(); ++k) {
            auto it = pos.find(s(sections[k]));
            if (it == pos.end())
                throw std::logic_error("restrict_sections: block not invariant");
            im[k] = it->second;
        }
        return Perm(std::move(im));
    };
    for (const auto& g : t.handles) out.handles.push_back(restrict(g));
    for (const auto& g : t.branches) out.branches.push_back(restrict(g));
    return out;
}

void require_orientable(const SignedTower& t, const char* who) {
    for (const auto& g : t.handles)
        if (orientation_char(g))
            throw std::invalid_argument(std::string(who) + ": non-orientable input");
    for (const auto& g : t.branches)
        if (orientation_char(g))
            throw std::invalid_argument(std::string(who) + ": non-orientable input");
}

void require_local_cases(const GluedTower& t, const char* who) {
    for (std::size_t b = 0; b < t.smooth.branches.size(); ++b) {
        LocalShape shape = local_shape(t, static_cast<int>(b));
        if (shape == LocalShape::SmoothRamified)
            throw std::invalid_argument(
                std::string(who) +
                ": pi is ramified at an unglued point; input must be etale or carry dIII nodes");
    }
}

}  // namespace

MonodromyCover trigonal_forward(const SignedTower& t) {
    return trigonal_forward(GluedTower{t, {}});
}

MonodromyCover trigonal_forward(const GluedTower& t) {
    validate_glue(t);
    if (t.smooth.degree != 3)
        throw std::invalid_argument("trigonal_forward: input tower must have degree 3");
    if (t.smooth.base.genus != 0)
        throw std::invalid_argument("trigonal_forward: base must have genus 0");
    require_orientable(t.smooth, "trigonal_forward");
    require_local_cases(t, "trigonal_forward");
    std::vector<int> evens;
    for (int s = 0; s < 8; ++s)
        if (popcount_int(s) % 2 == 0) evens.push_back(s);
    MonodromyCover x = restrict_sections(t.smooth, evens);
    validate_cover(x);
    return x;
}

GluedTower trigonal_inverse(const MonodromyCover& x) {
    validate_cover(x);
    if (x.degree != 4)
        throw std::invalid_argument("trigonal_inverse: input cover must have degree 4");
    if (x.base.genus != 0)
        throw std::invalid_argument("trigonal_inverse: base must have genus 0");

    // the 6 unordered sheet pairs and the 3 partitions into pairs
    const std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    auto pair_index = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (pairs[k] == std::make_pair(i, j)) return static_cast<int>(k);
        throw std::logic_error("trigonal_inverse: bad pair");
    };
    // partitions: {01|23}, {02|13}, {03|12}; member 0 = the pair containing sheet 0
    const std::vector<std::array<int, 2>> pairing{
        {pair_index(0, 1), pair_index(2, 3)},
        {pair_index(0, 2), pair_index(1, 3)},
        {pair_index(0, 3), pair_index(1, 2)}};
    auto pair_action = [&](const Perm& p) {
        std::vector<int> im(6);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            im[k] = pair_index(p(pairs[k].first), p(pairs[k].second));
        return Perm(std::move(im));
    };

    GluedTower out;
    out.smooth.base = x.base;
    out.smooth.degree = 3;
    for (const auto& p : x.branches)
        out.smooth.branches.push_back(decode_paired(pair_action(p), pairing));
    validate_tower(out.smooth);

    for (std::size_t b = 0; b < x.branches.size(); ++b) {
        auto type = cycle_type_and_sign(x.branches[b]).cycle_lengths;
        auto rams = ram_points_at(out.smooth, static_cast<int>(b));
        bool degenerate = (type == std::vector<int>{2, 2} || type == std::vector<int>{4});
        if (degenerate) {
            if (rams.size() != 2)
                throw std::logic_error("trigonal_inverse: degenerate label shape unexpected");
            out.pairs.push_back(GluePair{rams[0], rams[1]});
        } else if (!rams.empty()) {
            throw std::logic_error("trigonal_inverse: unexpected ramification in output");
        }
    }
    validate_glue(out);
    return out;
}

// ----- tetragonal -----

TetragonalPair tetragonal(const SignedTower& t) { return tetragonal(GluedTower{t, {}}); }

namespace {

// WC_4 structure of one parity block of the 16 sections: sections of the
// block are paired by complementation; sheet order by smaller member.
SignedPerm block_element(const SignedPerm& g, const std::vector<int>& block_sections) {
    std::vector<std::array<int, 2>> pairing;
    std::set<int> in_block(block_sections.begin(), block_sections.end());
    for (int s : block_sections) {
        int c = s ^ 15;
        if (!in_block.count(c))
            throw std::logic_error("block_element: block not complement-closed");
        if (s < c) pairing.push_back({s, c});
    }
    // decode on the raw 16-point action restricted to the pairing's points
    return decode_paired(section_action(g), pairing);
}

}  // namespace

TetragonalPair tetragonal(const GluedTower& t) {
    validate_glue(t);
    if (t.smooth.degree != 4)
        throw std::invalid_argument("tetragonal: input tower must have degree 4");
    if (t.smooth.base.genus != 0)
        throw std::invalid_argument("tetragonal: base must have genus 0");
    require_orientable(t.smooth, "tetragonal");
    require_local_cases(t, "tetragonal");

    std::vector<int> evens, odds;
    for (int s = 0; s < 16; ++s)
        (popcount_int(s) % 2 == 0 ? evens : odds).push_back(s);

    TetragonalPair out;
    for (int side = 0; side < 2; ++side) {
        const auto& sections = side == 0 ? evens : odds;
        GluedTower& res = side == 0 ? out.c0 : out.c1;
        res.smooth.base = t.smooth.base;
        res.smooth.degree = 4;
        for (const auto& g : t.smooth.branches)
            res.smooth.branches.push_back(block_element(g, sections));
        validate_tower(res.smooth);
    }

    // gluing per label, following the enumerated local pictures
    for (std::size_t b = 0; b < t.smooth.branches.size(); ++b) {
        LocalShape shape = local_shape(t, static_cast<int>(b));
        const SignedPerm& g = t.smooth.branches[b];
        auto type = cycle_type_and_sign(g.sigma).cycle_lengths;
        auto rams0 = ram_points_at(out.c0.smooth, static_cast<int>(b));
        auto rams1 = ram_points_at(out.c1.smooth, static_cast<int>(b));
        if (shape == LocalShape::Etale) {
            // cases (1),(2),(6): no new ramification; (3),(7): one output
            // block acquires a dIII node
            for (int side = 0; side < 2; ++side) {
                auto& rams = side == 0 ? rams0 : rams1;
                auto& res = side == 0 ? out.c0 : out.c1;
                if (rams.size() == 2) {
                    bool degenerating = (type == std::vector<int>{2, 2} ||
                                         type == std::vector<int>{4});
                    if (!degenerating)
                        throw std::logic_error("tetragonal: unexpected ramified output block");
                    res.pairs.push_back(GluePair{rams[0], rams[1]});
                } else if (!rams.empty()) {
                    throw std::logic_error("tetragonal: odd ramification count in output block");
                }
            }
        } else {  // DIII input at this label
            // distinguish the glued sub-cases by where the two odd cycles sit
            std::vector<std::vector<int>> odd_cycles;
            for (const auto& cyc : cycles(g.sigma))
                if (cycle_sign_sum(g, cyc)) odd_cycles.push_back(cyc);
            if (odd_cycles.size() != 2)
                throw std::logic_error("tetragonal: dIII label without two odd cycles");
            std::multiset<std::size_t> odd_sizes{odd_cycles[0].size(), odd_cycles[1].size()};
            if (odd_sizes == std::multiset<std::size_t>{1, 1} && type == std::vector<int>{2, 1, 1}) {
                // case (5): both outputs keep the picture, node included
                for (int side = 0; side < 2; ++side) {
                    auto& rams = side == 0 ? rams0 : rams1;
                    auto& res = side == 0 ? out.c0 : out.c1;
                    if (rams.size() != 2)
                        throw std::logic_error("tetragonal: case (5) output shape unexpected");
                    res.pairs.push_back(GluePair{rams[0], rams[1]});
                }
            } else {
                // case (4) and the feedback of case (7): node opens up
                if (!rams0.empty() || !rams1.empty())
                    throw std::logic_error("tetragonal: glued input gave ramified outputs");
            }
        }
    }
    validate_glue(out.c0);
    validate_glue(out.c1);
    return out;
}

// ----- local pictures -----

namespace {

std::string describe_signed(const SignedPerm& g, bool glued) {
    std::ostringstream os;
    os << "sigma=" << render_cycles(g.sigma) << " signs=";
    for (auto b : g.eps) os << int(b);
    if (glued) os << " node";
    return os.str();
}

std::string describe_cover_local(const Perm& p) {
    std::ostringstream os;
    os << "sigma=" << render_cycles(p);
    return os.str();
}

// Per-cycle sign sums, sorted descending by cycle length.
std::vector<std::pair<int, int>> cycle_profile(const SignedPerm& g) {
    std::vector<std::pair<int, int>> out;
    for (const auto& cyc : cycles(g.sigma))
        out.emplace_back(static_cast<int>(cyc.size()), cycle_sign_sum(g, cyc));
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

GluedTower one_label_tower(const SignedPerm& g, bool glued) {
    // a local element together with its inverse over a second label, so the
    // product relation holds and the machinery can run
    SignedTower t;
    t.base.genus = 0;
    t.base.branch_labels = {"k", "aux"};
    t.degree = g.n();
    t.branches = {g, sp_inverse(g)};
    GluedTower gt{t, {}};
    if (glued) {
        auto rams = ram_points_at(t, 0);
        if (rams.size() != 2)
            throw std::invalid_argument(
                "local_picture: a glued local element needs exactly two ramified cycles");
        gt.pairs.push_back(GluePair{rams[0], rams[1]});
        auto aux = ram_points_at(t, 1);
        if (aux.size() == 2) gt.pairs.push_back(GluePair{aux[0], aux[1]});
    }
    return gt;
}

}  // namespace

LocalPictureTag local_picture(const std::string& construction, const SignedPerm& g,
                              bool glued) {
    LocalPictureTag tag;
    tag.construction = construction;
    tag.input = describe_signed(g, glued);
    auto prof = cycle_profile(g);
    auto has_profile = [&](std::vector<std::pair<int, int>> want) {
        std::sort(want.begin(), want.end(), std::greater<>());
        return prof == want;
    };

    if (construction == "bigonal") {
        if (g.n() != 2) throw std::invalid_argument("local_picture: bigonal element must be WC_2");
        if (!glued && has_profile({{1, 0}, {1, 0}})) tag.case_id = "i";
        else if (!glued && has_profile({{1, 1}, {1, 0}})) tag.case_id = "ii";
        else if (!glued && has_profile({{2, 0}})) tag.case_id = "iii";
        else if (!glued && has_profile({{2, 1}})) tag.case_id = "iv";
        else if (!glued && has_profile({{1, 1}, {1, 1}})) tag.case_id = "v";
        else if (glued && has_profile({{1, 1}, {1, 1}})) tag.case_id = "vi";
        else tag.case_id = "generic";
        GluedTower res = bigonal(one_label_tower(g, glued));
        bool out_glued = false;
        for (const auto& pr : res.pairs)
            if (pr.a.label == 0) out_glued = true;
        tag.outputs.push_back(describe_signed(res.smooth.branches[0], out_glued));
        return tag;
    }
    if (construction == "trigonal") {
        if (g.n() != 3) throw std::invalid_argument("local_picture: trigonal element must be WC_3");
        if (!glued && has_profile({{1, 0}, {1, 0}, {1, 0}})) tag.case_id = "i";
        else if (!glued && has_profile({{2, 0}, {1, 0}})) tag.case_id = "ii";
        else if (!glued && has_profile({{3, 0}})) tag.case_id = "iii";
        else if (glued && has_profile({{1, 1}, {1, 1}, {1, 0}})) tag.case_id = "iv";
        else if (glued && has_profile({{2, 1}, {1, 1}})) tag.case_id = "v";
        else tag.case_id = "generic";
        MonodromyCover x = trigonal_forward(one_label_tower(g, glued));
        tag.outputs.push_back(describe_cover_local(x.branches[0]));
        return tag;
    }
    if (construction == "tetragonal") {
        if (g.n() != 4)
            throw std::invalid_argument("local_picture: tetragonal element must be WC_4");
        if (!glued && has_profile({{1, 0}, {1, 0}, {1, 0}, {1, 0}})) tag.case_id = "1";
        else if (!glued && has_profile({{2, 0}, {1, 0}, {1, 0}})) tag.case_id = "2";
        else if (!glued && has_profile({{2, 0}, {2, 0}})) tag.case_id = "3";
        else if (glued && has_profile({{1, 1}, {1, 1}, {1, 0}, {1, 0}})) tag.case_id = "4";
        else if (glued && has_profile({{2, 0}, {1, 1}, {1, 1}})) tag.case_id = "5";
        else if (!glued && has_profile({{3, 0}, {1, 0}})) tag.case_id = "6";
        else if (!glued && has_profile({{4, 0}})) tag.case_id = "7";
        else tag.case_id = "generic";
        TetragonalPair res = tetragonal(one_label_tower(g, glued));
        for (const auto* side : {&res.c0, &res.c1}) {
            bool out_glued = false;
            for (const auto& pr : side->pairs)
                if (pr.a.label == 0) out_glued = true;
            tag.outputs.push_back(describe_signed(side->smooth.branches[0], out_glued));
        }
        return tag;
    }
    throw std::invalid_argument("local_picture: unknown construction '" + construction + "'");
}

// ----- Cartesian structure -----

CartesianFactors is_cartesian(const SignedTower& t) {
    validate_tower(t);
    if (t.degree != 2) throw std::invalid_argument("is_cartesian: tower must have degree 2");
    CartesianFactors out;
    for (const auto& g : t.handles)
        if (orientation_char(g)) return out;
    for (const auto& g : t.branches)
        if (orientation_char(g)) return out;
    out.cartesian = true;
    // factors: restriction of the section action to {00,11} and {01,10}
    auto factor = [&](std::vector<int> sections) {
        MonodromyCover f = restrict_sections(t, sections);
        validate_cover(f);
        return f;
    };
    out.factor0 = factor({0, 3});
    out.factor1 = factor({1, 2});
    return out;
}

bool is_cartesian_relative(const SignedTower& t,
                           const std::vector<std::vector<int>>& blocks) {
    validate_tower(t);
    if (blocks.size() < 2) throw std::invalid_argument("is_cartesian_relative: need >= 2 blocks");
    auto block_of = [&](int sheet) {
        for (std::size_t k = 0; k < blocks.size(); ++k)
            for (int x : blocks[k])
                if (x == sheet) return static_cast<int>(k);
        throw std::invalid_argument("is_cartesian_relative: sheet not covered by blocks");
    };
    // relative orientation cover: points (block, sign)
    int m = static_cast<int>(blocks.size());
    auto act = [&](const SignedPerm& g) {
        std::vector<int> im(2 * m);
        for (int h = 0; h < m; ++h) {
            int h2 = block_of(g.sigma(blocks[h].front()));
            int w = 0;
            for (int i : blocks[h]) w ^= g.eps[i];
            for (int s = 0; s < 2; ++s) im[2 * h + s] = 2 * h2 + (s ^ w);
        }
        return Perm(std::move(im));
    };
    std::vector<Perm> entries;
    for (const auto& g : t.handles) entries.push_back(act(g));
    for (const auto& g : t.branches) entries.push_back(act(g));
    if (entries.empty()) entries.push_back(Perm(2 * m));
    PermTuple rel(2 * m, entries);

    std::vector<Perm> block_entries;
    for (const auto& g : t.handles) {
        std::vector<int> im(m);
        for (int h = 0; h < m; ++h) im[h] = block_of(g.sigma(blocks[h].front()));
        block_entries.push_back(Perm(std::move(im)));
    }
    for (const auto& g : t.branches) {
        std::vector<int> im(m);
        for (int h = 0; h < m; ++h) im[h] = block_of(g.sigma(blocks[h].front()));
        block_entries.push_back(Perm(std::move(im)));
    }
    if (block_entries.empty()) block_entries.push_back(Perm(m));
    PermTuple quot(m, block_entries);
    return orbits(rel).size() == 2 * orbits(quot).size();
}

// ----- hyperelliptic factorization -----

std::vector<HyperellipticFactorization> hyperelliptic_factorizations(const GluedCover& c) {
    validate_glue(c);
    if (c.smooth.degree != 4)
        throw std::invalid_argument("factors_through_hyperelliptic: cover must have degree 4");
    if (c.smooth.base.genus != 0)
        throw std::invalid_argument("factors_through_hyperelliptic: base must have genus 0");
    // all three partitions of the four sheets into size-2 blocks; unlike
    // block_systems this also covers reducible covers, where the blocks are
    // whole components
    std::vector<std::vector<std::vector<int>>> candidates{
        {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
    std::vector<std::vector<std::vector<int>>> invariant;
    for (const auto& sys : candidates) {
        bool ok = true;
        for (const auto& g : monodromy_tuple(c.smooth).entries) {
            for (const auto& blk : sys) {
                std::vector<int> img{g(blk[0]), g(blk[1])};
                std::sort(img.begin(), img.end());
                if (img != sys[0] && img != sys[1]) { ok = false; break; }
            }
            if (!ok) break;
        }
        if (ok) invariant.push_back(sys);
    }
    std::vector<HyperellipticFactorization> out;
    for (const auto& sys : invariant) {
        HyperellipticFactorization f;
        f.blocks = sys;
        auto block_of = [&](int sheet) {
            for (std::size_t k = 0; k < sys.size(); ++k)
                for (int x : sys[k])
                    if (x == sheet) return static_cast<int>(k);
            throw std::logic_error("hyperelliptic_factorizations: sheet outside blocks");
        };
        f.h.base = c.smooth.base;
        f.h.degree = 2;
        for (const auto& p : c.smooth.branches) {
            std::vector<int> im(2);
            for (int k = 0; k < 2; ++k) im[k] = block_of(p(sys[k].front()));
            f.h.branches.push_back(Perm(std::move(im)));
        }
        validate_cover(f.h);
        // 3.5.1: nodes of C whose branches land on different points of H
        for (const auto& pr : c.pairs) {
            auto h_point = [&](FiberPoint fp) {
                auto cs = cycles(c.smooth.branches[fp.label]);
                int sheet = cs[fp.cycle].front();
                auto hcs = cycles(f.h.branches[fp.label]);
                FiberPoint r;
                r.label = fp.label;
                for (std::size_t k = 0; k < hcs.size(); ++k)
                    for (int x : hcs[k])
                        if (x == block_of(sheet)) r.cycle = static_cast<int>(k);
                return r;
            };
            FiberPoint ha = h_point(pr.a), hb = h_point(pr.b);
            if (!(ha == hb)) f.needed_identifications.emplace_back(ha, hb);
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::optional<HyperellipticFactorization> factors_through_hyperelliptic(const GluedCover& c) {
    auto all = hyperelliptic_factorizations(c);
    if (all.empty()) return std::nullopt;
    return all.front();
}

std::optional<HyperellipticFactorization> factors_through_hyperelliptic(const MonodromyCover& c) {
    return factors_through_hyperelliptic(GluedCover{c, {}});
}

}  // namespace prym
