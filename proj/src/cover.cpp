#include "prym/cover.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace prym {

namespace {

Perm product_first_acts_first(const std::vector<Perm>& items, int degree) {
    Perm acc(degree);
    for (const auto& x : items) acc = compose(x, acc);
    return acc;
}

// Transport around a handle: a, b, a^-1, b^-1, first listed first.
Perm handle_commutator(const Perm& a, const Perm& b) {
    return product_first_acts_first({a, b, inverse(a), inverse(b)}, a.degree());
}

void check_labels(const BaseCurve& base) {
    std::set<std::string> seen;
    for (const auto& l : base.branch_labels)
        if (!seen.insert(l).second)
            throw std::invalid_argument("base curve: duplicate branch label '" + l + "'");
}

}  // namespace

Perm relation_residual(const MonodromyCover& c) {
    std::vector<Perm> items;
    for (std::size_t i = 0; i + 1 < c.handles.size(); i += 2)
        items.push_back(handle_commutator(c.handles[i], c.handles[i + 1]));
    for (const auto& s : c.branches) items.push_back(s);
    return product_first_acts_first(items, c.degree);
}

void validate_cover(const MonodromyCover& c) {
    check_labels(c.base);
    if (c.degree < 1) throw std::invalid_argument("cover: degree must be >= 1");
    if (static_cast<int>(c.handles.size()) != 2 * c.base.genus)
        throw std::invalid_argument("cover: expected 2*genus handle permutations");
    if (c.branches.size() != c.base.branch_labels.size())
        throw std::invalid_argument("cover: one branch permutation per label required");
    for (const auto& p : c.handles)
        if (p.degree() != c.degree) throw std::invalid_argument("cover: handle degree mismatch");
    for (const auto& p : c.branches)
        if (p.degree() != c.degree) throw std::invalid_argument("cover: branch degree mismatch");
    Perm r = relation_residual(c);
    if (!r.is_identity())
        throw std::invalid_argument("cover: product relation violated, residual " +
                                    render_cycles(r));
}

PermTuple monodromy_tuple(const MonodromyCover& c) {
    std::vector<Perm> entries = c.handles;
    entries.insert(entries.end(), c.branches.begin(), c.branches.end());
    if (entries.empty()) entries.push_back(Perm(c.degree));
    return PermTuple(c.degree, std::move(entries));
}

std::vector<int> genus(const MonodromyCover& c) {
    auto orbs = orbits(monodromy_tuple(c));
    int h = c.base.genus;
    std::vector<int> out;
    for (const auto& orb : orbs) {
        std::set<int> inside(orb.begin(), orb.end());
        int m = static_cast<int>(orb.size());
        int ram = 0;
        for (const auto& s : c.branches)
            for (const auto& cyc : cycles(s))
                if (inside.count(cyc.front())) ram += static_cast<int>(cyc.size()) - 1;
        int chi = m * (2 - 2 * h) - ram;  // 2 - 2g
        if ((2 - chi) % 2 != 0)
            throw std::logic_error("genus: Hurwitz formula gave odd Euler defect");
        out.push_back((2 - chi) / 2);
    }
    return out;
}

int genus_connected(const MonodromyCover& c) {
    auto gs = genus(c);
    if (gs.size() != 1) throw std::invalid_argument("genus_connected: cover is disconnected");
    return gs.front();
}

void validate_tower(const SignedTower& t) {
    check_labels(t.base);
    if (t.degree < 1) throw std::invalid_argument("tower: degree must be >= 1");
    if (static_cast<int>(t.handles.size()) != 2 * t.base.genus)
        throw std::invalid_argument("tower: expected 2*genus handle elements");
    if (t.branches.size() != t.base.branch_labels.size())
        throw std::invalid_argument("tower: one branch element per label required");
    for (const auto& g : t.handles)
        if (g.n() != t.degree) throw std::invalid_argument("tower: handle size mismatch");
    for (const auto& g : t.branches)
        if (g.n() != t.degree) throw std::invalid_argument("tower: branch size mismatch");
    Perm r = relation_residual(cover_ctilde(t));
    if (!r.is_identity())
        throw std::invalid_argument("tower: product relation violated, residual " +
                                    render_cycles(r));
}

MonodromyCover cover_c(const SignedTower& t) {
    MonodromyCover c;
    c.base = t.base;
    c.degree = t.degree;
    for (const auto& g : t.handles) c.handles.push_back(g.sigma);
    for (const auto& g : t.branches) c.branches.push_back(g.sigma);
    return c;
}

MonodromyCover cover_ctilde(const SignedTower& t) {
    MonodromyCover c;
    c.base = t.base;
    c.degree = 2 * t.degree;
    for (const auto& g : t.handles) c.handles.push_back(embed_2n(g));
    for (const auto& g : t.branches) c.branches.push_back(embed_2n(g));
    return c;
}

bool is_etale_double(const SignedTower& t) {
    for (const auto& g : t.branches) {
        for (const auto& cyc : cycles(g.sigma)) {
            int s = 0;
            for (int i : cyc) s ^= g.eps[i];
            if (s) return false;
        }
    }
    return true;
}

namespace {

const Perm& branch_of(const MonodromyCover& c, int label) {
    if (label < 0 || label >= static_cast<int>(c.branches.size()))
        throw std::invalid_argument("fiber point: label index out of range");
    return c.branches[label];
}

std::vector<std::vector<int>> label_cycles(const MonodromyCover& c, int label) {
    return cycles(branch_of(c, label));
}

void check_point(const MonodromyCover& c, FiberPoint p) {
    auto cs = label_cycles(c, p.label);
    if (p.cycle < 0 || p.cycle >= static_cast<int>(cs.size()))
        throw std::invalid_argument("fiber point: cycle index out of range");
}

int cycle_index_containing(const std::vector<std::vector<int>>& cs, int point) {
    for (std::size_t k = 0; k < cs.size(); ++k)
        for (int x : cs[k])
            if (x == point) return static_cast<int>(k);
    throw std::logic_error("cycle_index_containing: point not found");
}

}  // namespace

void validate_glue(const GluedCover& g) {
    validate_cover(g.smooth);
    std::set<FiberPoint> seen;
    for (const auto& pr : g.pairs) {
        check_point(g.smooth, pr.a);
        check_point(g.smooth, pr.b);
        if (pr.a == pr.b) throw std::invalid_argument("glue: pair members must be distinct");
        if (!seen.insert(pr.a).second || !seen.insert(pr.b).second)
            throw std::invalid_argument("glue: a point appears in two pairs");
    }
}

void validate_glue(const GluedTower& g) {
    validate_tower(g.smooth);
    GluedCover top{cover_ctilde(g.smooth), g.pairs};
    std::set<FiberPoint> seen;
    for (const auto& pr : g.pairs) {
        check_point(top.smooth, pr.a);
        check_point(top.smooth, pr.b);
        if (pr.a == pr.b) throw std::invalid_argument("glue: pair members must be distinct");
        if (!seen.insert(pr.a).second || !seen.insert(pr.b).second)
            throw std::invalid_argument("glue: a point appears in two pairs");
    }
}

int arithmetic_genus(const MonodromyCover& c) {
    auto gs = genus(c);
    int total = 0;
    for (int g : gs) total += g;
    return total - static_cast<int>(gs.size()) + 1;
}

int arithmetic_genus(const GluedCover& g) {
    auto gs = genus(g.smooth);
    int total = 0;
    for (int x : gs) total += x;
    return total + static_cast<int>(g.pairs.size()) - static_cast<int>(gs.size()) + 1;
}

GluedCover glued_ctilde(const GluedTower& t) {
    return GluedCover{cover_ctilde(t.smooth), t.pairs};
}

namespace {

// Projects a C~-fiber point to the C-fiber point under it.
FiberPoint project_point(const GluedTower& t, FiberPoint up) {
    MonodromyCover ct = cover_ctilde(t.smooth);
    auto up_cycles = cycles(ct.branches[up.label]);
    int sheet = up_cycles[up.cycle].front() / 2;
    auto down_cycles = cycles(t.smooth.branches[up.label].sigma);
    FiberPoint down;
    down.label = up.label;
    down.cycle = cycle_index_containing(down_cycles, sheet);
    return down;
}

}  // namespace

GluedCover glued_c(const GluedTower& t) {
    GluedCover out{cover_c(t.smooth), {}};
    std::set<std::pair<FiberPoint, FiberPoint>> seen;
    for (const auto& pr : t.pairs) {
        FiberPoint a = project_point(t, pr.a), b = project_point(t, pr.b);
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        if (seen.insert(key).second) out.pairs.push_back(GluePair{key.first, key.second});
    }
    return out;
}

InvolutionReport tower_involution(const SignedTower& t) {
    InvolutionReport rep;
    std::vector<int> im(2 * t.degree);
    for (int i = 0; i < t.degree; ++i) {
        im[2 * i] = 2 * i + 1;
        im[2 * i + 1] = 2 * i;
    }
    rep.flip = Perm(std::move(im));
    MonodromyCover ct = cover_ctilde(t);
    for (std::size_t b = 0; b < ct.branches.size(); ++b) {
        auto cs = cycles(ct.branches[b]);
        std::vector<bool> fx;
        for (const auto& cyc : cs) {
            std::set<int> s(cyc.begin(), cyc.end());
            bool fixed = true;
            for (int x : s)
                if (!s.count(rep.flip(x))) { fixed = false; break; }
            fx.push_back(fixed);
        }
        rep.fixed.push_back(std::move(fx));
    }
    return rep;
}

namespace {
FiberPoint ctilde_point(const SignedTower& t, FiberPoint c_point, int copy);
}

FiberPoint ctilde_point_over(const SignedTower& t, FiberPoint c_point, int copy) {
    return ctilde_point(t, c_point, copy);
}

std::vector<FiberPoint> ramification_points(const SignedTower& t) {
    std::vector<FiberPoint> out;
    MonodromyCover ct = cover_ctilde(t);
    for (std::size_t b = 0; b < t.branches.size(); ++b) {
        const auto& g = t.branches[b];
        auto up_cycles = cycles(ct.branches[b]);
        for (const auto& cyc : cycles(g.sigma)) {
            int s = 0;
            for (int i : cyc) s ^= g.eps[i];
            if (s) {
                FiberPoint fp;
                fp.label = static_cast<int>(b);
                fp.cycle = cycle_index_containing(up_cycles, 2 * cyc.front());
                out.push_back(fp);
            }
        }
    }
    return out;
}

Allowability is_allowable(const GluedTower& t) {
    validate_glue(t);
    MonodromyCover ct = cover_ctilde(t.smooth);
    InvolutionReport inv = tower_involution(t.smooth);

    // iota on fiber points of C~
    auto iota_point = [&](FiberPoint p) {
        auto cs = cycles(ct.branches[p.label]);
        int x = inv.flip(cs[p.cycle].front());
        FiberPoint q;
        q.label = p.label;
        q.cycle = cycle_index_containing(cs, x);
        return q;
    };

    // the pairing must be iota-equivariant
    auto norm = [](FiberPoint a, FiberPoint b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    };
    std::set<std::pair<FiberPoint, FiberPoint>> nodes;
    std::set<FiberPoint> glued_points;
    for (const auto& pr : t.pairs) {
        nodes.insert(norm(pr.a, pr.b));
        glued_points.insert(pr.a);
        glued_points.insert(pr.b);
    }
    for (const auto& nd : nodes)
        if (!nodes.count(norm(iota_point(nd.first), iota_point(nd.second))))
            throw std::invalid_argument(
                "is_allowable: gluing incompatible with iota (pairing not equivariant)");

    // (a) every iota-fixed point of C~ is a node whose branches are not exchanged
    for (std::size_t b = 0; b < ct.branches.size(); ++b) {
        for (std::size_t k = 0; k < inv.fixed[b].size(); ++k) {
            if (!inv.fixed[b][k]) continue;
            FiberPoint p{static_cast<int>(b), static_cast<int>(k)};
            if (!glued_points.count(p))
                return {false, "iota-fixed point over label '" +
                                   t.smooth.base.branch_labels[b] + "' is not a node"};
        }
    }
    for (const auto& nd : nodes) {
        FiberPoint ia = iota_point(nd.first), ib = iota_point(nd.second);
        bool node_fixed = norm(ia, ib) == nd;
        if (node_fixed && ia != nd.first)
            return {false, "iota-fixed node has its branches exchanged"};
    }

    // (b) exchanged nodes must match exchanged components
    int moved_nodes = 0;
    for (const auto& nd : nodes)
        if (norm(iota_point(nd.first), iota_point(nd.second)) != nd) ++moved_nodes;
    auto comps = orbits(monodromy_tuple(ct));
    int moved_comps = 0;
    for (const auto& comp : comps) {
        std::set<int> s(comp.begin(), comp.end());
        bool same = true;
        for (int x : comp)
            if (!s.count(inv.flip(x))) { same = false; break; }
        if (!same) ++moved_comps;
    }
    if (moved_nodes != moved_comps) {
        std::ostringstream os;
        os << "nodes exchanged under iota (" << moved_nodes
           << ") != components exchanged (" << moved_comps << ")";
        return {false, os.str()};
    }
    return {true, "all iota fixed points are non-exchanged nodes; exchanged nodes match "
                  "exchanged components"};
}

std::string to_string(BoundaryType b) {
    switch (b) {
        case BoundaryType::dI: return "dI";
        case BoundaryType::dII: return "dII";
        case BoundaryType::dIII: return "dIII";
        case BoundaryType::smooth: return "smooth";
    }
    return "?";
}

namespace {

bool cycle_is_ramified(const SignedPerm& g, const std::vector<int>& cyc) {
    int s = 0;
    for (int i : cyc) s ^= g.eps[i];
    return s != 0;
}

// Is C~ split (two disjoint copies of C) over the sheets in `sheets`?
bool split_over(const SignedTower& t, const std::set<int>& sheets) {
    MonodromyCover ct = cover_ctilde(t);
    std::vector<int> pts;
    for (int i : sheets) {
        pts.push_back(2 * i);
        pts.push_back(2 * i + 1);
    }
    std::sort(pts.begin(), pts.end());
    PermTuple restricted = restrict_to(monodromy_tuple(ct), pts);
    return orbits(restricted).size() == 2;
}

}  // namespace

std::vector<BoundaryType> node_types(const GluedTower& t) {
    validate_glue(t);
    MonodromyCover ct = cover_ctilde(t.smooth);
    MonodromyCover c = cover_c(t.smooth);
    InvolutionReport inv = tower_involution(t.smooth);
    auto comps = orbits(monodromy_tuple(c));
    auto comp_of_sheet = [&](int sheet) {
        for (std::size_t k = 0; k < comps.size(); ++k)
            for (int x : comps[k])
                if (x == sheet) return static_cast<int>(k);
        throw std::logic_error("node_types: sheet not in any component");
    };

    // group C~-nodes by their projected C-node
    auto norm = [](FiberPoint a, FiberPoint b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    };
    std::map<std::pair<FiberPoint, FiberPoint>, std::vector<GluePair>> by_cnode;
    for (const auto& pr : t.pairs) {
        FiberPoint a = project_point(t, pr.a), b = project_point(t, pr.b);
        by_cnode[norm(a, b)].push_back(pr);
    }

    std::vector<BoundaryType> out;
    for (const auto& [cnode, prs] : by_cnode) {
        auto [p, q] = cnode;
        const SignedPerm& gp = t.smooth.branches[p.label];
        const SignedPerm& gq = t.smooth.branches[q.label];
        auto pc = cycles(gp.sigma)[p.cycle];
        auto qc = cycles(gq.sigma)[q.cycle];
        bool p_ram = cycle_is_ramified(gp, pc);
        bool q_ram = cycle_is_ramified(gq, qc);
        if (p_ram && q_ram) {
            out.push_back(BoundaryType::dIII);
            continue;
        }
        if (p_ram != q_ram)
            throw std::invalid_argument(
                "node_types: node joins a pi-ramified point to an unramified one");
        // pi etale over the node: dI iff the double cover is split over the
        // components involved and the gluing is crosswise
        int cp = comp_of_sheet(pc.front()), cq = comp_of_sheet(qc.front());
        std::set<int> sheets(comps[cp].begin(), comps[cp].end());
        sheets.insert(comps[cq].begin(), comps[cq].end());
        bool split = split_over(t.smooth, sheets);
        if (!split) {
            out.push_back(BoundaryType::dII);
            continue;
        }
        if (cp != cq)
            throw std::invalid_argument(
                "node_types: glued cover is trivial over the node (mu = 0)");
        // same component, split: crosswise iff pair partners lie in the two
        // different copies
        auto ct_comps = orbits(monodromy_tuple(ct));
        auto ct_comp_of_point = [&](FiberPoint fp) {
            auto cs = cycles(ct.branches[fp.label]);
            int x = cs[fp.cycle].front();
            for (std::size_t k = 0; k < ct_comps.size(); ++k)
                for (int y : ct_comps[k])
                    if (y == x) return static_cast<int>(k);
            throw std::logic_error("node_types: point not in any C~ component");
        };
        bool crosswise = true;
        for (const auto& pr : prs)
            if (ct_comp_of_point(pr.a) == ct_comp_of_point(pr.b)) crosswise = false;
        if (!crosswise)
            throw std::invalid_argument(
                "node_types: glued cover is trivial over the node (mu = 0)");
        out.push_back(BoundaryType::dI);
    }
    (void)inv;
    return out;
}

BoundaryType degeneration_type(const GluedTower& t) {
    auto types = node_types(t);
    if (types.size() != 1)
        throw std::invalid_argument("degeneration_type: defined for one-node towers only");
    return types.front();
}

namespace {

FiberPoint ctilde_point(const SignedTower& t, FiberPoint c_point, int copy) {
    const SignedPerm& g = t.branches[c_point.label];
    auto down = cycles(g.sigma);
    if (c_point.cycle < 0 || c_point.cycle >= static_cast<int>(down.size()))
        throw std::invalid_argument("fiber point: cycle index out of range");
    int i0 = down[c_point.cycle].front();
    MonodromyCover ct = cover_ctilde(t);
    auto up = cycles(ct.branches[c_point.label]);
    FiberPoint fp;
    fp.label = c_point.label;
    fp.cycle = cycle_index_containing(up, 2 * i0 + (copy ? 1 : 0));
    return fp;
}

}  // namespace

GluedTower wirtinger_cover(const MonodromyCover& x, FiberPoint p, FiberPoint q) {
    validate_cover(x);
    if (p == q)
        throw std::invalid_argument("wirtinger_cover: the two fiber points must be distinct");
    SignedTower t;
    t.base = x.base;
    t.degree = x.degree;
    for (const auto& h : x.handles)
        t.handles.emplace_back(h, std::vector<std::uint8_t>(x.degree, 0));
    for (const auto& s : x.branches)
        t.branches.emplace_back(s, std::vector<std::uint8_t>(x.degree, 0));
    GluedTower out{std::move(t), {}};
    FiberPoint p0 = ctilde_point(out.smooth, p, 0), p1 = ctilde_point(out.smooth, p, 1);
    FiberPoint q0 = ctilde_point(out.smooth, q, 0), q1 = ctilde_point(out.smooth, q, 1);
    out.pairs.push_back(GluePair{p0, q1});
    out.pairs.push_back(GluePair{p1, q0});
    validate_glue(out);
    if (degeneration_type(out) != BoundaryType::dI)
        throw std::logic_error("wirtinger_cover: construction did not classify as dI");
    return out;
}

GluedTower boundary_ii(const SignedTower& xt, FiberPoint p, FiberPoint q) {
    validate_tower(xt);
    if (p == q)
        throw std::invalid_argument("boundary_ii: the two fiber points must be distinct");
    if (!is_etale_double(xt))
        throw std::invalid_argument("boundary_ii: tower must be etale");
    GluedTower out{xt, {}};
    FiberPoint p0 = ctilde_point(xt, p, 0), p1 = ctilde_point(xt, p, 1);
    FiberPoint q0 = ctilde_point(xt, q, 0), q1 = ctilde_point(xt, q, 1);
    out.pairs.push_back(GluePair{p0, q0});
    out.pairs.push_back(GluePair{p1, q1});
    validate_glue(out);
    if (degeneration_type(out) != BoundaryType::dII)
        throw std::invalid_argument(
            "boundary_ii: ingredients do not give a dII cover (double cover splits)");
    return out;
}

GluedTower boundary_iii(const SignedTower& xt) {
    validate_tower(xt);
    auto rams = ramification_points(xt);
    if (rams.size() != 2)
        throw std::invalid_argument(
            "boundary_iii: tower must have exactly two pi-ramification points");
    GluedTower out{xt, {GluePair{rams[0], rams[1]}}};
    validate_glue(out);
    if (degeneration_type(out) != BoundaryType::dIII)
        throw std::logic_error("boundary_iii: construction did not classify as dIII");
    return out;
}

namespace {

bool same_shape(const SignedTower& a, const SignedTower& b) {
    return a.degree == b.degree && a.base.genus == b.base.genus &&
           a.base.branch_labels == b.base.branch_labels;
}

std::set<std::pair<FiberPoint, FiberPoint>> transported_pairs(
    const GluedTower& from, const MonodromyCover& target_ctilde, const Perm& c) {
    MonodromyCover ct = cover_ctilde(from.smooth);
    std::set<std::pair<FiberPoint, FiberPoint>> out;
    auto move_point = [&](FiberPoint fp) {
        auto cs = cycles(ct.branches[fp.label]);
        int x = c(cs[fp.cycle].front());
        auto target_cs = cycles(target_ctilde.branches[fp.label]);
        FiberPoint r;
        r.label = fp.label;
        r.cycle = cycle_index_containing(target_cs, x);
        return r;
    };
    for (const auto& pr : from.pairs) {
        FiberPoint a = move_point(pr.a), b = move_point(pr.b);
        out.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
    }
    return out;
}

std::set<std::pair<FiberPoint, FiberPoint>> pair_set(const GluedTower& t) {
    std::set<std::pair<FiberPoint, FiberPoint>> out;
    for (const auto& pr : t.pairs)
        out.insert(pr.a < pr.b ? std::make_pair(pr.a, pr.b) : std::make_pair(pr.b, pr.a));
    return out;
}

}  // namespace

bool towers_isomorphic(const SignedTower& a, const SignedTower& b) {
    return towers_isomorphic(GluedTower{a, {}}, GluedTower{b, {}});
}

bool towers_isomorphic(const GluedTower& a, const GluedTower& b) {
    if (!same_shape(a.smooth, b.smooth)) return false;
    if (a.pairs.size() != b.pairs.size()) return false;
    MonodromyCover ca = cover_ctilde(a.smooth), cb = cover_ctilde(b.smooth);
    PermTuple ta = monodromy_tuple(ca), tb = monodromy_tuple(cb);
    if (ta.entries.size() != tb.entries.size()) return false;
    auto bset = pair_set(b);
    for (const auto& c : wc_elements_embedded(a.smooth.degree)) {
        bool ok = true;
        for (std::size_t i = 0; i < ta.entries.size(); ++i)
            if (conjugate(c, ta.entries[i]) != tb.entries[i]) { ok = false; break; }
        if (!ok) continue;
        if (transported_pairs(a, cb, c) == bset) return true;
    }
    return false;
}

bool covers_isomorphic(const MonodromyCover& a, const MonodromyCover& b) {
    if (a.degree != b.degree || a.base.genus != b.base.genus ||
        a.base.branch_labels != b.base.branch_labels)
        return false;
    std::vector<Perm> gens;
    for (int i = 0; i + 1 < a.degree; ++i) {
        std::vector<int> sw(a.degree);
        for (int j = 0; j < a.degree; ++j) sw[j] = j;
        std::swap(sw[i], sw[i + 1]);
        gens.emplace_back(std::move(sw));
    }
    if (gens.empty()) gens.push_back(Perm(a.degree));
    PermTuple sym(a.degree, std::move(gens));
    return simultaneous_conjugacy(monodromy_tuple(a), monodromy_tuple(b), sym).has_value();
}

}  // namespace prym
