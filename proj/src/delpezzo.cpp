#include "prym/delpezzo.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace prym {

PicLattice::PicLattice(int blowups) : r(blowups) {
    if (r < 0 || r > 6) throw std::invalid_argument("PicLattice: need 0 <= r <= 6");
}

int intersect(const DivisorClass& a, const DivisorClass& b) {
    if (a.size() != b.size()) throw std::invalid_argument("intersect: rank mismatch");
    int s = a[0] * b[0];
    for (std::size_t i = 1; i < a.size(); ++i) s -= a[i] * b[i];
    return s;
}

DivisorClass canonical_class(const PicLattice& lat) {
    DivisorClass k(lat.rank(), 1);
    k[0] = -3;
    return k;
}

std::vector<DivisorClass> lines(const PicLattice& lat) {
    // D.K = -1 and D.D = -1 give sum(m_i) = 1 - 3d and sum(m_i^2) = d^2 + 1
    // (in the (d; m) coordinates m_i enters with sign +1 here, intersection
    // with e_i being -m_i).  Exhaustive over the Cauchy-Schwarz d-window.
    std::vector<DivisorClass> out;
    int r = lat.r;
    if (r == 0) return out;
    for (int d = -3; d <= 3; ++d) {
        int target_sum = 1 - 3 * d;
        int target_sq = d * d + 1;
        DivisorClass cur(lat.rank(), 0);
        cur[0] = d;
        auto rec = [&](auto&& self, int idx, int sum, int sq) -> void {
            if (idx == lat.rank()) {
                if (sum == target_sum && sq == target_sq) out.push_back(cur);
                return;
            }
            int remaining = lat.rank() - idx;
            for (int m = -3; m <= 3; ++m) {
                if (sq + m * m > target_sq) continue;
                // remaining coordinates cannot reach the target sum if too far
                int lo = sum + m - 3 * (remaining - 1), hi = sum + m + 3 * (remaining - 1);
                if (target_sum < lo || target_sum > hi) continue;
                cur[idx] = m;
                self(self, idx + 1, sum + m, sq + m * m);
                cur[idx] = 0;
            }
        };
        rec(rec, 1, 0, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

IncidenceGraph incidence_graph(const PicLattice& lat) {
    if (lat.r != 5 && lat.r != 6)
        throw std::invalid_argument("incidence_graph: r must be 5 or 6");
    IncidenceGraph g;
    g.nodes = lines(lat);
    g.adjacency.resize(g.nodes.size());
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        for (std::size_t j = i + 1; j < g.nodes.size(); ++j)
            if (intersect(g.nodes[i], g.nodes[j]) == 1) {
                g.adjacency[i].push_back(static_cast<int>(j));
                g.adjacency[j].push_back(static_cast<int>(i));
            }
    for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
    return g;
}

std::vector<std::array<int, 3>> tritangents(const PicLattice& lat,
                                            const std::vector<DivisorClass>& line_classes) {
    if (lat.r != 6) throw std::invalid_argument("tritangents: r must be 6");
    DivisorClass mk = canonical_class(lat);
    for (auto& v : mk) v = -v;
    std::vector<std::array<int, 3>> out;
    int n = static_cast<int>(line_classes.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (intersect(line_classes[i], line_classes[j]) != 1) continue;
            for (int k = j + 1; k < n; ++k) {
                if (intersect(line_classes[i], line_classes[k]) != 1) continue;
                if (intersect(line_classes[j], line_classes[k]) != 1) continue;
                DivisorClass sum(line_classes[i]);
                for (std::size_t c = 0; c < sum.size(); ++c)
                    sum[c] += line_classes[j][c] + line_classes[k][c];
                if (sum == mk) out.push_back({i, j, k});
            }
        }
    return out;
}

namespace {

std::vector<DivisorClass> roots(const PicLattice& lat) {
    // a.a = -2, a.K = 0: sum(m) = -3d, sum(m^2) = d^2 + 2
    std::vector<DivisorClass> out;
    for (int d = -2; d <= 2; ++d) {
        DivisorClass cur(lat.rank(), 0);
        cur[0] = d;
        auto rec = [&](auto&& self, int idx, int sum, int sq) -> void {
            if (idx == lat.rank()) {
                if (sum == -3 * d && sq == d * d + 2) out.push_back(cur);
                return;
            }
            for (int m = -2; m <= 2; ++m) {
                if (sq + m * m > d * d + 2) continue;
                cur[idx] = m;
                self(self, idx + 1, sum + m, sq + m * m);
                cur[idx] = 0;
            }
        };
        rec(rec, 1, 0, 0);
    }
    return out;
}

DivisorClass reflect(const DivisorClass& x, const DivisorClass& alpha) {
    // s_a(x) = x + (x.a) a  (a.a = -2)
    int c = intersect(x, alpha);
    DivisorClass out(x);
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += c * alpha[i];
    return out;
}

}  // namespace

PermTuple weyl_action_on_lines(const PicLattice& lat,
                               const std::vector<DivisorClass>& line_classes) {
    std::map<DivisorClass, int> index;
    for (std::size_t i = 0; i < line_classes.size(); ++i)
        index[line_classes[i]] = static_cast<int>(i);
    std::vector<Perm> gens;
    for (const auto& alpha : roots(lat)) {
        std::vector<int> im(line_classes.size());
        for (std::size_t i = 0; i < line_classes.size(); ++i) {
            auto it = index.find(reflect(line_classes[i], alpha));
            if (it == index.end())
                throw std::logic_error("weyl_action_on_lines: reflection left the line set");
            im[i] = it->second;
        }
        Perm p(std::move(im));
        if (!p.is_identity()) gens.push_back(std::move(p));
    }
    // drop duplicates (alpha and -alpha give the same reflection)
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.empty()) gens.push_back(Perm(static_cast<int>(line_classes.size())));
    return PermTuple(static_cast<int>(line_classes.size()), std::move(gens));
}

WeylOrders weyl_orders(const PicLattice& lat) {
    if (lat.r != 5 && lat.r != 6)
        throw std::invalid_argument("weyl_orders: r must be 5 or 6");
    auto ls = lines(lat);
    PermTuple action = weyl_action_on_lines(lat, ls);
    WeylOrders out;
    out.group_order = group_order(action);
    // orbit-stabilizer at line 0
    std::set<int> orbit;
    std::vector<int> stack{0};
    orbit.insert(0);
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const auto& g : action.entries) {
            int y = g(x);
            if (orbit.insert(y).second) stack.push_back(y);
        }
    }
    out.line_stabilizer_order = out.group_order / orbit.size();
    return out;
}

MarkClassification mark_and_classify(const PicLattice& lat,
                                     const std::vector<DivisorClass>& line_classes,
                                     const DivisorClass& mark) {
    if (intersect(mark, mark) != -1 || intersect(mark, canonical_class(lat)) != -1)
        throw std::invalid_argument("mark_and_classify: marked class is not a line");
    MarkClassification out;
    for (std::size_t i = 0; i < line_classes.size(); ++i) {
        if (line_classes[i] == mark) {
            out.mark = static_cast<int>(i);
            continue;
        }
        int v = intersect(line_classes[i], mark);
        if (v == 1) out.meeting.push_back(static_cast<int>(i));
        else if (v == 0) out.disjoint.push_back(static_cast<int>(i));
        else throw std::logic_error("mark_and_classify: unexpected intersection number");
    }
    if (out.mark < 0) throw std::invalid_argument("mark_and_classify: mark not among the lines");
    return out;
}

std::vector<std::pair<std::array<int, 6>, std::array<int, 6>>> double_sixes(
    const IncidenceGraph& g) {
    int n = static_cast<int>(g.nodes.size());
    auto meets = [&](int i, int j) {
        return std::binary_search(g.adjacency[i].begin(), g.adjacency[i].end(), j);
    };
    // all sextuples of pairwise-disjoint lines
    std::vector<std::array<int, 6>> sixers;
    std::array<int, 6> cur{};
    auto rec = [&](auto&& self, int depth, int start) -> void {
        if (depth == 6) {
            sixers.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            bool ok = true;
            for (int k = 0; k < depth; ++k)
                if (meets(cur[k], v)) { ok = false; break; }
            if (!ok) continue;
            cur[depth] = v;
            self(self, depth + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
    // pair each sixer with its partner: each line of one meets exactly 5 of the other
    std::vector<std::pair<std::array<int, 6>, std::array<int, 6>>> out;
    std::set<std::array<int, 6>> used;
    for (const auto& a : sixers) {
        if (used.count(a)) continue;
        for (const auto& b : sixers) {
            if (a == b) continue;
            bool disjoint_sets = true;
            for (int x : a)
                for (int y : b)
                    if (x == y) disjoint_sets = false;
            if (!disjoint_sets) continue;
            bool five = true;
            for (int x : a) {
                int cnt = 0;
                for (int y : b)
                    if (meets(x, y)) ++cnt;
                if (cnt != 5) { five = false; break; }
            }
            if (!five) continue;
            for (int y : b) {
                int cnt = 0;
                for (int x : a)
                    if (meets(x, y)) ++cnt;
                if (cnt != 5) { five = false; break; }
            }
            if (!five) continue;
            used.insert(a);
            used.insert(b);
            out.emplace_back(a, b);
            break;
        }
    }
    return out;
}

NodalStructure nodal_specialize() {
    PicLattice lat(6);
    auto ls = lines(lat);
    auto index_of = [&](const DivisorClass& d) {
        auto it = std::lower_bound(ls.begin(), ls.end(), d);
        if (it == ls.end() || *it != d)
            throw std::logic_error("nodal_specialize: class not found");
        return static_cast<int>(it - ls.begin());
    };
    // the standard double-six: a_i = e_i, b_i = 2h - sum_{j != i} e_j
    std::vector<int> a(6), b(6);
    for (int i = 0; i < 6; ++i) {
        DivisorClass ei(7, 0);
        ei[i + 1] = 1;
        a[i] = index_of(ei);
        DivisorClass bi(7, -1);
        bi[0] = 2;
        bi[i + 1] = 0;
        b[i] = index_of(bi);
    }
    // the fifteen c_ij = h - e_i - e_j
    NodalStructure ns;
    std::map<int, int> line_to_object;  // 27-line index -> object id
    for (int i = 0; i < 6; ++i) {
        ns.names.push_back("l" + std::to_string(i));
        line_to_object[a[i]] = i;
        line_to_object[b[i]] = i;
    }
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            DivisorClass cij(7, 0);
            cij[0] = 1;
            cij[i + 1] = -1;
            cij[j + 1] = -1;
            int obj = static_cast<int>(ns.names.size());
            ns.names.push_back("l" + std::to_string(i) + std::to_string(j));
            ns.pair_index.emplace_back(i, j);
            line_to_object[index_of(cij)] = obj;
        }
    // quotient incidence: objects meet if any representatives meet
    int m = static_cast<int>(ns.names.size());
    std::vector<std::set<int>> adj(m);
    IncidenceGraph g = incidence_graph(lat);
    for (int x = 0; x < 27; ++x)
        for (int y : g.adjacency[x]) {
            int ox = line_to_object.at(x), oy = line_to_object.at(y);
            if (ox != oy) adj[ox].insert(oy);
        }
    for (int k = 0; k < m; ++k) ns.adjacency.emplace_back(adj[k].begin(), adj[k].end());
    // consistency: a_i and b_i have identical incidence with every c_kl
    ns.quotient_consistent = true;
    auto meets = [&](int i, int j) {
        return std::binary_search(g.adjacency[i].begin(), g.adjacency[i].end(), j);
    };
    for (int i = 0; i < 6; ++i)
        for (const auto& [obj_line, obj_id] : line_to_object) {
            if (obj_id < 6) continue;
            if (meets(a[i], obj_line) != meets(b[i], obj_line)) ns.quotient_consistent = false;
        }
    return ns;
}

bool nodal_s6_equivariant(const NodalStructure& ns, const Perm& p) {
    if (p.degree() != 6) throw std::invalid_argument("nodal_s6_equivariant: need a Perm of S6");
    // induced object permutation
    std::vector<int> obj_map(ns.names.size());
    for (int i = 0; i < 6; ++i) obj_map[i] = p(i);
    std::map<std::pair<int, int>, int> pair_obj;
    for (std::size_t k = 0; k < ns.pair_index.size(); ++k)
        pair_obj[ns.pair_index[k]] = static_cast<int>(k) + 6;
    for (std::size_t k = 0; k < ns.pair_index.size(); ++k) {
        auto [i, j] = ns.pair_index[k];
        int pi = p(i), pj = p(j);
        if (pi > pj) std::swap(pi, pj);
        obj_map[k + 6] = pair_obj.at({pi, pj});
    }
    for (std::size_t x = 0; x < ns.adjacency.size(); ++x) {
        std::set<int> want;
        for (int y : ns.adjacency[x]) want.insert(obj_map[y]);
        const auto& got = ns.adjacency[obj_map[x]];
        if (want != std::set<int>(got.begin(), got.end())) return false;
    }
    return true;
}

SegreStructure segre_structure() {
    SegreStructure s;
    for (int i = 0; i < 6; ++i) s.rulings.push_back("R" + std::to_string(i));
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) s.planes.emplace_back(i, j);
    auto plane_idx = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        for (std::size_t k = 0; k < s.planes.size(); ++k)
            if (s.planes[k] == std::make_pair(i, j)) return static_cast<int>(k);
        throw std::logic_error("segre_structure: bad plane pair");
    };
    // R_i is the family of lines meeting the five planes P_ij, j != i
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (j != i) s.ruling_plane_incidence.emplace_back(i, plane_idx(i, j));
    // tritangent-type triples
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            s.pentagon_triples.push_back({i, j, plane_idx(i, j)});
    // partitions of {0..5} into three pairs: 0 pairs with k, the rest splits
    std::vector<std::array<int, 3>> wheels;
    std::vector<int> all{0, 1, 2, 3, 4, 5};
    for (int k = 1; k < 6; ++k) {
        std::vector<int> rem;
        for (int v : all)
            if (v != 0 && v != k) rem.push_back(v);
        // rem has 4 elements; 3 ways to split into two pairs
        const int splits[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
        for (const auto& sp : splits) {
            int p1 = plane_idx(0, k);
            int p2 = plane_idx(rem[sp[0]], rem[sp[1]]);
            int p3 = plane_idx(rem[sp[2]], rem[sp[3]]);
            std::array<int, 3> w{p1, p2, p3};
            std::sort(w.begin(), w.end());
            wheels.push_back(w);
        }
    }
    std::sort(wheels.begin(), wheels.end());
    wheels.erase(std::unique(wheels.begin(), wheels.end()), wheels.end());
    s.wheel_triples = wheels;
    // pentagon: five rational components glued at the ten crossing points
    s.pentagon_components = 5;
    s.pentagon_nodes = 10;
    s.pentagon_pa = s.pentagon_nodes - s.pentagon_components + 1;
    // wheel: a conic and three concurrent lines; the triple point is kept
    // only as the concurrency record, not as nodes
    s.wheel_components = {"conic", "line0", "line1", "line2"};
    for (int l = 1; l <= 3; ++l) {
        s.wheel_dual_edges.emplace_back(0, l);
        s.wheel_dual_edges.emplace_back(0, l);
    }
    s.wheel_concurrent = {1, 2, 3};
    return s;
}

std::string to_dot(const IncidenceGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        os << "  n" << i << " [label=\"";
        const auto& d = g.nodes[i];
        os << d[0];
        for (std::size_t k = 1; k < d.size(); ++k) os << ',' << d[k];
        os << "\"];\n";
    }
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        for (int j : g.adjacency[i])
            if (static_cast<int>(i) < j) os << "  n" << i << " -- n" << j << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace prym
