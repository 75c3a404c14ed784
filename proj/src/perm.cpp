#include "prym/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace prym {

Perm::Perm(int degree) : images_(degree) {
    if (degree < 0) throw std::invalid_argument("Perm: negative degree");
    std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= degree() || seen[v])
            throw std::invalid_argument("Perm: image table is not a bijection");
        seen[v] = 1;
    }
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Perm compose(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> im(a.degree());
    for (int i = 0; i < a.degree(); ++i) im[i] = a(b(i));
    return Perm(std::move(im));
}

Perm inverse(const Perm& p) {
    std::vector<int> im(p.degree());
    for (int i = 0; i < p.degree(); ++i) im[p(i)] = i;
    return Perm(std::move(im));
}

Perm conjugate(const Perm& c, const Perm& p) {
    return compose(compose(c, p), inverse(c));
}

std::vector<std::vector<int>> cycles(const Perm& p) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(p.degree(), 0);
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        for (int j = i; !seen[j]; j = p(j)) {
            seen[j] = 1;
            cyc.push_back(j);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

CycleTypeSign cycle_type_and_sign(const Perm& p) {
    CycleTypeSign r;
    auto cs = cycles(p);
    for (const auto& c : cs) r.cycle_lengths.push_back(static_cast<int>(c.size()));
    std::sort(r.cycle_lengths.begin(), r.cycle_lengths.end(), std::greater<int>());
    r.sign = ((p.degree() - static_cast<int>(cs.size())) % 2 == 0) ? 1 : -1;
    return r;
}

int perm_sign(const Perm& p) { return cycle_type_and_sign(p).sign; }

std::string render_cycles(const Perm& p) {
    std::ostringstream os;
    bool any = false;
    for (const auto& c : cycles(p)) {
        if (c.size() < 2) continue;
        any = true;
        os << '(';
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k) os << ' ';
            os << c[k] + 1;
        }
        os << ')';
    }
    if (!any) return "()";
    return os.str();
}

Perm parse_cycles(const std::string& text, int degree) {
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 0);
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip_ws();
    bool saw_cycle = false;
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw std::invalid_argument("parse_cycles: expected '(' in \"" + text + "\"");
        ++pos;
        std::vector<int> cyc;
        skip_ws();
        while (pos < text.size() && text[pos] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw std::invalid_argument("parse_cycles: expected point label in \"" + text + "\"");
            int v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                v = v * 10 + (text[pos++] - '0');
            if (v < 1 || v > degree)
                throw std::invalid_argument("parse_cycles: label out of range in \"" + text + "\"");
            cyc.push_back(v - 1);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') { ++pos; skip_ws(); }
        }
        if (pos >= text.size())
            throw std::invalid_argument("parse_cycles: unclosed cycle in \"" + text + "\"");
        ++pos;  // ')'
        saw_cycle = true;
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
            if (im[from] != from && cyc.size() > 1)
                throw std::invalid_argument("parse_cycles: repeated point in \"" + text + "\"");
            if (cyc.size() > 1) im[from] = to;
        }
        skip_ws();
    }
    if (!saw_cycle)
        throw std::invalid_argument("parse_cycles: empty input");
    return Perm(std::move(im));
}

PermTuple::PermTuple(int deg, std::vector<Perm> perms) : degree(deg), entries(std::move(perms)) {
    for (const auto& p : entries)
        if (p.degree() != degree)
            throw std::invalid_argument("PermTuple: entry degree mismatch");
}

std::vector<std::vector<int>> orbits(const PermTuple& t) {
    std::vector<int> parent(t.degree);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<char> seen(t.degree, 0);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < t.degree; ++i) {
        if (seen[i]) continue;
        std::vector<int> orb;
        std::queue<int> q;
        q.push(i);
        seen[i] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            orb.push_back(x);
            for (const auto& g : t.entries) {
                for (int y : {g(x), inverse(g)(x)}) {
                    if (!seen[y]) {
                        seen[y] = 1;
                        q.push(y);
                    }
                }
            }
        }
        std::sort(orb.begin(), orb.end());
        out.push_back(std::move(orb));
    }
    return out;
}

bool is_transitive(const PermTuple& t) { return orbits(t).size() == 1; }

namespace {

// Enumerates partitions of `points` into blocks of size `bs` and keeps the
// invariant ones.  Straightforward backtracking; degrees here are <= 12.
void equal_block_partitions(const std::vector<int>& points, int bs,
                            std::vector<std::vector<int>>& acc,
                            std::vector<char>& used,
                            const PermTuple& t,
                            std::vector<std::vector<std::vector<int>>>& out) {
    std::size_t first = 0;
    while (first < points.size() && used[first]) ++first;
    if (first == points.size()) {
        // check invariance: each generator maps blocks onto blocks
        for (const auto& g : t.entries) {
            for (const auto& blk : acc) {
                std::vector<int> img;
                for (int x : blk) img.push_back(g(x));
                std::sort(img.begin(), img.end());
                bool found = false;
                for (const auto& other : acc)
                    if (other == img) { found = true; break; }
                if (!found) return;
            }
        }
        out.push_back(acc);
        return;
    }
    // build the block containing points[first]
    std::vector<std::size_t> idx{first};
    used[first] = 1;
    std::vector<std::size_t> pool;
    for (std::size_t j = first + 1; j < points.size(); ++j)
        if (!used[j]) pool.push_back(j);
    std::vector<std::size_t> choice(bs - 1);
    // iterate over (bs-1)-subsets of pool
    std::vector<std::size_t> stack;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(stack.size()) == bs - 1) {
            std::vector<int> blk{points[first]};
            for (auto j : stack) { used[j] = 1; blk.push_back(points[j]); }
            acc.push_back(blk);
            equal_block_partitions(points, bs, acc, used, t, out);
            acc.pop_back();
            for (auto j : stack) used[j] = 0;
            return;
        }
        for (std::size_t k = start; k < pool.size(); ++k) {
            stack.push_back(pool[k]);
            self(self, k + 1);
            stack.pop_back();
        }
    };
    rec(rec, 0);
    used[first] = 0;
    (void)choice;
}

std::vector<std::vector<std::vector<int>>> block_systems_transitive(
    const PermTuple& t, const std::vector<int>& points) {
    std::vector<std::vector<std::vector<int>>> out;
    int n = static_cast<int>(points.size());
    if (n > 12)
        throw std::invalid_argument("block_systems: degree above exhaustive bound (12)");
    for (int bs = 2; bs < n; ++bs) {
        if (n % bs != 0) continue;
        std::vector<std::vector<int>> acc;
        std::vector<char> used(points.size(), 0);
        equal_block_partitions(points, bs, acc, used, t, out);
    }
    return out;
}

}  // namespace

std::vector<std::vector<std::vector<int>>> block_systems(const PermTuple& t) {
    auto orbs = orbits(t);
    if (orbs.size() == 1) {
        std::vector<int> pts(t.degree);
        std::iota(pts.begin(), pts.end(), 0);
        return block_systems_transitive(t, pts);
    }
    std::vector<std::vector<std::vector<int>>> out;
    for (const auto& orb : orbs) {
        if (orb.size() < 2) continue;
        PermTuple r = restrict_to(t, orb);
        for (auto sys : block_systems_transitive(r, [&] {
                 std::vector<int> pts(orb.size());
                 std::iota(pts.begin(), pts.end(), 0);
                 return pts;
             }())) {
            for (auto& blk : sys)
                for (auto& x : blk) x = orb[x];
            out.push_back(std::move(sys));
        }
    }
    return out;
}

PermTuple restrict_to(const PermTuple& t, const std::vector<int>& orbit) {
    std::map<int, int> pos;
    for (std::size_t k = 0; k < orbit.size(); ++k) pos[orbit[k]] = static_cast<int>(k);
    std::vector<Perm> entries;
    for (const auto& g : t.entries) {
        std::vector<int> im(orbit.size());
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            auto it = pos.find(g(orbit[k]));
            if (it == pos.end())
                throw std::invalid_argument("restrict_to: set is not invariant");
            im[k] = it->second;
        }
        entries.emplace_back(std::move(im));
    }
    return PermTuple(static_cast<int>(orbit.size()), std::move(entries));
}

namespace {

// One level of a stabilizer chain: the orbit of a base point together with
// a transversal of coset representatives.
struct ChainLevel {
    int base_point = -1;
    std::map<int, Perm> transversal;  // orbit point -> rep mapping base to it
    std::vector<Perm> generators;
};

// Sifts p through the chain from `level`; returns the residue.
Perm sift(const std::vector<ChainLevel>& chain, std::size_t level, Perm p) {
    for (std::size_t l = level; l < chain.size(); ++l) {
        int img = p(chain[l].base_point);
        auto it = chain[l].transversal.find(img);
        if (it == chain[l].transversal.end()) return p;
        p = compose(inverse(it->second), p);
    }
    return p;
}

void extend_chain(std::vector<ChainLevel>& chain, std::size_t level, const Perm& gen);

void rebuild_orbit(std::vector<ChainLevel>& chain, std::size_t level) {
    // recursion below may grow `chain`, so never hold references across it
    std::queue<int> q;
    for (const auto& [pt, rep] : chain[level].transversal) q.push(pt);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        const Perm rep = chain[level].transversal.at(x);
        for (std::size_t gi = 0; gi < chain[level].generators.size(); ++gi) {
            const Perm g = chain[level].generators[gi];
            int y = g(x);
            Perm candidate = compose(g, rep);
            if (!chain[level].transversal.count(y)) {
                chain[level].transversal.emplace(y, candidate);
                q.push(y);
            } else {
                // Schreier generator
                Perm schreier = compose(inverse(chain[level].transversal.at(y)), candidate);
                Perm residue = sift(chain, level + 1, schreier);
                if (!residue.is_identity()) extend_chain(chain, level + 1, residue);
            }
        }
    }
}

void extend_chain(std::vector<ChainLevel>& chain, std::size_t level, const Perm& gen) {
    if (level == chain.size()) {
        ChainLevel lv;
        for (int i = 0; i < gen.degree(); ++i)
            if (gen(i) != i) { lv.base_point = i; break; }
        if (lv.base_point < 0) return;  // identity
        lv.transversal.emplace(lv.base_point, Perm(gen.degree()));
        chain.push_back(std::move(lv));
    }
    chain[level].generators.push_back(gen);
    rebuild_orbit(chain, level);
}

}  // namespace

std::uint64_t group_order(const PermTuple& t) {
    if (t.degree > 32)
        throw std::invalid_argument("group_order: degree above supported bound (32)");
    std::vector<ChainLevel> chain;
    for (const auto& g : t.entries) {
        Perm residue = sift(chain, 0, g);
        if (!residue.is_identity()) extend_chain(chain, 0, residue);
    }
    std::uint64_t order = 1;
    for (const auto& lv : chain) order *= lv.transversal.size();
    return order;
}

std::vector<Perm> enumerate_elements(const PermTuple& t, std::size_t max_size) {
    std::set<Perm> elems;
    elems.insert(Perm(t.degree));
    std::queue<Perm> q;
    q.push(Perm(t.degree));
    while (!q.empty()) {
        Perm x = q.front();
        q.pop();
        for (const auto& g : t.entries) {
            Perm y = compose(g, x);
            if (elems.insert(y).second) {
                if (elems.size() > max_size)
                    throw std::runtime_error("enumerate_elements: group larger than cap");
                q.push(y);
            }
        }
    }
    return {elems.begin(), elems.end()};
}

std::optional<Perm> simultaneous_conjugacy(const PermTuple& a, const PermTuple& b,
                                           const std::vector<Perm>& group_elems) {
    if (a.degree != b.degree || a.entries.size() != b.entries.size())
        throw std::invalid_argument("simultaneous_conjugacy: shape mismatch");
    for (const auto& c : group_elems) {
        bool ok = true;
        for (std::size_t i = 0; i < a.entries.size(); ++i) {
            if (conjugate(c, a.entries[i]) != b.entries[i]) { ok = false; break; }
        }
        if (ok) return c;
    }
    return std::nullopt;
}

std::optional<Perm> simultaneous_conjugacy(const PermTuple& a, const PermTuple& b,
                                           const PermTuple& g) {
    if (g.degree != a.degree)
        throw std::invalid_argument("simultaneous_conjugacy: conjugating group degree mismatch");
    auto elems = enumerate_elements(g, 100000);
    return simultaneous_conjugacy(a, b, elems);
}

}  // namespace prym
