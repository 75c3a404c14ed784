#include "prym/weyl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace prym {

SignedPerm::SignedPerm(Perm s, std::vector<std::uint8_t> e)
    : sigma(std::move(s)), eps(std::move(e)) {
    if (static_cast<int>(eps.size()) != sigma.degree())
        throw std::invalid_argument("SignedPerm: eps length must equal n");
    for (auto b : eps)
        if (b > 1) throw std::invalid_argument("SignedPerm: eps entries must be bits");
}

bool SignedPerm::is_identity() const {
    if (!sigma.is_identity()) return false;
    return std::all_of(eps.begin(), eps.end(), [](std::uint8_t b) { return b == 0; });
}

SignedPerm sp_compose(const SignedPerm& g2, const SignedPerm& g1) {
    if (g2.n() != g1.n()) throw std::invalid_argument("sp_compose: size mismatch");
    std::vector<std::uint8_t> e(g1.n());
    for (int i = 0; i < g1.n(); ++i)
        e[i] = g1.eps[i] ^ g2.eps[g1.sigma(i)];
    return SignedPerm(compose(g2.sigma, g1.sigma), std::move(e));
}

SignedPerm sp_inverse(const SignedPerm& g) {
    Perm si = inverse(g.sigma);
    std::vector<std::uint8_t> e(g.n());
    for (int i = 0; i < g.n(); ++i) e[i] = g.eps[si(i)];
    return SignedPerm(std::move(si), std::move(e));
}

Perm embed_2n(const SignedPerm& g) {
    std::vector<int> im(2 * g.n());
    for (int i = 0; i < g.n(); ++i)
        for (int s = 0; s < 2; ++s)
            im[2 * i + s] = 2 * g.sigma(i) + (s ^ g.eps[i]);
    return Perm(std::move(im));
}

SignedPerm from_embedded(const Perm& p) {
    if (p.degree() % 2 != 0)
        throw std::invalid_argument("from_embedded: odd degree");
    int n = p.degree() / 2;
    std::vector<int> sigma(n);
    std::vector<std::uint8_t> eps(n);
    for (int i = 0; i < n; ++i) {
        int a = p(2 * i), b = p(2 * i + 1);
        if (a / 2 != b / 2 || a == b)
            throw std::invalid_argument("from_embedded: permutation does not preserve the pairing");
        sigma[i] = a / 2;
        eps[i] = static_cast<std::uint8_t>(a % 2);
    }
    return SignedPerm(Perm(std::move(sigma)), std::move(eps));
}

int orientation_char(const SignedPerm& g) {
    int s = 0;
    for (auto b : g.eps) s ^= b;
    return s;
}

Perm section_action(const SignedPerm& g) {
    int n = g.n();
    if (n > 12) throw std::invalid_argument("section_action: n above supported bound (12)");
    Perm si = inverse(g.sigma);
    std::vector<int> im(std::size_t{1} << n);
    for (std::size_t t = 0; t < im.size(); ++t) {
        std::size_t u = 0;
        for (int i = 0; i < n; ++i) {
            int j = si(i);
            std::size_t bit = ((t >> j) & 1) ^ g.eps[j];
            u |= bit << i;
        }
        im[t] = static_cast<int>(u);
    }
    return Perm(std::move(im));
}

Perm class_action(const SignedPerm& g) {
    int n = g.n();
    if (n > 12) throw std::invalid_argument("class_action: n above supported bound (12)");
    Perm sec = section_action(g);
    std::size_t full = (std::size_t{1} << n) - 1;
    std::vector<int> im(std::size_t{1} << (n - 1));
    for (std::size_t c = 0; c < im.size(); ++c) {
        std::size_t t = sec(static_cast<int>(c));
        im[c] = static_cast<int>(std::min(t, full ^ t));
    }
    return Perm(std::move(im));
}

PermTuple wc_generators_embedded(int n) {
    std::vector<Perm> gens;
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> sw(n);
        for (int j = 0; j < n; ++j) sw[j] = j;
        std::swap(sw[i], sw[i + 1]);
        gens.push_back(embed_2n(SignedPerm(Perm(std::move(sw)), std::vector<std::uint8_t>(n, 0))));
    }
    std::vector<std::uint8_t> flip(n, 0);
    flip[0] = 1;
    gens.push_back(embed_2n(SignedPerm(Perm(n), std::move(flip))));
    return PermTuple(2 * n, std::move(gens));
}

PermTuple wd_generators_embedded(int n) {
    std::vector<Perm> gens;
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> sw(n);
        for (int j = 0; j < n; ++j) sw[j] = j;
        std::swap(sw[i], sw[i + 1]);
        gens.push_back(embed_2n(SignedPerm(Perm(std::move(sw)), std::vector<std::uint8_t>(n, 0))));
    }
    if (n >= 2) {
        std::vector<std::uint8_t> flip(n, 0);
        flip[0] = flip[1] = 1;
        gens.push_back(embed_2n(SignedPerm(Perm(n), std::move(flip))));
    }
    return PermTuple(2 * n, std::move(gens));
}

std::vector<Perm> wc_elements_embedded(int n) {
    static std::map<int, std::vector<Perm>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto elems = enumerate_elements(wc_generators_embedded(n));
    cache[n] = elems;
    return elems;
}

namespace {

std::vector<SignedPerm> wd4_elements() {
    std::vector<SignedPerm> out;
    std::vector<int> base{0, 1, 2, 3};
    std::vector<int> p = base;
    std::sort(p.begin(), p.end());
    do {
        for (int e = 0; e < 16; ++e) {
            if (__builtin_popcount(e) % 2 != 0) continue;
            std::vector<std::uint8_t> eps(4);
            for (int i = 0; i < 4; ++i) eps[i] = (e >> i) & 1;
            out.emplace_back(Perm(std::vector<int>(p)), std::move(eps));
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

bool maps_set_to_set(const Perm& g, const std::vector<int>& from, const std::vector<int>& to) {
    std::set<int> img, target(to.begin(), to.end());
    for (int x : from) img.insert(g(x));
    return img == target;
}

bool stabilizes_partition(const Perm& g, const std::vector<std::vector<int>>& parts) {
    for (const auto& part : parts) {
        bool found = false;
        for (const auto& other : parts)
            if (maps_set_to_set(g, part, other)) { found = true; break; }
        if (!found) return false;
    }
    return true;
}

PermTuple small_generating_set(const std::vector<Perm>& elems, std::uint64_t target_order) {
    PermTuple gens(8, {});
    for (const auto& e : elems) {
        if (e.is_identity()) continue;
        PermTuple trial = gens;
        trial.entries.push_back(e);
        if (group_order(trial) > group_order(gens)) gens = trial;
        if (group_order(gens) == target_order) break;
    }
    return gens;
}

}  // namespace

std::vector<SubgroupRecord> wd4_lattice() {
    // x_i^+ -> point 2i, x_i^- -> point 2i+1 (letters 0-based).
    const std::vector<int> row_plus{0, 2, 4, 6};
    const std::vector<int> twisted{0, 2, 4, 7};  // x1+ x2+ x3+ x4-

    auto all = wd4_elements();
    struct Spec {
        std::string name;
        std::function<bool(const Perm&)> member;
    };
    std::vector<Spec> specs;
    specs.push_back({"WD4", [](const Perm&) { return true; }});
    specs.push_back({"H0", [](const Perm& g) { return maps_set_to_set(g, {0, 1}, {0, 1}); }});
    specs.push_back({"H1", [&](const Perm& g) {
                         return stabilizes_partition(g, {row_plus, {1, 3, 5, 7}});
                     }});
    specs.push_back({"H2", [&](const Perm& g) {
                         return stabilizes_partition(g, {twisted, {1, 3, 5, 6}});
                     }});
    specs.push_back({"H~0", [](const Perm& g) { return g(0) == 0; }});
    specs.push_back({"H~1", [&](const Perm& g) { return maps_set_to_set(g, row_plus, row_plus); }});
    specs.push_back({"H~2", [&](const Perm& g) { return maps_set_to_set(g, twisted, twisted); }});
    specs.push_back({"N(G)", [](const Perm& g) {
                         return stabilizes_partition(g, {{0, 1, 2, 3}, {4, 5, 6, 7}});
                     }});
    specs.push_back({"G", [](const Perm& g) {
                         return stabilizes_partition(g, {{0, 2}, {1, 3}}) &&
                                maps_set_to_set(g, {4, 5, 6, 7}, {4, 5, 6, 7});
                     }});
    specs.push_back({"G~0", [](const Perm& g) {
                         return maps_set_to_set(g, {0, 1, 2, 3}, {0, 1, 2, 3});
                     }});
    specs.push_back({"G~1", [](const Perm& g) {
                         return stabilizes_partition(g, {{0, 2}, {1, 3}, {4, 6}, {5, 7}});
                     }});
    specs.push_back({"G~2", [](const Perm& g) {
                         return stabilizes_partition(g, {{0, 2}, {1, 3}, {4, 7}, {5, 6}});
                     }});

    std::vector<SubgroupRecord> out;
    for (const auto& spec : specs) {
        std::vector<Perm> elems;
        for (const auto& g : all) {
            Perm e = embed_2n(g);
            if (spec.member(e)) elems.push_back(e);
        }
        SubgroupRecord rec;
        rec.name = spec.name;
        rec.order = elems.size();
        rec.generators = small_generating_set(elems, rec.order);
        if (group_order(rec.generators) != rec.order)
            throw std::logic_error("wd4_lattice: generating set does not reach subgroup order");
        out.push_back(std::move(rec));
    }
    return out;
}

std::string wd4_lattice_table() {
    auto recs = wd4_lattice();
    std::uint64_t full = 0;
    for (const auto& r : recs)
        if (r.name == "WD4") full = r.order;
    std::ostringstream os;
    os << "name\torder\tindex\tgenerators\n";
    for (const auto& r : recs) {
        os << r.name << '\t' << r.order << '\t' << full / r.order << '\t';
        for (std::size_t i = 0; i < r.generators.entries.size(); ++i) {
            if (i) os << ' ';
            os << render_cycles(r.generators.entries[i]);
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace prym
