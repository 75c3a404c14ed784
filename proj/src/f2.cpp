#include "prym/f2.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace prym {

namespace {
int parity(F2Vec v) { return std::popcount(v) & 1; }
}

SymplecticF2::SymplecticF2(int d, std::vector<F2Vec> rows) : dim(d), gram(std::move(rows)) {
    if (dim <= 0 || dim % 2 != 0)
        throw std::invalid_argument("SymplecticF2: dim must be positive and even");
    if (static_cast<int>(gram.size()) != dim)
        throw std::invalid_argument("SymplecticF2: gram size mismatch");
    for (int i = 0; i < dim; ++i) {
        if ((gram[i] >> i) & 1)
            throw std::invalid_argument("SymplecticF2: gram diagonal must vanish");
        for (int j = 0; j < dim; ++j)
            if (((gram[i] >> j) & 1) != ((gram[j] >> i) & 1))
                throw std::invalid_argument("SymplecticF2: gram must be symmetric");
    }
    if (f2_rank(gram) != dim)
        throw std::invalid_argument("SymplecticF2: form is degenerate");
}

SymplecticF2 standard_symplectic(int g) {
    int dim = 2 * g;
    std::vector<F2Vec> rows(dim, 0);
    for (int i = 0; i < g; ++i) {
        rows[2 * i] = F2Vec{1} << (2 * i + 1);
        rows[2 * i + 1] = F2Vec{1} << (2 * i);
    }
    return SymplecticF2(dim, std::move(rows));
}

int pair(const SymplecticF2& sp, F2Vec x, F2Vec y) {
    int s = 0;
    F2Vec v = x;
    while (v) {
        int i = std::countr_zero(v);
        v &= v - 1;
        s ^= parity(sp.gram[i] & y);
    }
    return s;
}

int f2_rank(std::vector<F2Vec> rows) {
    int rank = 0;
    for (std::size_t c = 0; c < 32; ++c) {
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r)
            if ((rows[r] >> c) & 1) { pivot = r; break; }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != static_cast<std::size_t>(rank) && ((rows[r] >> c) & 1)) rows[r] ^= rows[rank];
        ++rank;
        if (rank == static_cast<int>(rows.size())) break;
    }
    return rank;
}

int q_eval(const QuadraticFormF2& q, F2Vec x) {
    int s = parity(q.basis_values & x);
    // cross terms sum_{i<j in x} <e_i, e_j>
    F2Vec v = x;
    while (v) {
        int i = std::countr_zero(v);
        v &= v - 1;
        s ^= parity(q.space.gram[i] & v);  // pairs (i, j) with j > i
    }
    return s;
}

int arf_by_count(const QuadraticFormF2& q) {
    int dim = q.space.dim;
    if (dim > 24) throw std::invalid_argument("arf_by_count: dim too large");
    std::int64_t zeros = 0;
    for (F2Vec x = 0; x < (F2Vec{1} << dim); ++x)
        if (q_eval(q, x) == 0) ++zeros;
    int g = dim / 2;
    std::int64_t even_zeros = (std::int64_t{1} << (dim - 1)) + (std::int64_t{1} << (g - 1));
    std::int64_t odd_zeros = (std::int64_t{1} << (dim - 1)) - (std::int64_t{1} << (g - 1));
    if (zeros == even_zeros) return 0;
    if (zeros == odd_zeros) return 1;
    throw std::logic_error("arf_by_count: zero count matches neither parity class");
}

std::vector<F2Vec> symplectic_basis(const SymplecticF2& sp) {
    std::vector<F2Vec> pool;
    for (int i = 0; i < sp.dim; ++i) pool.push_back(F2Vec{1} << i);
    std::vector<F2Vec> basis;
    while (!pool.empty()) {
        F2Vec u = 0;
        for (F2Vec cand : pool)
            if (cand) { u = cand; break; }
        if (u == 0) break;
        F2Vec v = 0;
        for (F2Vec cand : pool)
            if (cand != u && pair(sp, u, cand)) { v = cand; break; }
        if (v == 0)
            throw std::logic_error("symplectic_basis: degenerate restriction");
        basis.push_back(u);
        basis.push_back(v);
        std::vector<F2Vec> next;
        for (F2Vec w : pool) {
            if (w == u || w == v) continue;
            F2Vec r = w;
            if (pair(sp, r, v)) r ^= u;
            if (pair(sp, r, u)) r ^= v;
            if (r) next.push_back(r);
        }
        // drop linear dependencies among the reduced vectors
        std::vector<F2Vec> indep;
        std::vector<F2Vec> echelon;
        for (F2Vec w : next) {
            F2Vec r = w;
            for (F2Vec e : echelon) {
                int pe = 31 - std::countl_zero(e);
                if ((r >> pe) & 1) r ^= e;
            }
            if (r) {
                echelon.push_back(r);
                indep.push_back(w);
            }
        }
        pool = std::move(indep);
    }
    if (static_cast<int>(basis.size()) != sp.dim)
        throw std::logic_error("symplectic_basis: failed to span");
    return basis;
}

int arf_by_reduction(const QuadraticFormF2& q) {
    auto basis = symplectic_basis(q.space);
    int s = 0;
    for (std::size_t k = 0; k + 1 < basis.size(); k += 2)
        s ^= q_eval(q, basis[k]) & q_eval(q, basis[k + 1]);
    return s;
}

int arf(const QuadraticFormF2& q) {
    if (q.space.dim <= 12) return arf_by_count(q);
    return arf_by_reduction(q);
}

QuadraticFormF2 translate_form(const QuadraticFormF2& q, F2Vec v) {
    QuadraticFormF2 out = q;
    for (int i = 0; i < q.space.dim; ++i)
        if (pair(q.space, F2Vec{1} << i, v))
            out.basis_values ^= F2Vec{1} << i;
    return out;
}

namespace {

// Coordinates of x in the span of cols, if any (bit k of result = coefficient
// of cols[k]).
std::optional<F2Vec> solve_coords(const std::vector<F2Vec>& cols, F2Vec x, int dim) {
    std::vector<F2Vec> rows(dim, 0);  // row i: coefficients over cols
    std::vector<int> rhs(dim, 0);
    for (int i = 0; i < dim; ++i) {
        for (std::size_t k = 0; k < cols.size(); ++k)
            if ((cols[k] >> i) & 1) rows[i] |= F2Vec{1} << k;
        rhs[i] = (x >> i) & 1;
    }
    int rank = 0;
    std::vector<int> pivot_col;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        int pr = -1;
        for (int r = rank; r < dim; ++r)
            if ((rows[r] >> c) & 1) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(rows[rank], rows[pr]);
        std::swap(rhs[rank], rhs[pr]);
        for (int r = 0; r < dim; ++r)
            if (r != rank && ((rows[r] >> c) & 1)) {
                rows[r] ^= rows[rank];
                rhs[r] ^= rhs[rank];
            }
        pivot_col.push_back(static_cast<int>(c));
        ++rank;
    }
    for (int r = rank; r < dim; ++r)
        if (rhs[r]) return std::nullopt;
    F2Vec coeff = 0;
    for (int r = 0; r < rank; ++r)
        if (rhs[r]) coeff |= F2Vec{1} << pivot_col[r];
    return coeff;
}

}  // namespace

F2Vec Descent::lift(F2Vec y) const {
    F2Vec x = 0;
    F2Vec v = y;
    while (v) {
        int i = std::countr_zero(v);
        v &= v - 1;
        x ^= lifts[i];
    }
    return x;
}

bool Descent::in_perp(F2Vec x) const {
    return up_dim > 0 && pair(up, x, mu) == 0;
}

F2Vec Descent::project(F2Vec x) const {
    std::vector<F2Vec> cols;
    cols.push_back(mu);
    for (F2Vec l : lifts) cols.push_back(l);
    auto coeff = solve_coords(cols, x, up.dim);
    if (!coeff)
        throw std::invalid_argument("Descent::project: vector not in mu^perp");
    return *coeff >> 1;  // drop the mu coefficient
}

Descent descend_space(const SymplecticF2& sp, F2Vec mu) {
    if (mu == 0) throw std::invalid_argument("descend_space: mu must be nonzero");
    // functional x -> <x, mu> as a bitmask over basis vectors
    F2Vec m = 0;
    for (int i = 0; i < sp.dim; ++i)
        if (pair(sp, F2Vec{1} << i, mu)) m |= F2Vec{1} << i;
    if (m == 0) throw std::logic_error("descend_space: degenerate pairing");
    int p = std::countr_zero(m);
    // kernel basis of m: e_i + m_i e_p for i != p
    std::vector<F2Vec> kernel;
    for (int i = 0; i < sp.dim; ++i) {
        if (i == p) continue;
        F2Vec v = F2Vec{1} << i;
        if ((m >> i) & 1) v ^= F2Vec{1} << p;
        kernel.push_back(v);
    }
    // choose representatives extending {mu} to a basis of mu^perp
    Descent d;
    d.mu = mu;
    d.up = sp;
    d.up_dim = sp.dim;
    std::vector<F2Vec> echelon;
    auto reduce = [&](F2Vec v) {
        for (F2Vec e : echelon) {
            int pe = 31 - std::countl_zero(e);
            if ((v >> pe) & 1) v ^= e;
        }
        return v;
    };
    echelon.push_back(reduce(mu));
    for (F2Vec v : kernel) {
        F2Vec r = reduce(v);
        if (r) {
            echelon.push_back(r);
            // keep echelon triangular: sort by leading bit descending
            std::sort(echelon.begin(), echelon.end(), std::greater<F2Vec>());
            d.lifts.push_back(v);
        }
        if (static_cast<int>(d.lifts.size()) == sp.dim - 2) break;
    }
    if (static_cast<int>(d.lifts.size()) != sp.dim - 2)
        throw std::logic_error("descend_space: complement construction failed");
    if (sp.dim == 2) {
        d.down = SymplecticF2();  // zero-dimensional quotient
        return d;
    }
    std::vector<F2Vec> rows(sp.dim - 2, 0);
    for (int i = 0; i < sp.dim - 2; ++i)
        for (int j = 0; j < sp.dim - 2; ++j)
            if (pair(sp, d.lifts[i], d.lifts[j])) rows[i] |= F2Vec{1} << j;
    d.down = SymplecticF2(sp.dim - 2, std::move(rows));
    return d;
}

QuadraticFormF2 descend_form(const QuadraticFormF2& q, const Descent& d) {
    if (q_eval(q, d.mu) != 0)
        throw std::invalid_argument("descend_form: q(mu) = 1, form does not descend");
    QuadraticFormF2 out;
    out.space = d.down;
    for (int i = 0; i < d.down.dim; ++i)
        if (q_eval(q, d.lifts[i])) out.basis_values |= F2Vec{1} << i;
    return out;
}

std::vector<IsotropicSubspace> enumerate_isotropic(const SymplecticF2& sp, int r) {
    if (sp.dim > 10)
        throw std::invalid_argument("enumerate_isotropic: dim above supported bound (10)");
    if (r < 0) throw std::invalid_argument("enumerate_isotropic: negative rank");
    std::vector<IsotropicSubspace> out;
    if (r == 0 || r > sp.genus()) return out;

    // canonical reduced-echelon basis of a span
    auto canonical = [](std::vector<F2Vec> vecs) {
        std::vector<F2Vec> ech;
        for (F2Vec v : vecs) {
            for (F2Vec e : ech) {
                int pe = 31 - std::countl_zero(e);
                if ((v >> pe) & 1) v ^= e;
            }
            if (v) {
                ech.push_back(v);
                std::sort(ech.begin(), ech.end(), std::greater<F2Vec>());
            }
        }
        for (std::size_t i = 0; i < ech.size(); ++i) {
            int pi = 31 - std::countl_zero(ech[i]);
            for (std::size_t j = 0; j < i; ++j)
                if ((ech[j] >> pi) & 1) ech[j] ^= ech[i];
        }
        return ech;
    };

    std::set<std::vector<F2Vec>> layer;
    layer.insert(std::vector<F2Vec>{});
    for (int step = 0; step < r; ++step) {
        std::set<std::vector<F2Vec>> next;
        for (const auto& basis : layer) {
            F2Vec limit = F2Vec{1} << sp.dim;
            for (F2Vec v = 1; v < limit; ++v) {
                bool ok = true;
                for (F2Vec b : basis)
                    if (pair(sp, b, v)) { ok = false; break; }
                if (!ok) continue;
                std::vector<F2Vec> ext(basis.begin(), basis.end());
                ext.push_back(v);
                auto canon = canonical(ext);
                if (static_cast<int>(canon.size()) != step + 1) continue;  // v was in the span
                next.insert(std::move(canon));
            }
        }
        layer = std::move(next);
    }
    for (const auto& basis : layer) {
        IsotropicSubspace s;
        s.space = sp;
        s.basis = basis;
        out.push_back(std::move(s));
    }
    return out;
}

// ----- Fano diagram -----

namespace {

std::vector<std::vector<int>> fano_lines() {
    std::vector<std::vector<int>> lines(7);
    for (int w = 1; w <= 7; ++w)
        for (int v = 1; v <= 7; ++v)
            if (parity(static_cast<F2Vec>(v & w)) == 0) lines[w - 1].push_back(v - 1);
    return lines;
}

}  // namespace

std::vector<FanoDiagram> fano_solve(bool require_T) {
    auto lines = fano_lines();
    std::vector<FanoDiagram> out;
    for (int vm = 0; vm < 128; ++vm) {
        if (require_T && vm == 0) continue;
        for (int em = 0; em < 128; ++em) {
            bool ok = true;
            for (int l = 0; l < 7 && ok; ++l) {
                int tcount = 0;
                bool hasT = false;
                for (int p : lines[l])
                    if ((vm >> p) & 1) { ++tcount; hasT = true; }
                bool isC = (em >> l) & 1;
                if (hasT && !isC) ok = false;        // edges through a T-vertex are C
                if (isC && tcount != 2) ok = false;  // on a C-edge: T,T,Q
            }
            if (!ok) continue;
            FanoDiagram d;
            for (int v = 1; v <= 7; ++v) d.points.push_back(static_cast<F2Vec>(v));
            d.lines = lines;
            for (int p = 0; p < 7; ++p)
                d.vertex_labels.push_back(((vm >> p) & 1) ? VertexLabel::T : VertexLabel::Q);
            for (int l = 0; l < 7; ++l)
                d.edge_labels.push_back(((em >> l) & 1) ? EdgeLabel::C : EdgeLabel::NotC);
            out.push_back(std::move(d));
        }
    }
    return out;
}

int fano_orbit_count(const std::vector<FanoDiagram>& diagrams) {
    if (diagrams.empty()) return 0;
    auto lines = fano_lines();
    std::vector<std::vector<int>> point_perms;
    for (int c0 = 1; c0 < 8; ++c0)
        for (int c1 = 1; c1 < 8; ++c1)
            for (int c2 = 1; c2 < 8; ++c2) {
                auto apply = [&](int v) {
                    int img = 0;
                    if (v & 1) img ^= c0;
                    if (v & 2) img ^= c1;
                    if (v & 4) img ^= c2;
                    return img;
                };
                bool inv = true;
                std::vector<char> seen(8, 0);
                for (int v = 1; v < 8 && inv; ++v) {
                    int img = apply(v);
                    if (img == 0 || seen[img]) inv = false;
                    else seen[img] = 1;
                }
                if (!inv) continue;
                std::vector<int> pm(7);
                for (int v = 1; v < 8; ++v) pm[v - 1] = apply(v) - 1;
                point_perms.push_back(std::move(pm));
            }
    auto line_perm = [&](const std::vector<int>& pm) {
        std::vector<int> lp(7, -1);
        for (int l = 0; l < 7; ++l) {
            std::vector<int> img;
            for (int p : lines[l]) img.push_back(pm[p]);
            std::sort(img.begin(), img.end());
            for (int m = 0; m < 7; ++m)
                if (lines[m] == img) { lp[l] = m; break; }
        }
        return lp;
    };
    auto key = [](const FanoDiagram& d) {
        std::pair<int, int> k{0, 0};
        for (int p = 0; p < 7; ++p)
            if (d.vertex_labels[p] == VertexLabel::T) k.first |= 1 << p;
        for (int l = 0; l < 7; ++l)
            if (d.edge_labels[l] == EdgeLabel::C) k.second |= 1 << l;
        return k;
    };
    std::set<std::pair<int, int>> remaining;
    for (const auto& d : diagrams) remaining.insert(key(d));
    int orbit_count = 0;
    while (!remaining.empty()) {
        ++orbit_count;
        auto seed = *remaining.begin();
        std::set<std::pair<int, int>> orbit;
        for (const auto& pm : point_perms) {
            auto lp = line_perm(pm);
            std::pair<int, int> img{0, 0};
            for (int p = 0; p < 7; ++p)
                if ((seed.first >> p) & 1) img.first |= 1 << pm[p];
            for (int l = 0; l < 7; ++l)
                if ((seed.second >> l) & 1) img.second |= 1 << lp[l];
            orbit.insert(img);
        }
        for (const auto& k : orbit) remaining.erase(k);
    }
    return orbit_count;
}

std::string fano_render(const FanoDiagram& d) {
    std::ostringstream os;
    os << "vertices:";
    for (int p = 0; p < 7; ++p)
        os << ' ' << p + 1 << '=' << (d.vertex_labels[p] == VertexLabel::T ? 'T' : 'Q');
    os << "  edges:";
    for (int l = 0; l < 7; ++l)
        os << ' ' << l + 1 << '=' << (d.edge_labels[l] == EdgeLabel::C ? "C" : "-");
    return os.str();
}

}  // namespace prym
