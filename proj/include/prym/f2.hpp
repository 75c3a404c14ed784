#ifndef PRYM_F2_HPP
#define PRYM_F2_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace prym {

// Vectors over F2 as bitmasks; bit i is the coefficient of basis vector i.
using F2Vec = std::uint32_t;

// A nondegenerate alternating form on F2^(2g), given by its Gram matrix
// (row i = pairings of e_i with the basis, as a bitmask).
struct SymplecticF2 {
    int dim = 0;  // 2g
    std::vector<F2Vec> gram;

    SymplecticF2() = default;
    SymplecticF2(int d, std::vector<F2Vec> rows);  // validates

    int genus() const { return dim / 2; }
};

// The standard form with interleaved basis e_1 f_1 ... e_g f_g,
// <e_i, f_i> = 1 and all other basis pairings 0.
SymplecticF2 standard_symplectic(int g);

int pair(const SymplecticF2& sp, F2Vec x, F2Vec y);

int f2_rank(std::vector<F2Vec> rows);  // row rank over F2

// A quadratic form q with polarization the space's pairing:
// q(x+y) = q(x) + q(y) + <x,y>.  Determined by its basis values.
struct QuadraticFormF2 {
    SymplecticF2 space;
    F2Vec basis_values = 0;  // bit i = q(e_i)
};

int q_eval(const QuadraticFormF2& q, F2Vec x);

// Arf invariant: 0 ("even") iff q has 2^(2g-1) + 2^(g-1) zeros.  Computed
// by enumeration for g <= 6 and by symplectic reduction above.
int arf(const QuadraticFormF2& q);
int arf_by_count(const QuadraticFormF2& q);    // enumeration (dim <= 24)
int arf_by_reduction(const QuadraticFormF2& q);

// (v.q)(x) = q(x) + <x,v>.
QuadraticFormF2 translate_form(const QuadraticFormF2& q, F2Vec v);

// A symplectic basis u_1 v_1 ... u_g v_g of the space (as vectors in the
// original coordinates) with <u_i, v_i> = 1, all other pairings 0.
std::vector<F2Vec> symplectic_basis(const SymplecticF2& sp);

// Descent along a nonzero mu: the quotient mu^perp / (mu) with its induced
// pairing.  lift(i) is a representative in mu^perp of quotient basis vector
// i; project maps mu^perp onto quotient coordinates.
struct Descent {
    SymplecticF2 up;    // the original space
    SymplecticF2 down;  // mu^perp / (mu); dim 0 when up.dim == 2
    F2Vec mu = 0;
    std::vector<F2Vec> lifts;  // quotient basis representatives, in mu^perp
    int up_dim = 0;

    F2Vec lift(F2Vec y) const;
    F2Vec project(F2Vec x) const;  // requires x in mu^perp
    bool in_perp(F2Vec x) const;
};

Descent descend_space(const SymplecticF2& sp, F2Vec mu);

// Descends q along mu; requires q(mu) = 0 (throws otherwise).
QuadraticFormF2 descend_form(const QuadraticFormF2& q, const Descent& d);

struct IsotropicSubspace {
    SymplecticF2 space;
    std::vector<F2Vec> basis;  // reduced echelon form, pairwise pairing 0
};

// All isotropic subspaces of rank r, exhaustively (dim <= 10).
std::vector<IsotropicSubspace> enumerate_isotropic(const SymplecticF2& sp, int r);

// ----- Fano plane diagram solver -----

// Vertex label of a point of P(F2^3); edge label of a line.
enum class VertexLabel : std::uint8_t { T, Q };
enum class EdgeLabel : std::uint8_t { C, NotC };

struct FanoDiagram {
    // points[i] is the nonzero vector i+1 of F2^3; lines[j] lists the three
    // point indices on line j (lines indexed by their dual vector j+1).
    std::vector<F2Vec> points;
    std::vector<std::vector<int>> lines;
    std::vector<VertexLabel> vertex_labels;  // size 7
    std::vector<EdgeLabel> edge_labels;      // size 7
};

// All labelings satisfying: every edge through a T-vertex is a C-edge, and
// on a C-edge the vertices are T,T,Q.  With require_T, only labelings with
// at least one T-vertex.
std::vector<FanoDiagram> fano_solve(bool require_T);

// Number of GL(3,2)-orbits on the given diagrams (collineations act on
// points by x -> Mx and on lines accordingly).
int fano_orbit_count(const std::vector<FanoDiagram>& diagrams);

std::string fano_render(const FanoDiagram& d);

}  // namespace prym

#endif
