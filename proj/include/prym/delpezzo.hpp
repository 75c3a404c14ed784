#ifndef PRYM_DELPEZZO_HPP
#define PRYM_DELPEZZO_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "prym/perm.hpp"

namespace prym {

// The Picard lattice Z h + Z e_1 + ... + Z e_r of a blowup of the plane at
// r points, with intersection form diag(1,-1,...,-1).
struct PicLattice {
    int r = 0;  // 0 <= r <= 6, rank r+1
    explicit PicLattice(int blowups);
    int rank() const { return r + 1; }
};

// Coefficients (d; m_1..m_r) of d*h + sum m_i e_i.
using DivisorClass = std::vector<int>;

int intersect(const DivisorClass& a, const DivisorClass& b);
DivisorClass canonical_class(const PicLattice& lat);  // -3h + sum e_i

// All classes with D.D = D.K = -1, by bounded exhaustive search.
// Counts: r=6 -> 27, r=5 -> 16, r=4 -> 10, r=0 -> 0.
std::vector<DivisorClass> lines(const PicLattice& lat);

struct IncidenceGraph {
    std::vector<DivisorClass> nodes;
    std::vector<std::vector<int>> adjacency;  // adjacency[i] = sorted neighbor indices
};
// Edges where D.D' = 1; r = 5 or 6.
IncidenceGraph incidence_graph(const PicLattice& lat);

// Unordered triples of pairwise-incident lines with D1+D2+D3 = -K (r = 6).
std::vector<std::array<int, 3>> tritangents(const PicLattice& lat,
                                            const std::vector<DivisorClass>& line_classes);

// The Weyl group generated by reflections in the roots (a.a = -2, a.K = 0),
// acting on the line classes as permutations.
PermTuple weyl_action_on_lines(const PicLattice& lat,
                               const std::vector<DivisorClass>& line_classes);

struct WeylOrders {
    std::uint64_t group_order = 0;
    std::uint64_t line_stabilizer_order = 0;
};
WeylOrders weyl_orders(const PicLattice& lat);

// Partition of the 27 lines by intersection with a marked line class:
// the mark itself, the ten lines meeting it, the sixteen disjoint from it.
struct MarkClassification {
    int mark = -1;
    std::vector<int> meeting;   // D.mark = 1
    std::vector<int> disjoint;  // D.mark = 0
};
MarkClassification mark_and_classify(const PicLattice& lat,
                                     const std::vector<DivisorClass>& line_classes,
                                     const DivisorClass& mark);

// Double-sixes: pairs of disjoint sextuples of pairwise-disjoint lines,
// each line of one meeting exactly five of the other.
std::vector<std::pair<std::array<int, 6>, std::array<int, 6>>> double_sixes(
    const IncidenceGraph& g);

// The 21-object incidence structure of lines on a one-nodal cubic surface,
// as the quotient of the 27-line graph by a double-six identification
// a_i ~ b_i: six doubled lines through the node plus fifteen others.
struct NodalStructure {
    // objects 0..5: the doubled lines l_i; 6..20: l_{ij}, lexicographic
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> pair_index;      // for l_{ij} objects
    std::vector<std::vector<int>> adjacency;          // quotient incidence
    bool quotient_consistent = false;                 // a_i and b_i agree on all l_{kl}
};
NodalStructure nodal_specialize();

// Whether relabeling objects by a permutation of {0..5} preserves incidence.
bool nodal_s6_equivariant(const NodalStructure& ns, const Perm& p);

// The Fano-surface bookkeeping of the Segre cubic: six rulings R_i and
// fifteen planes P_ij, their incidences, and the two tritangent-type
// families of triples.
struct SegreStructure {
    std::vector<std::string> rulings;                   // R0..R5
    std::vector<std::pair<int, int>> planes;            // (i,j), i<j
    std::vector<std::pair<int, int>> ruling_plane_incidence;  // (ruling, plane idx)
    std::vector<std::array<int, 3>> pentagon_triples;   // {R_i, R_j, P_ij} as (i, j, plane)
    std::vector<std::array<int, 3>> wheel_triples;      // three planes forming a partition
    // plane-quintic model of the pentagon: component count, node count, p_a
    int pentagon_components = 0;
    int pentagon_nodes = 0;
    int pentagon_pa = 0;
    // wheel model: dual graph of a conic plus three concurrent lines
    std::vector<std::string> wheel_components;
    std::vector<std::pair<int, int>> wheel_dual_edges;  // conic-line meetings, doubled
    std::vector<int> wheel_concurrent;                  // the three lines through one point
};
SegreStructure segre_structure();

// DOT rendering of an incidence graph.
std::string to_dot(const IncidenceGraph& g, const std::string& name);

}  // namespace prym

#endif
