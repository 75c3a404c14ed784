#ifndef PRYM_COVER_HPP
#define PRYM_COVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "prym/perm.hpp"
#include "prym/weyl.hpp"

namespace prym {

struct BaseCurve {
    int genus = 0;
    std::vector<std::string> branch_labels;
};

// A branched cover of the base, as a Hurwitz datum: 2h handle permutations
// a1,b1,...,ah,bh and one permutation per branch label, subject to
// prod [a_i,b_i] * prod sigma_b = id (first listed loop acts first).
struct MonodromyCover {
    BaseCurve base;
    int degree = 0;
    std::vector<Perm> handles;
    std::vector<Perm> branches;
};

// Product of the defining relation; identity for a valid cover.
Perm relation_residual(const MonodromyCover& c);
// Throws std::invalid_argument naming the residual if the relation fails.
void validate_cover(const MonodromyCover& c);

PermTuple monodromy_tuple(const MonodromyCover& c);  // handles then branches

// Per-component genus by the Hurwitz formula, components ordered by
// smallest contained sheet.
std::vector<int> genus(const MonodromyCover& c);
// Genus of a connected cover; throws if disconnected.
int genus_connected(const MonodromyCover& c);

// A double cover of a cover: one WC_n element per generator.  The top
// curve C~ is the embedded 2n-sheeted cover, C the underlying n-sheeted one.
struct SignedTower {
    BaseCurve base;
    int degree = 0;  // n
    std::vector<SignedPerm> handles;
    std::vector<SignedPerm> branches;
};

void validate_tower(const SignedTower& t);
MonodromyCover cover_c(const SignedTower& t);       // forget signs
MonodromyCover cover_ctilde(const SignedTower& t);  // embedded, degree 2n

// True iff every cycle of every branch element carries even sign sum, so
// each point of C has two preimages.
bool is_etale_double(const SignedTower& t);

// A fiber point: a cycle of the relevant local permutation over a branch
// label.  Cycles are ordered by smallest contained sheet index; for plain
// covers the permutation is sigma_b, for tower tops the embedded element.
struct FiberPoint {
    int label = 0;  // index into base.branch_labels
    int cycle = 0;
    friend bool operator==(const FiberPoint&, const FiberPoint&) = default;
    friend auto operator<=>(const FiberPoint&, const FiberPoint&) = default;
};

struct GluePair {
    FiberPoint a, b;
};

// A cover with node decorations; pairs address cycles of sigma_b.
struct GluedCover {
    MonodromyCover smooth;
    std::vector<GluePair> pairs;
};

// A tower with node decorations; pairs address points of C~, i.e. cycles
// of the embedded 2n-degree element over each label.
struct GluedTower {
    SignedTower smooth;
    std::vector<GluePair> pairs;
};

void validate_glue(const GluedCover& g);
void validate_glue(const GluedTower& g);

// p_a = sum of component genera + #nodes - #components + 1.
int arithmetic_genus(const GluedCover& g);
int arithmetic_genus(const MonodromyCover& c);  // no nodes

// The two sides of a glued tower as glued covers: C~ keeps the pairs, C
// receives each node's projection (deduplicated across the iota-orbit).
GluedCover glued_ctilde(const GluedTower& t);
GluedCover glued_c(const GluedTower& t);

// The sheet involution of C~ over C together with the fixed-point report:
// fixed[label][cycle] says whether iota fixes that fiber point of C~.
struct InvolutionReport {
    Perm flip;
    std::vector<std::vector<bool>> fixed;
};
InvolutionReport tower_involution(const SignedTower& t);

// The two C~-points over an etale C-fiber point: copy 0 contains the point
// 2*i0 (i0 the smallest sheet of the cycle), copy 1 contains 2*i0+1.  For a
// ramified C-point there is a single C~-point; copy is ignored.
FiberPoint ctilde_point_over(const SignedTower& t, FiberPoint c_point, int copy);

// pi-ramification points of the tower, as fiber points of C~.
std::vector<FiberPoint> ramification_points(const SignedTower& t);

struct Allowability {
    bool allowable = false;
    std::string reason;
};
// Beauville's criterion: every iota-fixed point of C~ is a node whose
// branches are not exchanged, and #nodes exchanged under iota equals
// #components exchanged under iota.  Throws on gluing not compatible with
// iota (the glue pairing must be iota-equivariant).
Allowability is_allowable(const GluedTower& t);

enum class BoundaryType { dI, dII, dIII, smooth };
std::string to_string(BoundaryType b);

// Per-node boundary tags (each node classified with the others ignored),
// in the order the C-nodes are induced by the glue pairs.
std::vector<BoundaryType> node_types(const GluedTower& t);
// The tag of a one-node tower; throws unless there is exactly one C-node.
BoundaryType degeneration_type(const GluedTower& t);

// Examples 1.9.  Kind I: the Wirtinger cover glued crosswise from the
// split double of x at fiber points p != q.
GluedTower wirtinger_cover(const MonodromyCover& x, FiberPoint p, FiberPoint q);
// Kind II: parallel gluing of an etale, fiberwise-nonsplit tower at p, q.
GluedTower boundary_ii(const SignedTower& xt, FiberPoint p, FiberPoint q);
// Kind III: glue the two pi-ramification points of a tower that has
// exactly two of them.
GluedTower boundary_iii(const SignedTower& xt);

// Isomorphism of towers over the same base with the same branch labels:
// simultaneous WC_n conjugacy of the embedded tuples (and matching glue).
bool towers_isomorphic(const SignedTower& a, const SignedTower& b);
bool towers_isomorphic(const GluedTower& a, const GluedTower& b);

// Isomorphism of plain covers with the same labels (conjugacy under S_n).
bool covers_isomorphic(const MonodromyCover& a, const MonodromyCover& b);

}  // namespace prym

#endif
