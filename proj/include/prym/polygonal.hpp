#ifndef PRYM_POLYGONAL_HPP
#define PRYM_POLYGONAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "prym/cover.hpp"

namespace prym {

// The 2^n-sheeted direct image of a degree-n tower, with its involution,
// class quotient and orientation cover.
struct DirectImage {
    MonodromyCover cover;           // degree 2^n
    Perm iota;                      // bitwise complement of sections
    MonodromyCover class_quotient;  // degree 2^(n-1)
    MonodromyCover orientation;     // degree 2
};
DirectImage direct_image(const SignedTower& t);  // n <= 8

// Orientation double cover of an arbitrary cover: the sign character of
// its monodromy.  Split iff every generator is even.
MonodromyCover orientation_cover(const MonodromyCover& c);

// ----- bigonal -----

// The bigonal construction on a degree-2 tower over an arbitrary base,
// possibly carrying dIII decorations (local case vi); produces the dual
// tower, glued at the labels where local case (v) occurs.
GluedTower bigonal(const GluedTower& t);
GluedTower bigonal(const SignedTower& t);

// Branch bookkeeping at one label, with the nodal conventions: a glued
// ramification pair contributes 0 to the pi-branch count and a node of the
// middle curve contributes 2 to the base-map multiplicity.
struct LocalBranchData {
    int f_mult = 0;   // branching of C -> K at the label (node counts 2)
    int g_count = 0;  // unglued pi-ramification points over the label
};
std::vector<LocalBranchData> branch_data(const GluedTower& t);

// The eight quotient curves of the WC_2 closure, one per conjugacy class
// of subgroups, degrees 1,2,2,2,4,4,4,8.
struct QuotientCurve {
    std::string name;
    MonodromyCover cover;
};
std::vector<QuotientCurve> bigonal_diagram(const SignedTower& t);

// ----- trigonal (Recillas) -----

// Degree-3 etale-or-dIII tower over a genus-0 base -> the tetragonal curve
// X (the section block containing the all-zeros section).
MonodromyCover trigonal_forward(const GluedTower& t);
MonodromyCover trigonal_forward(const SignedTower& t);

// Degree-4 cover of a genus-0 base -> the tower (C~ -> C -> P1): C~ is the
// action on unordered sheet pairs, C on the three pair partitions, glued
// at labels where X has cycle type [2,2] or [4].
GluedTower trigonal_inverse(const MonodromyCover& x);

// ----- tetragonal -----

struct TetragonalPair {
    GluedTower c0;  // block whose classes contain the even-weight sections
    GluedTower c1;
};
TetragonalPair tetragonal(const GluedTower& t);
TetragonalPair tetragonal(const SignedTower& t);

// ----- local pictures -----

struct LocalPictureTag {
    std::string construction;  // bigonal | trigonal | tetragonal
    std::string case_id;       // i..vi, i..v, 1..7, or "generic"
    std::string input;
    std::vector<std::string> outputs;
};
// Classifies a single local element (WC_2/WC_3/WC_4) with an optional dIII
// node gluing its two pi-ramification points.
LocalPictureTag local_picture(const std::string& construction, const SignedPerm& g,
                              bool glued);

// ----- Cartesian structure -----

struct CartesianFactors {
    bool cartesian = false;
    MonodromyCover factor0, factor1;  // C~ = factor0 x_K factor1 when cartesian
};
// Degree-2 tower over a base of arbitrary genus: Cartesian iff the
// orientation character vanishes on every generator.
CartesianFactors is_cartesian(const SignedTower& t);

// For a degree-4 tower over P1 whose sigma-monodromy preserves the given
// size-2 blocks: is the tower Cartesian over the block quotient curve?
bool is_cartesian_relative(const SignedTower& t,
                           const std::vector<std::vector<int>>& blocks);

// ----- hyperelliptic factorization (3.5) -----

struct HyperellipticFactorization {
    MonodromyCover h;                      // the degree-2 block quotient
    std::vector<std::vector<int>> blocks;  // size-2 blocks of sheets
    // nodes of C whose two branches map to distinct points of H; making the
    // factorization a morphism requires identifying each listed pair.
    std::vector<std::pair<FiberPoint, FiberPoint>> needed_identifications;
};
std::optional<HyperellipticFactorization> factors_through_hyperelliptic(const GluedCover& c);
std::optional<HyperellipticFactorization> factors_through_hyperelliptic(const MonodromyCover& c);

// All size-2 block systems; factorizations through each.
std::vector<HyperellipticFactorization> hyperelliptic_factorizations(const GluedCover& c);

}  // namespace prym

#endif
