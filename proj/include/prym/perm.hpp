#ifndef PRYM_PERM_HPP
#define PRYM_PERM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace prym {

// A permutation of {0,...,degree-1}, stored as the image table.
// All point labels are 0-based internally; 1-based labels appear only in
// the file format and in rendered cycle notation.
class Perm {
public:
    Perm() = default;
    explicit Perm(int degree);                    // identity
    explicit Perm(std::vector<int> images);       // validates bijectivity

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int point) const { return images_[point]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    std::vector<int> images_;
};

// compose(a, b) applies b first, then a.  This is the one composition
// convention used everywhere: transport along concatenated loops, first
// loop first, once the tuple order is fixed.
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
Perm conjugate(const Perm& c, const Perm& p);     // c p c^-1

// Cycles of p, each cycle starting at its smallest point, cycles ordered
// by smallest contained point.  Fixed points are included as 1-cycles;
// this ordering is what fiber-point addressing relies on.
std::vector<std::vector<int>> cycles(const Perm& p);

struct CycleTypeSign {
    std::vector<int> cycle_lengths;   // sorted descending
    int sign;                         // +1 or -1
};
CycleTypeSign cycle_type_and_sign(const Perm& p);
int perm_sign(const Perm& p);

// Disjoint-cycle notation with 1-based labels, fixed points omitted,
// identity rendered as "()".
std::string render_cycles(const Perm& p);
// Parses the same notation; degree must be given since fixed points are
// omitted.  Throws std::invalid_argument on malformed input.
Perm parse_cycles(const std::string& text, int degree);

// An ordered tuple of permutations of a common degree.
struct PermTuple {
    int degree = 0;
    std::vector<Perm> entries;

    PermTuple() = default;
    PermTuple(int deg, std::vector<Perm> perms);
};

// Orbits of the generated subgroup on {0..degree-1}, each orbit sorted,
// orbits ordered by smallest element.  One orbit <=> connected cover.
std::vector<std::vector<int>> orbits(const PermTuple& t);

bool is_transitive(const PermTuple& t);

// All nontrivial partitions of the point set into equal-size blocks that
// every generator preserves setwise.  Exhaustive for degree <= 12.  For an
// intransitive tuple the block systems of each orbit restriction are
// returned (blocks then live inside single orbits).
std::vector<std::vector<std::vector<int>>> block_systems(const PermTuple& t);

// Order of the generated group, by a stabilizer-chain (Schreier-Sims)
// computation.  Exact; degree <= 32.
std::uint64_t group_order(const PermTuple& t);

// Explicit element list of the generated group (BFS closure).  Throws if
// the order exceeds max_size.
std::vector<Perm> enumerate_elements(const PermTuple& t, std::size_t max_size = 200000);

// Searches <g> exhaustively for c with c a_i c^-1 = b_i for all i.
std::optional<Perm> simultaneous_conjugacy(const PermTuple& a, const PermTuple& b,
                                           const PermTuple& g);

// Same search over an already-enumerated element list.
std::optional<Perm> simultaneous_conjugacy(const PermTuple& a, const PermTuple& b,
                                           const std::vector<Perm>& group_elems);

// Restriction of t to one orbit, with points re-indexed in increasing
// order.  point_map[i] gives the original label of new point i.
PermTuple restrict_to(const PermTuple& t, const std::vector<int>& orbit);

}  // namespace prym

#endif
