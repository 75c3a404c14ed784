#ifndef PRYM_WEYL_HPP
#define PRYM_WEYL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "prym/perm.hpp"

namespace prym {

// An element of the hyperoctahedral group WC_n: a permutation of n letters
// together with a sign bit per letter.  The action on the 2n points (i,s),
// encoded as 2i+s, is g(i,s) = (sigma(i), s ^ eps[i]).
struct SignedPerm {
    Perm sigma;
    std::vector<std::uint8_t> eps;

    SignedPerm() = default;
    SignedPerm(Perm s, std::vector<std::uint8_t> e);
    explicit SignedPerm(int n) : sigma(n), eps(n, 0) {}

    int n() const { return sigma.degree(); }
    bool is_identity() const;
    friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
};

// sp_compose(g2, g1) applies g1 first: (s2,e2)(s1,e1) = (s2 s1, e1 ^ (e2 o s1)).
SignedPerm sp_compose(const SignedPerm& g2, const SignedPerm& g1);
SignedPerm sp_inverse(const SignedPerm& g);

// The 2n-point action, point (i,s) at index 2i+s.
Perm embed_2n(const SignedPerm& g);

// Decodes a permutation of 2n points that preserves the pairing
// {2i, 2i+1} back into a SignedPerm.  Throws if it does not.
SignedPerm from_embedded(const Perm& p);

// Sum of the sign bits mod 2; equals the sign of embed_2n as an element of
// F2, and vanishes exactly on WD_n.
int orientation_char(const SignedPerm& g);

// The standard representation on the 2^n sections t in {0,1}^n, bit i of t
// being the choice over letter i: (g.t)(i) = t(sigma^-1 i) ^ eps[sigma^-1 i].
// Sections are indexed by the integer with bit i = t(i).
Perm section_action(const SignedPerm& g);

// The induced action on the 2^(n-1) complement classes {t, ~t}; class c is
// indexed by its smaller member, an integer in [0, 2^(n-1)).
Perm class_action(const SignedPerm& g);

// Generators of WC_n / WD_n embedded on 2n points.
PermTuple wc_generators_embedded(int n);
PermTuple wd_generators_embedded(int n);
std::vector<Perm> wc_elements_embedded(int n);  // cached per n

struct SubgroupRecord {
    std::string name;
    PermTuple generators;     // on the 8 points x_i^{+-}, x_i^+ -> 2i, x_i^- -> 2i+1
    std::uint64_t order = 0;
};

// The named subgroups of WD_4 acting on the 8 points {x_i^{+-}}:
// H0,H1,H2 (order 48), H~0,H~1,H~2 (24), G (16), N(G) (64), G~0,G~1,G~2 (32).
// Each is realized as the stabilizer of a partition of the 8 points.
std::vector<SubgroupRecord> wd4_lattice();

// Text table of the lattice (name, order, index in WD4, generators).
std::string wd4_lattice_table();

}  // namespace prym

#endif
