#ifndef PRYM_GENERATORS_HPP
#define PRYM_GENERATORS_HPP

#include <cstdint>
#include <random>

#include "prym/cover.hpp"

namespace prym {

// Deterministic RNG for the verification suites.  Draws go through the raw
// mt19937_64 stream so reports are reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    int uniform(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    int range(int lo, int hi) { return lo + uniform(hi - lo + 1); }  // inclusive
    bool coin() { return next() & 1; }

private:
    std::mt19937_64 engine_;
};

Perm random_perm(Rng& rng, int n);
SignedPerm random_signed(Rng& rng, int n);
// Random sigma with signs adjusted so every cycle has even sum.
SignedPerm random_etale_signed(Rng& rng, int n);

// Connected cover of P1: branch permutations uniform, last one the inverse
// of the prefix product, resampled until connected (and until the
// monodromy is the full symmetric group when require_full_group is set).
MonodromyCover random_connected_cover(Rng& rng, int degree, int min_branches,
                                      int max_branches, bool require_full_group = false);

// Etale tower over P1 with connected C; with require_connected_ctilde the
// sign class eta is nonzero (C~ connected).
SignedTower random_etale_tower(Rng& rng, int degree, int min_branches, int max_branches,
                               bool require_connected_ctilde);

// Degree-2 tower over a base of genus h; pi may be ramified.
SignedTower random_bigonal_tower(Rng& rng, int base_genus, int min_branches,
                                 int max_branches);

// Degree-2 tower over P1 with pi ramified at exactly two points.
SignedTower random_two_point_ramified_tower(Rng& rng, int min_branches, int max_branches);

// A Cartesian double cover of a bihyperelliptic curve, built fiberwise:
// sheets (h,c) -> 2h+c, C~ = C0 x_H C1 with disjoint branch loci.
struct BihyperellipticInstance {
    SignedTower tower;  // degree 4 over P1, etale
    std::vector<std::vector<int>> blocks{{0, 1}, {2, 3}};
    MonodromyCover h_cover;  // H -> P1
    int genus_h = 0;
    int genus_c0 = 0;  // genus of the factor C^0 -> H
    int genus_c1 = 0;
};
// num_h_branch swaps for H (even, >= 2: genus (num_h_branch-2)/2).
BihyperellipticInstance random_cartesian_bihyperelliptic(Rng& rng, int num_h_branch,
                                                         int extra_labels);

// Etale, non-Cartesian-over-E double cover of a bielliptic C (block quotient
// E of genus 1), together with the block system.
struct BiellipticInstance {
    SignedTower tower;  // degree 4 over P1, etale, connected C and C~
    std::vector<std::vector<int>> blocks{{0, 1}, {2, 3}};
};
BiellipticInstance random_noncartesian_bielliptic(Rng& rng, int extra_labels);

// A uniformly random fiber point of the cover (cycle of some sigma_b).
FiberPoint random_fiber_point(Rng& rng, const MonodromyCover& c);

}  // namespace prym

#endif
