#ifndef PRYM_TOWER_IO_HPP
#define PRYM_TOWER_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "prym/cover.hpp"

namespace prym {

// Contents of a "tower v1" file.  Files with any `signs` field load as a
// signed tower (missing sign fields default to all-zero); files without
// signs load as a plain cover.  Glue lines may appear in either case; for
// signed towers the cycle indices address cycles of the embedded 2n-degree
// element over the label, for plain covers cycles of sigma_b.  Labels and
// cycle indices are 1-based in the file.
struct TowerFile {
    std::optional<GluedTower> tower;
    std::optional<GluedCover> cover;

    bool is_signed() const { return tower.has_value(); }
};

// Throws std::runtime_error with a line number on malformed input, and
// names the residual permutation when the product relation fails.
TowerFile load_tower(std::istream& in);
TowerFile load_tower_file(const std::string& path);

std::string render_tower(const GluedTower& t);
std::string render_tower(const SignedTower& t);
std::string render_tower(const GluedCover& c);
std::string render_tower(const MonodromyCover& c);

void write_tower_file(const std::string& path, const std::string& contents);

}  // namespace prym

#endif
