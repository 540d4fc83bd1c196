#pragma once

// Triangular-lattice geometry: cells, regions, lozenges, region builders,
// forced-lozenge stripping, the bipartite dual graph, and congruence up to
// the 12 lattice symmetries.
//
// Cell coordinates: U(r,c) has apex vertex (c,r) and base vertices
// (c-1,r+1),(c,r+1); D(r,c) has base (c,r),(c+1,r) and apex (c,r+1), where
// vertex (s,r) sits at Cartesian (s + r/2, r). Rows are indexed top to
// bottom. U(r,c) is adjacent to D(r,c) (right edge), D(r,c-1) (left edge)
// and D(r+1,c-1) (bottom edge).

#include "tilt/closedform.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace tilt {

struct Untileable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TriCell {
    int row = 0;
    int col = 0;
    bool up = true;

    // left-to-right position within a row; U(r,c) immediately precedes D(r,c)
    int key() const { return 2 * col + (up ? 0 : 1); }

    friend bool operator==(const TriCell&, const TriCell&) = default;
    friend auto operator<=>(const TriCell& a, const TriCell& b) {
        if (auto c = a.row <=> b.row; c != 0) return c;
        return a.key() <=> b.key();
    }
};

// Sorted, duplicate-free cell list.
using Region = std::vector<TriCell>;

enum class Orient { Left, Right, Vertical };

struct Lozenge {
    TriCell u, d;  // u.up, !d.up
    Orient orient = Orient::Right;

    friend bool operator==(const Lozenge&, const Lozenge&) = default;
    friend auto operator<=>(const Lozenge&, const Lozenge&) = default;
};

using Tiling = std::vector<Lozenge>;

// Neighbors of a cell in branch order left, right, vertical.
std::array<TriCell, 3> neighbors(const TriCell& c);

// Builds the lozenge on cells {u, d}, deriving the orientation; throws
// InvalidParams if the cells are not adjacent.
Lozenge make_lozenge(const TriCell& u, const TriCell& d);

// Bipartite dual: vertices are cells (V1 = up, V2 = down), edges join
// edge-adjacent cells. Cells are kept in row-major order.
struct MatchGraph {
    std::vector<TriCell> cells;            // sorted
    std::vector<std::array<int, 3>> adj;   // neighbor indices (-1 if absent), order as neighbors()
    long long up_count = 0, down_count = 0;
};

Region build_hexagon(const HexParams& p);
Region build_semihexagon(const SemiHexParams& p);
Region build_halved_hexagon(const HalvedHexParams& p);
Region build_tilted_region(const TiltedParams& p);

// Dent triangles removed by the builders (for rendering).
std::vector<TriCell> semihexagon_dents(const SemiHexParams& p);
std::vector<TriCell> tilted_dents(const TiltedParams& p);

// Up-triangle at the corner of each staircase level (level -> cell),
// levels h+l down to 1. Anchors the lozenge paths of the bijections.
std::map<long long, TriCell> staircase_corners(const TiltedParams& p);

// Tilted-parameter view of the halved hexagon P_{a,b,c}; the builder above
// is exactly build_tilted_region of this.
TiltedParams halved_as_tilted(const HalvedHexParams& p);

// Strips forced lozenges to a fixpoint; returns the residue and the number
// of lozenges removed. Throws Untileable when a cell has no partner left.
std::pair<Region, long long> remove_forced(const Region& r);

MatchGraph dual_graph(const Region& r);

// Equality up to lattice translations, the 6 rotations, and reflection.
bool congruent(const Region& r1, const Region& r2);

// Canonical cell-set fingerprint under the 12 symmetries (congruent regions
// get equal fingerprints).
std::vector<std::pair<int, int>> canonical_form(const Region& r);

long long max_row_width(const Region& r);

nlohmann::json region_to_json(const Region& r);
Region region_from_json(const nlohmann::json& j);

}  // namespace tilt
