#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tilekit/csp.hpp"

namespace tilekit {

struct Rect {
    int w = 1;
    int h = 1;
    bool operator==(const Rect&) const = default;
};

using RectTileSet = std::vector<Rect>;

// Drops duplicates, keeps first occurrence order; throws on empty or nonpositive sides.
RectTileSet normalize(const RectTileSet& tiles);

struct Region {
    bool torus = false;
    int w = 1;
    int h = 1;

    static Region box(int w, int h) { return {false, w, h}; }
    static Region torus_of(int w, int h) { return {true, w, h}; }
    long long area() const { return static_cast<long long>(w) * h; }
};

// Lower-left anchor; on a torus coordinates wrap.
struct RectPlacement {
    int tile = 0;
    int x = 0;
    int y = 0;
};

struct RegionTiling {
    Region region;
    RectTileSet tiles;
    std::vector<RectPlacement> placements;

    nlohmann::json to_json() const;
    static RegionTiling from_json(const nlohmann::json& j);
    std::size_t count(int tile) const;
};

bool validate_rect_tiling(const RegionTiling& t);
std::string render(const RegionTiling& t);

struct RectSearch {
    Verdict verdict = Verdict::Unknown;
    RegionTiling tiling;
    std::uint64_t nodes = 0;
    bool sat() const { return verdict == Verdict::Sat; }
};

// Exact cover branching on the cell with the fewest open placements, with a
// cache of failed partial covers. On a torus the first tile is anchored at the origin.
// With area_check the area obstruction answers first and no search runs.
RectSearch solve_rect_tiling(const Region& region, const RectTileSet& tiles, std::uint64_t budget = 0,
                             bool area_check = true);

// 3x3 tiles anchored on the lattice generated by (3,2), (2,-3) mod 13 and
// 2x2 tiles anchored on (3,0) plus the lattice, on the 13x13 torus.
RegionTiling lattice_tiling_2_3();
// Periodic extension of a torus tiling to an (mx*w) x (my*h) torus.
RegionTiling repeat_tiling(const RegionTiling& t, int mx, int my);

// axis 0 stretches the width by 6c, axis 1 the height. The cut sits just
// left of column (row) `cut`.
RegionTiling stretch_tiling(const RegionTiling& t, int axis, int c, int cut = 0);
RegionTiling transpose(const RegionTiling& t);

// Least d > 1 dividing every tile area but not the region area.
std::optional<int> area_obstruction(const Region& region, const RectTileSet& tiles);

struct TorusDecision {
    Verdict verdict = Verdict::Unknown;
    std::string method;  // lattice, lattice+stretch, strips, search, obstruction, budget
    std::optional<RegionTiling> tiling;
};

// Tori tileable by 2x2 and 3x3 tiles.
bool representable_13_6(int a);
TorusDecision decide_ss_torus(int a, int b, std::uint64_t budget = 2'000'000);

}  // namespace tilekit
