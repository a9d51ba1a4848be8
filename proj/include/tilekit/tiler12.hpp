#pragma once

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tilekit/grid.hpp"

namespace tilekit {

// Copy of tile grid G^tile with its lower-left corner at (x, y).
struct Placement12 {
    int tile = 1;
    int x = 0;
    int y = 0;
    bool operator==(const Placement12&) const = default;
};

struct Tiling12 {
    Params params;
    int width = 0;
    int height = 0;
    std::vector<Placement12> placements;

    nlohmann::json to_json() const;
    static Tiling12 from_json(const nlohmann::json& j);
};

// Horizontal sides hold C/D, vertical sides A/B (listed bottom to top).
using SideSeq = std::vector<BlockKind>;

SideSeq parse_side(const std::string& s);
std::string side_string(const SideSeq& s);

struct BoundarySpec {
    Params params;
    SideSeq top, bottom, left, right;
    int separation = 0;  // 0 means p*q

    int width() const { return side_span(top, params); }
    int height() const { return side_span(left, params); }
    TileLayout layout() const;
    nlohmann::json to_json() const;
    static BoundarySpec from_json(const nlohmann::json& j);
};

struct Infeasible : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Empty when the placements cover the region, agree on every overlap, and
// every 2x2 square lies inside one placement.
std::string tiling12_defect(const Tiling12& t);
bool validate_tiling12(const Tiling12& t);
bool boundary_matches(const Tiling12& t, const BoundarySpec& spec);

// Per cell (row-major from the bottom) the class in make_gamma(params); empty
// if two placements disagree.
std::vector<int> canvas_classes(const Tiling12& t, const QuotientGraph& gamma);

int transpose_tile(int i);
int vflip_tile(int i);
int hflip_tile(int i);
Tiling12 transpose(const Tiling12& t);
Tiling12 flip_vertical(const Tiling12& t);
Tiling12 flip_horizontal(const Tiling12& t);
Tiling12 shifted(const Tiling12& t, int dx, int dy);

// Algorithm I.
Tiling12 fill_uniform(const Params& prm, int width, int height, int tile);
// One tile per (column, row) entry: c/d columns left to right, a/b rows
// bottom to top.
Tiling12 fill_grid(const Params& prm, const SideSeq& columns, const SideSeq& rows);

struct StripFill {
    Tiling12 tiling;
    SideSeq bottom;
};

// Algorithms I and II: rows of tile height p+n under the given top side,
// sides all a. Each d moves by its signed shift, one step per row.
StripFill propagate_fill(const Params& prm, const SideSeq& top, int rows, const std::vector<int>& shifts);
// Algorithm III: q+1 rows; the bottom is (k mod p) d's then c's.
StripFill gather_strip(const Params& prm, const SideSeq& top);

Tiling12 fill_rectangle(const BoundarySpec& spec);

// Random spec with 0..max_marks marked blocks per side, opposite sides
// carrying the same count, every mark at least separation + q blocks from
// its neighbours and the corners.
BoundarySpec random_boundary_spec(const Params& prm, std::mt19937_64& rng, int max_marks = 3);

std::string render(const Tiling12& t);

}  // namespace tilekit
