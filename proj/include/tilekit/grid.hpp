#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace tilekit {

enum class BlockKind : std::uint8_t { Cross, A, B, C, D, Interior };

struct BlockLabel {
    BlockKind kind = BlockKind::Interior;
    int owner = 0;  // grid index for interior blocks, 0 otherwise

    bool operator==(const BlockLabel&) const = default;
    auto operator<=>(const BlockLabel&) const = default;
};

std::string to_string(BlockLabel l);

struct Params {
    int n = 1;
    int p = 2;
    int q = 3;

    bool valid() const { return n >= 1 && n < p && n < q; }
    bool coprime() const;
    void check() const;  // throws std::invalid_argument
};

struct Cell {
    BlockLabel label;
    int dx = 0;
    int dy = 0;
};

// Row index is y, origin lower-left.
struct LabeledGrid {
    int width = 0;
    int height = 0;
    int index = 0;  // tile number 1..12, or 0 for a free-standing grid
    std::vector<Cell> cells;

    const Cell& at(int x, int y) const { return cells[static_cast<std::size_t>(y) * width + x]; }
    Cell& at(int x, int y) { return cells[static_cast<std::size_t>(y) * width + x]; }
    std::size_t vertex_count() const { return cells.size(); }
    std::size_t edge_count() const {
        return static_cast<std::size_t>(width - 1) * height + static_cast<std::size_t>(height - 1) * width;
    }
};

LabeledGrid make_grid(int w, int h);

// Unit sequences along a tile side. Horizontal sides use C/D, vertical
// sides use A/B; vertical sequences run bottom to top.
struct TileLayout {
    int width = 0;
    int height = 0;
    std::vector<BlockKind> top, bottom, left, right;
};

TileLayout tile_layout(int i, const Params& prm);
LabeledGrid make_tile_grid(int i, const Params& prm);
// Boundary blocks from the layout sequences, interior block owned by `index`.
LabeledGrid make_layout_grid(const TileLayout& t, const Params& prm, int index);
int side_span(const std::vector<BlockKind>& seq, const Params& prm);
std::string tile_name(int i);

// Size of a labeled block; one-dimensional blocks have height 1.
std::array<int, 2> block_dims(BlockKind k, const Params& prm, bool one_dim = false);

struct Vertex {
    BlockLabel label;
    std::vector<int> offset;  // offset in block, or coordinates for tori
    int grid = -1;            // representative (grid, x, y); grid = -1 for tori
    int x = 0;
    int y = 0;
};

// Directed edge along +e_{gen+1}.
struct Edge {
    int from = 0;
    int to = 0;
    int gen = 0;
};

struct QuotientGraph {
    int dim = 2;
    bool has_params = false;
    Params params;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<LabeledGrid> grids;
    std::vector<std::vector<int>> class_of;  // per grid, cell -> vertex id
    std::vector<int> torus_dims;             // nonempty for tori

    std::size_t size() const { return vertices.size(); }
    int cls(int g, int x, int y) const {
        return class_of[g][static_cast<std::size_t>(y) * grids[g].width + x];
    }
    bool is_torus() const { return !torus_dims.empty(); }
    // Undirected simple adjacency (parallel edges and orientation dropped, loops kept).
    std::vector<std::vector<int>> adjacency() const;
    bool has_loop() const;
    bool unique_generators() const;
};

QuotientGraph quotient(const std::vector<LabeledGrid>& grids, int dim = 2);
QuotientGraph make_torus(const std::vector<int>& dims);
inline QuotientGraph make_torus(int a, int b) { return make_torus(std::vector<int>{a, b}); }
QuotientGraph make_gamma(const Params& prm);
QuotientGraph make_gamma1(const Params& prm);

nlohmann::json to_json(const QuotientGraph& g);

}  // namespace tilekit
