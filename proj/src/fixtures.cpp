#include "tilekit/fixtures.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tilekit {

CellMatrix parse_matrix(const std::string& text) {
    CellMatrix m;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream cells(line);
        std::string tok;
        std::vector<std::vector<int>> row;
        while (cells >> tok) {
            std::vector<int> t;
            std::istringstream parts(tok);
            std::string part;
            while (std::getline(parts, part, '/')) t.push_back(std::stoi(part));
            row.push_back(std::move(t));
        }
        if (!row.empty()) m.push_back(std::move(row));
    }
    for (const auto& r : m)
        if (r.size() != m.front().size()) throw std::invalid_argument("ragged matrix");
    return m;
}

namespace {

CellMatrix rotate(const CellMatrix& m) {
    int h = static_cast<int>(m.size()), w = static_cast<int>(m[0].size());
    CellMatrix r(w, std::vector<std::vector<int>>(h));
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) r[j][h - 1 - i] = m[i][j];
    return r;
}

CellMatrix mirror(const CellMatrix& m) {
    CellMatrix r = m;
    for (auto& row : r) std::reverse(row.begin(), row.end());
    return r;
}

std::vector<CellMatrix> images(const CellMatrix& m, bool all) {
    std::vector<CellMatrix> out{m};
    if (!all) return out;
    CellMatrix cur = m;
    for (int i = 0; i < 3; ++i) out.push_back(cur = rotate(cur));
    cur = mirror(m);
    out.push_back(cur);
    for (int i = 0; i < 3; ++i) out.push_back(cur = rotate(cur));
    return out;
}

// Value of matrix m at grid cell (x, y), with y = 0 the bottom row.
const std::vector<int>& cell(const CellMatrix& m, int x, int y) { return m[m.size() - 1 - y][x]; }

using Slots = std::vector<std::optional<std::vector<int>>>;

bool search_interior(const TileColoringSpec& spec, const QuotientGraph& g, int gi, Slots& val) {
    const LabeledGrid& grid = g.grids[gi];
    std::vector<int> cells(grid.cells.size(), -1), free;
    for (int y = grid.height - 1; y >= 0; --y)
        for (int x = 0; x < grid.width; ++x) {
            int i = y * grid.width + x;
            if (grid.at(x, y).label.kind == BlockKind::Interior) free.push_back(i);
            else cells[i] = val[g.cls(gi, x, y)]->at(0);
        }
    std::function<bool(std::size_t)> dfs = [&](std::size_t k) {
        if (!spec.tile_ok(grid, cells)) return false;
        if (k == free.size()) return true;
        for (int a = 0; a < spec.search_alphabet; ++a) {
            cells[free[k]] = a;
            if (dfs(k + 1)) return true;
        }
        cells[free[k]] = -1;
        return false;
    };
    if (!dfs(0)) return false;
    for (int i : free) val[g.cls(gi, i % grid.width, i / grid.width)] = std::vector<int>{cells[i]};
    return true;
}

}  // namespace

std::vector<std::vector<int>> build_tile_assignment(const TileColoringSpec& spec) {
    QuotientGraph g = make_gamma(spec.params);
    Slots val(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        const Vertex& vx = g.vertices[v];
        if (vx.label.kind == BlockKind::Interior) continue;
        auto it = spec.blocks.find(vx.label.kind);
        if (it == spec.blocks.end()) throw std::invalid_argument("missing block " + to_string(vx.label));
        auto dims = block_dims(vx.label.kind, spec.params);
        const CellMatrix& b = it->second;
        if (static_cast<int>(b.size()) != dims[1] || static_cast<int>(b[0].size()) != dims[0])
            throw std::invalid_argument("block matrix has wrong size for " + to_string(vx.label));
        val[v] = cell(b, vx.offset[0], vx.offset[1]);
    }
    for (std::size_t gi = 0; gi < g.grids.size(); ++gi) {
        const LabeledGrid& grid = g.grids[gi];
        bool placed = false;
        for (const CellMatrix& base : spec.tiles) {
            for (const CellMatrix& m : images(base, spec.use_symmetries)) {
                if (static_cast<int>(m.size()) != grid.height || static_cast<int>(m[0].size()) != grid.width) continue;
                bool ok = true;
                for (int y = 0; y < grid.height && ok; ++y)
                    for (int x = 0; x < grid.width && ok; ++x) {
                        const auto& slot = val[g.cls(static_cast<int>(gi), x, y)];
                        if (grid.at(x, y).label.kind != BlockKind::Interior) ok = slot && *slot == cell(m, x, y);
                    }
                if (!ok) continue;
                for (int y = 0; y < grid.height; ++y)
                    for (int x = 0; x < grid.width; ++x)
                        if (grid.at(x, y).label.kind == BlockKind::Interior)
                            val[g.cls(static_cast<int>(gi), x, y)] = cell(m, x, y);
                placed = true;
                break;
            }
            if (placed) break;
        }
        if (!placed && spec.search_alphabet > 0) placed = search_interior(spec, g, static_cast<int>(gi), val);
        if (!placed) throw std::invalid_argument("no transcribed matrix fits tile " + tile_name(grid.index));
    }
    std::vector<std::vector<int>> out;
    for (auto& v : val) out.push_back(*v);
    return out;
}

namespace {

SymbolMap flatten(const std::vector<std::vector<int>>& a) {
    SymbolMap f;
    for (const auto& t : a) f.push_back(t.at(0));
    return f;
}

}  // namespace

namespace {

// Monochromatic components among assigned cells: none larger than bound, none
// larger than 2 once it meets a labeled cell, none mixing labeled and interior.
bool partial_mono_ok(const LabeledGrid& grid, const std::vector<int>& cells, int bound) {
    int w = grid.width, h = grid.height;
    std::vector<char> seen(cells.size(), 0);
    auto labeled = [&](int i) { return grid.cells[i].label.kind != BlockKind::Interior; };
    for (int s = 0; s < w * h; ++s) {
        if (cells[s] < 0 || seen[s]) continue;
        std::vector<int> stack{s};
        seen[s] = 1;
        int size = 0;
        bool touches = false;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            ++size;
            touches |= labeled(i);
            int x = i % w, y = i / w;
            const int dx[] = {1, -1, 0, 0}, dy[] = {0, 0, 1, -1};
            for (int d = 0; d < 4; ++d) {
                int nx = x + dx[d], ny = y + dy[d];
                if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                int j = ny * w + nx;
                if (cells[j] != cells[i]) continue;
                if (labeled(i) != labeled(j)) return false;
                if (!seen[j]) {
                    seen[j] = 1;
                    stack.push_back(j);
                }
            }
        }
        if (size > bound || (touches && size > 2)) return false;
    }
    return true;
}

}  // namespace

SymbolMap four_coloring_123() {
    TileColoringSpec s;
    s.params = {1, 2, 3};
    s.blocks = {{BlockKind::Cross, parse_matrix("3")},
                {BlockKind::A, parse_matrix("0")},
                {BlockKind::B, parse_matrix("0\n2")},
                {BlockKind::C, parse_matrix("0")},
                {BlockKind::D, parse_matrix("0 2")}};
    s.tiles = {parse_matrix("3 0 3\n0 3 0\n3 0 3"),
               parse_matrix("3 0 2 3\n0 2 3 0\n3 0 2 3"),
               parse_matrix("3 0 2 3\n0 2 3 0\n2 3 0 2\n3 0 2 3"),
               parse_matrix("3 0 3 0 3 0 3\n0 3 0 2 1 3 0\n3 0 2 3 0 2 3"),
               parse_matrix("3 0 2 3 0 3\n0 3 0 2 3 0\n3 0 3 0 2 3")};
    return flatten(build_tile_assignment(s));
}

std::vector<std::vector<int>> edge_coloring_123() {
    TileColoringSpec s;
    s.params = {1, 2, 3};
    s.use_symmetries = false;
    s.blocks = {{BlockKind::Cross, parse_matrix("1/3/4/2")},
                {BlockKind::A, parse_matrix("1/4/3/2")},
                {BlockKind::B, parse_matrix("1/5/3/2\n1/4/5/2")},
                {BlockKind::C, parse_matrix("2/3/4/1")},
                {BlockKind::D, parse_matrix("2/3/4/5 5/3/4/1")}};
    s.tiles = {
        parse_matrix("1/3/4/2 2/3/4/1 1/3/4/2\n"
                     "1/4/3/2 2/4/3/1 1/4/3/2\n"
                     "1/3/4/2 2/3/4/1 1/3/4/2"),
        parse_matrix("1/3/4/2 2/3/4/5 5/3/4/1 1/3/4/2\n"
                     "1/4/3/2 2/4/3/5 5/4/3/1 1/4/3/2\n"
                     "1/3/4/2 2/3/4/5 5/3/4/1 1/3/4/2"),
        parse_matrix("1/3/4/2 2/3/4/1 1/3/4/2\n"
                     "1/5/3/2 2/5/3/1 1/5/3/2\n"
                     "1/4/5/2 2/4/5/1 1/4/5/2\n"
                     "1/3/4/2 2/3/4/1 1/3/4/2"),
        parse_matrix("1/3/4/2 2/3/4/5 5/3/4/1 1/3/4/2\n"
                     "1/5/3/2 2/1/3/4 4/2/3/1 1/5/3/2\n"
                     "1/4/5/2 2/4/1/3 3/4/2/1 1/4/5/2\n"
                     "1/3/4/2 2/3/4/5 5/3/4/1 1/3/4/2"),
        parse_matrix("1/3/4/2 2/3/4/1 1/3/4/2\n"
                     "1/4/3/2 2/4/3/1 1/5/3/2\n"
                     "1/3/4/2 2/3/4/1 1/4/5/2\n"
                     "1/5/3/2 2/5/3/1 1/3/4/2\n"
                     "1/4/5/2 2/4/5/1 1/4/3/2\n"
                     "1/3/4/2 2/3/4/1 1/3/4/2"),
        parse_matrix("1/3/4/2 2/3/4/1 1/3/4/2\n"
                     "1/5/3/2 2/5/3/1 1/4/3/2\n"
                     "1/4/5/2 2/4/5/1 1/3/4/2\n"
                     "1/3/4/2 2/3/4/1 1/5/3/2\n"
                     "1/4/3/2 2/4/3/1 1/4/5/2\n"
                     "1/3/4/2 2/3/4/1 1/3/4/2"),
        parse_matrix("1/3/4/2 2/3/4/1 1/3/4/2 2/3/4/5 5/3/4/1 1/3/4/2\n"
                     "1/4/3/2 2/4/3/1 1/4/3/2 2/4/3/5 5/4/3/1 1/4/3/2\n"
                     "1/3/4/2 2/3/4/5 5/3/4/1 1/3/4/2 2/3/4/1 1/3/4/2"),
        parse_matrix("1/3/4/2 2/3/4/5 5/3/4/1 1/3/4/2 2/3/4/1 1/3/4/2\n"
                     "1/4/3/2 2/4/3/5 5/4/3/1 1/4/3/2 2/4/3/1 1/4/3/2\n"
                     "1/3/4/2 2/3/4/1 1/3/4/2 2/3/4/5 5/3/4/1 1/3/4/2"),
        parse_matrix("1/3/4/2 2/3/4/1 1/3/4/2\n"
                     "1/5/3/2 2/4/3/1 1/4/3/2\n"
                     "1/4/5/2 2/3/4/1 1/3/4/2\n"
                     "1/3/4/2 2/4/3/1 1/4/3/2\n"
                     "1/5/3/2 2/3/4/1 1/3/4/2\n"
                     "1/4/5/2 2/4/3/1 1/4/3/2\n"
                     "1/3/4/2 2/3/4/1 1/3/4/2"),
        parse_matrix("1/3/4/2 2/3/4/1 1/3/4/2\n"
                     "1/4/3/2 2/4/3/1 1/5/3/2\n"
                     "1/3/4/2 2/3/4/1 1/4/5/2\n"
                     "1/4/3/2 2/4/3/1 1/3/4/2\n"
                     "1/3/4/2 2/3/4/1 1/5/3/2\n"
                     "1/4/3/2 2/4/3/1 1/4/5/2\n"
                     "1/3/4/2 2/3/4/1 1/3/4/2"),
        parse_matrix("1/3/4/2 2/3/4/5 5/3/4/1 1/3/4/2 2/3/4/5 5/3/4/1 1/3/4/2\n"
                     "1/4/3/2 2/4/3/1 1/4/3/2 2/4/3/1 1/4/3/2 2/4/3/1 1/4/3/2\n"
                     "1/3/4/2 2/3/4/1 1/3/4/2 2/3/4/1 1/3/4/2 2/3/4/1 1/3/4/2"),
        parse_matrix("1/3/4/2 2/3/4/1 1/3/4/2 2/3/4/1 1/3/4/2 2/3/4/1 1/3/4/2\n"
                     "1/4/3/2 2/4/3/1 1/4/3/2 2/4/3/1 1/4/3/2 2/4/3/1 1/4/3/2\n"
                     "1/3/4/2 2/3/4/5 5/3/4/1 1/3/4/2 2/3/4/5 5/3/4/1 1/3/4/2"),
    };
    // Transcribed as left/top/bottom/right, colours 1..5.
    std::vector<std::vector<int>> out;
    for (const auto& t : build_tile_assignment(s)) out.push_back({t[3] - 1, t[0] - 1, t[2] - 1, t[1] - 1});
    return out;
}

SymbolMap mono_two_coloring_152() {
    TileColoringSpec s;
    s.params = {1, 5, 2};
    s.blocks = {{BlockKind::Cross, parse_matrix("8")},
                {BlockKind::A, parse_matrix("9\n8\n9\n9")},
                {BlockKind::B, parse_matrix("9")},
                {BlockKind::C, parse_matrix("9 8 9 9")},
                {BlockKind::D, parse_matrix("9")}};
    s.tiles = {parse_matrix("8 9 8 9 9 8\n9 8 9 8 8 9\n8 9 9 8 9 8\n9 8 8 9 8 9\n9 8 9 8 8 9\n8 9 8 9 9 8"),
               parse_matrix("8 9 8 9 9 8\n9 8 9 8 8 9\n8 9 8 9 9 8"),
               parse_matrix("8 9 8\n9 8 9\n8 9 8"),
               parse_matrix("8 9 8 9 9 8 9 8 9 9 8\n"
                            "9 8 9 8 8 9 8 9 8 8 9\n"
                            "8 9 8 9 9 8 9 8 9 9 8\n"
                            "9 8 9 8 8 9 8 9 8 8 9\n"
                            "9 8 9 8 9 8 9 8 9 8 9\n"
                            "8 9 8 9 8 9 8 9 8 9 8"),
               parse_matrix("8 9 8 9 9 8 9 8\n"
                            "9 8 9 8 8 9 8 9\n"
                            "8 9 8 9 9 8 9 8\n"
                            "9 8 9 8 8 9 8 9\n"
                            "9 8 9 8 9 8 8 9\n"
                            "8 9 8 9 8 9 9 8")};
    s.search_alphabet = 10;
    s.tile_ok = [](const LabeledGrid& grid, const std::vector<int>& cells) {
        for (int v : cells)
            if (v >= 0 && v != 8 && v != 9) return false;
        return partial_mono_ok(grid, cells, 3);
    };
    SymbolMap f = flatten(build_tile_assignment(s));
    for (int& v : f) v = v == 8 ? 1 : 0;
    return f;
}

}  // namespace tilekit

namespace tilekit {

TargetGraph k3_graph() { return TargetGraph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}); }
Weighting k3_weighting() { return {0, 0, 1}; }

TargetGraph clamshell_graph() {
    // 0 = x, 1 = x', 2..6 = v0..v4, 7..11 = u0..u4
    std::vector<std::pair<int, int>> e{{0, 1}};
    for (int i = 0; i < 5; ++i) e.emplace_back(0, 7 + i);
    for (int i = 0; i < 5; ++i) e.emplace_back(1, 7 + i);
    for (int i = 0; i < 5; ++i) e.emplace_back(2 + i, 7 + i);
    e.emplace_back(0, 2);
    for (int i = 0; i < 4; ++i) e.emplace_back(2 + i, 3 + i);
    e.emplace_back(6, 1);
    std::vector<std::string> names{"x", "x'"};
    for (int i = 0; i < 5; ++i) names.push_back("v" + std::to_string(i));
    for (int i = 0; i < 5; ++i) names.push_back("u" + std::to_string(i));
    return TargetGraph::from_edges(12, e, names);
}

Weighting clamshell_weighting() {
    Weighting w{-1};
    for (int side = 0; side < 2; ++side)
        for (int i = 0; i < 5; ++i) w.push_back(i == 0 ? 1 : -1);
    for (int i = 0; i < 5; ++i) w.push_back(1);
    for (long long x : {-1, -1, -1, 1, 1, 1}) w.push_back(x);
    return w;
}

TargetGraph klein_graph() {
    std::vector<std::string> names{"x", "c1", "c2", "c3", "c4", "a1", "a2", "a3", "a4"};
    std::vector<std::vector<int>> id(6, std::vector<int>(6, -1));
    for (int j = 0; j < 6; ++j) id[0][j] = id[5][j] = (j == 0 || j == 5) ? 0 : j;
    for (int i = 1; i <= 4; ++i) {
        id[i][0] = 4 + i;
        id[i][5] = 9 - i;
    }
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            id[i][j] = static_cast<int>(names.size());
            names.push_back("i" + std::to_string(i) + std::to_string(j));
        }
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> e;
    auto add = [&](int a, int b) {
        if (seen.insert({std::min(a, b), std::max(a, b)}).second) e.emplace_back(a, b);
    };
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            if (j + 1 < 6) add(id[i][j], id[i][j + 1]);
            if (i + 1 < 6) add(id[i][j], id[i + 1][j]);
        }
    return TargetGraph::from_edges(static_cast<int>(names.size()), e, names);
}

ClosedWalk klein_alpha() { return {0, 5, 6, 7, 8, 0}; }

std::vector<int> petersen_three_coloring() { return {0, 1, 2, 0, 1, 1, 0, 0, 2, 2}; }

TargetGraph chvatal_graph() {
    return TargetGraph::from_edges(12, {{0, 1}, {0, 3}, {0, 4}, {0, 11}, {1, 2}, {1, 5}, {1, 6}, {2, 3},
                                        {2, 7}, {2, 8}, {3, 9}, {3, 10}, {4, 5}, {4, 7}, {4, 8}, {5, 9},
                                        {5, 10}, {6, 7}, {6, 9}, {6, 10}, {7, 11}, {8, 9}, {8, 11}, {10, 11}});
}
ClosedWalk chvatal_gamma() { return {0, 11, 7, 2, 1, 0}; }
WitnessBox chvatal_box() {
    return {{{0, 11, 7, 2, 1, 0}, {3, 10, 6, 1, 0, 3}, {0, 3, 9, 5, 4, 0}, {3, 2, 8, 4, 0, 3}, {0, 1, 2, 7, 11, 0}}};
}

TargetGraph grotzsch_graph() {
    return TargetGraph::from_edges(11, {{0, 1}, {0, 4}, {0, 6}, {0, 9}, {1, 2}, {1, 5}, {1, 7}, {2, 3}, {2, 6}, {2, 8},
                                        {3, 4}, {3, 7}, {3, 9}, {4, 5}, {4, 8}, {5, 10}, {6, 10}, {7, 10}, {8, 10},
                                        {9, 10}});
}
ClosedWalk grotzsch_gamma() { return {0, 1, 2, 3, 9, 0}; }
WitnessBox grotzsch_box() {
    return {{{0, 1, 2, 3, 9, 0}, {6, 2, 1, 7, 10, 6}, {0, 1, 5, 10, 6, 0}, {6, 0, 4, 8, 2, 6}, {0, 9, 3, 2, 1, 0}}};
}

std::vector<ExampleGraph> example_graphs() {
    return {{"K3", k3_graph()},           {"petersen", petersen_graph()}, {"clamshell", clamshell_graph()},
            {"klein", klein_graph()},     {"chvatal", chvatal_graph()},   {"grotzsch", grotzsch_graph()},
            {"K4", complete_graph(4)}};
}

}  // namespace tilekit

namespace tilekit {

RegionTiling torus_17_19_tiling() {
    static const int large[][2] = {{5, 0},  {13, 1}, {8, 2},  {3, 3},   {11, 4}, {6, 5},  {1, 6},
                                   {9, 7},  {4, 8},  {7, 10}, {2, 11},  {14, 12}, {7, 13}, {0, 14},
                                   {12, 15}, {7, 16}, {15, 17}, {16, 9}, {10, 18}};
    static const int small[][2] = {{1, 0},   {8, 0},   {3, 1},   {16, 1},  {1, 2},   {11, 2},  {16, 3},  {6, 3},
                                   {1, 4},   {14, 4},  {9, 5},   {16, 5},  {4, 6},   {14, 6},  {12, 7},  {16, 7},
                                   {7, 8},   {14, 8},  {2, 9},   {12, 9},  {10, 10}, {14, 10}, {5, 11},  {12, 11},
                                   {0, 12},  {10, 12}, {5, 13},  {12, 13}, {3, 14},  {10, 14}, {5, 15},  {15, 15},
                                   {3, 16},  {10, 16}, {1, 17},  {5, 17},  {3, 18},  {13, 18}};
    RegionTiling t;
    t.region = Region::torus_of(17, 19);
    t.tiles = {{3, 3}, {2, 2}};
    for (const auto& p : large) t.placements.push_back({0, p[0], p[1]});
    for (const auto& p : small) t.placements.push_back({1, p[0], p[1]});
    return t;
}

}  // namespace tilekit
