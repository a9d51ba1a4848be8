#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "tilekit/csp.hpp"
#include "tilekit/grid.hpp"
#include "tilekit/homotopy.hpp"
#include "tilekit/recttile.hpp"

namespace tilekit {

// Rows listed top first; each cell is a tuple (length 1 for plain symbols).
using CellMatrix = std::vector<std::vector<std::vector<int>>>;

CellMatrix parse_matrix(const std::string& text);

struct TileColoringSpec {
    Params params;
    std::map<BlockKind, CellMatrix> blocks;
    std::vector<CellMatrix> tiles;
    bool use_symmetries = true;
    // Fallback for tiles no listed matrix fits: depth-first search over interior
    // cells with values 0..search_alphabet-1, pruned by tile_ok on partial grids
    // (unset cells are -1, indexed y*width+x).
    int search_alphabet = 0;
    std::function<bool(const LabeledGrid&, const std::vector<int>&)> tile_ok;
};

// Per vertex class of make_gamma(params): the tuple assigned by the spec.
std::vector<std::vector<int>> build_tile_assignment(const TileColoringSpec& spec);

SymbolMap four_coloring_123();               // chromatic 4-coloring of the (1,2,3) graph
std::vector<std::vector<int>> edge_coloring_123();  // half-edge colours, (+e1,-e1,+e2,-e2), 0-based
SymbolMap mono_two_coloring_152();           // 1 = black, 0 = white

// Target graphs of the homomorphism examples.
TargetGraph k3_graph();
Weighting k3_weighting();
TargetGraph clamshell_graph();  // x, x', v0..v4, u0..u4
Weighting clamshell_weighting();
TargetGraph klein_graph();      // x, c1..c4, a1..a4, then 16 unlabeled vertices
ClosedWalk klein_alpha();       // (x, a1, a2, a3, a4, x)
std::vector<int> petersen_three_coloring();
TargetGraph chvatal_graph();
ClosedWalk chvatal_gamma();
WitnessBox chvatal_box();
TargetGraph grotzsch_graph();
ClosedWalk grotzsch_gamma();
WitnessBox grotzsch_box();

// 3x3 and 2x2 tiles on the 17x19 torus.
RegionTiling torus_17_19_tiling();

struct ExampleGraph {
    std::string name;
    TargetGraph graph;
};
// K3, Petersen, clamshell, Klein bottle, Chvatal, Grotzsch, K4.
std::vector<ExampleGraph> example_graphs();

struct Fixture {
    std::string name;
    std::string source;
    std::string kind;
};

const std::vector<Fixture>& fixture_list();
const Fixture& find_fixture(const std::string& name);  // throws on unknown names
nlohmann::json fixture_payload(const std::string& name);
// Runs the fixture's checker on a payload; malformed payloads fail.
bool validate_fixture_payload(const std::string& name, const nlohmann::json& payload);
bool validate_fixture(const std::string& name);

}  // namespace tilekit
