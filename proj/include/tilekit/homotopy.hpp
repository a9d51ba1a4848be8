#pragma once

#include <array>
#include <optional>
#include <vector>

#include <json.hpp>

#include "tilekit/csp.hpp"

namespace tilekit {

// One integer per edge of the target graph, oriented edges[i].first -> second.
// Traversing an edge backwards contributes the negated weight.
using Weighting = std::vector<long long>;

// Vertex sequence v0, v1, ..., v0 (first vertex repeated at the end).
using ClosedWalk = std::vector<int>;

long long walk_weight(const TargetGraph& h, const Weighting& w, const ClosedWalk& walk);

// Non-backtracking closed 4-walks (v0 != v2, v1 != v3), one per rotation/reflection class.
std::vector<std::array<int, 4>> nontrivial_4cycles(const TargetGraph& h);

bool vanishes_on_4cycles(const TargetGraph& h, const Weighting& w);

// Primitive integer basis of the weightings vanishing on every nontrivial 4-cycle.
std::vector<Weighting> weight_nullspace(const TargetGraph& h);
// Same space modulo coboundaries: the weightings that are also zero on a
// BFS spanning forest. Closed-walk weights are unchanged by coboundaries.
std::vector<Weighting> reduced_weight_nullspace(const TargetGraph& h);

// True iff no closed walk of length p has weight divisible by p. Throws if w
// does not vanish on the nontrivial 4-cycles.
bool negative_weight_holds(const TargetGraph& h, const Weighting& w, int p);
// Slow oracle: enumerate every closed walk of length p.
bool negative_weight_holds_enum(const TargetGraph& h, const Weighting& w, int p);

// Integer combinations (coefficients in [-bound, bound]) of the reduced basis,
// tried in a fixed order; the first that passes for every p is returned.
std::optional<Weighting> negative_weight_search(const TargetGraph& h, const std::vector<int>& ps, int coeff_bound);
inline std::optional<Weighting> negative_weight_search(const TargetGraph& h, int p, int coeff_bound) {
    return negative_weight_search(h, std::vector<int>{p}, coeff_bound);
}

bool contains_k4(const TargetGraph& h);
bool three_colorable(const TargetGraph& h);
bool simple_negative(const TargetGraph& h);

// Rows listed top first.
struct WitnessBox {
    std::vector<std::vector<int>> cells;

    int rows() const { return static_cast<int>(cells.size()); }
    int cols() const { return cells.empty() ? 0 : static_cast<int>(cells[0].size()); }
    nlohmann::json to_json() const { return cells; }
};

bool verify_order2_witness(const TargetGraph& h, const ClosedWalk& gamma, const WitnessBox& box);
std::optional<WitnessBox> search_order2_witness(const TargetGraph& h, const ClosedWalk& gamma, int max_rows,
                                                int max_cols);

// Shortest odd closed walk through the least possible start vertex, if any.
std::optional<ClosedWalk> shortest_odd_cycle(const TargetGraph& h);

}  // namespace tilekit
