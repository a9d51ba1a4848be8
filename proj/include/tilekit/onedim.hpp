#pragma once

#include <vector>

#include <json.hpp>

#include "tilekit/grid.hpp"
#include "tilekit/sft.hpp"

namespace tilekit {

using Digraph = std::vector<std::vector<int>>;  // out-neighbours

// Allowed length-ell windows of a 1-D SFT; u -> v when the last ell-1
// symbols of u are the first ell-1 symbols of v.
struct WindowDigraph {
    int b = 0;
    int ell = 1;
    std::vector<std::vector<int>> windows;  // lexicographic
    Digraph out;

    std::size_t size() const { return windows.size(); }
    std::size_t edge_count() const;
};

struct DirectedComponent {
    std::vector<int> vertices;  // sorted
    int period = 0;             // 0 for acyclic singletons
};

// Patterns shorter than ell are replaced by every length-ell word containing them.
std::vector<std::vector<int>> forbidden_windows(const SftSpec& s, int ell);
WindowDigraph build_lambda(const SftSpec& s);

// Strong components, ordered by least vertex. Components with at least one
// internal edge get their period; the others are acyclic singletons.
std::vector<DirectedComponent> directed_components(const Digraph& g);
inline std::vector<DirectedComponent> directed_components(const WindowDigraph& l) { return directed_components(l.out); }
int component_period(const DirectedComponent& c, const Digraph& g);
inline int component_period(const DirectedComponent& c, const WindowDigraph& l) { return component_period(c, l.out); }

// Slow oracle: lengths of all simple directed cycles.
std::vector<int> simple_cycle_lengths(const Digraph& g);

struct OnedimResult {
    bool answer = false;
    int component = -1;  // index into directed_components
    int period = 0;
    Params params;       // (n, p, q) of the witness graph
    std::vector<int> word_p, word_q;  // symbol words of the two closed walks
    SymbolMap witness;   // on make_gamma1(params)
    std::vector<DirectedComponent> components;
    std::vector<std::vector<int>> windows;  // vertices of the window digraph

    nlohmann::json to_json() const;
};

OnedimResult decide_onedim(const SftSpec& s);

}  // namespace tilekit
