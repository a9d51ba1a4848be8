#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tilekit/grid.hpp"
#include "tilekit/sft.hpp"

namespace tilekit {

struct TargetGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // as given; orientation u -> v
    std::vector<std::vector<int>> adj;
    std::vector<std::string> names;

    static TargetGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                  std::vector<std::string> names = {});
    bool adjacent(int a, int b) const;
    int index_of(const std::string& name) const;
    std::string name(int v) const;
};

TargetGraph complete_graph(int k);
TargetGraph cycle_graph(int k);
TargetGraph petersen_graph();
TargetGraph target_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TargetGraph& h);

enum class Verdict { Sat, Unsat, Unknown };
std::string to_string(Verdict v);

struct Certificate {
    std::string kind;
    std::string digest;
    Verdict verdict = Verdict::Unknown;
    nlohmann::json witness;
    std::uint64_t nodes = 0;
    int depth = 0;
    bool deterministic = true;

    bool sat() const { return verdict == Verdict::Sat; }
    bool unsat() const { return verdict == Verdict::Unsat; }
    nlohmann::json to_json() const;
    static Certificate from_json(const nlohmann::json& j);
};

struct Instance {
    std::string kind;  // coloring, edge-coloring, hom, matching, sft-map
    QuotientGraph graph;
    int k = 0;
    TargetGraph target;
    SftSpec sft;

    nlohmann::json to_json() const;
    std::string digest() const;
};

struct SolveOptions {
    std::uint64_t budget = 0;  // node limit, 0 = unlimited
};

Certificate solve(const Instance& inst, const SolveOptions& opt = {});
Certificate solve_coloring(const QuotientGraph& g, int k, const SolveOptions& opt = {});
Certificate solve_edge_coloring(const QuotientGraph& g, int k, const SolveOptions& opt = {});
Certificate solve_hom(const QuotientGraph& g, const TargetGraph& h, const SolveOptions& opt = {});
Certificate solve_matching(const QuotientGraph& g, const SolveOptions& opt = {});
Certificate solve_sft_map(const QuotientGraph& g, const SftSpec& s, const SolveOptions& opt = {});

// Independent witness checks (linear scans).
bool valid_coloring(const QuotientGraph& g, const std::vector<int>& f, int k);
// Per vertex: colours of the 2d half-edges, ordered (+e1, -e1, +e2, -e2, ...).
bool valid_edge_coloring(const QuotientGraph& g, const std::vector<std::vector<int>>& f, int k);
bool valid_hom(const QuotientGraph& g, const std::vector<int>& f, const TargetGraph& h);
// Per vertex: 2*axis for a partner along +e_axis, 2*axis+1 along -e_axis.
bool valid_matching(const QuotientGraph& g, const std::vector<int>& f);

bool verify_certificate(const Certificate& c, const Instance& inst);

bool check_mono_bound(const Params& prm, const SymbolMap& psi, int bound);

std::string to_dimacs(const Instance& inst);

// Block-matrix rendering of a symbol map on the twelve tiles, top row first.
std::string render_tiles(const QuotientGraph& g, const SymbolMap& f);

}  // namespace tilekit
