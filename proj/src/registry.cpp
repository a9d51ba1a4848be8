#include <stdexcept>

#include "tilekit/csp.hpp"
#include "tilekit/fixtures.hpp"
#include "tilekit/recttile.hpp"

namespace tilekit {

namespace {

using json = nlohmann::json;

json params_json(const Params& p) { return {p.n, p.p, p.q}; }
Params params_from(const json& j) { return {j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>()}; }

json graph_payload(const TargetGraph& h) { return {{"graph", to_json(h)}}; }

}  // namespace

const std::vector<Fixture>& fixture_list() {
    static const std::vector<Fixture> list{
        {"fig11-four-coloring", "chromatic 4-coloring of the (1,2,3) tile graph", "coloring"},
        {"fig13-k3-weighting", "weighting of K3 negative on odd closed walks", "weighting"},
        {"fig14-clamshell-weighting", "clamshell graph with its weighting", "weighting"},
        {"fig15-petersen-coloring", "Petersen graph with a proper 3-coloring", "coloring"},
        {"fig16-klein-graph", "Klein bottle graph and the walk alpha", "graph"},
        {"fig19-chvatal-witness", "Chvatal graph, odd cycle and order-2 box", "witness"},
        {"fig20-grotzsch-witness", "Grotzsch graph, odd cycle and order-2 box", "witness"},
        {"fig24-edge-coloring", "edge 5-coloring of the (1,2,3) tile graph", "edge-coloring"},
        {"fig25-mono-coloring", "two-coloring of the (1,5,2) tile graph, components of size at most 3", "mono"},
        {"fig27-lattice-tiling", "3x3 and 2x2 squares on the 13x13 torus", "tiling"},
        {"fig28-stretched-tiling", "lattice tiling stretched to 19x13", "tiling"},
        {"fig29-torus-tiling", "3x3 and 2x2 squares on the 17x19 torus", "tiling"},
    };
    return list;
}

const Fixture& find_fixture(const std::string& name) {
    for (const auto& f : fixture_list())
        if (f.name == name) return f;
    throw std::invalid_argument("unknown fixture " + name);
}

json fixture_payload(const std::string& name) {
    find_fixture(name);
    if (name == "fig11-four-coloring") return {{"params", params_json({1, 2, 3})}, {"k", 4}, {"colors", four_coloring_123()}};
    if (name == "fig13-k3-weighting") {
        json j = graph_payload(k3_graph());
        j["weighting"] = k3_weighting();
        j["p"] = {3, 5, 7};
        return j;
    }
    if (name == "fig14-clamshell-weighting") {
        json j = graph_payload(clamshell_graph());
        j["weighting"] = clamshell_weighting();
        j["p"] = {5, 7};
        return j;
    }
    if (name == "fig15-petersen-coloring") {
        json j = graph_payload(petersen_graph());
        j["colors"] = petersen_three_coloring();
        return j;
    }
    if (name == "fig16-klein-graph") {
        json j = graph_payload(klein_graph());
        j["alpha"] = klein_alpha();
        return j;
    }
    if (name == "fig19-chvatal-witness" || name == "fig20-grotzsch-witness") {
        bool c = name == "fig19-chvatal-witness";
        json j = graph_payload(c ? chvatal_graph() : grotzsch_graph());
        j["gamma"] = c ? chvatal_gamma() : grotzsch_gamma();
        j["box"] = (c ? chvatal_box() : grotzsch_box()).to_json();
        return j;
    }
    if (name == "fig24-edge-coloring") return {{"params", params_json({1, 2, 3})}, {"k", 5}, {"half_edges", edge_coloring_123()}};
    if (name == "fig25-mono-coloring") return {{"params", params_json({1, 5, 2})}, {"bound", 3}, {"colors", mono_two_coloring_152()}};
    if (name == "fig27-lattice-tiling") return lattice_tiling_2_3().to_json();
    if (name == "fig28-stretched-tiling") return stretch_tiling(lattice_tiling_2_3(), 0, 1).to_json();
    return torus_17_19_tiling().to_json();
}

bool validate_fixture_payload(const std::string& name, const json& j) {
    const Fixture& f = find_fixture(name);
    try {
        if (f.kind == "coloring" && j.contains("params")) {
            auto g = make_gamma(params_from(j.at("params")));
            return valid_coloring(g, j.at("colors").get<std::vector<int>>(), j.at("k").get<int>());
        }
        if (f.kind == "coloring") {
            auto h = target_from_json(j.at("graph"));
            auto c = j.at("colors").get<std::vector<int>>();
            if (static_cast<int>(c.size()) != h.n) return false;
            for (int v : c)
                if (v < 0 || v > 2) return false;
            for (auto [a, b] : h.edges)
                if (c[a] == c[b]) return false;
            return true;
        }
        if (f.kind == "weighting") {
            auto h = target_from_json(j.at("graph"));
            auto w = j.at("weighting").get<Weighting>();
            if (w.size() != h.edges.size() || !vanishes_on_4cycles(h, w)) return false;
            for (int p : j.at("p").get<std::vector<int>>())
                if (!negative_weight_holds(h, w, p)) return false;
            return true;
        }
        if (f.kind == "graph") {
            auto h = target_from_json(j.at("graph"));
            auto alpha = j.at("alpha").get<ClosedWalk>();
            if (h.n != 25 || h.edges.size() != 50) return false;
            // Every weighting vanishing on 4-cycles is zero on alpha.
            for (const auto& w : weight_nullspace(h))
                if (walk_weight(h, w, alpha) != 0) return false;
            return true;
        }
        if (f.kind == "witness") {
            auto h = target_from_json(j.at("graph"));
            WitnessBox box{j.at("box").get<std::vector<std::vector<int>>>()};
            return verify_order2_witness(h, j.at("gamma").get<ClosedWalk>(), box);
        }
        if (f.kind == "edge-coloring") {
            auto g = make_gamma(params_from(j.at("params")));
            return valid_edge_coloring(g, j.at("half_edges").get<std::vector<std::vector<int>>>(), j.at("k").get<int>());
        }
        if (f.kind == "mono") {
            Params prm = params_from(j.at("params"));
            auto colors = j.at("colors").get<SymbolMap>();
            if (colors.size() != make_gamma(prm).size()) return false;
            return check_mono_bound(prm, colors, j.at("bound").get<int>());
        }
        if (f.kind == "tiling") {
            auto t = RegionTiling::from_json(j);
            if (!validate_rect_tiling(t)) return false;
            if (name == "fig29-torus-tiling") return t.region.torus && t.region.w == 17 && t.region.h == 19;
            if (name == "fig28-stretched-tiling") return t.region.torus && t.region.w == 19 && t.region.h == 13;
            return t.region.torus && t.region.w == 13 && t.region.h == 13;
        }
    } catch (const std::exception&) {
        return false;
    }
    return false;
}

bool validate_fixture(const std::string& name) { return validate_fixture_payload(name, fixture_payload(name)); }

}  // namespace tilekit
