#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "tilekit/acceptance.hpp"
#include "tilekit/csp.hpp"
#include "tilekit/fixtures.hpp"
#include "tilekit/homotopy.hpp"
#include "tilekit/hyper.hpp"
#include "tilekit/onedim.hpp"
#include "tilekit/recttile.hpp"
#include "tilekit/tiler12.hpp"

using namespace tilekit;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

// Exit codes: 0 SAT/true, 1 UNSAT/false, 2 error/unknown.
constexpr int kTrue = 0, kFalse = 1, kError = 2;

struct Global {
    bool json = false;
    bool ascii = false;
    bool seedless = false;
    std::uint64_t budget = 0;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    auto j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw UsageError(path + ": malformed JSON");
    return j;
}

fs::path data_dir() {
    if (const char* d = std::getenv("TILEKIT_DATA")) return d;
    return TILEKIT_DATA_DIR;
}

// A JSON file, a file under presets/, or a built-in preset name.
SftSpec load_sft(const std::string& arg, int dim) {
    if (fs::is_regular_file(arg)) return sft_from_json(read_json(arg));
    fs::path p = data_dir() / "presets" / (arg + ".json");
    if (fs::is_regular_file(p)) return sft_from_json(read_json(p.string()));
    return preset(arg, dim);
}

// A JSON file (a bare graph or a payload with a "graph" key), one of the
// example graphs, or K<k>, C<k>, petersen.
TargetGraph load_graph(const std::string& arg) {
    if (fs::is_regular_file(arg)) {
        json j = read_json(arg);
        return target_from_json(j.contains("graph") ? j.at("graph") : j);
    }
    for (const auto& ex : example_graphs())
        if (ex.name == arg) return ex.graph;
    return target_from_json(json(arg));
}

std::vector<int> load_ints(const std::string& path, const char* key) {
    json j = read_json(path);
    if (j.is_object()) j = j.at(key);
    return j.get<std::vector<int>>();
}

Params to_params(const std::vector<int>& v) {
    if (v.size() != 3) throw UsageError("expected three integers n p q");
    Params p{v[0], v[1], v[2]};
    p.check();
    return p;
}

// Graph selection shared by solve and verify.
struct GraphArgs {
    std::vector<int> gamma, gamma1, torus;

    void add(CLI::App* c) {
        c->add_option("--gamma", gamma, "tile graph n p q")->expected(3);
        c->add_option("--gamma1", gamma1, "one-dimensional tile graph n p q")->expected(3);
        c->add_option("--torus", torus, "torus side lengths")->expected(1, 8);
    }
    QuotientGraph build() const {
        int given = !gamma.empty() + !gamma1.empty() + !torus.empty();
        if (given != 1) throw UsageError("give exactly one of --gamma, --gamma1, --torus");
        if (!gamma.empty()) return make_gamma(to_params(gamma));
        if (!gamma1.empty()) return make_gamma1(to_params(gamma1));
        return make_torus(torus);
    }
};

int verdict_code(Verdict v) { return v == Verdict::Sat ? kTrue : v == Verdict::Unsat ? kFalse : kError; }

int emit_bool(const Global& g, bool ok, json body, const std::string& text) {
    if (g.json) {
        body["result"] = ok;
        std::cout << body.dump(2) << '\n';
    } else {
        std::cout << (ok ? "true" : "false") << (text.empty() ? "" : "  " + text) << '\n';
    }
    return ok ? kTrue : kFalse;
}

int emit_certificate(const Global& g, const Certificate& c, const QuotientGraph& graph) {
    if (g.json) {
        std::cout << c.to_json().dump(2) << '\n';
    } else {
        std::cout << to_string(c.verdict) << "  " << c.kind << "  nodes " << c.nodes << "  digest " << c.digest << '\n';
        if (g.ascii && c.sat() && graph.has_params && graph.dim == 2) {
            for (const char* key : {"colors", "symbols"})
                if (c.witness.contains(key)) std::cout << render_tiles(graph, c.witness.at(key).get<std::vector<int>>());
        }
    }
    return verdict_code(c.verdict);
}

std::string walk_string(const ClosedWalk& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tilekit: finite combinatorics of tile graphs, subshifts and tilings"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_flag("--ascii", g.ascii, "include ASCII renderings");
    app.add_flag("--seedless", g.seedless, "reject any option that needs a random seed");
    auto* budget_opt = app.add_option("--budget", g.budget, "search node limit, 0 for none");

    std::function<int()> action;
    auto on = [&](CLI::App* c, std::function<int()> f) { c->callback([&action, f] { action = f; }); };

    // gamma
    auto* gamma = app.add_subcommand("gamma", "tile graphs")->require_subcommand(1);
    std::vector<int> nq;
    bool one_dim = false;
    for (const char* name : {"build", "info"}) {
        auto* c = gamma->add_subcommand(name, name == std::string("build") ? "print the quotient graph" : "vertex and edge counts");
        c->add_option("params", nq, "n p q")->expected(3)->required();
        c->add_flag("--one-dim", one_dim, "one-dimensional variant");
        bool build = name == std::string("build");
        on(c, [&, build] {
            Params prm = to_params(nq);
            auto q = one_dim ? make_gamma1(prm) : make_gamma(prm);
            if (build) {
                std::cout << to_json(q).dump(g.json ? 2 : -1) << '\n';
                return kTrue;
            }
            static const char* kinds[] = {"cross", "a", "b", "c", "d", "interior"};
            std::map<std::string, int> per;
            for (const auto& v : q.vertices) ++per[kinds[static_cast<int>(v.label.kind)]];
            json j{{"vertices", q.size()}, {"edges", q.edges.size()}, {"grids", q.grids.size()}, {"by_block", per}};
            if (g.json) std::cout << j.dump(2) << '\n';
            else std::cout << "vertices " << q.size() << "  edges " << q.edges.size() << "  grids " << q.grids.size() << '\n';
            if (g.ascii && !one_dim) std::cout << render_tiles(q, SymbolMap(q.size(), 0));
            return kTrue;
        });
    }

    // sft
    auto* sft = app.add_subcommand("sft", "subshifts of finite type")->require_subcommand(1);
    std::string sft_arg, map_file;
    std::vector<int> sft_params;
    auto* sft_check = sft->add_subcommand("check", "does a symbol map on a tile graph respect an SFT");
    sft_check->add_option("sft", sft_arg, "SFT file or preset name")->required();
    sft_check->add_option("--gamma", sft_params, "n p q")->expected(3)->required();
    sft_check->add_option("--map", map_file, "JSON symbol map (list, or object with \"symbols\")")->required();
    on(sft_check, [&] {
        auto q = make_gamma(to_params(sft_params));
        auto s = load_sft(sft_arg, 2);
        json j = read_json(map_file);
        SymbolMap f = (j.is_object() ? j.at(j.contains("symbols") ? "symbols" : "colors") : j).get<SymbolMap>();
        auto r = respects_ex(q, f, s);
        return emit_bool(g, r.ok, {{"fast_path", r.fast_path}, {"in_hypothesis", r.in_hypothesis}},
                         r.in_hypothesis ? "" : "(n below the SFT width)");
    });

    // solve
    auto* solve = app.add_subcommand("solve", "exact search with certificates")->require_subcommand(1);
    GraphArgs ga;
    int k = 0, bound = 3;
    std::string target, dimacs_out;
    bool dimacs = false;
    auto run_solve = [&](const std::string& kind) {
        QuotientGraph q = ga.build();
        Instance inst{kind, q, k, {}, {}};
        if (kind == "hom") inst.target = load_graph(target);
        if (kind == "sft-map") inst.sft = load_sft(sft_arg, q.dim);
        if ((kind == "coloring" || kind == "edge-coloring") && k < 1) throw UsageError("-k is required");
        if (dimacs) {
            std::cout << to_dimacs(inst);
            return kTrue;
        }
        return emit_certificate(g, tilekit::solve(inst, SolveOptions{g.budget}), q);
    };
    struct SolveCmd {
        const char* name;
        const char* kind;
        const char* help;
    };
    for (const auto& sc : {SolveCmd{"color", "coloring", "proper k-coloring"},
                           SolveCmd{"edge-color", "edge-coloring", "proper k-edge-coloring"},
                           SolveCmd{"hom", "hom", "homomorphism to a target graph"},
                           SolveCmd{"match", "matching", "perfect matching"},
                           SolveCmd{"sft", "sft-map", "symbol map respecting an SFT"}}) {
        auto* c = solve->add_subcommand(sc.name, sc.help);
        ga.add(c);
        std::string kind = sc.kind;
        if (kind == "coloring" || kind == "edge-coloring") c->add_option("-k", k, "number of colours")->required();
        if (kind == "hom") c->add_option("--target", target, "target graph file or name")->required();
        if (kind == "sft-map") c->add_option("sft", sft_arg, "SFT file or preset name")->required();
        if (kind == "coloring") c->add_flag("--dimacs", dimacs, "print the CNF instead of solving");
        on(c, [&, kind] { return run_solve(kind); });
    }
    auto* mono = solve->add_subcommand("mono", "check a two-coloring for small monochromatic components");
    mono->add_option("--gamma", nq, "n p q")->expected(3)->required();
    mono->add_option("--map", map_file, "JSON two-coloring; the shipped one for (1,5,2) when omitted");
    mono->add_option("--bound", bound, "largest allowed component");
    on(mono, [&] {
        Params prm = to_params(nq);
        SymbolMap f;
        if (!map_file.empty()) f = load_ints(map_file, "colors");
        else if (prm.n == 1 && prm.p == 5 && prm.q == 2) f = mono_two_coloring_152();
        else throw UsageError("--map is required for these parameters");
        return emit_bool(g, check_mono_bound(prm, f, bound), {{"bound", bound}}, "");
    });

    // onedim
    auto* onedim = app.add_subcommand("onedim", "one-dimensional subshifts")->require_subcommand(1);
    auto* decide = onedim->add_subcommand("decide", "is there a continuous equivariant map into the SFT");
    decide->add_option("sft", sft_arg, "SFT file or preset name")->required();
    on(decide, [&] {
        auto r = decide_onedim(load_sft(sft_arg, 1));
        if (g.json) {
            std::cout << r.to_json().dump(2) << '\n';
        } else if (r.answer) {
            std::cout << "YES  witness on (" << r.params.n << "," << r.params.p << "," << r.params.q << ")  period "
                      << r.period << '\n';
        } else {
            std::cout << "NO  " << (r.components.empty() ? "no allowed windows" : "largest period " + std::to_string(r.period))
                      << '\n';
        }
        return r.answer ? kTrue : kFalse;
    });

    // homotopy
    auto* hom = app.add_subcommand("homotopy", "4-cycle weightings and order-2 witnesses")->require_subcommand(1);
    std::string graph_arg, weights_file, box_file;
    std::vector<int> ps{5, 7}, walk;
    int coeff = 2, rows = 5, cols = 6;
    bool reduced = false;
    auto* fc = hom->add_subcommand("fourcycles", "nontrivial 4-cycles");
    fc->add_option("graph", graph_arg)->required();
    on(fc, [&] {
        auto cyc = nontrivial_4cycles(load_graph(graph_arg));
        if (g.json) std::cout << json(cyc).dump(2) << '\n';
        else
            for (const auto& c : cyc) std::cout << c[0] << ' ' << c[1] << ' ' << c[2] << ' ' << c[3] << '\n';
        return kTrue;
    });
    auto* ns = hom->add_subcommand("nullspace", "weightings vanishing on every nontrivial 4-cycle");
    ns->add_option("graph", graph_arg)->required();
    ns->add_flag("--reduced", reduced, "modulo coboundaries");
    on(ns, [&] {
        auto h = load_graph(graph_arg);
        auto basis = reduced ? reduced_weight_nullspace(h) : weight_nullspace(h);
        if (g.json) std::cout << json(basis).dump(2) << '\n';
        else std::cout << "dimension " << basis.size() << '\n';
        return kTrue;
    });
    auto* nw = hom->add_subcommand("negweight", "check or search a negative weighting");
    nw->add_option("graph", graph_arg)->required();
    nw->add_option("--p", ps, "walk lengths")->expected(1, 16);
    nw->add_option("--weights", weights_file, "JSON weighting (list, or object with \"weighting\")");
    nw->add_option("--coeff-bound", coeff, "coefficient range for the search");
    on(nw, [&] {
        auto h = load_graph(graph_arg);
        if (!weights_file.empty()) {
            json j = read_json(weights_file);
            Weighting w = (j.is_object() ? j.at("weighting") : j).get<Weighting>();
            bool ok = vanishes_on_4cycles(h, w);
            for (int p : ps) ok = ok && negative_weight_holds(h, w, p);
            return emit_bool(g, ok, {{"p", ps}}, "");
        }
        auto w = negative_weight_search(h, ps, coeff);
        json body{{"p", ps}, {"weighting", w ? json(*w) : json(nullptr)}};
        return emit_bool(g, w.has_value(), body, w ? json(*w).dump() : "none within the coefficient bound");
    });
    auto* wit = hom->add_subcommand("witness", "verify an order-2 witness box");
    wit->add_option("graph", graph_arg, "graph file; a payload may also carry gamma and box")->required();
    wit->add_option("--walk", walk, "odd closed walk, first vertex repeated")->expected(2, 64);
    wit->add_option("--box", box_file, "JSON box (rows, or object with \"box\")");
    on(wit, [&] {
        auto h = load_graph(graph_arg);
        json payload = fs::is_regular_file(graph_arg) ? read_json(graph_arg) : json::object();
        ClosedWalk w = !walk.empty() ? walk : payload.value("gamma", ClosedWalk{});
        json bj = !box_file.empty() ? read_json(box_file) : payload.value("box", json());
        if (bj.is_object()) bj = bj.at("box");
        if (w.empty() || bj.is_null()) throw UsageError("need --walk and --box");
        return emit_bool(g, verify_order2_witness(h, w, WitnessBox{bj.get<std::vector<std::vector<int>>>()}), json::object(), "");
    });
    auto* sw = hom->add_subcommand("search-witness", "search an order-2 witness box");
    sw->add_option("graph", graph_arg)->required();
    sw->add_option("--walk", walk, "odd closed walk; the shipped walk or the shortest odd cycle when omitted")->expected(2, 64);
    sw->add_option("--rows", rows);
    sw->add_option("--cols", cols);
    on(sw, [&] {
        auto h = load_graph(graph_arg);
        ClosedWalk w = walk;
        if (w.empty() && graph_arg == "chvatal") w = chvatal_gamma();
        if (w.empty() && graph_arg == "grotzsch") w = grotzsch_gamma();
        if (w.empty()) {
            auto c = shortest_odd_cycle(h);
            if (!c) throw UsageError("graph has no odd cycle");
            w = *c;
        }
        auto box = search_order2_witness(h, w, rows, cols);
        json body{{"walk", w}, {"box", box ? box->to_json() : json(nullptr)}};
        std::string text = "walk " + walk_string(w);
        if (box && !g.json) {
            for (const auto& r : box->cells) {
                text += "\n";
                for (int v : r) text += std::to_string(v) + " ";
            }
        }
        return emit_bool(g, box.has_value(), body, text);
    });

    // tile
    auto* tile = app.add_subcommand("tile", "rectangle tilings")->require_subcommand(1);
    std::vector<int> dims;
    std::vector<std::string> tile_args{"3x3", "2x2"};
    std::string tiling_file;
    int axis = 0, stretch_c = 1, cut = 0;
    auto parse_tiles = [&] {
        RectTileSet ts;
        for (const auto& s : tile_args) {
            auto x = s.find('x');
            if (x == std::string::npos) throw UsageError("tile must look like WxH: " + s);
            ts.push_back({std::stoi(s.substr(0, x)), std::stoi(s.substr(x + 1))});
        }
        return ts;
    };
    auto emit_tiling = [&](const RectSearch& r) {
        if (g.json) {
            json j{{"verdict", to_string(r.verdict)}, {"nodes", r.nodes}};
            if (r.sat()) j["tiling"] = r.tiling.to_json();
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << to_string(r.verdict) << "  nodes " << r.nodes << '\n';
            if (g.ascii && r.sat()) std::cout << render(r.tiling);
        }
        return verdict_code(r.verdict);
    };
    for (const char* name : {"torus", "box"}) {
        bool torus = name == std::string("torus");
        auto* c = tile->add_subcommand(name, torus ? "tile a torus" : "tile a rectangle");
        c->add_option("size", dims, "width height")->expected(2)->required();
        c->add_option("--tiles", tile_args, "tile shapes WxH")->expected(1, 16);
        on(c, [&, torus] {
            Region r = torus ? Region::torus_of(dims[0], dims[1]) : Region::box(dims[0], dims[1]);
            return emit_tiling(solve_rect_tiling(r, parse_tiles(), g.budget));
        });
    }
    auto* st = tile->add_subcommand("stretch", "insert 6c columns (or rows) into a torus tiling");
    st->add_option("tiling", tiling_file, "tiling JSON; the 13x13 lattice tiling when omitted");
    st->add_option("--axis", axis, "0 widens, 1 heightens")->check(CLI::Range(0, 1));
    st->add_option("--c", stretch_c, "stretch by 6c")->check(CLI::PositiveNumber);
    st->add_option("--cut", cut, "column or row of the cut");
    on(st, [&] {
        RegionTiling t = tiling_file.empty() ? lattice_tiling_2_3() : RegionTiling::from_json(read_json(tiling_file));
        auto s = stretch_tiling(t, axis, stretch_c, cut);
        bool ok = validate_rect_tiling(s);
        if (g.json) std::cout << s.to_json().dump(2) << '\n';
        else {
            std::cout << (ok ? "valid " : "invalid ") << s.region.w << "x" << s.region.h << '\n';
            if (g.ascii) std::cout << render(s);
        }
        return ok ? kTrue : kFalse;
    });
    auto* ob = tile->add_subcommand("obstruct", "area obstruction");
    ob->add_option("size", dims, "width height")->expected(2)->required();
    ob->add_option("--tiles", tile_args, "tile shapes WxH")->expected(1, 16);
    on(ob, [&] {
        auto d = area_obstruction(Region::torus_of(dims[0], dims[1]), parse_tiles());
        return emit_bool(g, d.has_value(), {{"d", d ? json(*d) : json(nullptr)}}, d ? "d = " + std::to_string(*d) : "none");
    });
    auto* dec = tile->add_subcommand("decide", "is the torus tileable by 2x2 and 3x3 squares (search budget 2e6 unless --budget)");
    dec->add_option("size", dims, "width height")->expected(2)->required();
    on(dec, [&] {
        auto r = decide_ss_torus(dims[0], dims[1], budget_opt->count() ? g.budget : 2'000'000);
        if (g.json) {
            json j{{"verdict", to_string(r.verdict)}, {"method", r.method}};
            if (r.tiling) j["tiling"] = r.tiling->to_json();
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << to_string(r.verdict) << "  " << r.method << '\n';
            if (g.ascii && r.tiling) std::cout << render(*r.tiling);
        }
        return verdict_code(r.verdict);
    });

    // tiler12
    auto* t12 = app.add_subcommand("tiler12", "rectangles from the twelve tiles")->require_subcommand(1);
    std::string spec_file;
    std::vector<int> random_params;
    unsigned long long seed = 0;
    auto* fill = t12->add_subcommand("fill", "fill a rectangle with the given boundary");
    fill->add_option("spec", spec_file, "BoundarySpec JSON");
    fill->add_option("--random", random_params, "generate a spec for n p q")->expected(3);
    auto* seed_opt = fill->add_option("--seed", seed, "seed for --random");
    on(fill, [&] {
        BoundarySpec spec;
        if (!random_params.empty()) {
            if (g.seedless) throw UsageError("--random needs a seed and --seedless is set");
            if (seed_opt->count() == 0) throw UsageError("--random needs --seed");
            std::mt19937_64 rng(seed);
            spec = random_boundary_spec(to_params(random_params), rng);
        } else if (!spec_file.empty()) {
            spec = BoundarySpec::from_json(read_json(spec_file));
        } else {
            throw UsageError("give a spec file or --random");
        }
        auto t = fill_rectangle(spec);
        bool ok = validate_tiling12(t) && boundary_matches(t, spec);
        if (g.json) {
            json j = t.to_json();
            if (!random_params.empty()) j["spec"] = spec.to_json();
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << (ok ? "valid " : "invalid ") << t.width << "x" << t.height << "  " << t.placements.size()
                      << " tiles\n";
            if (g.ascii) std::cout << render(t);
        }
        return ok ? kTrue : kFalse;
    });
    auto* val = t12->add_subcommand("validate", "check a placements file");
    val->add_option("tiling", tiling_file)->required();
    val->add_option("--spec", spec_file, "also check the boundary against this spec");
    on(val, [&] {
        auto t = Tiling12::from_json(read_json(tiling_file));
        std::string defect = tiling12_defect(t);
        bool ok = defect.empty();
        if (ok && !spec_file.empty()) {
            ok = boundary_matches(t, BoundarySpec::from_json(read_json(spec_file)));
            if (!ok) defect = "boundary differs from the spec";
        }
        return emit_bool(g, ok, {{"defect", defect}}, defect);
    });

    // hyper
    auto* hy = app.add_subcommand("hyper", "Thue-Morse windows")->require_subcommand(1);
    std::vector<int> range;
    bool two_d = false, enhanced = false;
    int shift = 1, shift2 = 0, half = 0;
    auto* gen = hy->add_subcommand("gen", "print a window");
    gen->add_option("--range", range, "a b")->expected(2)->required();
    gen->add_flag("--plane", two_d, "two-dimensional sum of two copies");
    on(gen, [&] {
        if (range[0] > range[1]) throw UsageError("range must satisfy a <= b");
        auto w = tm_window(range[0], range[1]);
        if (two_d) w = sum2d_window(w, w);
        if (g.json) {
            std::cout << w.to_json().dump() << '\n';
        } else {
            int width = w.extent[0];
            for (std::size_t i = 0; i < w.bits.size(); ++i) {
                std::cout << static_cast<int>(w.bits[i]);
                if ((i + 1) % static_cast<std::size_t>(width) == 0) std::cout << '\n';
            }
        }
        return kTrue;
    });
    auto* chk = hy->add_subcommand("check", "verify the witness condition for a shift");
    chk->add_option("--s", shift, "shift (first coordinate)")->required();
    chk->add_option("--s2", shift2, "second coordinate; uses the two-dimensional sum");
    chk->add_option("--half-width", half, "window half-width; 64|s| plus the offset range by default");
    chk->add_flag("--enhanced", enhanced, "also require an agreeing offset");
    on(chk, [&] {
        bool plane = chk->count("--s2") > 0;
        if (!plane && shift == 0) throw UsageError("shift must be nonzero");
        auto T = plane ? product_offsets(shift, shift2) : enhanced ? enhanced_offsets(shift) : tm_offsets(shift);
        int reach = 0;
        for (const auto& t : T)
            for (int v : t) reach = std::max(reach, std::abs(v));
        int m = std::max(std::abs(shift), std::abs(shift2));
        int hw = half > 0 ? half : 64 * m + reach + m;
        auto w = tm_window(-hw, hw);
        if (plane) w = sum2d_window(w, w);
        Offset s = plane ? Offset{shift, shift2} : Offset{shift};
        bool ok;
        std::size_t checked = 0;
        if (enhanced && !plane) {
            ok = verify_enhanced_witness(w, s, T);
        } else {
            auto r = check_witness(w, s, T);
            ok = r.holds;
            checked = r.checked;
        }
        return emit_bool(g, ok, {{"half_width", hw}, {"offsets", T.size()}, {"checked", checked}},
                         std::to_string(T.size()) + " offsets, half-width " + std::to_string(hw));
    });

    // verify
    auto* ver = app.add_subcommand("verify", "re-check fixtures and certificates")->require_subcommand(1);
    std::string fixture_name, fixture_file, cert_file;
    auto* vf = ver->add_subcommand("fixture", "validate a shipped fixture");
    vf->add_option("name", fixture_name, "fixture name; all fixtures when omitted");
    vf->add_option("--file", fixture_file, "validate this payload instead of the built-in one");
    bool dump = false;
    vf->add_flag("--dump", dump, "print the built-in payload");
    on(vf, [&] {
        if (fixture_name.empty()) {
            bool all = true;
            json body = json::array();
            for (const auto& f : fixture_list()) {
                bool ok = validate_fixture(f.name);
                all = all && ok;
                body.push_back({{"fixture", f.name}, {"result", ok}});
                if (!g.json) std::cout << (ok ? "true   " : "false  ") << f.name << "  " << f.source << '\n';
            }
            if (g.json) std::cout << body.dump(2) << '\n';
            return all ? kTrue : kFalse;
        }
        const Fixture& f = find_fixture(fixture_name);
        if (dump) {
            std::cout << fixture_payload(f.name).dump() << '\n';
            return validate_fixture(f.name) ? kTrue : kFalse;
        }
        bool ok = fixture_file.empty() ? validate_fixture(f.name) : validate_fixture_payload(f.name, read_json(fixture_file));
        return emit_bool(g, ok, {{"fixture", f.name}, {"source", f.source}}, f.name + ": " + f.source);
    });
    auto* vc = ver->add_subcommand("certificate", "check a certificate against an instance");
    vc->add_option("certificate", cert_file)->required();
    ga.add(vc);
    vc->add_option("-k", k, "number of colours");
    vc->add_option("--target", target, "target graph for hom certificates");
    vc->add_option("--sft", sft_arg, "SFT for sft-map certificates");
    on(vc, [&] {
        auto c = Certificate::from_json(read_json(cert_file));
        if (g.seedless && !c.deterministic) throw UsageError("certificate was produced nondeterministically");
        QuotientGraph q = ga.build();
        Instance inst{c.kind, q, k, {}, {}};
        if (c.kind == "hom") inst.target = load_graph(target);
        if (c.kind == "sft-map") inst.sft = load_sft(sft_arg, q.dim);
        bool ok = verify_certificate(c, inst);
        return emit_bool(g, ok, {{"verdict", to_string(c.verdict)}}, to_string(c.verdict) + " " + c.kind);
    });

    // reproduce
    auto* rep = app.add_subcommand("reproduce", "run every acceptance criterion");
    AcceptanceOptions aopt;
    rep->add_option("--filter", aopt.filter, "criterion id, tag or title substring");
    rep->add_flag("--fast", aopt.fast, "skip the long torus search");
    rep->add_option("--fixtures-dir", aopt.fixtures_dir, "validate <name>.json files from this directory");
    on(rep, [&] {
        auto rs = run_acceptance(aopt);
        if (g.json) std::cout << to_json(rs).dump(2) << '\n';
        else std::cout << report_table(rs);
        return all_passed(rs) ? kTrue : kFalse;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kError;
    }
    try {
        return action ? action() : kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
}
