#include "tilekit/csp.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "engine.hpp"

namespace tilekit {

using nlohmann::json;
using detail::Engine;

TargetGraph TargetGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                    std::vector<std::string> names) {
    TargetGraph h;
    h.n = n;
    h.edges = edges;
    h.names = std::move(names);
    h.adj.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("target graphs have no loops");
        h.adj[u].push_back(v);
        h.adj[v].push_back(u);
    }
    for (auto& a : h.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return h;
}

bool TargetGraph::adjacent(int a, int b) const { return std::binary_search(adj[a].begin(), adj[a].end(), b); }

int TargetGraph::index_of(const std::string& nm) const {
    for (int i = 0; i < static_cast<int>(names.size()); ++i)
        if (names[i] == nm) return i;
    throw std::invalid_argument("unknown vertex name " + nm);
}

std::string TargetGraph::name(int v) const {
    return v < static_cast<int>(names.size()) ? names[v] : std::to_string(v);
}

TargetGraph complete_graph(int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
    return TargetGraph::from_edges(k, e);
}

TargetGraph cycle_graph(int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return TargetGraph::from_edges(k, e);
}

TargetGraph petersen_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
    }
    for (auto [a, b] : std::vector<std::pair<int, int>>{{5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}}) e.emplace_back(a, b);
    return TargetGraph::from_edges(10, e);
}

TargetGraph target_from_json(const json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "petersen") return petersen_graph();
        if (s.size() > 1 && s[0] == 'K') return complete_graph(std::stoi(s.substr(1)));
        if (s.size() > 1 && s[0] == 'C') return cycle_graph(std::stoi(s.substr(1)));
        throw std::invalid_argument("unknown target graph " + s);
    }
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    int n = j.contains("n") ? j.at("n").get<int>() : static_cast<int>(names.size());
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        auto endpoint = [&](const json& x) {
            if (x.is_number_integer()) return x.get<int>();
            auto it = std::find(names.begin(), names.end(), x.get<std::string>());
            if (it == names.end()) throw std::invalid_argument("unknown vertex name in edge list");
            return static_cast<int>(it - names.begin());
        };
        edges.emplace_back(endpoint(e.at(0)), endpoint(e.at(1)));
    }
    return TargetGraph::from_edges(n, edges, names);
}

json to_json(const TargetGraph& h) {
    json j{{"n", h.n}, {"edges", h.edges}};
    if (!h.names.empty()) j["names"] = h.names;
    return j;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Sat: return "SAT";
        case Verdict::Unsat: return "UNSAT";
        case Verdict::Unknown: return "UNKNOWN";
    }
    return "?";
}

json Certificate::to_json() const {
    return json{{"statement", {{"kind", kind}, {"digest", digest}}},
                {"verdict", to_string(verdict)},
                {"witness", witness},
                {"search", {{"nodes", nodes}, {"depth", depth}}},
                {"deterministic", deterministic}};
}

Certificate Certificate::from_json(const json& j) {
    Certificate c;
    c.kind = j.at("statement").at("kind").get<std::string>();
    c.digest = j.at("statement").at("digest").get<std::string>();
    std::string v = j.at("verdict").get<std::string>();
    c.verdict = v == "SAT" ? Verdict::Sat : v == "UNSAT" ? Verdict::Unsat : Verdict::Unknown;
    c.witness = j.at("witness");
    c.nodes = j.at("search").at("nodes").get<std::uint64_t>();
    c.depth = j.at("search").at("depth").get<int>();
    c.deterministic = j.value("deterministic", true);
    return c;
}

json Instance::to_json() const {
    json j{{"kind", kind}, {"graph", tilekit::to_json(graph)}};
    if (kind == "coloring" || kind == "edge-coloring") j["k"] = k;
    if (kind == "hom") j["target"] = tilekit::to_json(target);
    if (kind == "sft-map") j["sft"] = tilekit::to_json(sft);
    return j;
}

std::string Instance::digest() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : to_json().dump()) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

std::vector<std::vector<int>> half_edge_tuples(int k, int slots) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::vector<bool> used(k, false);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == slots) {
            out.push_back(cur);
            return;
        }
        for (int c = 0; c < k; ++c)
            if (!used[c]) {
                used[c] = true;
                cur.push_back(c);
                self(self);
                cur.pop_back();
                used[c] = false;
            }
    };
    rec(rec);
    return out;
}

bool torus_parity_obstruction(const QuotientGraph& g) { return g.is_torus() && g.size() % 2 == 1; }

// Forbidden tuples grouped by the variable tuple they constrain.
void add_window_constraints(Engine& e, const QuotientGraph& g, const SftSpec& s, bool fast) {
    std::map<std::vector<int>, std::set<std::vector<int>>> groups;
    auto add = [&](const std::vector<int>& vars, const std::vector<int>& cells) {
        std::vector<int> uniq;
        std::map<int, int> fixed;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            auto [it, fresh] = fixed.emplace(vars[i], cells[i]);
            if (!fresh && it->second != cells[i]) return;
            if (fresh) uniq.push_back(vars[i]);
        }
        std::sort(uniq.begin(), uniq.end());
        std::vector<int> tuple;
        for (int v : uniq) tuple.push_back(fixed[v]);
        groups[uniq].insert(tuple);
    };
    for (const Pattern& p : s.patterns) {
        if (fast) {
            for (std::size_t gi = 0; gi < g.grids.size(); ++gi) {
                const LabeledGrid& grid = g.grids[gi];
                for (int oy = 0; oy + p.height() <= grid.height; ++oy)
                    for (int ox = 0; ox + p.width() <= grid.width; ++ox) {
                        std::vector<int> vars;
                        for (int y = 0; y < p.height(); ++y)
                            for (int x = 0; x < p.width(); ++x)
                                vars.push_back(g.cls(static_cast<int>(gi), ox + x, oy + y));
                        add(vars, p.cells);
                    }
            }
        } else {
            for_each_window_hom(g, p.width(), p.height(), [&](const std::vector<int>& img) { add(img, p.cells); });
        }
    }
    for (const auto& [vars, tuples] : groups) {
        if (vars.size() == 1) {
            for (const auto& t : tuples) e.forbid_value(vars[0], t[0]);
        } else if (vars.size() == 2) {
            e.add_binary(vars[0], vars[1], [&](int a, int b) { return !tuples.count({a, b}); });
        } else {
            e.add_table(vars, {tuples.begin(), tuples.end()});
        }
    }
}

Certificate finish(const Instance& inst, Engine& e, Engine::Outcome out,
                   const std::function<json(const std::vector<int>&)>& witness) {
    Certificate c;
    c.kind = inst.kind;
    c.digest = inst.digest();
    c.nodes = e.nodes();
    c.depth = e.depth();
    if (out == Engine::Outcome::Sat) {
        c.verdict = Verdict::Sat;
        c.witness = witness(e.solution());
    } else if (out == Engine::Outcome::Unsat) {
        c.verdict = Verdict::Unsat;
        c.witness = {{"result", "UNSAT"}, {"proof", "exhaustive"}};
    } else {
        c.verdict = Verdict::Unknown;
        c.witness = {{"result", "UNKNOWN"}, {"proof", "budget"}};
    }
    return c;
}

}  // namespace

Certificate solve(const Instance& inst, const SolveOptions& opt) {
    const QuotientGraph& g = inst.graph;
    const int nv = static_cast<int>(g.size());
    if (inst.kind == "coloring") {
        Engine e(nv, std::max(inst.k, 0));
        for (const Edge& ed : g.edges) e.add_binary(ed.from, ed.to, [](int a, int b) { return a != b; });
        auto out = e.run(opt.budget);
        return finish(inst, e, out, [](const std::vector<int>& s) { return json{{"colors", s}}; });
    }
    if (inst.kind == "hom") {
        const TargetGraph& h = inst.target;
        Engine e(nv, h.n);
        for (const Edge& ed : g.edges) e.add_binary(ed.from, ed.to, [&](int a, int b) { return h.adjacent(a, b); });
        auto out = e.run(opt.budget);
        return finish(inst, e, out, [](const std::vector<int>& s) { return json{{"map", s}}; });
    }
    if (inst.kind == "edge-coloring") {
        auto tuples = half_edge_tuples(std::max(inst.k, 0), 2 * g.dim);
        Engine e(nv, static_cast<int>(tuples.size()));
        for (const Edge& ed : g.edges) {
            int gen = ed.gen;
            e.add_binary(ed.from, ed.to,
                         [&, gen](int a, int b) { return tuples[a][2 * gen] == tuples[b][2 * gen + 1]; });
        }
        auto out = e.run(opt.budget);
        return finish(inst, e, out, [&](const std::vector<int>& s) {
            json half = json::array();
            for (int v : s) half.push_back(tuples[v]);
            return json{{"half_edges", half}};
        });
    }
    if (inst.kind == "matching") {
        if (torus_parity_obstruction(g)) {
            Certificate c;
            c.kind = inst.kind;
            c.digest = inst.digest();
            c.verdict = Verdict::Unsat;
            c.witness = {{"result", "UNSAT"}, {"proof", "odd-vertex-count"}, {"vertices", g.size()}};
            return c;
        }
        Engine e(nv, 2 * g.dim);
        std::vector<std::vector<bool>> has_dir(nv, std::vector<bool>(2 * g.dim, false));
        for (const Edge& ed : g.edges) {
            has_dir[ed.from][2 * ed.gen] = true;
            has_dir[ed.to][2 * ed.gen + 1] = true;
            int gen = ed.gen;
            e.add_binary(ed.from, ed.to, [gen](int a, int b) { return (a == 2 * gen) == (b == 2 * gen + 1); });
        }
        for (int v = 0; v < nv; ++v)
            for (int d = 0; d < 2 * g.dim; ++d)
                if (!has_dir[v][d]) e.forbid_value(v, d);
        auto out = e.run(opt.budget);
        return finish(inst, e, out, [](const std::vector<int>& s) { return json{{"directions", s}}; });
    }
    if (inst.kind == "sft-map") {
        const SftSpec& s = inst.sft;
        s.check();
        if (s.dim != 2 || g.dim != 2) throw std::invalid_argument("sft map search needs a two-dimensional SFT");
        Engine e(nv, s.b);
        bool fast = g.has_params && g.params.n >= s.width() && !g.grids.empty();
        add_window_constraints(e, g, s, fast);
        auto out = e.run(opt.budget);
        return finish(inst, e, out, [](const std::vector<int>& v) { return json{{"symbols", v}}; });
    }
    throw std::invalid_argument("unknown problem kind " + inst.kind);
}

Certificate solve_coloring(const QuotientGraph& g, int k, const SolveOptions& opt) {
    return solve(Instance{"coloring", g, k, {}, {}}, opt);
}
Certificate solve_edge_coloring(const QuotientGraph& g, int k, const SolveOptions& opt) {
    return solve(Instance{"edge-coloring", g, k, {}, {}}, opt);
}
Certificate solve_hom(const QuotientGraph& g, const TargetGraph& h, const SolveOptions& opt) {
    return solve(Instance{"hom", g, 0, h, {}}, opt);
}
Certificate solve_matching(const QuotientGraph& g, const SolveOptions& opt) {
    return solve(Instance{"matching", g, 0, {}, {}}, opt);
}
Certificate solve_sft_map(const QuotientGraph& g, const SftSpec& s, const SolveOptions& opt) {
    return solve(Instance{"sft-map", g, 0, {}, s}, opt);
}

bool valid_coloring(const QuotientGraph& g, const std::vector<int>& f, int k) {
    if (f.size() != g.size()) return false;
    for (int c : f)
        if (c < 0 || c >= k) return false;
    for (const Edge& e : g.edges)
        if (f[e.from] == f[e.to]) return false;
    return true;
}

bool valid_edge_coloring(const QuotientGraph& g, const std::vector<std::vector<int>>& f, int k) {
    if (f.size() != g.size()) return false;
    for (const auto& t : f) {
        if (static_cast<int>(t.size()) != 2 * g.dim) return false;
        std::set<int> seen;
        for (int c : t) {
            if (c < 0 || c >= k || !seen.insert(c).second) return false;
        }
    }
    for (const Edge& e : g.edges)
        if (f[e.from][2 * e.gen] != f[e.to][2 * e.gen + 1]) return false;
    return true;
}

bool valid_hom(const QuotientGraph& g, const std::vector<int>& f, const TargetGraph& h) {
    if (f.size() != g.size()) return false;
    for (int v : f)
        if (v < 0 || v >= h.n) return false;
    for (const Edge& e : g.edges)
        if (!h.adjacent(f[e.from], f[e.to])) return false;
    return true;
}

bool valid_matching(const QuotientGraph& g, const std::vector<int>& f) {
    if (f.size() != g.size()) return false;
    std::vector<int> partners(g.size(), 0);
    for (int d : f)
        if (d < 0 || d >= 2 * g.dim) return false;
    for (const Edge& e : g.edges) {
        bool out = f[e.from] == 2 * e.gen;
        bool in = f[e.to] == 2 * e.gen + 1;
        if (out != in) return false;
        if (out) ++partners[e.from], ++partners[e.to];
    }
    // On a torus each chosen direction names exactly one edge; in general
    // quotients a direction may be realized by several edges.
    if (g.is_torus())
        for (int c : partners)
            if (c != 1) return false;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (partners[v] == 0) return false;
    return true;
}

bool verify_certificate(const Certificate& c, const Instance& inst) {
    if (c.digest != inst.digest()) throw std::invalid_argument("digest mismatch");
    if (c.kind != inst.kind) return false;
    if (c.verdict == Verdict::Unknown) return false;
    if (c.verdict == Verdict::Unsat) {
        if (!c.witness.is_object() || c.witness.value("result", "") != "UNSAT") return false;
        std::string proof = c.witness.value("proof", "");
        if (proof == "odd-vertex-count") return inst.kind == "matching" && torus_parity_obstruction(inst.graph);
        if (proof != "exhaustive" || !c.deterministic) return false;
        // Replay the deterministic search; it must exhaust after the same number of nodes.
        Certificate again = solve(inst);
        return again.unsat() && again.nodes == c.nodes;
    }
    const json& w = c.witness;
    try {
        if (inst.kind == "coloring") return valid_coloring(inst.graph, w.at("colors").get<std::vector<int>>(), inst.k);
        if (inst.kind == "hom") return valid_hom(inst.graph, w.at("map").get<std::vector<int>>(), inst.target);
        if (inst.kind == "edge-coloring")
            return valid_edge_coloring(inst.graph, w.at("half_edges").get<std::vector<std::vector<int>>>(), inst.k);
        if (inst.kind == "matching") return valid_matching(inst.graph, w.at("directions").get<std::vector<int>>());
        if (inst.kind == "sft-map") return respects(inst.graph, w.at("symbols").get<std::vector<int>>(), inst.sft);
    } catch (const json::exception&) {
        return false;
    } catch (const std::invalid_argument&) {
        return false;
    }
    return false;
}

bool check_mono_bound(const Params& prm, const SymbolMap& psi, int bound) {
    QuotientGraph g = make_gamma(prm);
    if (psi.size() != g.size()) throw std::invalid_argument("symbol map is not total");
    for (std::size_t gi = 0; gi < g.grids.size(); ++gi) {
        const LabeledGrid& grid = g.grids[gi];
        int w = grid.width, h = grid.height;
        auto color = [&](int x, int y) { return psi[g.cls(static_cast<int>(gi), x, y)]; };
        auto labeled = [&](int x, int y) { return grid.at(x, y).label.kind != BlockKind::Interior; };
        std::vector<int> comp(static_cast<std::size_t>(w) * h, -1);
        for (int sy = 0; sy < h; ++sy)
            for (int sx = 0; sx < w; ++sx) {
                if (comp[sy * w + sx] >= 0) continue;
                std::vector<std::pair<int, int>> stack{{sx, sy}}, members;
                comp[sy * w + sx] = sy * w + sx;
                bool touches_label = false;
                while (!stack.empty()) {
                    auto [x, y] = stack.back();
                    stack.pop_back();
                    members.emplace_back(x, y);
                    touches_label |= labeled(x, y);
                    const int dx[] = {1, -1, 0, 0}, dy[] = {0, 0, 1, -1};
                    for (int d = 0; d < 4; ++d) {
                        int nx = x + dx[d], ny = y + dy[d];
                        if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                        if (color(nx, ny) != color(x, y)) continue;
                        if (labeled(x, y) != labeled(nx, ny)) return false;
                        if (comp[ny * w + nx] >= 0) continue;
                        comp[ny * w + nx] = sy * w + sx;
                        stack.emplace_back(nx, ny);
                    }
                }
                int size = static_cast<int>(members.size());
                if (size > bound) return false;
                if (touches_label && size > 2) return false;
            }
    }
    return true;
}

std::string to_dimacs(const Instance& inst) {
    if (inst.kind != "coloring" && inst.kind != "hom")
        throw std::invalid_argument("DIMACS export supports coloring and hom instances");
    const QuotientGraph& g = inst.graph;
    int k = inst.kind == "coloring" ? inst.k : inst.target.n;
    auto var = [&](int v, int c) { return v * k + c + 1; };
    std::vector<std::string> clauses;
    for (std::size_t v = 0; v < g.size(); ++v) {
        std::string s;
        for (int c = 0; c < k; ++c) s += std::to_string(var(static_cast<int>(v), c)) + " ";
        clauses.push_back(s + "0");
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                clauses.push_back("-" + std::to_string(var(static_cast<int>(v), a)) + " -" +
                                  std::to_string(var(static_cast<int>(v), b)) + " 0");
    }
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : g.edges) {
        if (!seen.insert({std::min(e.from, e.to), std::max(e.from, e.to)}).second) continue;
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                bool ok = inst.kind == "coloring" ? a != b : inst.target.adjacent(a, b);
                if (e.from == e.to && a != b) continue;
                if (!ok)
                    clauses.push_back("-" + std::to_string(var(e.from, a)) + " -" + std::to_string(var(e.to, b)) +
                                      " 0");
            }
    }
    std::ostringstream out;
    out << "c tilekit " << inst.kind << " " << inst.digest() << "\n";
    out << "p cnf " << g.size() * k << " " << clauses.size() << "\n";
    for (const auto& c : clauses) out << c << "\n";
    return out.str();
}

std::string render_tiles(const QuotientGraph& g, const SymbolMap& f) {
    std::ostringstream out;
    for (std::size_t gi = 0; gi < g.grids.size(); ++gi) {
        const LabeledGrid& grid = g.grids[gi];
        out << (grid.index ? "G" + std::to_string(grid.index) + " " + tile_name(grid.index) : "grid") << "\n";
        for (int y = grid.height - 1; y >= 0; --y) {
            for (int x = 0; x < grid.width; ++x) out << (x ? " " : "") << f[g.cls(static_cast<int>(gi), x, y)];
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace tilekit
