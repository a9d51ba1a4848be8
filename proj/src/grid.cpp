#include "tilekit/grid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace tilekit {

std::string to_string(BlockLabel l) {
    switch (l.kind) {
        case BlockKind::Cross: return "X";
        case BlockKind::A: return "a";
        case BlockKind::B: return "b";
        case BlockKind::C: return "c";
        case BlockKind::D: return "d";
        case BlockKind::Interior: return "I" + std::to_string(l.owner);
    }
    return "?";
}

bool Params::coprime() const { return std::gcd(p, q) == 1; }

void Params::check() const {
    if (!valid())
        throw std::invalid_argument("invalid parameters: need 1 <= n < p and n < q");
}

LabeledGrid make_grid(int w, int h) {
    if (w < 1 || h < 1) throw std::invalid_argument("grid dimensions must be positive");
    LabeledGrid g;
    g.width = w;
    g.height = h;
    g.cells.resize(static_cast<std::size_t>(w) * h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) g.at(x, y) = Cell{BlockLabel{BlockKind::Interior, 0}, x, y};
    return g;
}

std::array<int, 2> block_dims(BlockKind k, const Params& prm, bool one_dim) {
    int n = prm.n, p = prm.p, q = prm.q;
    if (one_dim) {
        switch (k) {
            case BlockKind::Cross: return {n, 1};
            case BlockKind::A: return {p - n, 1};
            case BlockKind::B: return {q - n, 1};
            default: throw std::invalid_argument("no such one-dimensional block");
        }
    }
    switch (k) {
        case BlockKind::Cross: return {n, n};
        case BlockKind::A: return {n, p - n};
        case BlockKind::B: return {n, q - n};
        case BlockKind::C: return {p - n, n};
        case BlockKind::D: return {q - n, n};
        default: throw std::invalid_argument("interior blocks have per-grid dimensions");
    }
}

std::string tile_name(int i) {
    static const char* names[] = {"",       "caca",   "cbcb",   "dada",   "dbdb",   "dcadca", "cbacba",
                                  "cdacda", "cabcab", "cqadpa", "dpacqa", "cbpcaq", "caqcbp"};
    if (i < 1 || i > 12) throw std::invalid_argument("tile index must be in 1..12");
    return names[i];
}

TileLayout tile_layout(int i, const Params& prm) {
    prm.check();
    using K = BlockKind;
    const K a = K::A, b = K::B, c = K::C, d = K::D;
    TileLayout t;
    auto rep = [](K k, int m) { return std::vector<K>(static_cast<std::size_t>(m), k); };
    switch (i) {
        case 1: t.top = t.bottom = {c}; t.left = t.right = {a}; break;
        case 2: t.top = t.bottom = {c}; t.left = t.right = {b}; break;
        case 3: t.top = t.bottom = {d}; t.left = t.right = {a}; break;
        case 4: t.top = t.bottom = {d}; t.left = t.right = {b}; break;
        case 5: t.top = {d, c}; t.bottom = {c, d}; t.left = t.right = {a}; break;
        case 6: t.top = t.bottom = {c}; t.left = {b, a}; t.right = {a, b}; break;
        case 7: t.top = {c, d}; t.bottom = {d, c}; t.left = t.right = {a}; break;
        case 8: t.top = t.bottom = {c}; t.left = {a, b}; t.right = {b, a}; break;
        case 9: t.top = rep(c, prm.q); t.bottom = rep(d, prm.p); t.left = t.right = {a}; break;
        case 10: t.top = rep(d, prm.p); t.bottom = rep(c, prm.q); t.left = t.right = {a}; break;
        case 11: t.top = t.bottom = {c}; t.left = rep(a, prm.q); t.right = rep(b, prm.p); break;
        case 12: t.top = t.bottom = {c}; t.left = rep(b, prm.p); t.right = rep(a, prm.q); break;
        default: throw std::invalid_argument("tile index must be in 1..12");
    }
    t.width = side_span(t.top, prm);
    t.height = side_span(t.left, prm);
    return t;
}

int side_span(const std::vector<BlockKind>& seq, const Params& prm) {
    int s = prm.n;
    for (BlockKind k : seq) s += (k == BlockKind::C || k == BlockKind::A) ? prm.p : prm.q;
    return s;
}

namespace {

struct Segment {
    BlockKind kind;
    int start;
    int len;
};

std::vector<Segment> segments(const std::vector<BlockKind>& seq, const Params& prm) {
    std::vector<Segment> out;
    int pos = 0;
    out.push_back({BlockKind::Cross, pos, prm.n});
    pos += prm.n;
    for (BlockKind k : seq) {
        int len = (k == BlockKind::A || k == BlockKind::C) ? prm.p - prm.n : prm.q - prm.n;
        out.push_back({k, pos, len});
        pos += len;
        out.push_back({BlockKind::Cross, pos, prm.n});
        pos += prm.n;
    }
    return out;
}

const Segment& locate(const std::vector<Segment>& segs, int pos) {
    for (const auto& s : segs)
        if (pos >= s.start && pos < s.start + s.len) return s;
    throw std::logic_error("position outside side sequence");
}

}  // namespace

LabeledGrid make_tile_grid(int i, const Params& prm) { return make_layout_grid(tile_layout(i, prm), prm, i); }

LabeledGrid make_layout_grid(const TileLayout& t, const Params& prm, int i) {
    const int n = prm.n;
    LabeledGrid g;
    g.width = t.width;
    g.height = t.height;
    g.index = i;
    g.cells.resize(static_cast<std::size_t>(t.width) * t.height);
    auto top = segments(t.top, prm), bottom = segments(t.bottom, prm);
    auto left = segments(t.left, prm), right = segments(t.right, prm);
    for (int y = 0; y < t.height; ++y) {
        for (int x = 0; x < t.width; ++x) {
            Cell& cell = g.at(x, y);
            if (y < n || y >= t.height - n) {
                const Segment& s = locate(y < n ? bottom : top, x);
                cell = Cell{BlockLabel{s.kind, 0}, x - s.start, y < n ? y : y - (t.height - n)};
            } else if (x < n || x >= t.width - n) {
                const Segment& s = locate(x < n ? left : right, y);
                cell = Cell{BlockLabel{s.kind, 0}, x < n ? x : x - (t.width - n), y - s.start};
            } else {
                cell = Cell{BlockLabel{BlockKind::Interior, i}, x - n, y - n};
            }
        }
    }
    return g;
}

std::vector<std::vector<int>> QuotientGraph::adjacency() const {
    std::vector<std::vector<int>> adj(vertices.size());
    for (const Edge& e : edges) {
        adj[e.from].push_back(e.to);
        adj[e.to].push_back(e.from);
    }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return adj;
}

bool QuotientGraph::has_loop() const {
    return std::any_of(edges.begin(), edges.end(), [](const Edge& e) { return e.from == e.to; });
}

bool QuotientGraph::unique_generators() const {
    // Parallel e_i / e_i^-1 pairs are allowed (short blocks wrap like a small
    // torus); two different axes on one vertex pair are not.
    std::map<std::pair<int, int>, std::set<int>> axes;
    for (const Edge& e : edges) axes[{std::min(e.from, e.to), std::max(e.from, e.to)}].insert(e.gen);
    return std::all_of(axes.begin(), axes.end(), [](const auto& kv) { return kv.second.size() == 1; });
}

QuotientGraph quotient(const std::vector<LabeledGrid>& grids, int dim) {
    QuotientGraph out;
    out.dim = dim;
    out.grids = grids;
    using Key = std::tuple<BlockKind, int, int, int>;
    std::map<Key, int> ids;
    std::map<BlockKind, std::pair<int, int>> extent;
    for (int gi = 0; gi < static_cast<int>(grids.size()); ++gi) {
        const LabeledGrid& g = grids[gi];
        if (dim == 1 && g.height != 1) throw std::invalid_argument("one-dimensional quotient needs height-1 grids");
        std::vector<int> cls(g.cells.size());
        for (int x = 0; x < g.width; ++x) {
            for (int y = 0; y < g.height; ++y) {
                const Cell& c = g.at(x, y);
                bool interior = c.label.kind == BlockKind::Interior;
                Key k{c.label.kind, interior ? gi : 0, c.dx, c.dy};
                auto [it, fresh] = ids.emplace(k, static_cast<int>(out.vertices.size()));
                if (fresh) out.vertices.push_back(Vertex{c.label, {c.dx, c.dy}, gi, x, y});
                cls[static_cast<std::size_t>(y) * g.width + x] = it->second;
            }
        }
        out.class_of.push_back(std::move(cls));
    }
    // Equal labels must come from congruent blocks: every offset seen for a
    // label has to fit the largest extent seen for that label in every grid.
    for (const auto& v : out.vertices) {
        if (v.label.kind == BlockKind::Interior) continue;
        auto& e = extent[v.label.kind];
        e.first = std::max(e.first, v.offset[0] + 1);
        e.second = std::max(e.second, v.offset[1] + 1);
    }
    for (int gi = 0; gi < static_cast<int>(grids.size()); ++gi) {
        const LabeledGrid& g = grids[gi];
        std::map<BlockKind, int> count;
        for (const Cell& c : g.cells)
            if (c.label.kind != BlockKind::Interior && c.dx == 0 && c.dy == 0) ++count[c.label.kind];
        std::map<BlockKind, int> cells;
        for (const Cell& c : g.cells)
            if (c.label.kind != BlockKind::Interior) ++cells[c.label.kind];
        for (const auto& [k, m] : count)
            if (cells[k] != m * extent[k].first * extent[k].second)
                throw std::invalid_argument("offset mismatch between blocks with equal labels");
    }
    std::set<std::tuple<int, int, int>> es;
    for (int gi = 0; gi < static_cast<int>(grids.size()); ++gi) {
        const LabeledGrid& g = grids[gi];
        for (int y = 0; y < g.height; ++y)
            for (int x = 0; x < g.width; ++x) {
                if (x + 1 < g.width) es.insert({out.cls(gi, x, y), out.cls(gi, x + 1, y), 0});
                if (y + 1 < g.height) es.insert({out.cls(gi, x, y), out.cls(gi, x, y + 1), 1});
            }
    }
    for (auto [u, v, gen] : es) out.edges.push_back(Edge{u, v, gen});
    return out;
}

QuotientGraph make_torus(const std::vector<int>& dims) {
    if (dims.empty()) throw std::invalid_argument("torus needs at least one dimension");
    for (int d : dims)
        if (d < 1) throw std::invalid_argument("torus dimensions must be positive");
    QuotientGraph out;
    out.dim = static_cast<int>(dims.size());
    out.torus_dims = dims;
    std::size_t total = 1;
    for (int d : dims) total *= static_cast<std::size_t>(d);
    std::vector<std::size_t> stride(dims.size(), 1);
    for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];
    for (std::size_t id = 0; id < total; ++id) {
        Vertex v;
        v.offset.resize(dims.size());
        for (std::size_t i = 0; i < dims.size(); ++i) v.offset[i] = static_cast<int>(id / stride[i] % dims[i]);
        v.x = v.offset[0];
        v.y = dims.size() > 1 ? v.offset[1] : 0;
        out.vertices.push_back(std::move(v));
    }
    for (std::size_t id = 0; id < total; ++id)
        for (std::size_t i = 0; i < dims.size(); ++i) {
            int c = out.vertices[id].offset[i];
            std::size_t to = id - static_cast<std::size_t>(c) * stride[i] +
                             static_cast<std::size_t>((c + 1) % dims[i]) * stride[i];
            out.edges.push_back(Edge{static_cast<int>(id), static_cast<int>(to), static_cast<int>(i)});
        }
    return out;
}

QuotientGraph make_gamma(const Params& prm) {
    prm.check();
    std::vector<LabeledGrid> grids;
    for (int i = 1; i <= 12; ++i) grids.push_back(make_tile_grid(i, prm));
    QuotientGraph g = quotient(grids);
    g.has_params = true;
    g.params = prm;
    if (!g.unique_generators()) throw std::logic_error("quotient edge carries two generator tags");
    return g;
}

QuotientGraph make_gamma1(const Params& prm) {
    prm.check();
    std::vector<LabeledGrid> grids;
    for (int t = 0; t < 2; ++t) {
        int len = t == 0 ? prm.p : prm.q;
        BlockKind mid = t == 0 ? BlockKind::A : BlockKind::B;
        LabeledGrid g;
        g.width = len + prm.n;
        g.height = 1;
        g.index = t + 1;
        for (int x = 0; x < g.width; ++x) {
            if (x < prm.n) g.cells.push_back({{BlockKind::Cross, 0}, x, 0});
            else if (x < len) g.cells.push_back({{mid, 0}, x - prm.n, 0});
            else g.cells.push_back({{BlockKind::Cross, 0}, x - len, 0});
        }
        grids.push_back(std::move(g));
    }
    QuotientGraph g = quotient(grids, 1);
    g.has_params = true;
    g.params = prm;
    return g;
}

nlohmann::json to_json(const QuotientGraph& g) {
    nlohmann::json j;
    if (g.has_params) j["params"] = {{"n", g.params.n}, {"p", g.params.p}, {"q", g.params.q}};
    if (g.is_torus()) j["torus"] = g.torus_dims;
    j["dim"] = g.dim;
    auto& vs = j["vertices"] = nlohmann::json::array();
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        vs.push_back({{"id", i}, {"label", to_string(g.vertices[i].label)}, {"offset", g.vertices[i].offset}});
    auto& es = j["edges"] = nlohmann::json::array();
    for (const Edge& e : g.edges) es.push_back({{"from", e.from}, {"to", e.to}, {"gen", "e" + std::to_string(e.gen + 1)}});
    return j;
}

}  // namespace tilekit
