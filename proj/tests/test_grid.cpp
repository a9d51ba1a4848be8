#include <doctest.h>

#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "tilekit/grid.hpp"

using namespace tilekit;

namespace {

// Independent class count: union-find over all cells of all grids,
// joining cells whose (label, offset) agree.
struct Uf {
    std::vector<int> parent;
    explicit Uf(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

std::pair<int, int> oracle_counts(const std::vector<LabeledGrid>& grids) {
    std::vector<std::tuple<int, int, int>> cells;  // grid, x, y
    for (int g = 0; g < static_cast<int>(grids.size()); ++g)
        for (int y = 0; y < grids[g].height; ++y)
            for (int x = 0; x < grids[g].width; ++x) cells.emplace_back(g, x, y);
    Uf uf(static_cast<int>(cells.size()));
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i + 1; j < cells.size(); ++j) {
            auto [gi, xi, yi] = cells[i];
            auto [gj, xj, yj] = cells[j];
            const Cell& a = grids[gi].at(xi, yi);
            const Cell& b = grids[gj].at(xj, yj);
            if (a.label.kind == BlockKind::Interior || a.label != b.label) continue;
            if (a.dx == b.dx && a.dy == b.dy) uf.join(static_cast<int>(i), static_cast<int>(j));
        }
    std::map<std::tuple<int, int, int>, int> index;
    for (std::size_t i = 0; i < cells.size(); ++i) index[cells[i]] = static_cast<int>(i);
    std::set<int> roots;
    for (std::size_t i = 0; i < cells.size(); ++i) roots.insert(uf.find(static_cast<int>(i)));
    std::set<std::tuple<int, int, int>> edges;
    for (auto [g, x, y] : cells) {
        int u = uf.find(index[{g, x, y}]);
        if (x + 1 < grids[g].width) edges.insert({u, uf.find(index[{g, x + 1, y}]), 0});
        if (y + 1 < grids[g].height) edges.insert({u, uf.find(index[{g, x, y + 1}]), 1});
    }
    return {static_cast<int>(roots.size()), static_cast<int>(edges.size())};
}

std::string row_string(const LabeledGrid& g, int y) {
    std::string s;
    for (int x = 0; x < g.width; ++x) {
        auto l = to_string(g.at(x, y).label);
        s += l[0];
    }
    return s;
}

std::string col_string(const LabeledGrid& g, int x) {
    std::string s;
    for (int y = g.height - 1; y >= 0; --y) s += to_string(g.at(x, y).label)[0];
    return s;
}

}  // namespace

TEST_CASE("make_grid counts") {
    auto g = make_grid(3, 3);
    CHECK(g.vertex_count() == 9);
    CHECK(g.edge_count() == 12);
    CHECK(make_grid(1, 1).edge_count() == 0);
    auto h = make_grid(7, 3);
    int edges = 0;
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 7; ++x) edges += (x + 1 < 7) + (y + 1 < 3);
    CHECK(h.vertex_count() == 21);
    CHECK(h.edge_count() == static_cast<std::size_t>(edges));
    CHECK(edges == 32);
    CHECK_THROWS(make_grid(0, 3));
}

TEST_CASE("make_torus") {
    auto t = make_torus(3, 3);
    CHECK(t.size() == 9);
    CHECK(t.edges.size() == 18);
    CHECK(make_torus(17, 19).size() == 323);
    auto s = make_torus(2, 2);
    CHECK(s.size() == 4);
    CHECK(s.edges.size() == 8);
    std::map<std::pair<int, int>, std::set<int>> gens;
    for (auto e : s.edges) gens[{std::min(e.from, e.to), std::max(e.from, e.to)}].insert(e.gen);
    for (auto& [k, v] : gens) CHECK(v.size() == 1);
    std::vector<int> deg(4, 0);
    for (auto e : s.edges) ++deg[e.from], ++deg[e.to];
    for (int d : deg) CHECK(d == 4);
    auto c = make_torus(std::vector<int>{5, 5, 5});
    CHECK(c.size() == 125);
    CHECK(c.edges.size() == 375);
    CHECK_THROWS(make_torus(0, 2));
}

TEST_CASE("tile dimensions") {
    Params prm{1, 2, 3};
    auto g1 = make_tile_grid(1, prm);
    CHECK((g1.width == 3 && g1.height == 3));
    auto g9 = make_tile_grid(9, prm);
    CHECK((g9.width == 7 && g9.height == 3));
    auto g5 = make_tile_grid(5, prm);
    CHECK((g5.width == 6 && g5.height == 3));
    int n = prm.n, p = prm.p, q = prm.q;
    std::vector<std::pair<int, int>> dims = {{p + n, p + n},     {p + n, q + n},     {q + n, p + n},
                                             {q + n, q + n},     {p + q + n, p + n}, {p + n, p + q + n},
                                             {p + q + n, p + n}, {p + n, p + q + n}, {p * q + n, p + n},
                                             {p * q + n, p + n}, {p + n, p * q + n}, {p + n, p * q + n}};
    for (int i = 1; i <= 12; ++i) {
        auto g = make_tile_grid(i, prm);
        CHECK(g.width == dims[i - 1].first);
        CHECK(g.height == dims[i - 1].second);
    }
    CHECK_THROWS(make_tile_grid(13, prm));
    CHECK_THROWS(make_tile_grid(1, Params{2, 2, 3}));
}

TEST_CASE("tile boundary layouts") {
    Params prm{1, 2, 3};
    auto g5 = make_tile_grid(5, prm);
    CHECK(row_string(g5, 2) == "XddXcX");
    CHECK(row_string(g5, 0) == "XcXddX");
    CHECK(col_string(g5, 0) == "XaX");
    auto g7 = make_tile_grid(7, prm);
    CHECK(row_string(g7, 2) == "XcXddX");
    CHECK(row_string(g7, 0) == "XddXcX");
    auto g6 = make_tile_grid(6, prm);
    CHECK(col_string(g6, 0) == "XaXbbX");
    CHECK(col_string(g6, 2) == "XbbXaX");
    auto g8 = make_tile_grid(8, prm);
    CHECK(col_string(g8, 0) == "XbbXaX");
    CHECK(col_string(g8, 2) == "XaXbbX");
    auto g9 = make_tile_grid(9, prm);
    CHECK(row_string(g9, 2) == "XcXcXcX");
    CHECK(row_string(g9, 0) == "XddXddX");
    auto g11 = make_tile_grid(11, prm);
    CHECK(col_string(g11, 0) == "XaXaXaX");
    CHECK(col_string(g11, 2) == "XbbXbbX");
    auto g12 = make_tile_grid(12, prm);
    CHECK(col_string(g12, 0) == "XbbXbbX");
    CHECK(col_string(g12, 2) == "XaXaXaX");
}

TEST_CASE("offsets stay inside block dimensions") {
    for (Params prm : {Params{1, 2, 3}, Params{2, 5, 7}, Params{1, 5, 2}, Params{3, 7, 9}}) {
        for (int i = 1; i <= 12; ++i) {
            auto g = make_tile_grid(i, prm);
            for (const Cell& c : g.cells) {
                if (c.label.kind == BlockKind::Interior) {
                    CHECK(c.label.owner == i);
                    CHECK(c.dx < g.width - 2 * prm.n);
                    CHECK(c.dy < g.height - 2 * prm.n);
                    continue;
                }
                auto d = block_dims(c.label.kind, prm);
                CHECK(c.dx >= 0);
                CHECK(c.dy >= 0);
                CHECK(c.dx < d[0]);
                CHECK(c.dy < d[1]);
            }
        }
    }
}

TEST_CASE("gamma agrees with union-find oracle") {
    for (Params prm : {Params{1, 2, 3}, Params{1, 3, 4}, Params{1, 5, 2}, Params{2, 5, 7}}) {
        auto g = make_gamma(prm);
        std::vector<LabeledGrid> grids;
        for (int i = 1; i <= 12; ++i) grids.push_back(make_tile_grid(i, prm));
        auto [v, e] = oracle_counts(grids);
        CHECK(static_cast<int>(g.size()) == v);
        CHECK(static_cast<int>(g.edges.size()) == e);
        CHECK(g.unique_generators());
        std::map<BlockKind, int> per;
        for (auto& vx : g.vertices) ++per[vx.label.kind];
        int n = prm.n, p = prm.p, q = prm.q;
        CHECK(per[BlockKind::Cross] == n * n);
        CHECK(per[BlockKind::A] == n * (p - n));
        CHECK(per[BlockKind::B] == n * (q - n));
        CHECK(per[BlockKind::C] == (p - n) * n);
        CHECK(per[BlockKind::D] == (q - n) * n);
    }
    CHECK(make_gamma(Params{1, 2, 3}).size() == 52);
}

TEST_CASE("gamma contains the 2x2 torus on the caca tile") {
    auto g = make_gamma(Params{1, 2, 3});
    auto t = make_torus(2, 2);
    std::set<int> image;
    std::set<std::tuple<int, int, int>> es;
    for (auto e : g.edges) es.insert({e.from, e.to, e.gen});
    auto img = [&](int id) { return g.cls(0, t.vertices[id].offset[0], t.vertices[id].offset[1]); };
    for (std::size_t v = 0; v < t.size(); ++v) image.insert(img(static_cast<int>(v)));
    CHECK(image.size() == 4);
    for (auto e : t.edges) CHECK(es.count({img(e.from), img(e.to), e.gen}) == 1);
    int induced = 0;
    for (auto e : g.edges) induced += image.count(e.from) && image.count(e.to);
    CHECK(induced == 8);
}

TEST_CASE("gamma1 vertex counts") {
    CHECK(make_gamma1(Params{3, 7, 9}).size() == 13);
    CHECK(make_gamma1(Params{1, 2, 3}).size() == 4);
    auto g = make_gamma1(Params{2, 5, 7});
    CHECK(g.size() == 10);
    CHECK(oracle_counts(g.grids).first == 10);
}

TEST_CASE("quotient basics") {
    auto single = quotient({make_grid(4, 3)});
    CHECK(single.size() == 12);
    CHECK(single.edges.size() == make_grid(4, 3).edge_count());
    LabeledGrid x = make_grid(2, 2);
    for (Cell& c : x.cells) c.label = BlockLabel{BlockKind::Cross, 0};
    CHECK(quotient({x, x}).size() == 4);
    Params prm{1, 2, 3};
    std::vector<LabeledGrid> grids;
    for (int i = 1; i <= 12; ++i) grids.push_back(make_tile_grid(i, prm));
    auto a = quotient(grids);
    auto b = make_gamma(prm);
    CHECK(a.size() == b.size());
    CHECK(to_json(a)["edges"] == to_json(b)["edges"]);
    auto again = quotient(b.grids);
    CHECK(to_json(again) == to_json(a));
    LabeledGrid bad = make_grid(2, 1);
    bad.at(0, 0) = Cell{{BlockKind::A, 0}, 0, 0};
    bad.at(1, 0) = Cell{{BlockKind::A, 0}, 0, 1};
    LabeledGrid bad2 = make_grid(1, 1);
    bad2.at(0, 0) = Cell{{BlockKind::A, 0}, 0, 0};
    CHECK_THROWS(quotient({bad, bad2}));
}

TEST_CASE("canonical order and determinism") {
    auto g = make_gamma(Params{1, 2, 3});
    for (std::size_t i = 1; i < g.size(); ++i) {
        auto& a = g.vertices[i - 1];
        auto& b = g.vertices[i];
        CHECK(std::tie(a.grid, a.x, a.y) < std::tie(b.grid, b.x, b.y));
    }
    CHECK(to_json(g).dump() == to_json(make_gamma(Params{1, 2, 3})).dump());
}
