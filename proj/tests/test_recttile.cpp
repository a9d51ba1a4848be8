#include <doctest.h>

#include <algorithm>
#include <random>

#include "tilekit/fixtures.hpp"
#include "tilekit/recttile.hpp"

using namespace tilekit;

namespace {

// Plain scanline backtracking: cover the least free cell with a tile whose
// some cell sits on it, no caching, no ordering tricks.
bool brute(const Region& r, const RectTileSet& tiles, std::vector<char>& used) {
    int n = static_cast<int>(used.size());
    int cell = 0;
    while (cell < n && used[cell]) ++cell;
    if (cell == n) return true;
    int cx = cell % r.w, cy = cell / r.w;
    for (const Rect& t : tiles) {
        if (t.w > r.w || t.h > r.h) continue;
        for (int dy = 0; dy < t.h; ++dy)
            for (int dx = 0; dx < t.w; ++dx) {
                int x = cx - dx, y = cy - dy;
                if (!r.torus && (x < 0 || y < 0 || x + t.w > r.w || y + t.h > r.h)) continue;
                std::vector<int> cells;
                bool ok = true;
                for (int j = 0; j < t.h && ok; ++j)
                    for (int i = 0; i < t.w && ok; ++i) {
                        int c = ((y + j + r.h) % r.h) * r.w + (x + i + r.w) % r.w;
                        if (used[c]) ok = false;
                        cells.push_back(c);
                    }
                if (!ok) continue;
                for (int c : cells) used[c] = 1;
                if (brute(r, tiles, used)) return true;
                for (int c : cells) used[c] = 0;
            }
    }
    return false;
}

bool brute(const Region& r, const RectTileSet& tiles) {
    std::vector<char> used(static_cast<std::size_t>(r.area()), 0);
    return brute(r, tiles, used);
}

}  // namespace

TEST_CASE("tile sets") {
    auto t = normalize({{2, 2}, {3, 3}, {2, 2}});
    CHECK(t.size() == 2);
    CHECK_THROWS(normalize({}));
    CHECK_THROWS(normalize({{0, 2}}));
}

TEST_CASE("validator") {
    RegionTiling t{Region::box(4, 2), {{2, 2}}, {{0, 0, 0}, {0, 2, 0}}};
    CHECK(validate_rect_tiling(t));
    t.placements[1].x = 1;
    CHECK_FALSE(validate_rect_tiling(t));
    t.placements[1].x = 3;
    CHECK_FALSE(validate_rect_tiling(t));
    t.region.torus = true;
    CHECK(validate_rect_tiling(t) == false);  // overlaps (0,0) after wrapping
    t.placements[0].x = 1;
    CHECK(validate_rect_tiling(t));
    t.placements.pop_back();
    CHECK_FALSE(validate_rect_tiling(t));
    RegionTiling bad{Region::box(2, 2), {{2, 2}}, {{1, 0, 0}}};
    CHECK_FALSE(validate_rect_tiling(bad));
}

TEST_CASE("lattice tiling of the 13 torus") {
    auto l = lattice_tiling_2_3();
    CHECK(validate_rect_tiling(l));
    CHECK(l.count(0) == 13);
    CHECK(l.count(1) == 13);
    auto big = repeat_tiling(l, 2, 3);
    CHECK(big.region.w == 26);
    CHECK(big.region.h == 39);
    CHECK(validate_rect_tiling(big));
    auto round = RegionTiling::from_json(l.to_json());
    CHECK(validate_rect_tiling(round));
    CHECK(round.to_json() == l.to_json());
}

TEST_CASE("stretching keeps tilings valid") {
    auto l = lattice_tiling_2_3();
    auto wide = stretch_tiling(l, 0, 1);
    CHECK(wide.region.w == 19);
    CHECK(wide.region.h == 13);
    CHECK(validate_rect_tiling(wide));
    auto tall = stretch_tiling(l, 1, 1);
    CHECK(tall.region.w == 13);
    CHECK(tall.region.h == 19);
    CHECK(validate_rect_tiling(tall));
    for (int cut = 0; cut < 13; ++cut)
        for (int c = 0; c <= 3; ++c) {
            CHECK(validate_rect_tiling(stretch_tiling(l, 0, c, cut)));
            CHECK(validate_rect_tiling(stretch_tiling(l, 1, c, cut)));
        }
    CHECK(validate_rect_tiling(stretch_tiling(torus_17_19_tiling(), 0, 2, 5)));
    CHECK(stretch_tiling(l, 0, 0).placements.size() == l.placements.size());
    RegionTiling odd{Region::torus_of(4, 4), {{4, 4}}, {{0, 0, 0}}};
    CHECK_THROWS(stretch_tiling(odd, 0, 1));
}

TEST_CASE("seventeen by nineteen fixture") {
    auto t = torus_17_19_tiling();
    CHECK(validate_rect_tiling(t));
    CHECK(t.count(0) == 19);
    CHECK(t.count(1) == 38);
    auto broken = t;
    broken.placements[0].x += 1;
    CHECK_FALSE(validate_rect_tiling(broken));
    CHECK_FALSE(representable_13_6(17));
    CHECK(representable_13_6(19));
}

TEST_CASE("area obstruction") {
    RectTileSet small{{2, 2}, {2, 3}, {3, 2}};
    auto d = area_obstruction(Region::torus_of(5, 5), small);
    REQUIRE(d);
    CHECK(*d == 2);
    auto r = solve_rect_tiling(Region::torus_of(5, 5), small);
    CHECK(r.verdict == Verdict::Unsat);
    CHECK_FALSE(brute(Region::torus_of(5, 5), small));
    CHECK(area_obstruction(Region::torus_of(7, 7), {{3, 3}, {3, 4}, {4, 3}}) == 3);
    CHECK_FALSE(area_obstruction(Region::torus_of(5, 5), {{2, 2}, {3, 3}}));
    auto box = solve_rect_tiling(Region::box(6, 4), small);
    REQUIRE(box.verdict == Verdict::Sat);
    CHECK(validate_rect_tiling(box.tiling));
}

TEST_CASE("solver agrees with scanline backtracking") {
    std::mt19937 rng(17);
    int sat = 0, checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int k = 1 + static_cast<int>(rng() % 3);
        RectTileSet tiles;
        for (int i = 0; i < k; ++i) tiles.push_back({1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 4)});
        bool torus = rng() % 2;
        Region r{torus, 1 + static_cast<int>(rng() % 7), 1 + static_cast<int>(rng() % 7)};
        auto s = solve_rect_tiling(r, tiles);
        REQUIRE(s.verdict != Verdict::Unknown);
        CHECK(s.sat() == brute(r, normalize(tiles)));
        if (s.verdict == Verdict::Sat) {
            ++sat;
            CHECK(validate_rect_tiling(s.tiling));
        }
        ++checked;
    }
    CHECK(checked == 300);
    CHECK(sat > 30);
}

TEST_CASE("small tori with two square sizes") {
    RectTileSet ss{{3, 3}, {2, 2}};
    for (int a = 2; a <= 11; ++a)
        for (int b = a; b <= 11; ++b) {
            if (a * b > 80) continue;
            auto s = solve_rect_tiling(Region::torus_of(a, b), ss);
            REQUIRE(s.verdict != Verdict::Unknown);
            CHECK(s.sat() == brute(Region::torus_of(a, b), ss));
        }
}

TEST_CASE("torus decisions") {
    auto d13 = decide_ss_torus(13, 13);
    CHECK(d13.verdict == Verdict::Sat);
    CHECK(d13.method == "lattice");
    auto d = decide_ss_torus(60, 61);
    CHECK(d.verdict == Verdict::Sat);
    REQUIRE(d.tiling);
    CHECK(validate_rect_tiling(*d.tiling));
    for (auto [a, b] : std::vector<std::pair<int, int>>{{19, 13}, {13, 19}, {25, 32}, {26, 19}, {6, 13}, {13, 6}, {12, 18}}) {
        auto e = decide_ss_torus(a, b);
        REQUIRE(e.tiling);
        CHECK(e.tiling->region.w == a);
        CHECK(e.tiling->region.h == b);
        CHECK(validate_rect_tiling(*e.tiling));
    }
    CHECK(decide_ss_torus(5, 5).verdict == Verdict::Unsat);
    CHECK(decide_ss_torus(4, 4).verdict == Verdict::Sat);
    auto capped = decide_ss_torus(17, 19, 1000);
    CHECK(capped.verdict == Verdict::Unknown);
    CHECK(capped.method == "budget");
    CHECK_THROWS(decide_ss_torus(0, 3));
}

TEST_CASE("rendering") {
    auto r = render(lattice_tiling_2_3());
    CHECK(std::count(r.begin(), r.end(), '\n') == 13);
    CHECK(r.find('.') == std::string::npos);
}
