#include "tilekit/recttile.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace tilekit {

namespace {

int wrap(int v, int m) { return ((v % m) + m) % m; }

// Cells covered by a placement, or empty when it leaves a box region.
bool cells_of(const Region& r, const Rect& t, int x, int y, std::vector<int>& out) {
    out.clear();
    if (!r.torus && (x < 0 || y < 0 || x + t.w > r.w || y + t.h > r.h)) return false;
    if (t.w > r.w || t.h > r.h) return false;
    for (int dy = 0; dy < t.h; ++dy)
        for (int dx = 0; dx < t.w; ++dx) out.push_back(wrap(y + dy, r.h) * r.w + wrap(x + dx, r.w));
    return true;
}

char glyph(std::size_t i) {
    static const std::string g = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
    return g[i % g.size()];
}

}  // namespace

RectTileSet normalize(const RectTileSet& tiles) {
    if (tiles.empty()) throw std::invalid_argument("empty tile set");
    RectTileSet out;
    for (const Rect& t : tiles) {
        if (t.w <= 0 || t.h <= 0) throw std::invalid_argument("tile sides must be positive");
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    }
    return out;
}

nlohmann::json RegionTiling::to_json() const {
    nlohmann::json tj = nlohmann::json::array();
    for (const Rect& t : tiles) tj.push_back({t.w, t.h});
    nlohmann::json pj = nlohmann::json::array();
    for (const auto& p : placements) pj.push_back({p.tile, p.x, p.y});
    return {{"region", {{"torus", region.torus}, {"w", region.w}, {"h", region.h}}},
            {"tiles", tj},
            {"placements", pj}};
}

RegionTiling RegionTiling::from_json(const nlohmann::json& j) {
    RegionTiling t;
    const auto& r = j.at("region");
    t.region = {r.at("torus").get<bool>(), r.at("w").get<int>(), r.at("h").get<int>()};
    for (const auto& e : j.at("tiles")) t.tiles.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    for (const auto& e : j.at("placements")) t.placements.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
    return t;
}

std::size_t RegionTiling::count(int tile) const {
    return static_cast<std::size_t>(
        std::count_if(placements.begin(), placements.end(), [&](const RectPlacement& p) { return p.tile == tile; }));
}

bool validate_rect_tiling(const RegionTiling& t) {
    const Region& r = t.region;
    if (r.w <= 0 || r.h <= 0) return false;
    std::vector<char> seen(static_cast<std::size_t>(r.area()), 0);
    std::vector<int> cells;
    for (const auto& p : t.placements) {
        if (p.tile < 0 || p.tile >= static_cast<int>(t.tiles.size())) return false;
        if (!cells_of(r, t.tiles[p.tile], p.x, p.y, cells)) return false;
        for (int c : cells) {
            if (seen[c]) return false;
            seen[c] = 1;
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::string render(const RegionTiling& t) {
    const Region& r = t.region;
    std::string grid(static_cast<std::size_t>(r.area()), '.');
    std::vector<int> cells;
    for (std::size_t i = 0; i < t.placements.size(); ++i) {
        const auto& p = t.placements[i];
        if (p.tile < 0 || p.tile >= static_cast<int>(t.tiles.size())) continue;
        if (!cells_of(r, t.tiles[p.tile], p.x, p.y, cells)) continue;
        for (int c : cells) grid[c] = glyph(i);
    }
    std::string out;
    for (int y = r.h - 1; y >= 0; --y) {
        out.append(grid, static_cast<std::size_t>(y) * r.w, r.w);
        out += '\n';
    }
    return out;
}

namespace {

struct ExactCover {
    struct Option {
        RectPlacement at;
        std::vector<int> cells;
    };

    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::vector<Option> options;
    std::vector<std::vector<int>> covering;  // cell -> options containing it
    std::vector<int> blocked;                // option -> used cells inside it
    std::vector<int> avail;                  // cell -> open options containing it
    std::vector<char> used;
    std::vector<int> chosen;
    long long remaining = 0;

    // Failed covered-cell sets, keyed by a 128-bit Zobrist hash. Direct mapped
    // and overwritten on clashes, so a hit is always an exact key match.
    std::vector<std::array<std::uint64_t, 2>> zobrist;
    std::array<std::uint64_t, 2> key{0, 0};
    std::vector<std::array<std::uint64_t, 2>> failed;
    int cache_bits = 10;

    ExactCover(const Region& region, const RectTileSet& tiles, std::uint64_t b) : budget(b) {
        std::size_t n = static_cast<std::size_t>(region.area());
        covering.resize(n);
        std::vector<int> cells;
        for (int t = 0; t < static_cast<int>(tiles.size()); ++t)
            for (int y = 0; y < region.h; ++y)
                for (int x = 0; x < region.w; ++x)
                    if (cells_of(region, tiles[t], x, y, cells)) {
                        for (int c : cells) covering[c].push_back(static_cast<int>(options.size()));
                        options.push_back({{t, x, y}, cells});
                    }
        blocked.assign(options.size(), 0);
        avail.resize(n);
        for (std::size_t c = 0; c < n; ++c) avail[c] = static_cast<int>(covering[c].size());
        used.assign(n, 0);
        remaining = static_cast<long long>(n);
        std::mt19937_64 rng(0x7113);
        zobrist.resize(n);
        for (auto& z : zobrist) z = {rng(), rng()};
        key = {rng(), rng() | 1};
        while (cache_bits < 21 && (std::size_t{1} << cache_bits) < n * 4096) ++cache_bits;
        failed.assign(std::size_t{1} << cache_bits, {0, 0});
    }

    std::size_t slot() const { return static_cast<std::size_t>(key[0] >> (64 - cache_bits)); }

    void take(int o) {
        for (int c : options[o].cells) {
            used[c] = 1;
            key[0] ^= zobrist[c][0];
            key[1] ^= zobrist[c][1];
            for (int q : covering[c])
                if (blocked[q]++ == 0)
                    for (int d : options[q].cells) --avail[d];
        }
        remaining -= static_cast<long long>(options[o].cells.size());
        chosen.push_back(o);
    }

    void undo(int o) {
        for (auto it = options[o].cells.rbegin(); it != options[o].cells.rend(); ++it) {
            int c = *it;
            used[c] = 0;
            key[0] ^= zobrist[c][0];
            key[1] ^= zobrist[c][1];
            for (int q : covering[c])
                if (--blocked[q] == 0)
                    for (int d : options[q].cells) ++avail[d];
        }
        remaining += static_cast<long long>(options[o].cells.size());
        chosen.pop_back();
    }

    // Branch on the free cell with the fewest open options, least index first.
    bool dfs() {
        if (remaining == 0) return true;
        if (budget && nodes >= budget) {
            out_of_budget = true;
            return false;
        }
        if (failed[slot()] == key) return false;
        ++nodes;
        int best = -1;
        for (int c = 0; c < static_cast<int>(used.size()); ++c)
            if (!used[c] && (best < 0 || avail[c] < avail[best])) {
                best = c;
                if (avail[c] == 0) return false;
            }
        std::vector<int> open;
        for (int o : covering[best])
            if (blocked[o] == 0) open.push_back(o);
        for (int o : open) {
            take(o);
            if (dfs()) return true;
            undo(o);
            if (out_of_budget) return false;
        }
        failed[slot()] = key;
        return false;
    }
};

}  // namespace

RectSearch solve_rect_tiling(const Region& region, const RectTileSet& input, std::uint64_t budget, bool area_check) {
    if (region.w <= 0 || region.h <= 0) throw std::invalid_argument("region sides must be positive");
    RectTileSet tiles = normalize(input);
    RectSearch out;
    out.tiling.region = region;
    out.tiling.tiles = tiles;
    if (area_check && area_obstruction(region, tiles)) {
        out.verdict = Verdict::Unsat;
        return out;
    }
    ExactCover ec(region, tiles, budget);
    bool found = false;
    if (region.torus) {
        // Translate any tiling so that some tile has its anchor at the origin.
        for (std::size_t o = 0; o < ec.options.size() && !found && !ec.out_of_budget; ++o) {
            const auto& at = ec.options[o].at;
            if (at.x != 0 || at.y != 0) continue;
            ec.take(static_cast<int>(o));
            if (ec.dfs()) found = true;
            else ec.undo(static_cast<int>(o));
        }
    } else {
        found = ec.dfs();
    }
    out.nodes = ec.nodes;
    if (found) {
        out.verdict = Verdict::Sat;
        for (int o : ec.chosen) out.tiling.placements.push_back(ec.options[o].at);
    } else {
        out.verdict = ec.out_of_budget ? Verdict::Unknown : Verdict::Unsat;
    }
    return out;
}

RegionTiling lattice_tiling_2_3() {
    RegionTiling t;
    t.region = Region::torus_of(13, 13);
    t.tiles = {{3, 3}, {2, 2}};
    std::vector<std::pair<int, int>> lattice;
    for (int i = 0; i < 13; ++i) lattice.emplace_back(wrap(3 * i, 13), wrap(2 * i, 13));
    for (auto [x, y] : lattice) t.placements.push_back({0, x, y});
    for (auto [x, y] : lattice) t.placements.push_back({1, wrap(x + 3, 13), y});
    return t;
}

RegionTiling repeat_tiling(const RegionTiling& t, int mx, int my) {
    if (!t.region.torus || mx <= 0 || my <= 0) throw std::invalid_argument("repeat needs a torus and positive factors");
    RegionTiling out;
    out.region = Region::torus_of(t.region.w * mx, t.region.h * my);
    out.tiles = t.tiles;
    for (int j = 0; j < my; ++j)
        for (int i = 0; i < mx; ++i)
            for (const auto& p : t.placements)
                out.placements.push_back({p.tile, p.x + i * t.region.w, p.y + j * t.region.h});
    return out;
}

RegionTiling transpose(const RegionTiling& t) {
    RegionTiling out;
    out.region = {t.region.torus, t.region.h, t.region.w};
    for (const Rect& r : t.tiles) out.tiles.push_back({r.h, r.w});
    for (const auto& p : t.placements) out.placements.push_back({p.tile, p.y, p.x});
    return out;
}

RegionTiling stretch_tiling(const RegionTiling& t, int axis, int c, int cut) {
    if (axis == 1) return transpose(stretch_tiling(transpose(t), 0, c, cut));
    if (axis != 0) throw std::invalid_argument("axis must be 0 or 1");
    if (!t.region.torus) throw std::invalid_argument("stretching needs a torus");
    if (c < 0) throw std::invalid_argument("stretch factor must be nonnegative");
    for (const Rect& r : t.tiles)
        if (6 % r.w != 0) throw std::invalid_argument("tile widths must divide 6");
    const int a = t.region.w, gap = 6 * c;
    const int x0 = wrap(cut, a);
    RegionTiling out;
    out.region = Region::torus_of(a + gap, t.region.h);
    out.tiles = t.tiles;
    const int W = out.region.w;
    for (const auto& p : t.placements) {
        int w = t.tiles[p.tile].w;
        int r = wrap(p.x - x0, a);
        // Tiles meeting column x0 have a signed offset in (-w, 0].
        int s = r == 0 ? 0 : (r > a - w ? r - a : 1);
        if (s == 1) {
            out.placements.push_back({p.tile, wrap(x0 + gap + r, W), p.y});
            continue;
        }
        out.placements.push_back({p.tile, wrap(x0 + gap + s, W), p.y});
        for (int k = 0; k < gap / w; ++k) out.placements.push_back({p.tile, wrap(x0 + s + k * w, W), p.y});
    }
    return out;
}

std::optional<int> area_obstruction(const Region& region, const RectTileSet& tiles) {
    long long g = 0;
    for (const Rect& t : tiles) g = std::gcd(g, static_cast<long long>(t.w) * t.h);
    for (long long d = 2; d <= g; ++d)
        if (g % d == 0 && region.area() % d != 0) return static_cast<int>(d);
    return std::nullopt;
}

bool representable_13_6(int a) {
    for (int m = 0; 13 * m <= a; ++m)
        if ((a - 13 * m) % 6 == 0 && a > 0) return true;
    return false;
}

namespace {

// Least m with a = 13m + 6k, k >= 0.
int least_13(int a) {
    for (int m = 0; 13 * m <= a; ++m)
        if ((a - 13 * m) % 6 == 0) return m;
    return -1;
}

// a multiple of 6: bands of 2x2 and 3x3 tiles stacked to height b = 2x + 3y.
RegionTiling strips(int a, int b) {
    RegionTiling t;
    t.region = Region::torus_of(a, b);
    t.tiles = {{3, 3}, {2, 2}};
    int threes = b % 2;  // b - 3 * threes is even
    int y = 0;
    for (int band = 0; band < threes; ++band, y += 3)
        for (int x = 0; x < a; x += 3) t.placements.push_back({0, x, y});
    for (; y < b; y += 2)
        for (int x = 0; x < a; x += 2) t.placements.push_back({1, x, y});
    return t;
}

}  // namespace

TorusDecision decide_ss_torus(int a, int b, std::uint64_t budget) {
    if (a <= 0 || b <= 0) throw std::invalid_argument("torus sides must be positive");
    TorusDecision d;
    RectTileSet tiles{{3, 3}, {2, 2}};
    if (representable_13_6(a) && representable_13_6(b)) {
        int ma = least_13(a), mb = least_13(b);
        if (ma > 0 && mb > 0) {
            RegionTiling t = repeat_tiling(lattice_tiling_2_3(), ma, mb);
            int ca = (a - 13 * ma) / 6, cb = (b - 13 * mb) / 6;
            d.method = ca || cb ? "lattice+stretch" : "lattice";
            if (ca) t = stretch_tiling(t, 0, ca);
            if (cb) t = stretch_tiling(t, 1, cb);
            d.tiling = t;
        } else if (ma == 0) {
            d.method = "strips";
            d.tiling = strips(a, b);
        } else {
            d.method = "strips";
            d.tiling = transpose(strips(b, a));
        }
        d.verdict = Verdict::Sat;
        return d;
    }
    if (area_obstruction(Region::torus_of(a, b), tiles)) {
        d.method = "obstruction";
        d.verdict = Verdict::Unsat;
        return d;
    }
    auto s = solve_rect_tiling(Region::torus_of(a, b), tiles, budget);
    d.verdict = s.verdict;
    d.method = s.verdict == Verdict::Unknown ? "budget" : "search";
    if (s.verdict == Verdict::Sat) d.tiling = s.tiling;
    return d;
}

}  // namespace tilekit
