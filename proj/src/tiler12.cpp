#include "tilekit/tiler12.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tilekit {

namespace {

using K = BlockKind;

bool same(const Cell& a, const Cell& b) { return a.label == b.label && a.dx == b.dx && a.dy == b.dy; }

const LabeledGrid& tile_grid(int i, const Params& prm) {
    static std::map<std::tuple<int, int, int, int>, LabeledGrid> cache;
    auto key = std::make_tuple(i, prm.n, prm.p, prm.q);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make_tile_grid(i, prm)).first;
    return it->second;
}

char block_char(const Cell& c) {
    switch (c.label.kind) {
        case K::Cross: return '+';
        case K::A: return 'a';
        case K::B: return 'b';
        case K::C: return 'c';
        case K::D: return 'd';
        case K::Interior: return "123456789ABC"[(c.label.owner - 1) % 12];
    }
    return '?';
}

// Horizontal pitch of a tile in a row: width minus the shared n columns.
int pitch(int tile, const Params& prm) { return tile_layout(tile, prm).width - prm.n; }

void place_row(Tiling12& t, const std::vector<int>& tiles, int x0, int y) {
    int x = x0;
    for (int i : tiles) {
        t.placements.push_back({i, x, y});
        x += pitch(i, t.params);
    }
}

struct RowStep {
    std::vector<int> tiles;
    SideSeq bottom;
};

// One row of G1/G3/G5/G7 moving each d one step toward its target.
RowStep shift_row(const SideSeq& top, std::vector<int>& rem) {
    RowStep r;
    std::size_t i = 0, di = 0;
    while (i < top.size()) {
        if (top[i] == K::C && i + 1 < top.size() && top[i + 1] == K::D && rem[di] < 0) {
            r.tiles.push_back(7);
            r.bottom.insert(r.bottom.end(), {K::D, K::C});
            ++rem[di++];
            i += 2;
        } else if (top[i] == K::D && rem[di] > 0 && i + 1 < top.size() && top[i + 1] == K::C) {
            r.tiles.push_back(5);
            r.bottom.insert(r.bottom.end(), {K::C, K::D});
            --rem[di++];
            i += 2;
        } else if (top[i] == K::D) {
            r.tiles.push_back(3);
            r.bottom.push_back(K::D);
            ++di;
            ++i;
        } else {
            r.tiles.push_back(1);
            r.bottom.push_back(K::C);
            ++i;
        }
    }
    return r;
}

void check_horizontal(const SideSeq& s) {
    for (K k : s)
        if (k != K::C && k != K::D) throw std::invalid_argument("horizontal sides take c and d blocks only");
}

void check_vertical(const SideSeq& s) {
    for (K k : s)
        if (k != K::A && k != K::B) throw std::invalid_argument("vertical sides take a and b blocks only");
}

SideSeq to_vertical(const SideSeq& s) {
    SideSeq out;
    for (K k : s) out.push_back(k == K::C ? K::A : k == K::D ? K::B : k == K::A ? K::C : K::D);
    return out;
}

std::size_t count(const SideSeq& s, K k) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), k)); }

}  // namespace

SideSeq parse_side(const std::string& s) {
    SideSeq out;
    for (char ch : s) {
        switch (ch) {
            case 'a': out.push_back(K::A); break;
            case 'b': out.push_back(K::B); break;
            case 'c': out.push_back(K::C); break;
            case 'd': out.push_back(K::D); break;
            case ' ': break;
            default: throw std::invalid_argument(std::string("bad side symbol '") + ch + "'");
        }
    }
    return out;
}

std::string side_string(const SideSeq& s) {
    std::string out;
    for (K k : s) out += to_string(BlockLabel{k, 0});
    return out;
}

nlohmann::json Tiling12::to_json() const {
    nlohmann::json pj = nlohmann::json::array();
    for (const auto& p : placements) pj.push_back({{"tile", p.tile}, {"name", tile_name(p.tile)}, {"x", p.x}, {"y", p.y}});
    return {{"params", {{"n", params.n}, {"p", params.p}, {"q", params.q}}},
            {"width", width},
            {"height", height},
            {"placements", pj}};
}

Tiling12 Tiling12::from_json(const nlohmann::json& j) {
    Tiling12 t;
    const auto& prm = j.at("params");
    t.params = {prm.at("n").get<int>(), prm.at("p").get<int>(), prm.at("q").get<int>()};
    t.width = j.at("width").get<int>();
    t.height = j.at("height").get<int>();
    for (const auto& p : j.at("placements")) t.placements.push_back({p.at("tile").get<int>(), p.at("x").get<int>(), p.at("y").get<int>()});
    return t;
}

TileLayout BoundarySpec::layout() const {
    TileLayout t;
    t.top = top;
    t.bottom = bottom;
    t.left = left;
    t.right = right;
    t.width = width();
    t.height = height();
    return t;
}

nlohmann::json BoundarySpec::to_json() const {
    return {{"n", params.n},
            {"p", params.p},
            {"q", params.q},
            {"top", side_string(top)},
            {"bottom", side_string(bottom)},
            {"left", side_string(left)},
            {"right", side_string(right)},
            {"separation", separation}};
}

BoundarySpec BoundarySpec::from_json(const nlohmann::json& j) {
    BoundarySpec s;
    s.params = {j.value("n", 1), j.value("p", 2), j.value("q", 3)};
    s.top = parse_side(j.at("top").get<std::string>());
    s.bottom = parse_side(j.at("bottom").get<std::string>());
    s.left = parse_side(j.at("left").get<std::string>());
    s.right = parse_side(j.at("right").get<std::string>());
    s.separation = j.value("separation", 0);
    return s;
}

namespace {

// Region canvas; returns a defect message or fills `canvas`.
std::string paint(const Tiling12& t, std::vector<std::optional<Cell>>& canvas, std::vector<char>* squares) {
    if (!t.params.valid()) return "invalid parameters";
    if (t.width <= 0 || t.height <= 0) return "empty region";
    canvas.assign(static_cast<std::size_t>(t.width) * t.height, std::nullopt);
    if (squares) squares->assign(canvas.size(), 0);
    for (std::size_t k = 0; k < t.placements.size(); ++k) {
        const auto& p = t.placements[k];
        if (p.tile < 1 || p.tile > 12) return "placement " + std::to_string(k) + ": bad tile index";
        const LabeledGrid& g = tile_grid(p.tile, t.params);
        if (p.x < 0 || p.y < 0 || p.x + g.width > t.width || p.y + g.height > t.height)
            return "placement " + std::to_string(k) + " leaves the region";
        for (int y = 0; y < g.height; ++y)
            for (int x = 0; x < g.width; ++x) {
                auto& slot = canvas[static_cast<std::size_t>(p.y + y) * t.width + p.x + x];
                const Cell& c = g.at(x, y);
                if (slot && !same(*slot, c))
                    return "placement " + std::to_string(k) + " disagrees at (" + std::to_string(p.x + x) + "," +
                           std::to_string(p.y + y) + ")";
                slot = c;
                if (squares && x + 1 < g.width && y + 1 < g.height)
                    (*squares)[static_cast<std::size_t>(p.y + y) * t.width + p.x + x] = 1;
            }
    }
    return "";
}

}  // namespace

std::string tiling12_defect(const Tiling12& t) {
    std::vector<std::optional<Cell>> canvas;
    std::vector<char> squares;
    std::string err = paint(t, canvas, &squares);
    if (!err.empty()) return err;
    for (int y = 0; y < t.height; ++y)
        for (int x = 0; x < t.width; ++x)
            if (!canvas[static_cast<std::size_t>(y) * t.width + x])
                return "uncovered cell (" + std::to_string(x) + "," + std::to_string(y) + ")";
    for (int y = 0; y + 1 < t.height; ++y)
        for (int x = 0; x + 1 < t.width; ++x)
            if (!squares[static_cast<std::size_t>(y) * t.width + x])
                return "square at (" + std::to_string(x) + "," + std::to_string(y) + ") not inside one placement";
    return "";
}

bool validate_tiling12(const Tiling12& t) { return tiling12_defect(t).empty(); }

bool boundary_matches(const Tiling12& t, const BoundarySpec& spec) {
    if (t.width != spec.width() || t.height != spec.height()) return false;
    std::vector<std::optional<Cell>> canvas;
    if (!paint(t, canvas, nullptr).empty()) return false;
    LabeledGrid want = make_layout_grid(spec.layout(), spec.params, 0);
    const int n = spec.params.n;
    for (int y = 0; y < t.height; ++y)
        for (int x = 0; x < t.width; ++x) {
            if (x >= n && x < t.width - n && y >= n && y < t.height - n) continue;
            const auto& got = canvas[static_cast<std::size_t>(y) * t.width + x];
            if (!got || !same(*got, want.at(x, y))) return false;
        }
    return true;
}

std::vector<int> canvas_classes(const Tiling12& t, const QuotientGraph& gamma) {
    std::vector<int> out(static_cast<std::size_t>(t.width) * t.height, -1);
    for (const auto& p : t.placements) {
        const LabeledGrid& g = gamma.grids.at(p.tile - 1);
        for (int y = 0; y < g.height; ++y)
            for (int x = 0; x < g.width; ++x) {
                int& slot = out.at(static_cast<std::size_t>(p.y + y) * t.width + p.x + x);
                int v = gamma.cls(p.tile - 1, x, y);
                if (slot >= 0 && slot != v) return {};
                slot = v;
            }
    }
    return out;
}

int transpose_tile(int i) {
    static const int m[] = {0, 1, 3, 2, 4, 8, 7, 6, 5, 12, 11, 10, 9};
    return m[i];
}

int vflip_tile(int i) {
    static const int m[] = {0, 1, 2, 3, 4, 7, 8, 5, 6, 10, 9, 11, 12};
    return m[i];
}

int hflip_tile(int i) {
    static const int m[] = {0, 1, 2, 3, 4, 7, 8, 5, 6, 9, 10, 12, 11};
    return m[i];
}

Tiling12 transpose(const Tiling12& t) {
    Tiling12 out{t.params, t.height, t.width, {}};
    for (const auto& p : t.placements) out.placements.push_back({transpose_tile(p.tile), p.y, p.x});
    return out;
}

Tiling12 flip_vertical(const Tiling12& t) {
    Tiling12 out{t.params, t.width, t.height, {}};
    for (const auto& p : t.placements)
        out.placements.push_back({vflip_tile(p.tile), p.x, t.height - p.y - tile_layout(p.tile, t.params).height});
    return out;
}

Tiling12 flip_horizontal(const Tiling12& t) {
    Tiling12 out{t.params, t.width, t.height, {}};
    for (const auto& p : t.placements)
        out.placements.push_back({hflip_tile(p.tile), t.width - p.x - tile_layout(p.tile, t.params).width, p.y});
    return out;
}

Tiling12 shifted(const Tiling12& t, int dx, int dy) {
    Tiling12 out = t;
    for (auto& p : out.placements) {
        p.x += dx;
        p.y += dy;
    }
    return out;
}

Tiling12 fill_uniform(const Params& prm, int width, int height, int tile) {
    prm.check();
    TileLayout l = tile_layout(tile, prm);
    if (l.top != l.bottom || l.left != l.right) throw std::invalid_argument("tile does not tessellate by translation");
    int px = l.width - prm.n, py = l.height - prm.n;
    if (width < l.width || height < l.height || (width - prm.n) % px || (height - prm.n) % py)
        throw std::invalid_argument("region dimensions do not fit the tile pitch");
    Tiling12 t{prm, width, height, {}};
    for (int y = 0; y + prm.n < height; y += py)
        for (int x = 0; x + prm.n < width; x += px) t.placements.push_back({tile, x, y});
    return t;
}

Tiling12 fill_grid(const Params& prm, const SideSeq& columns, const SideSeq& rows) {
    prm.check();
    check_horizontal(columns);
    check_vertical(rows);
    if (columns.empty() || rows.empty()) throw std::invalid_argument("empty side");
    Tiling12 t{prm, side_span(columns, prm), side_span(rows, prm), {}};
    int y = 0;
    for (K r : rows) {
        int x = 0;
        for (K c : columns) {
            int tile = c == K::C ? (r == K::A ? 1 : 2) : (r == K::A ? 3 : 4);
            t.placements.push_back({tile, x, y});
            x += (c == K::C ? prm.p : prm.q);
        }
        y += (r == K::A ? prm.p : prm.q);
    }
    return t;
}

StripFill propagate_fill(const Params& prm, const SideSeq& top, int rows, const std::vector<int>& shifts) {
    prm.check();
    check_horizontal(top);
    if (top.empty() || rows < 1) throw std::invalid_argument("need a nonempty top and at least one row");
    if (shifts.size() != count(top, K::D)) throw std::invalid_argument("one shift per d block");
    std::vector<int> rem = shifts;
    StripFill out;
    out.tiling = {prm, side_span(top, prm), prm.n + rows * prm.p, {}};
    SideSeq cur = top;
    for (int r = 0; r < rows; ++r) {
        RowStep step = shift_row(cur, rem);
        place_row(out.tiling, step.tiles, 0, out.tiling.height - (prm.n + prm.p) - r * prm.p);
        cur = step.bottom;
    }
    for (int v : rem)
        if (v != 0) throw Infeasible("infeasible: shifts exceed the rows available");
    out.bottom = cur;
    return out;
}

StripFill gather_strip(const Params& prm, const SideSeq& top) {
    prm.check();
    check_horizontal(top);
    if (top.empty()) throw std::invalid_argument("empty top side");
    const int p = prm.p, q = prm.q, n = prm.n;
    StripFill out;
    out.tiling = {prm, side_span(top, prm), n + (q + 1) * p, {}};
    auto row_y = [&](int r) { return out.tiling.height - (n + p) - r * p; };

    // Move every d right until the c's before it number a multiple of q.
    std::vector<int> rem;
    int cs = 0;
    for (K k : top) {
        if (k == K::C) ++cs;
        else rem.push_back(((-cs) % q + q) % q);
    }
    SideSeq cur = top;
    for (int r = 0; r < q - 1; ++r) {
        RowStep step = shift_row(cur, rem);
        place_row(out.tiling, step.tiles, 0, row_y(r));
        cur = step.bottom;
    }
    for (int v : rem)
        if (v != 0) throw Infeasible("infeasible: d blocks too close to route");

    // Each run of q c's becomes p d's.
    std::vector<int> tiles;
    SideSeq next;
    for (std::size_t i = 0; i < cur.size();) {
        if (cur[i] == K::D) {
            tiles.push_back(3);
            next.push_back(K::D);
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < cur.size() && cur[j] == K::C) ++j;
        std::size_t run = j - i;
        for (std::size_t c = 0; c + q <= run; c += q) {
            tiles.push_back(9);
            next.insert(next.end(), static_cast<std::size_t>(p), K::D);
        }
        for (std::size_t c = 0; c < run % q; ++c) {
            tiles.push_back(1);
            next.push_back(K::C);
        }
        i = j;
    }
    place_row(out.tiling, tiles, 0, row_y(q - 1));
    cur = next;

    // From the right, each p d's become q c's; fewer than p stay on the left.
    std::size_t d = 0;
    while (d < cur.size() && cur[d] == K::D) ++d;
    for (std::size_t i = d; i < cur.size(); ++i)
        if (cur[i] != K::C) throw std::logic_error("gather: d blocks not contiguous");
    std::size_t left = d % p;
    tiles.assign(left, 3);
    out.bottom.assign(left, K::D);
    for (std::size_t g = 0; g < d / p; ++g) {
        tiles.push_back(10);
        out.bottom.insert(out.bottom.end(), static_cast<std::size_t>(q), K::C);
    }
    for (std::size_t i = d; i < cur.size(); ++i) {
        tiles.push_back(1);
        out.bottom.push_back(K::C);
    }
    place_row(out.tiling, tiles, 0, row_y(q));
    return out;
}

namespace {

void append(Tiling12& into, const Tiling12& part, int dx, int dy) {
    for (const auto& p : part.placements) into.placements.push_back({p.tile, p.x + dx, p.y + dy});
}

// Cell positions of d (or b) starts along a side.
std::vector<int> marked_starts(const SideSeq& s, K mark, const Params& prm) {
    std::vector<int> out;
    int pos = prm.n;
    for (K k : s) {
        if (k == mark) out.push_back(pos);
        pos += (k == K::A || k == K::C) ? prm.p : prm.q;
    }
    return out;
}

void check_spec(const BoundarySpec& s) {
    const Params& prm = s.params;
    prm.check();
    if (!prm.coprime()) throw Infeasible("infeasible: p and q must be coprime");
    check_horizontal(s.top);
    check_horizontal(s.bottom);
    check_vertical(s.left);
    check_vertical(s.right);
    if (side_span(s.top, prm) != side_span(s.bottom, prm) || side_span(s.left, prm) != side_span(s.right, prm))
        throw std::invalid_argument("opposite sides differ in length");
    const std::size_t corner = static_cast<std::size_t>(prm.q + 1);
    auto corners_clear = [&](const SideSeq& side, K plain) {
        if (side.size() < 2 * corner + 1) return false;
        for (std::size_t i = 0; i < corner; ++i)
            if (side[i] != plain || side[side.size() - 1 - i] != plain) return false;
        return true;
    };
    if (!corners_clear(s.top, K::C) || !corners_clear(s.bottom, K::C) || !corners_clear(s.left, K::A) ||
        !corners_clear(s.right, K::A))
        throw Infeasible("infeasible: each side needs q+1 plain blocks at both corners and one block between");
    const int sep = s.separation > 0 ? s.separation : prm.p * prm.q;
    auto spaced = [&](const SideSeq& side, K mark, int len) {
        auto st = marked_starts(side, mark, prm);
        for (std::size_t i = 0; i < st.size(); ++i) {
            if (st[i] < sep || len - (st[i] + prm.q - prm.n) < sep) return false;
            if (i && st[i] - st[i - 1] < sep) return false;
        }
        return true;
    };
    int w = s.width(), h = s.height();
    if (!spaced(s.top, K::D, w) || !spaced(s.bottom, K::D, w) || !spaced(s.left, K::B, h) || !spaced(s.right, K::B, h))
        throw Infeasible("infeasible: d or b blocks closer than the separation");
}

}  // namespace

Tiling12 fill_rectangle(const BoundarySpec& spec) {
    check_spec(spec);
    const Params& prm = spec.params;
    const int n = prm.n, S = n + (prm.q + 1) * prm.p;
    const int W = spec.width(), H = spec.height();
    const std::size_t corner = static_cast<std::size_t>(prm.q + 1);
    auto middle = [&](const SideSeq& s) { return SideSeq(s.begin() + corner, s.end() - corner); };

    Tiling12 t{prm, W, H, {}};
    Tiling12 sq = fill_uniform(prm, S, S, 1);
    for (int cy : {0, H - S})
        for (int cx : {0, W - S}) append(t, sq, cx, cy);

    StripFill top = gather_strip(prm, middle(spec.top));
    append(t, top.tiling, S - n, H - S);
    StripFill bottom = gather_strip(prm, middle(spec.bottom));
    append(t, flip_vertical(bottom.tiling), S - n, 0);
    StripFill left = gather_strip(prm, to_vertical(middle(spec.left)));
    append(t, transpose(flip_vertical(left.tiling)), 0, S - n);
    StripFill right = gather_strip(prm, to_vertical(middle(spec.right)));
    append(t, transpose(right.tiling), W - S, S - n);

    if (top.bottom != bottom.bottom || left.bottom != right.bottom)
        throw std::logic_error("gathered sides disagree");
    append(t, fill_grid(prm, top.bottom, to_vertical(left.bottom)), S - n, S - n);
    return t;
}

BoundarySpec random_boundary_spec(const Params& prm, std::mt19937_64& rng, int max_marks) {
    prm.check();
    const int sep = prm.p * prm.q;
    const int gap = sep + prm.q;
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto side = [&](K plain, K mark, int marks, int len) {
        SideSeq s(static_cast<std::size_t>(prm.q + 1), plain);
        int slack = len - (marks + 1) * gap;
        std::vector<int> extra(static_cast<std::size_t>(marks) + 1, 0);
        for (int i = 0; i < slack; ++i) ++extra[static_cast<std::size_t>(pick(0, marks))];
        for (int i = 0; i <= marks; ++i) {
            s.insert(s.end(), static_cast<std::size_t>(gap + extra[static_cast<std::size_t>(i)]), plain);
            if (i < marks) s.push_back(mark);
        }
        s.insert(s.end(), static_cast<std::size_t>(prm.q + 1), plain);
        return s;
    };
    int kh = pick(0, max_marks), kv = pick(0, max_marks);
    int lh = (kh + 1) * gap + pick(0, 2 * prm.q), lv = (kv + 1) * gap + pick(0, 2 * prm.q);
    return BoundarySpec{prm, side(K::C, K::D, kh, lh), side(K::C, K::D, kh, lh), side(K::A, K::B, kv, lv),
                        side(K::A, K::B, kv, lv), 0};
}

std::string render(const Tiling12& t) {
    std::vector<std::optional<Cell>> canvas;
    paint(t, canvas, nullptr);
    std::string out;
    for (int y = t.height - 1; y >= 0; --y) {
        for (int x = 0; x < t.width; ++x) {
            std::size_t i = static_cast<std::size_t>(y) * t.width + x;
            out += i < canvas.size() && canvas[i] ? block_char(*canvas[i]) : ' ';
        }
        out += '\n';
    }
    return out;
}

}  // namespace tilekit
