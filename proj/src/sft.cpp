#include "tilekit/sft.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

namespace tilekit {

int Pattern::max_side() const { return dims.empty() ? 0 : *std::max_element(dims.begin(), dims.end()); }

int SftSpec::width() const {
    int m = 1;
    for (const auto& p : patterns) m = std::max(m, p.max_side());
    return m - 1;
}

void SftSpec::check() const {
    if (b < 1) throw std::invalid_argument("alphabet size must be positive");
    if (dim != 1 && dim != 2) throw std::invalid_argument("only dimensions 1 and 2 are supported");
    for (const auto& p : patterns) {
        if (static_cast<int>(p.dims.size()) != dim) throw std::invalid_argument("pattern dimension mismatch");
        std::size_t cells = 1;
        for (int d : p.dims) {
            if (d < 1) throw std::invalid_argument("pattern sides must be positive");
            cells *= static_cast<std::size_t>(d);
        }
        if (cells != p.cells.size()) throw std::invalid_argument("pattern cell count mismatch");
        for (int v : p.cells)
            if (v < 0 || v >= b) throw std::invalid_argument("pattern symbol outside alphabet");
    }
}

bool pattern_occurs(const Pattern& p, const Window& w) {
    if (p.dims.size() != w.dims.size()) throw std::invalid_argument("dimension mismatch");
    if (p.width() > w.width() || p.height() > w.height()) throw std::invalid_argument("window smaller than pattern");
    for (int oy = 0; oy + p.height() <= w.height(); ++oy)
        for (int ox = 0; ox + p.width() <= w.width(); ++ox) {
            bool match = true;
            for (int y = 0; y < p.height() && match; ++y)
                for (int x = 0; x < p.width() && match; ++x) match = p.at(x, y) == w.at(ox + x, oy + y);
            if (match) return true;
        }
    return false;
}

SftSpec proper_coloring(int b, int dim) {
    SftSpec s;
    s.b = b;
    s.dim = dim;
    for (int c = 0; c < b; ++c) {
        if (dim == 1) {
            s.patterns.push_back({{2}, {c, c}});
        } else {
            s.patterns.push_back({{2, 1}, {c, c}});
            s.patterns.push_back({{1, 2}, {c, c}});
        }
    }
    return s;
}

SftSpec golden_mean(int dim) {
    SftSpec s;
    s.b = 2;
    s.dim = dim;
    if (dim == 1) {
        s.patterns.push_back({{2}, {1, 1}});
    } else {
        s.patterns.push_back({{2, 1}, {1, 1}});
        s.patterns.push_back({{1, 2}, {1, 1}});
    }
    return s;
}

SftSpec perfect_matching_2d() {
    SftSpec s;
    s.b = 4;
    s.dim = 2;
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) {
            if ((u == 0) != (v == 1)) s.patterns.push_back({{2, 1}, {u, v}});
            if ((u == 2) != (v == 3)) s.patterns.push_back({{1, 2}, {u, v}});
        }
    return s;
}

SftSpec preset(const std::string& name, int dim) {
    std::smatch m;
    static const std::regex proper(R"(proper-coloring\((\d+)\))");
    if (std::regex_match(name, m, proper)) return proper_coloring(std::stoi(m[1]), dim);
    if (name == "golden-mean") return golden_mean(dim);
    if (name == "perfect-matching(2D)" || name == "perfect-matching") return perfect_matching_2d();
    throw std::invalid_argument("unknown preset: " + name);
}

namespace detail {
std::vector<std::vector<std::vector<int>>> successors(const QuotientGraph& g) {
    std::vector<std::vector<std::vector<int>>> succ(g.size(), std::vector<std::vector<int>>(g.dim));
    for (const Edge& e : g.edges) succ[e.from][e.gen].push_back(e.to);
    for (auto& s : succ)
        for (auto& l : s) {
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
        }
    return succ;
}
}  // namespace detail

namespace {

void check_map(const QuotientGraph& g, const SymbolMap& f, const SftSpec& s) {
    s.check();
    if (f.size() != g.size()) throw std::invalid_argument("symbol map is not total");
    for (int v : f)
        if (v < 0 || v >= s.b) throw std::invalid_argument("symbol outside alphabet");
}

bool inside_grids(const QuotientGraph& g, const SymbolMap& f, const SftSpec& s) {
    for (std::size_t gi = 0; gi < g.grids.size(); ++gi) {
        const LabeledGrid& grid = g.grids[gi];
        for (const Pattern& p : s.patterns)
            for (int oy = 0; oy + p.height() <= grid.height; ++oy)
                for (int ox = 0; ox + p.width() <= grid.width; ++ox) {
                    bool match = true;
                    for (int y = 0; y < p.height() && match; ++y)
                        for (int x = 0; x < p.width() && match; ++x)
                            match = f[g.cls(static_cast<int>(gi), ox + x, oy + y)] == p.at(x, y);
                    if (match) return false;
                }
    }
    return true;
}

bool general(const QuotientGraph& g, const SymbolMap& f, const SftSpec& s) {
    for (const Pattern& p : s.patterns) {
        bool hit = false;
        for_each_window_hom(g, p.width(), p.height(), [&](const std::vector<int>& img) {
            if (hit) return;
            for (std::size_t i = 0; i < img.size(); ++i)
                if (f[img[i]] != p.cells[i]) return;
            hit = true;
        });
        if (hit) return false;
    }
    return true;
}

}  // namespace

RespectResult respects_ex(const QuotientGraph& g, const SymbolMap& f, const SftSpec& s, bool force_general) {
    if (s.dim != 2 || g.dim != 2) throw std::invalid_argument("respects needs a two-dimensional SFT and graph");
    check_map(g, f, s);
    RespectResult r;
    r.in_hypothesis = g.has_params && g.params.n >= s.width();
    r.fast_path = r.in_hypothesis && !force_general && !g.grids.empty();
    r.ok = r.fast_path ? inside_grids(g, f, s) : general(g, f, s);
    return r;
}

bool respects(const QuotientGraph& g, const SymbolMap& f, const SftSpec& s) { return respects_ex(g, f, s).ok; }

bool respects_1d(const QuotientGraph& g, const SymbolMap& f, const SftSpec& s) {
    if (s.dim != 1 || g.dim != 1) throw std::invalid_argument("respects_1d needs a one-dimensional SFT and graph");
    check_map(g, f, s);
    if (g.has_params && g.params.n < s.width())
        throw std::invalid_argument("n must be at least the width of the subshift");
    return inside_grids(g, f, s);
}

SftSpec sft_from_json(const nlohmann::json& j) {
    SftSpec s;
    if (j.is_string()) return preset(j.get<std::string>());
    if (j.contains("preset")) return preset(j.at("preset").get<std::string>(), j.value("dim", 2));
    s.b = j.at("b").get<int>();
    s.dim = j.at("dim").get<int>();
    for (const auto& p : j.at("patterns"))
        s.patterns.push_back({p.at("dims").get<std::vector<int>>(), p.at("cells").get<std::vector<int>>()});
    s.check();
    return s;
}

nlohmann::json to_json(const SftSpec& s) {
    nlohmann::json j{{"b", s.b}, {"dim", s.dim}, {"patterns", nlohmann::json::array()}};
    for (const auto& p : s.patterns) j["patterns"].push_back({{"dims", p.dims}, {"cells", p.cells}});
    return j;
}

}  // namespace tilekit
