#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "tilekit/grid.hpp"

namespace tilekit {

// cells[y * dims[0] + x], y = 0 is the bottom row. One-dimensional
// patterns have a single dimension.
struct Pattern {
    std::vector<int> dims;
    std::vector<int> cells;

    int width() const { return dims.empty() ? 0 : dims[0]; }
    int height() const { return dims.size() > 1 ? dims[1] : 1; }
    int at(int x, int y) const { return cells[static_cast<std::size_t>(y) * width() + x]; }
    int max_side() const;
};

using Window = Pattern;

struct SftSpec {
    int b = 1;
    int dim = 2;
    std::vector<Pattern> patterns;

    int width() const;
    void check() const;  // throws std::invalid_argument
};

using SymbolMap = std::vector<int>;

bool pattern_occurs(const Pattern& p, const Window& w);

SftSpec proper_coloring(int b, int dim = 2);
SftSpec golden_mean(int dim = 1);
// Symbols: 0 = +x, 1 = -x, 2 = +y, 3 = -y (direction of the matched partner).
SftSpec perfect_matching_2d();
SftSpec preset(const std::string& name, int dim = 2);

struct RespectResult {
    bool ok = true;
    bool fast_path = false;   // enumerated windows inside each grid graph
    bool in_hypothesis = true;  // n >= width(S)
};

RespectResult respects_ex(const QuotientGraph& g, const SymbolMap& f, const SftSpec& s, bool force_general = false);
bool respects(const QuotientGraph& g, const SymbolMap& f, const SftSpec& s);
bool respects_1d(const QuotientGraph& g, const SymbolMap& f, const SftSpec& s);

// All label-preserving Z^2-homomorphisms of a w x h grid into g, each given
// as the image of cells in row-major (y, x) order.
template <class Fn>
void for_each_window_hom(const QuotientGraph& g, int w, int h, Fn&& fn);

SftSpec sft_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SftSpec& s);

namespace detail {
std::vector<std::vector<std::vector<int>>> successors(const QuotientGraph& g);
}

template <class Fn>
void for_each_window_hom(const QuotientGraph& g, int w, int h, Fn&& fn) {
    auto succ = detail::successors(g);
    std::vector<int> img(static_cast<std::size_t>(w) * h, -1);
    std::vector<int> cand;
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == w * h) {
            fn(static_cast<const std::vector<int>&>(img));
            return;
        }
        int x = idx % w, y = idx / w;
        std::vector<int> options;
        if (x == 0 && y == 0) {
            options.resize(g.size());
            for (std::size_t v = 0; v < g.size(); ++v) options[v] = static_cast<int>(v);
        } else if (y == 0) {
            options = succ[img[idx - 1]][0];
        } else {
            options = succ[img[idx - w]][1];
            if (x > 0) {
                const auto& other = succ[img[idx - 1]][0];
                std::vector<int> both;
                for (int v : options)
                    if (std::find(other.begin(), other.end(), v) != other.end()) both.push_back(v);
                options.swap(both);
            }
        }
        for (int v : options) {
            img[idx] = v;
            self(self, idx + 1);
        }
    };
    rec(rec, 0);
}

}  // namespace tilekit
