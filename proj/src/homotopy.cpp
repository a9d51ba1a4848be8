#include "tilekit/homotopy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace tilekit {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// (edge index, +1 forward / -1 backward) for every ordered adjacent pair.
std::map<std::pair<int, int>, std::pair<int, int>> edge_index(const TargetGraph& h) {
    std::map<std::pair<int, int>, std::pair<int, int>> m;
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        auto [a, b] = h.edges[i];
        m.emplace(std::make_pair(a, b), std::make_pair(static_cast<int>(i), 1));
        m.emplace(std::make_pair(b, a), std::make_pair(static_cast<int>(i), -1));
    }
    return m;
}

long long mod(long long a, long long p) { return ((a % p) + p) % p; }

std::vector<std::vector<cpp_rational>> to_rational(const std::vector<std::vector<int>>& rows, std::size_t ncols) {
    std::vector<std::vector<cpp_rational>> m;
    for (const auto& r : rows) {
        std::vector<cpp_rational> row(ncols);
        for (std::size_t j = 0; j < ncols; ++j) row[j] = r[j];
        m.push_back(std::move(row));
    }
    return m;
}

std::vector<Weighting> nullspace(std::vector<std::vector<cpp_rational>> m, std::size_t ncols) {
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t pr = row;
        while (pr < m.size() && m[pr][col] == 0) ++pr;
        if (pr == m.size()) continue;
        std::swap(m[row], m[pr]);
        cpp_rational inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            cpp_rational f = m[r][col];
            for (std::size_t j = 0; j < ncols; ++j) m[r][j] -= f * m[row][j];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++row;
    }
    std::vector<char> is_pivot(ncols, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    std::vector<Weighting> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<cpp_rational> v(ncols, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][f];
        cpp_int l = 1;
        for (const auto& x : v) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
        std::vector<cpp_int> ints;
        cpp_int g = 0;
        for (const auto& x : v) {
            cpp_int k = boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x));
            g = boost::multiprecision::gcd(g, k);
            ints.push_back(k);
        }
        Weighting w;
        for (auto& k : ints) w.push_back(static_cast<long long>(g == 0 ? k : k / g));
        basis.push_back(std::move(w));
    }
    return basis;
}

std::vector<std::vector<int>> cycle_rows(const TargetGraph& h) {
    auto idx = edge_index(h);
    std::vector<std::vector<int>> rows;
    for (const auto& c : nontrivial_4cycles(h)) {
        std::vector<int> row(h.edges.size(), 0);
        for (int i = 0; i < 4; ++i) {
            auto [e, s] = idx.at({c[i], c[(i + 1) % 4]});
            row[e] += s;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

long long walk_weight(const TargetGraph& h, const Weighting& w, const ClosedWalk& walk) {
    auto idx = edge_index(h);
    long long total = 0;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        auto it = idx.find({walk[i], walk[i + 1]});
        if (it == idx.end()) throw std::invalid_argument("walk uses a non-edge");
        total += it->second.second * w.at(it->second.first);
    }
    return total;
}

std::vector<std::array<int, 4>> nontrivial_4cycles(const TargetGraph& h) {
    std::set<std::array<int, 4>> seen;
    std::vector<std::array<int, 4>> out;
    for (int a = 0; a < h.n; ++a)
        for (int b : h.adj[a])
            for (int c : h.adj[b]) {
                if (c == a) continue;
                for (int d : h.adj[c]) {
                    if (d == b || !h.adjacent(d, a)) continue;
                    std::array<int, 4> cyc{a, b, c, d}, best = cyc;
                    for (int r = 0; r < 4; ++r) {
                        std::array<int, 4> rot{cyc[r], cyc[(r + 1) % 4], cyc[(r + 2) % 4], cyc[(r + 3) % 4]};
                        std::array<int, 4> rev{rot[0], rot[3], rot[2], rot[1]};
                        best = std::min({best, rot, rev});
                    }
                    if (seen.insert(best).second) out.push_back(best);
                }
            }
    std::sort(out.begin(), out.end());
    return out;
}

bool vanishes_on_4cycles(const TargetGraph& h, const Weighting& w) {
    for (const auto& c : nontrivial_4cycles(h))
        if (walk_weight(h, w, {c[0], c[1], c[2], c[3], c[0]}) != 0) return false;
    return true;
}

std::vector<Weighting> weight_nullspace(const TargetGraph& h) {
    return nullspace(to_rational(cycle_rows(h), h.edges.size()), h.edges.size());
}

std::vector<Weighting> reduced_weight_nullspace(const TargetGraph& h) {
    auto rows = cycle_rows(h);
    auto idx = edge_index(h);
    std::vector<char> seen(h.n, 0);
    for (int s = 0; s < h.n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : h.adj[u]) {
                if (seen[v]) continue;
                seen[v] = 1;
                q.push(v);
                std::vector<int> row(h.edges.size(), 0);
                row[idx.at({u, v}).first] = 1;
                rows.push_back(std::move(row));
            }
        }
    }
    return nullspace(to_rational(rows, h.edges.size()), h.edges.size());
}

bool negative_weight_holds(const TargetGraph& h, const Weighting& w, int p) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    if (w.size() != h.edges.size()) throw std::invalid_argument("weighting has wrong length");
    if (!vanishes_on_4cycles(h, w)) throw std::invalid_argument("weighting does not vanish on 4-cycles");
    // step[u] = (v, weight of u -> v mod p)
    std::vector<std::vector<std::pair<int, int>>> step(h.n);
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        auto [a, b] = h.edges[i];
        step[a].emplace_back(b, static_cast<int>(mod(w[i], p)));
        step[b].emplace_back(a, static_cast<int>(mod(-w[i], p)));
    }
    for (int s = 0; s < h.n; ++s) {
        std::vector<char> cur(static_cast<std::size_t>(h.n) * p, 0), next;
        cur[static_cast<std::size_t>(s) * p] = 1;
        for (int k = 0; k < p; ++k) {
            next.assign(cur.size(), 0);
            for (int u = 0; u < h.n; ++u)
                for (int r = 0; r < p; ++r)
                    if (cur[static_cast<std::size_t>(u) * p + r])
                        for (auto [v, dw] : step[u]) next[static_cast<std::size_t>(v) * p + (r + dw) % p] = 1;
            cur.swap(next);
        }
        if (cur[static_cast<std::size_t>(s) * p]) return false;
    }
    return true;
}

bool negative_weight_holds_enum(const TargetGraph& h, const Weighting& w, int p) {
    if (!vanishes_on_4cycles(h, w)) throw std::invalid_argument("weighting does not vanish on 4-cycles");
    ClosedWalk walk;
    bool found = false;
    auto rec = [&](auto&& self, int depth) -> void {
        if (found) return;
        if (depth == p) {
            if (walk.back() == walk.front() && mod(walk_weight(h, w, walk), p) == 0) found = true;
            return;
        }
        for (int v : h.adj[walk.back()]) {
            walk.push_back(v);
            self(self, depth + 1);
            walk.pop_back();
        }
    };
    for (int s = 0; s < h.n && !found; ++s) {
        walk = {s};
        rec(rec, 0);
    }
    return !found;
}

std::optional<Weighting> negative_weight_search(const TargetGraph& h, const std::vector<int>& ps, int coeff_bound) {
    auto basis = reduced_weight_nullspace(h);
    std::size_t d = basis.size();
    double space = std::pow(2.0 * coeff_bound + 1, static_cast<double>(d));
    if (space > 5e6) throw std::invalid_argument("coefficient search space too large");
    auto passes = [&](const Weighting& w) {
        for (int p : ps)
            if (!negative_weight_holds(h, w, p)) return false;
        return true;
    };
    std::vector<int> coef(d, -coeff_bound);
    Weighting zero(h.edges.size(), 0);
    if (passes(zero)) return zero;
    if (d == 0) return std::nullopt;
    while (true) {
        Weighting w(h.edges.size(), 0);
        bool nonzero = false;
        for (std::size_t i = 0; i < d; ++i) {
            nonzero |= coef[i] != 0;
            for (std::size_t e = 0; e < w.size(); ++e) w[e] += coef[i] * basis[i][e];
        }
        if (nonzero && passes(w)) return w;
        std::size_t i = 0;
        while (i < d && ++coef[i] > coeff_bound) coef[i++] = -coeff_bound;
        if (i == d) return std::nullopt;
    }
}

bool contains_k4(const TargetGraph& h) {
    for (int a = 0; a < h.n; ++a)
        for (int b : h.adj[a]) {
            if (b <= a) continue;
            for (int c : h.adj[b]) {
                if (c <= b || !h.adjacent(a, c)) continue;
                for (int d : h.adj[c])
                    if (d > c && h.adjacent(a, d) && h.adjacent(b, d)) return true;
            }
        }
    return false;
}

bool three_colorable(const TargetGraph& h) {
    QuotientGraph g;
    g.vertices.resize(h.n);
    for (auto [a, b] : h.edges) g.edges.push_back({a, b, 0});
    return solve_coloring(g, 3).sat();
}

bool simple_negative(const TargetGraph& h) { return three_colorable(h) || nontrivial_4cycles(h).empty(); }

namespace {

void check_gamma(const TargetGraph& h, const ClosedWalk& gamma) {
    if (gamma.size() < 2 || gamma.front() != gamma.back()) throw std::invalid_argument("gamma must be a closed walk");
    if ((gamma.size() - 1) % 2 == 0) throw std::invalid_argument("gamma must have odd length");
    for (std::size_t i = 0; i + 1 < gamma.size(); ++i)
        if (!h.adjacent(gamma[i], gamma[i + 1])) throw std::invalid_argument("gamma uses a non-edge");
}

}  // namespace

bool verify_order2_witness(const TargetGraph& h, const ClosedWalk& gamma, const WitnessBox& box) {
    check_gamma(h, gamma);
    int len = static_cast<int>(gamma.size()) - 1;
    int r = box.rows(), c = box.cols();
    if (r < 3 || r % 2 == 0 || c < len + 1 || (c - len - 1) % 2) return false;
    for (const auto& row : box.cells)
        if (static_cast<int>(row.size()) != c) return false;
    for (const auto& row : box.cells)
        for (int v : row)
            if (v < 0 || v >= h.n) return false;
    const auto& top = box.cells.front();
    int v0 = gamma.front();
    for (int j = 0; j <= len; ++j)
        if (top[j] != gamma[j]) return false;
    for (int j = len + 1; j < c; ++j)
        if ((j - len) % 2 == 0 && top[j] != v0) return false;
    for (int j = len + 1; j + 1 < c; j += 2)
        if (top[j] != top[len + 1]) return false;
    std::vector<int> rev(top.rbegin(), top.rend());
    if (box.cells.back() != rev) return false;
    for (int side : {0, c - 1})
        for (int i = 0; i < r; ++i)
            if (box.cells[i][side] != (i % 2 == 0 ? v0 : box.cells[1][side])) return false;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            if (j + 1 < c && !h.adjacent(box.cells[i][j], box.cells[i][j + 1])) return false;
            if (i + 1 < r && !h.adjacent(box.cells[i][j], box.cells[i + 1][j])) return false;
        }
    return true;
}

std::optional<WitnessBox> search_order2_witness(const TargetGraph& h, const ClosedWalk& gamma, int max_rows,
                                                int max_cols) {
    check_gamma(h, gamma);
    int len = static_cast<int>(gamma.size()) - 1;
    int v0 = gamma.front();
    const auto& nb = h.adj[v0];
    for (int r = 3; r <= max_rows; r += 2)
        for (int c = len + 1; c <= max_cols; c += 2) {
            std::vector<int> pads = c > len + 1 ? nb : std::vector<int>{v0};
            for (int u : pads)
                for (int sl : nb)
                    for (int sr : nb) {
                        std::vector<int> top(gamma.begin(), gamma.end());
                        while (static_cast<int>(top.size()) < c) {
                            top.push_back(u);
                            top.push_back(v0);
                        }
                        std::vector<int> bottom(top.rbegin(), top.rend());
                        // levels[i]: distinct rows reachable at row i, with parent index.
                        std::vector<std::vector<std::pair<std::vector<int>, int>>> levels{{{top, -1}}};
                        for (int i = 1; i <= r - 2; ++i) {
                            std::set<std::vector<int>> seen;
                            std::vector<std::pair<std::vector<int>, int>> next;
                            bool last = i == r - 2;
                            int left = i % 2 ? sl : v0, right = i % 2 ? sr : v0;
                            for (std::size_t pi = 0; pi < levels.back().size(); ++pi) {
                                const auto& prev = levels.back()[pi].first;
                                std::vector<int> row(c);
                                auto ok = [&](int j, int v) {
                                    if (!h.adjacent(prev[j], v)) return false;
                                    if (j > 0 && !h.adjacent(row[j - 1], v)) return false;
                                    if (last && !h.adjacent(bottom[j], v)) return false;
                                    return true;
                                };
                                auto fill = [&](auto&& self, int j) -> void {
                                    if (j == c) {
                                        if (seen.insert(row).second) next.emplace_back(row, static_cast<int>(pi));
                                        return;
                                    }
                                    if (j == 0 || j == c - 1) {
                                        int v = j == 0 ? left : right;
                                        if (!ok(j, v)) return;
                                        row[j] = v;
                                        self(self, j + 1);
                                        return;
                                    }
                                    for (int v : h.adj[prev[j]])
                                        if (ok(j, v)) {
                                            row[j] = v;
                                            self(self, j + 1);
                                        }
                                };
                                fill(fill, 0);
                            }
                            if (next.empty()) break;
                            levels.push_back(std::move(next));
                        }
                        if (static_cast<int>(levels.size()) != r - 1) continue;
                        WitnessBox box;
                        box.cells.resize(r);
                        box.cells[r - 1] = bottom;
                        int at = 0;
                        for (int i = r - 2; i >= 0; --i) {
                            box.cells[i] = levels[i][at].first;
                            at = levels[i][at].second;
                        }
                        return box;
                    }
        }
    return std::nullopt;
}

std::optional<ClosedWalk> shortest_odd_cycle(const TargetGraph& h) {
    std::optional<ClosedWalk> best;
    for (int s = 0; s < h.n; ++s) {
        // BFS on (vertex, parity).
        std::vector<int> parent(2 * h.n, -1), dist(2 * h.n, -1);
        std::queue<int> q;
        dist[2 * s] = 0;
        q.push(2 * s);
        while (!q.empty()) {
            int st = q.front();
            q.pop();
            int u = st / 2, par = st % 2;
            for (int v : h.adj[u]) {
                int nx = 2 * v + (1 - par);
                if (dist[nx] >= 0) continue;
                dist[nx] = dist[st] + 1;
                parent[nx] = st;
                q.push(nx);
            }
        }
        int target = 2 * s + 1;
        if (dist[target] < 0) continue;
        if (best && static_cast<int>(best->size()) - 1 <= dist[target]) continue;
        ClosedWalk walk;
        for (int st = target; st >= 0; st = parent[st]) walk.push_back(st / 2);
        std::reverse(walk.begin(), walk.end());
        best = walk;
    }
    return best;
}

}  // namespace tilekit
