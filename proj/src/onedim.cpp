#include "tilekit/onedim.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/strong_components.hpp>

namespace tilekit {

std::size_t WindowDigraph::edge_count() const {
    std::size_t e = 0;
    for (const auto& o : out) e += o.size();
    return e;
}

namespace {

bool contains(const std::vector<int>& word, const std::vector<int>& pat) {
    if (pat.size() > word.size()) return false;
    for (std::size_t i = 0; i + pat.size() <= word.size(); ++i)
        if (std::equal(pat.begin(), pat.end(), word.begin() + static_cast<long>(i))) return true;
    return false;
}

// Calls fn on every word of length ell over b symbols, lexicographically.
template <class Fn>
void for_each_word(int b, int ell, Fn&& fn) {
    std::vector<int> w(ell, 0);
    while (true) {
        fn(static_cast<const std::vector<int>&>(w));
        int i = ell - 1;
        while (i >= 0 && ++w[i] == b) w[i--] = 0;
        if (i < 0) return;
    }
}

}  // namespace

std::vector<std::vector<int>> forbidden_windows(const SftSpec& s, int ell) {
    std::vector<std::vector<int>> out;
    for_each_word(s.b, ell, [&](const std::vector<int>& w) {
        for (const Pattern& p : s.patterns)
            if (contains(w, p.cells)) {
                out.push_back(w);
                return;
            }
    });
    return out;
}

WindowDigraph build_lambda(const SftSpec& s) {
    if (s.dim != 1) throw std::invalid_argument("window digraph needs a one-dimensional SFT");
    if (s.b <= 0) throw std::invalid_argument("alphabet must be nonempty");
    s.check();
    WindowDigraph l;
    l.b = s.b;
    l.ell = 1;
    for (const Pattern& p : s.patterns) l.ell = std::max(l.ell, p.width());
    auto bad = forbidden_windows(s, l.ell);
    std::set<std::vector<int>> forbidden(bad.begin(), bad.end());
    for_each_word(s.b, l.ell, [&](const std::vector<int>& w) {
        if (!forbidden.count(w)) l.windows.push_back(w);
    });
    l.out.resize(l.size());
    for (std::size_t u = 0; u < l.size(); ++u)
        for (std::size_t v = 0; v < l.size(); ++v)
            if (std::equal(l.windows[u].begin() + 1, l.windows[u].end(), l.windows[v].begin()))
                l.out[u].push_back(static_cast<int>(v));
    return l;
}

std::vector<DirectedComponent> directed_components(const Digraph& g) {
    using G = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS>;
    int n = static_cast<int>(g.size());
    G bg(n);
    for (int u = 0; u < n; ++u)
        for (int v : g[u]) boost::add_edge(u, v, bg);
    std::vector<int> comp(n);
    int k = n ? static_cast<int>(boost::strong_components(bg, comp.data())) : 0;
    std::vector<DirectedComponent> out(k);
    for (int v = 0; v < n; ++v) out[comp[v]].vertices.push_back(v);
    std::sort(out.begin(), out.end(),
              [](const DirectedComponent& a, const DirectedComponent& b) { return a.vertices[0] < b.vertices[0]; });
    for (auto& c : out) {
        bool cyclic = c.vertices.size() > 1;
        for (int v : g[c.vertices[0]]) cyclic |= v == c.vertices[0];
        c.period = cyclic ? component_period(c, g) : 0;
    }
    return out;
}

int component_period(const DirectedComponent& c, const Digraph& g) {
    std::vector<int> lev(g.size(), -1);
    std::vector<char> in(g.size(), 0);
    for (int v : c.vertices) in[v] = 1;
    if (c.vertices.empty()) throw std::invalid_argument("empty component");
    std::queue<int> q;
    lev[c.vertices[0]] = 0;
    q.push(c.vertices[0]);
    int period = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g[u]) {
            if (!in[v]) continue;
            if (lev[v] < 0) {
                lev[v] = lev[u] + 1;
                q.push(v);
            }
        }
    }
    for (int u : c.vertices)
        for (int v : g[u])
            if (in[v]) period = std::gcd(period, std::abs(lev[u] + 1 - lev[v]));
    if (period == 0) {
        bool any = false;
        for (int u : c.vertices)
            for (int v : g[u]) any |= static_cast<bool>(in[v]);
        if (!any) throw std::invalid_argument("component has no cycle");
    }
    return period;
}

std::vector<int> simple_cycle_lengths(const Digraph& g) {
    // Each simple cycle is counted once, from its least vertex.
    std::vector<int> lengths;
    int n = static_cast<int>(g.size());
    std::vector<char> on(n, 0);
    for (int s = 0; s < n; ++s) {
        auto dfs = [&](auto&& self, int u, int len) -> void {
            for (int v : g[u]) {
                if (v == s) lengths.push_back(len + 1);
                else if (v > s && !on[v]) {
                    on[v] = 1;
                    self(self, v, len + 1);
                    on[v] = 0;
                }
            }
        };
        on[s] = 1;
        dfs(dfs, s, 0);
        on[s] = 0;
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

namespace {

// Symbol word of a closed walk of length len from v0 (least predecessors first).
std::vector<int> closed_walk_word(const WindowDigraph& l, int v0, int len,
                                  const std::vector<std::vector<char>>& reach) {
    std::vector<int> walk(len + 1);
    walk[len] = v0;
    for (int t = len - 1; t >= 0; --t) {
        int pick = -1;
        for (int u = 0; u < static_cast<int>(l.size()) && pick < 0; ++u)
            if (reach[t][u] && std::find(l.out[u].begin(), l.out[u].end(), walk[t + 1]) != l.out[u].end()) pick = u;
        walk[t] = pick;
    }
    std::vector<int> word(len);
    for (int i = 0; i < len; ++i) word[i] = l.windows[walk[i]][0];
    return word;
}

}  // namespace

OnedimResult decide_onedim(const SftSpec& s) {
    WindowDigraph l = build_lambda(s);
    OnedimResult r;
    r.components = directed_components(l);
    r.windows = l.windows;
    for (std::size_t i = 0; i < r.components.size(); ++i)
        if (r.components[i].period == 1) {
            r.answer = true;
            r.component = static_cast<int>(i);
            break;
        }
    if (!r.answer) {
        for (std::size_t i = 0; i < r.components.size(); ++i)
            if (r.components[i].period > 0) {
                r.component = static_cast<int>(i);
                break;
            }
        r.period = r.component >= 0 ? r.components[r.component].period : 0;
        return r;
    }
    r.period = 1;
    int n = std::max(1, l.ell - 1);
    int v0 = r.components[r.component].vertices[0];
    int m = static_cast<int>(l.size());
    int lmax = m * m + n + 2;
    std::vector<std::vector<char>> reach(lmax + 1, std::vector<char>(m, 0));
    reach[0][v0] = 1;
    for (int t = 0; t < lmax; ++t)
        for (int u = 0; u < m; ++u)
            if (reach[t][u])
                for (int v : l.out[u]) reach[t + 1][v] = 1;
    int p = 0, q = 0;
    for (int b = n + 2; b <= lmax && !q; ++b) {
        if (!reach[b][v0]) continue;
        for (int a = n + 1; a < b; ++a)
            if (reach[a][v0] && std::gcd(a, b) == 1) {
                p = a;
                q = b;
                break;
            }
    }
    if (!q) throw std::logic_error("no coprime closed walk lengths found");
    r.params = {n, p, q};
    r.word_p = closed_walk_word(l, v0, p, reach);
    r.word_q = closed_walk_word(l, v0, q, reach);
    QuotientGraph g = make_gamma1(r.params);
    r.witness.assign(g.size(), -1);
    for (int x = 0; x < p + n; ++x) r.witness[g.cls(0, x, 0)] = r.word_p[x % p];
    for (int x = 0; x < q + n; ++x) r.witness[g.cls(1, x, 0)] = r.word_q[x % q];
    return r;
}

nlohmann::json OnedimResult::to_json() const {
    nlohmann::json j{{"answer", answer}, {"period", period}, {"component", nullptr}};
    if (component >= 0) {
        j["component"] = nlohmann::json::array();
        for (int v : components[component].vertices) j["component"].push_back(windows[v]);
    }
    if (answer) {
        j["witness_p"] = params.p;
        j["witness_q"] = params.q;
        j["witness_n"] = params.n;
        j["word_p"] = word_p;
        j["word_q"] = word_q;
        j["witness"] = witness;
    } else {
        j["witness_p"] = nullptr;
        j["witness_q"] = nullptr;
    }
    return j;
}

}  // namespace tilekit
