#include <doctest.h>

#include <numeric>
#include <random>

#include "tilekit/onedim.hpp"

using namespace tilekit;

namespace {

SftSpec words(int b, std::vector<std::vector<int>> pats) {
    SftSpec s{b, 1, {}};
    for (auto& p : pats) s.patterns.push_back({{static_cast<int>(p.size())}, p});
    return s;
}

// Period by brute force: gcd of simple cycle lengths inside the component.
int oracle_period(const Digraph& g, const DirectedComponent& c) {
    std::vector<int> keep(g.size(), -1);
    for (std::size_t i = 0; i < c.vertices.size(); ++i) keep[c.vertices[i]] = static_cast<int>(i);
    Digraph sub(c.vertices.size());
    for (int u : c.vertices)
        for (int v : g[u])
            if (keep[v] >= 0) sub[keep[u]].push_back(keep[v]);
    int d = 0;
    for (int len : simple_cycle_lengths(sub)) d = std::gcd(d, len);
    return d;
}

}  // namespace

TEST_CASE("window digraph construction") {
    auto l = build_lambda(words(2, {{0, 0}, {1, 1}}));
    REQUIRE(l.size() == 2);
    CHECK(l.windows[0] == std::vector<int>{0, 1});
    CHECK(l.windows[1] == std::vector<int>{1, 0});
    CHECK(l.out[0] == std::vector<int>{1});
    CHECK(l.out[1] == std::vector<int>{0});

    auto gm = build_lambda(words(2, {{1, 1}}));
    CHECK(gm.size() == 3);
    CHECK(gm.edge_count() == 5);
    CHECK(gm.out[0].front() == 0);

    auto one = build_lambda(SftSpec{1, 1, {}});
    CHECK(one.size() == 1);
    CHECK(one.out[0] == std::vector<int>{0});
    CHECK_THROWS(build_lambda(SftSpec{2, 2, {}}));
}

TEST_CASE("short patterns are padded") {
    // Forbidding the single symbol 1 alongside a length-3 word.
    auto l = build_lambda(words(2, {{1}, {0, 0, 0}}));
    CHECK(l.ell == 3);
    CHECK(l.size() == 0);
    auto m = build_lambda(words(3, {{2}, {0, 1, 0}}));
    for (const auto& w : m.windows) {
        CHECK(std::find(w.begin(), w.end(), 2) == w.end());
        CHECK(w != std::vector<int>{0, 1, 0});
    }
    CHECK(m.size() == 7);
}

TEST_CASE("directed components and periods") {
    auto l = build_lambda(words(2, {{0, 0}, {1, 1}}));
    auto cs = directed_components(l);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].vertices.size() == 2);
    CHECK(cs[0].period == 2);

    auto gm = directed_components(build_lambda(words(2, {{1, 1}})));
    REQUIRE(gm.size() == 1);
    CHECK(gm[0].vertices.size() == 3);
    CHECK(gm[0].period == 1);

    auto edgeless = directed_components(Digraph(3));
    REQUIRE(edgeless.size() == 3);
    for (const auto& c : edgeless) CHECK(c.period == 0);
    CHECK_THROWS(component_period(edgeless[0], Digraph(3)));

    Digraph six(6);
    for (int i = 0; i < 6; ++i) six[i].push_back((i + 1) % 6);
    auto c6 = directed_components(six);
    REQUIRE(c6.size() == 1);
    CHECK(c6[0].period == 6);
}

TEST_CASE("period matches simple cycle gcd on all small digraphs") {
    // Exhaustive over digraphs (loops allowed) with up to 3 vertices, random beyond.
    long checked = 0;
    for (int n = 1; n <= 3; ++n) {
        int slots = n * n;
        for (long mask = 0; mask < (1L << slots); ++mask) {
            Digraph g(n);
            for (int i = 0; i < slots; ++i)
                if (mask >> i & 1) g[i / n].push_back(i % n);
            for (const auto& c : directed_components(g)) {
                CHECK(c.period == oracle_period(g, c));
                ++checked;
            }
        }
    }
    std::mt19937 rng(5);
    for (int trial = 0; trial < 3000; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        Digraph g(n);
        double dens = 0.1 + 0.05 * (trial % 6);
        std::bernoulli_distribution coin(dens);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (coin(rng)) g[u].push_back(v);
        for (const auto& c : directed_components(g)) {
            CHECK(c.period == oracle_period(g, c));
            ++checked;
        }
    }
    CHECK(checked > 3000);
}

TEST_CASE("decide proper colourings and golden mean") {
    auto two = decide_onedim(proper_coloring(2, 1));
    CHECK_FALSE(two.answer);
    CHECK(two.period == 2);

    auto three = decide_onedim(proper_coloring(3, 1));
    REQUIRE(three.answer);
    CHECK(three.params.valid());
    CHECK(std::gcd(three.params.p, three.params.q) == 1);
    auto g = make_gamma1(three.params);
    CHECK(respects_1d(g, three.witness, proper_coloring(3, 1)));

    auto gm = decide_onedim(golden_mean(1));
    REQUIRE(gm.answer);
    CHECK(respects_1d(make_gamma1(gm.params), gm.witness, golden_mean(1)));
    auto j = gm.to_json();
    CHECK(j["answer"] == true);
    CHECK(j["period"] == 1);
}

TEST_CASE("witnesses respect random SFTs and symbol permutation") {
    std::mt19937 rng(21);
    int yes = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int b = 2 + static_cast<int>(rng() % 2);
        int len = 1 + static_cast<int>(rng() % 3);
        SftSpec s{b, 1, {}};
        int k = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < k; ++i) {
            int l = 1 + static_cast<int>(rng() % len);
            Pattern p{{l}, {}};
            for (int c = 0; c < l; ++c) p.cells.push_back(static_cast<int>(rng() % b));
            s.patterns.push_back(p);
        }
        auto r = decide_onedim(s);
        if (r.answer) {
            ++yes;
            CHECK(respects_1d(make_gamma1(r.params), r.witness, s));
        }
        std::vector<int> perm(b);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        SftSpec t = s;
        for (auto& p : t.patterns)
            for (int& c : p.cells) c = perm[c];
        CHECK(decide_onedim(t).answer == r.answer);
    }
    CHECK(yes > 20);
}

TEST_CASE("scan oracle for the alternating map") {
    // Alternating 0101.. along both long sides fails on the odd side.
    auto g = make_gamma1({1, 2, 3});
    SymbolMap f(g.size());
    for (int t = 0; t < 2; ++t)
        for (int x = 0; x < g.grids[t].width; ++x) f[g.cls(t, x, 0)] = x % 2;
    bool ok = true;
    for (int t = 0; t < 2; ++t)
        for (int x = 0; x + 1 < g.grids[t].width; ++x) ok &= f[g.cls(t, x, 0)] != f[g.cls(t, x + 1, 0)];
    CHECK(respects_1d(g, f, proper_coloring(2, 1)) == ok);
}
