#include "engine.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tilekit::detail {

Engine::Engine(int nvars, int domain)
    : nvars_(nvars), dom_(domain), words_(std::max(1, (domain + 63) / 64)) {
    if (domain < 0) throw std::invalid_argument("negative domain");
    doms_.assign(static_cast<std::size_t>(nvars) * words_, 0);
    for (int v = 0; v < nvars; ++v)
        for (int a = 0; a < domain; ++a) dom(v)[a >> 6] |= Word{1} << (a & 63);
    links_.resize(nvars);
    table_of_.resize(nvars);
    value_.assign(nvars, -1);
}

void Engine::forbid_value(int v, int a) { dom(v)[a >> 6] &= ~(Word{1} << (a & 63)); }

void Engine::add_binary(int u, int v, const std::function<bool(int, int)>& allowed) {
    if (u == v) {
        for (int a = 0; a < dom_; ++a)
            if (!allowed(a, a)) forbid_value(u, a);
        return;
    }
    bool flip = u > v;
    int lo = flip ? v : u, hi = flip ? u : v;
    auto ok = [&](int a_lo, int b_hi) { return flip ? allowed(b_hi, a_lo) : allowed(a_lo, b_hi); };
    auto [it, fresh] = rel_index_.emplace(std::make_pair(lo, hi), static_cast<int>(rels_.size()));
    if (fresh) {
        rels_.emplace_back(static_cast<std::size_t>(2) * dom_ * words_, ~Word{0});
        links_[lo].push_back({hi, it->second, false});
        links_[hi].push_back({lo, it->second, true});
    }
    auto& r = rels_[it->second];
    for (int a = 0; a < dom_; ++a)
        for (int b = 0; b < dom_; ++b)
            if (!ok(a, b)) {
                r[static_cast<std::size_t>(a) * words_ + (b >> 6)] &= ~(Word{1} << (b & 63));
                r[static_cast<std::size_t>(dom_ + b) * words_ + (a >> 6)] &= ~(Word{1} << (a & 63));
            }
}

void Engine::add_table(std::vector<int> vars, const std::vector<std::vector<int>>& forbidden) {
    int id = static_cast<int>(tables_.size());
    for (int v : vars) table_of_[v].push_back(id);
    tables_.push_back({std::move(vars), forbidden});
}

bool Engine::empty(const Word* d) const {
    for (int i = 0; i < words_; ++i)
        if (d[i]) return false;
    return true;
}

void Engine::save(int v) { trail_.emplace_back(v, std::vector<Word>(dom(v), dom(v) + words_)); }

bool Engine::narrow(int v, const Word* mask) {
    Word* d = dom(v);
    bool change = false;
    for (int i = 0; i < words_; ++i) change |= (d[i] & mask[i]) != d[i];
    if (!change) return true;
    save(v);
    for (int i = 0; i < words_; ++i) d[i] &= mask[i];
    return !empty(d);
}

bool Engine::remove(int v, int a) {
    Word* d = dom(v);
    if (!has(d, a)) return true;
    save(v);
    d[a >> 6] &= ~(Word{1} << (a & 63));
    return !empty(d);
}

bool Engine::propagate(int x, int a) {
    for (const Link& l : links_[x]) {
        const auto& r = rels_[l.rel];
        const Word* mask = r.data() + static_cast<std::size_t>(l.flipped ? dom_ + a : a) * words_;
        if (value_[l.other] >= 0) {
            if (!has(mask, value_[l.other])) return false;
            continue;
        }
        if (!narrow(l.other, mask)) return false;
    }
    for (int t : table_of_[x]) {
        const Table& tab = tables_[t];
        int free_pos = -1, free_count = 0;
        for (std::size_t i = 0; i < tab.vars.size(); ++i)
            if (value_[tab.vars[i]] < 0) {
                ++free_count;
                free_pos = static_cast<int>(i);
            }
        if (free_count > 1) continue;
        for (const auto& tuple : tab.forbidden) {
            bool match = true;
            for (std::size_t i = 0; i < tuple.size() && match; ++i)
                if (static_cast<int>(i) != free_pos) match = value_[tab.vars[i]] == tuple[i];
            if (!match) continue;
            if (free_pos < 0) return false;
            if (!remove(tab.vars[free_pos], tuple[free_pos])) return false;
        }
    }
    return true;
}

bool Engine::search(int level) {
    max_depth_ = std::max(max_depth_, level);
    if (level == nvars_) return true;
    int x = order_[level];
    std::vector<Word> current(dom(x), dom(x) + words_);
    for (int a = 0; a < dom_; ++a) {
        if (!has(current.data(), a)) continue;
        if (budget_ && nodes_ >= budget_) {
            out_of_budget_ = true;
            return false;
        }
        ++nodes_;
        std::size_t mark = trail_.size();
        value_[x] = a;
        if (propagate(x, a) && search(level + 1)) return true;
        if (out_of_budget_) return false;
        while (trail_.size() > mark) {
            auto& [v, words] = trail_.back();
            std::copy(words.begin(), words.end(), dom(v));
            trail_.pop_back();
        }
    }
    value_[x] = -1;
    return false;
}

Engine::Outcome Engine::run(std::uint64_t budget) {
    budget_ = budget;
    std::vector<std::set<int>> nb(nvars_);
    for (int v = 0; v < nvars_; ++v)
        for (const Link& l : links_[v]) nb[v].insert(l.other);
    for (const Table& t : tables_)
        for (int v : t.vars)
            for (int u : t.vars)
                if (u != v) nb[v].insert(u);
    order_.resize(nvars_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return nb[a].size() > nb[b].size(); });
    for (int v = 0; v < nvars_; ++v)
        if (empty(dom(v))) return Outcome::Unsat;
    bool ok = search(0);
    if (out_of_budget_) return Outcome::Budget;
    return ok ? Outcome::Sat : Outcome::Unsat;
}

}  // namespace tilekit::detail
