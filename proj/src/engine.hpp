#pragma once

// Finite-domain backtracking with forward checking. Variables are tried in a
// fixed order (descending constraint degree, then id); values ascending.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace tilekit::detail {

class Engine {
public:
    Engine(int nvars, int domain);

    int vars() const { return nvars_; }
    int domain() const { return dom_; }

    void forbid_value(int v, int a);
    // Binary relation given by a predicate over (value of u, value of v).
    void add_binary(int u, int v, const std::function<bool(int, int)>& allowed);
    // Forbidden tuples over distinct variables.
    void add_table(std::vector<int> vars, const std::vector<std::vector<int>>& forbidden);

    enum class Outcome { Sat, Unsat, Budget };
    Outcome run(std::uint64_t budget = 0);

    const std::vector<int>& solution() const { return value_; }
    std::uint64_t nodes() const { return nodes_; }
    int depth() const { return max_depth_; }

private:
    using Word = std::uint64_t;
    struct Link {
        int other;
        int rel;
        bool flipped;
    };
    struct Table {
        std::vector<int> vars;
        std::vector<std::vector<int>> forbidden;
    };

    Word* dom(int v) { return doms_.data() + static_cast<std::size_t>(v) * words_; }
    bool has(const Word* d, int a) const { return (d[a >> 6] >> (a & 63)) & 1U; }
    bool empty(const Word* d) const;
    void save(int v);
    bool narrow(int v, const Word* mask);
    bool remove(int v, int a);
    bool propagate(int x, int a);
    bool search(int level);

    int nvars_;
    int dom_;
    int words_;
    std::vector<Word> doms_;
    // rels_[r] holds, per value of the first variable, the allowed mask of the second,
    // followed by the transposed masks.
    std::vector<std::vector<Word>> rels_;
    std::map<std::pair<int, int>, int> rel_index_;
    std::vector<std::vector<Link>> links_;
    std::vector<Table> tables_;
    std::vector<std::vector<int>> table_of_;
    std::vector<int> value_;
    std::vector<int> order_;
    std::vector<std::pair<int, std::vector<Word>>> trail_;
    std::uint64_t nodes_ = 0;
    std::uint64_t budget_ = 0;
    int max_depth_ = 0;
    bool out_of_budget_ = false;
};

}  // namespace tilekit::detail
