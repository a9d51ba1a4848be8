#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

namespace tilekit {

using Offset = std::vector<int>;

// Bits over a box; origin is the coordinate of the first bit, axis 0 fastest.
struct BitWindow {
    int dim = 1;
    Offset origin;
    std::vector<int> extent;
    std::vector<unsigned char> bits;

    bool contains(const Offset& g) const;
    int at(const Offset& g) const;
    std::size_t size() const { return bits.size(); }
    BitWindow translated(const Offset& by) const;
    nlohmann::json to_json() const;
    static BitWindow from_json(const nlohmann::json& j);
};

// Parity of the number of ones in the binary expansion of |i|.
int thue_morse(long long i);

BitWindow tm_window(int a, int b);
BitWindow constant_window(int a, int b, int bit);
// (x ⊕ y)(g, h) = x(g) + y(h) mod 2.
BitWindow sum2d_window(const BitWindow& x, const BitWindow& y);

// T = {|n| <= 4 * 2^floor(log2 |s|)}.
std::vector<Offset> tm_offsets(int s);
// T ∪ T' ∪ (s + T') with T' the offsets for 2s; witnesses both a differing
// and an agreeing t.
std::vector<Offset> enhanced_offsets(int s);
// Offsets for s = (s1, s2) on the sum of two Thue-Morse windows.
std::vector<Offset> product_offsets(int s1, int s2);

struct WitnessReport {
    bool holds = true;
    std::size_t checked = 0;
    std::optional<Offset> failure;
};

// For every g with g+T and g+s+T inside the window, some t in T has
// window(g+t) != window(g+s+t). Throws when no such g exists.
WitnessReport check_witness(const BitWindow& w, const Offset& s, const std::vector<Offset>& T);
bool verify_witness(const BitWindow& w, const Offset& s, const std::vector<Offset>& T);
// Additionally some t in T has window(g+t) == window(g+s+t).
bool verify_enhanced_witness(const BitWindow& w, const Offset& s, const std::vector<Offset>& T);
// For all g in x's and h in y's interior some t has x(g+t) != y(h+t).
bool verify_orthogonal(const BitWindow& x, const BitWindow& y, const std::vector<Offset>& T);

}  // namespace tilekit
