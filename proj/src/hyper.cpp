#include "tilekit/hyper.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace tilekit {

namespace {

std::size_t index_of(const BitWindow& w, const Offset& g) {
    std::size_t idx = 0, stride = 1;
    for (int d = 0; d < w.dim; ++d) {
        idx += static_cast<std::size_t>(g[d] - w.origin[d]) * stride;
        stride *= static_cast<std::size_t>(w.extent[d]);
    }
    return idx;
}

Offset add(const Offset& a, const Offset& b) {
    Offset c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

// Calls f on every coordinate of the window, axis 0 fastest.
template <class F>
void for_each_point(const BitWindow& w, F f) {
    if (w.bits.empty()) return;
    Offset g = w.origin;
    while (true) {
        f(g);
        int d = 0;
        while (d < w.dim && ++g[d] == w.origin[d] + w.extent[d]) {
            g[d] = w.origin[d];
            ++d;
        }
        if (d == w.dim) return;
    }
}

bool inside_all(const BitWindow& w, const Offset& g, const std::vector<Offset>& T) {
    for (const auto& t : T)
        if (!w.contains(add(g, t))) return false;
    return true;
}

void check_args(const BitWindow& w, const Offset& s, const std::vector<Offset>& T) {
    if (static_cast<int>(s.size()) != w.dim) throw std::invalid_argument("shift dimension mismatch");
    if (T.empty()) throw std::invalid_argument("empty offset set");
    for (const auto& t : T)
        if (static_cast<int>(t.size()) != w.dim) throw std::invalid_argument("offset dimension mismatch");
}

std::vector<Offset> interval(int r) {
    std::vector<Offset> T;
    for (int n = -r; n <= r; ++n) T.push_back({n});
    return T;
}

}  // namespace

bool BitWindow::contains(const Offset& g) const {
    if (static_cast<int>(g.size()) != dim) return false;
    for (int d = 0; d < dim; ++d)
        if (g[d] < origin[d] || g[d] >= origin[d] + extent[d]) return false;
    return true;
}

int BitWindow::at(const Offset& g) const {
    if (!contains(g)) throw std::out_of_range("point outside window");
    return bits[index_of(*this, g)];
}

BitWindow BitWindow::translated(const Offset& by) const {
    BitWindow w = *this;
    w.origin = add(origin, by);
    return w;
}

nlohmann::json BitWindow::to_json() const {
    return {{"dim", dim}, {"origin", origin}, {"extent", extent}, {"bits", bits}};
}

BitWindow BitWindow::from_json(const nlohmann::json& j) {
    BitWindow w;
    w.dim = j.at("dim").get<int>();
    w.origin = j.at("origin").get<Offset>();
    w.extent = j.at("extent").get<std::vector<int>>();
    w.bits = j.at("bits").get<std::vector<unsigned char>>();
    std::size_t n = 1;
    for (int e : w.extent) n *= static_cast<std::size_t>(e);
    if (static_cast<int>(w.origin.size()) != w.dim || static_cast<int>(w.extent.size()) != w.dim || n != w.bits.size())
        throw std::invalid_argument("inconsistent window shape");
    for (auto b : w.bits)
        if (b > 1) throw std::invalid_argument("window bits must be 0 or 1");
    return w;
}

int thue_morse(long long i) { return std::popcount(static_cast<unsigned long long>(std::llabs(i))) & 1; }

BitWindow tm_window(int a, int b) {
    if (a > b) throw std::invalid_argument("empty range");
    BitWindow w{1, {a}, {b - a + 1}, {}};
    for (int i = a; i <= b; ++i) w.bits.push_back(static_cast<unsigned char>(thue_morse(i)));
    return w;
}

BitWindow constant_window(int a, int b, int bit) {
    if (a > b) throw std::invalid_argument("empty range");
    return BitWindow{1, {a}, {b - a + 1}, std::vector<unsigned char>(static_cast<std::size_t>(b - a + 1), bit ? 1 : 0)};
}

BitWindow sum2d_window(const BitWindow& x, const BitWindow& y) {
    if (x.dim != 1 || y.dim != 1) throw std::invalid_argument("sum of two one-dimensional windows");
    BitWindow w{2, {x.origin[0], y.origin[0]}, {x.extent[0], y.extent[0]}, {}};
    for (int h = 0; h < y.extent[0]; ++h)
        for (int g = 0; g < x.extent[0]; ++g) w.bits.push_back(static_cast<unsigned char>(x.bits[g] ^ y.bits[h]));
    return w;
}

std::vector<Offset> tm_offsets(int s) {
    if (s == 0) throw std::invalid_argument("shift must be nonzero");
    int ell = std::bit_width(static_cast<unsigned>(std::abs(s))) - 1;
    return interval(4 << ell);
}

std::vector<Offset> enhanced_offsets(int s) {
    int r1 = tm_offsets(s).back()[0], r2 = tm_offsets(2 * s).back()[0];
    // T ∪ T' ∪ (s + T') is an interval.
    int lo = std::min({-r1, -r2, s - r2}), hi = std::max({r1, r2, s + r2});
    std::vector<Offset> T;
    for (int n = lo; n <= hi; ++n) T.push_back({n});
    return T;
}

std::vector<Offset> product_offsets(int s1, int s2) {
    if (s1 == 0 && s2 == 0) throw std::invalid_argument("shift must be nonzero");
    std::vector<Offset> T;
    if (s2 == 0) {
        for (const auto& t : tm_offsets(s1)) T.push_back({t[0], 0});
    } else if (s1 == 0) {
        for (const auto& t : tm_offsets(s2)) T.push_back({0, t[0]});
    } else {
        auto a = enhanced_offsets(s1), b = enhanced_offsets(s2);
        for (const auto& u : a)
            for (const auto& v : b) T.push_back({u[0], v[0]});
    }
    return T;
}

WitnessReport check_witness(const BitWindow& w, const Offset& s, const std::vector<Offset>& T) {
    check_args(w, s, T);
    WitnessReport r;
    for_each_point(w, [&](const Offset& g) {
        if (!r.holds) return;
        Offset gs = add(g, s);
        if (!inside_all(w, g, T) || !inside_all(w, gs, T)) return;
        ++r.checked;
        for (const auto& t : T)
            if (w.at(add(g, t)) != w.at(add(gs, t))) return;
        r.holds = false;
        r.failure = g;
    });
    if (r.checked == 0 && r.holds) throw std::invalid_argument("window too small for the shift and offsets");
    return r;
}

bool verify_witness(const BitWindow& w, const Offset& s, const std::vector<Offset>& T) {
    return check_witness(w, s, T).holds;
}

bool verify_enhanced_witness(const BitWindow& w, const Offset& s, const std::vector<Offset>& T) {
    if (!verify_witness(w, s, T)) return false;
    bool ok = true;
    for_each_point(w, [&](const Offset& g) {
        Offset gs = add(g, s);
        if (!ok || !inside_all(w, g, T) || !inside_all(w, gs, T)) return;
        bool agree = false;
        for (const auto& t : T) agree |= w.at(add(g, t)) == w.at(add(gs, t));
        ok = agree;
    });
    return ok;
}

bool verify_orthogonal(const BitWindow& x, const BitWindow& y, const std::vector<Offset>& T) {
    if (x.dim != y.dim) throw std::invalid_argument("window dimension mismatch");
    std::vector<Offset> gs, hs;
    for_each_point(x, [&](const Offset& g) {
        if (inside_all(x, g, T)) gs.push_back(g);
    });
    for_each_point(y, [&](const Offset& h) {
        if (inside_all(y, h, T)) hs.push_back(h);
    });
    if (gs.empty() || hs.empty()) throw std::invalid_argument("window too small for the offsets");
    for (const auto& g : gs)
        for (const auto& h : hs) {
            bool differ = false;
            for (const auto& t : T)
                if (x.at(add(g, t)) != y.at(add(h, t))) {
                    differ = true;
                    break;
                }
            if (!differ) return false;
        }
    return true;
}

}  // namespace tilekit
