#include <doctest.h>

#include "tilekit/hyper.hpp"

using namespace tilekit;

TEST_CASE("thue-morse windows") {
    auto w = tm_window(0, 7);
    CHECK(w.bits == std::vector<unsigned char>{0, 1, 1, 0, 1, 0, 0, 1});
    CHECK(tm_window(8, 11).bits == std::vector<unsigned char>{1, 0, 0, 1});
    CHECK(thue_morse(-3) == 0);
    CHECK(thue_morse(3) == 0);
    auto sym = tm_window(-200, 200);
    for (int i = 0; i <= 200; ++i) CHECK(sym.at({i}) == sym.at({-i}));
    CHECK_THROWS(tm_window(3, 2));
}

TEST_CASE("sum windows") {
    auto tm = tm_window(0, 3);
    auto s = sum2d_window(tm, tm);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK(s.at({i, j}) == (tm.at({i}) ^ tm.at({j})));
            CHECK(s.at({i, j}) == s.at({j, i}));
        }
    auto zero = constant_window(0, 3, 0);
    auto y = tm_window(5, 9);
    auto z = sum2d_window(zero, y);
    for (int g = 0; g < 4; ++g)
        for (int h = 5; h <= 9; ++h) CHECK(z.at({g, h}) == y.at({h}));
}

TEST_CASE("one dimensional witnesses") {
    auto w = tm_window(-256, 256);
    CHECK(tm_offsets(1).size() == 9);
    CHECK(verify_witness(w, {1}, tm_offsets(1)));
    CHECK_FALSE(verify_witness(constant_window(-50, 50, 0), {1}, tm_offsets(1)));
    for (int s = 1; s <= 8; ++s)
        for (int sign : {1, -1}) {
            auto win = tm_window(-64 * s - 64, 64 * s + 64);
            auto r = check_witness(win, {sign * s}, tm_offsets(s));
            CHECK(r.holds);
            CHECK(r.checked > 0);
        }
    // A too-small offset set fails somewhere.
    CHECK_FALSE(verify_witness(w, {3}, {{0}}));
    CHECK_THROWS(verify_witness(tm_window(0, 5), {1}, tm_offsets(4)));
}

TEST_CASE("enhanced witnesses") {
    auto w = tm_window(-600, 600);
    for (int s = 1; s <= 6; ++s) CHECK(verify_enhanced_witness(w, {s}, enhanced_offsets(s)));
    CHECK_FALSE(verify_enhanced_witness(constant_window(-80, 80, 1), {1}, enhanced_offsets(1)));
}

TEST_CASE("translation invariance") {
    auto w = tm_window(-300, 300);
    for (int s = 1; s <= 4; ++s) {
        bool a = verify_witness(w, {s}, tm_offsets(s));
        CHECK(verify_witness(w.translated({17}), {s}, tm_offsets(s)) == a);
    }
    auto bad = constant_window(0, 40, 0);
    CHECK(verify_witness(bad.translated({-9}), {1}, tm_offsets(1)) == verify_witness(bad, {1}, tm_offsets(1)));
}

TEST_CASE("product witnesses") {
    auto x = tm_window(-70, 70);
    auto w = sum2d_window(x, x);
    CHECK(verify_witness(w, {1, 1}, product_offsets(1, 1)));
    CHECK(verify_witness(w, {1, 0}, product_offsets(1, 0)));
    CHECK(verify_witness(w, {0, -2}, product_offsets(0, -2)));
    CHECK(verify_witness(w, {2, -1}, product_offsets(2, -1)));
    auto flat = sum2d_window(constant_window(-40, 40, 0), constant_window(-40, 40, 1));
    CHECK_FALSE(verify_witness(flat, {1, 1}, product_offsets(1, 1)));
}

TEST_CASE("orthogonality") {
    auto tm = tm_window(0, 120);
    CHECK(verify_orthogonal(tm, constant_window(0, 50, 0), tm_offsets(1)));
    CHECK_FALSE(verify_orthogonal(tm, tm, tm_offsets(1)));
}

TEST_CASE("window json") {
    auto w = sum2d_window(tm_window(0, 3), tm_window(2, 4));
    auto back = BitWindow::from_json(w.to_json());
    CHECK(back.bits == w.bits);
    CHECK(back.origin == w.origin);
    CHECK_THROWS(BitWindow::from_json(nlohmann::json{{"dim", 1}, {"origin", {0}}, {"extent", {2}}, {"bits", {0}}}));
}
