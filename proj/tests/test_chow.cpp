#include <doctest.h>

#include <random>

#include "lie4/chow.hpp"

using namespace lie4;

namespace {

TruncatedSeries random_series(std::mt19937_64& rng, bool unit) {
    TruncatedSeries s;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            s.at(i, j) = make_rat(Int(static_cast<long>(rng() % 9) - 4),
                                  Int(1 + static_cast<long>(rng() % 3)));
    if (unit && s.at(0, 0) == 0) s.at(0, 0) = 1;
    return s;
}

} // namespace

TEST_CASE("geometric series inverse") {
    const TruncatedSeries one = TruncatedSeries::constant(1);
    const TruncatedSeries x = TruncatedSeries::x();
    TruncatedSeries inv = (one - x).inverse();
    TruncatedSeries expect = one + x + x * x + x * x * x;
    CHECK(inv == expect);
    CHECK(one.inverse() == one);
    CHECK_THROWS_AS(TruncatedSeries().inverse(), std::invalid_argument);
}

TEST_CASE("ring laws and inverses on random series") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        TruncatedSeries a = random_series(rng, false), b = random_series(rng, false),
                        c = random_series(rng, false);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        TruncatedSeries u = random_series(rng, true);
        CHECK(u * u.inverse() == TruncatedSeries::constant(1));
    }
}

TEST_CASE("degree_c1 = 55 with the full expansion pinned") {
    CHECK(degree_c1() == 55);
    // inner coefficients of the expansion
    const TruncatedSeries one = TruncatedSeries::constant(1);
    const TruncatedSeries x = TruncatedSeries::x();
    const TruncatedSeries s =
        (one - TruncatedSeries::constant(3) * x) * (one - x).pow(10).inverse();
    CHECK(s.at(0, 0) == 1);
    CHECK(s.at(2, 0) == 25);
}

TEST_CASE("degree_c2 = 361 and its factor structure") {
    CHECK(degree_c2() == 361);

    const TruncatedSeries one = TruncatedSeries::constant(1);
    const TruncatedSeries x = TruncatedSeries::x(), y = TruncatedSeries::y();
    const TruncatedSeries two = TruncatedSeries::constant(2);

    // the bundle factor pulled back from the dual side is x-free
    const TruncatedSeries pulled = (one - two * y).pow(4) * (one - y).pow(17).inverse();
    for (int i = 1; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(pulled.at(i, j) == 0);

    // the twist factor at y = 0 is (1+x)^3
    const TruncatedSeries twist = (one + x - y).pow(4) * (one + x).inverse();
    TruncatedSeries cube = (one + x).pow(3);
    for (int i = 0; i < 4; ++i) CHECK(twist.at(i, 0) == cube.at(i, 0));
}
