#include <doctest.h>

#include <random>

#include "lie4/qmatrix.hpp"

using namespace lie4;

namespace {

QMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    QMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

QMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = make_rat(Int(static_cast<long>(rng() % 21) - 10),
                                  Int(1 + static_cast<long>(rng() % 4)));
    return m;
}

} // namespace

TEST_CASE("rat parsing and canonical form") {
    CHECK(rat_from_string("6/4") == make_rat(3, 2));
    CHECK(rat_from_string("-10/5") == Rat(-2));
    CHECK(rat_from_string(" 7 ") == Rat(7));
    CHECK(make_rat(0, 5) == Rat(0));
    CHECK(to_string(make_rat(-6, 4)) == "-3/2");
    CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
}

TEST_CASE("rref of identity") {
    QMatrix id = QMatrix::identity(3);
    RrefResult r = rref(id);
    CHECK(r.R == id);
    CHECK(r.rank == 3);
    CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("rref of proportional rows") {
    RrefResult r = rref(from_rows({{1, 2}, {2, 4}}));
    CHECK(r.rank == 1);
    CHECK(r.pivot_columns == std::vector<std::size_t>{0});
    CHECK(r.R.at(0, 0) == 1);
    CHECK(r.R.at(0, 1) == 2);
    CHECK(r.R.at(1, 0) == 0);
    CHECK(r.R.at(1, 1) == 0);
}

TEST_CASE("rref handles the empty matrix") {
    RrefResult r = rref(QMatrix(0, 0));
    CHECK(r.rank == 0);
    CHECK(r.pivot_columns.empty());
}

TEST_CASE("nullspace of identity is empty") {
    CHECK(nullspace(QMatrix::identity(2)).empty());
}

TEST_CASE("nullspace of [[1,1]] with leading-entry convention") {
    auto basis = nullspace(from_rows({{1, 1}}));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] == 1);
    CHECK(basis[0][1] == -1);
}

TEST_CASE("nullspace vectors satisfy Mv = 0 exactly and count cols - rank") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 7;
        QMatrix m = random_matrix(rng, r, c);
        auto basis = nullspace(m);
        CHECK(basis.size() == c - rank(m));
        for (const auto& v : basis) {
            for (std::size_t i = 0; i < r; ++i) {
                Rat dot = 0;
                for (std::size_t j = 0; j < c; ++j) dot += m.at(i, j) * v[j];
                CHECK(dot == 0);
            }
            // leading-one convention
            for (std::size_t j = 0; j < c; ++j) {
                if (v[j] != 0) {
                    CHECK(v[j] == 1);
                    break;
                }
            }
        }
    }
}

TEST_CASE("rref is idempotent and rank is invariant under row operations") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
        QMatrix m = random_matrix(rng, r, c);
        RrefResult first = rref(m);
        RrefResult second = rref(first.R);
        CHECK(first.R == second.R);
        CHECK(first.rank == second.rank);

        // permute rows and scale one row by a nonzero rational
        QMatrix p(r, c);
        std::vector<std::size_t> perm(r);
        for (std::size_t i = 0; i < r; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) p.at(i, j) = m.at(perm[i], j);
        const Rat scale = make_rat(3, 7);
        for (std::size_t j = 0; j < c; ++j) p.at(0, j) *= scale;
        CHECK(rank(p) == first.rank);
    }
}
