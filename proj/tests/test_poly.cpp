#include <doctest.h>

#include <random>

#include "lie4/grading.hpp"
#include "lie4/polynomial.hpp"
#include "lie4/structure.hpp"

using namespace lie4;

namespace {

Polynomial random_poly(const UniversePtr& u, std::mt19937_64& rng, int max_terms = 6,
                       int max_exp = 3) {
    std::vector<Term> ts;
    const int n = 1 + rng() % max_terms;
    for (int t = 0; t < n; ++t) {
        Monomial m;
        for (std::size_t v = 0; v < u->size(); ++v) {
            m.e[v] = static_cast<std::uint8_t>(rng() % (max_exp + 1));
            m.deg += m.e[v];
        }
        ts.push_back({m, Rat(static_cast<long>(rng() % 11) - 5)});
    }
    return Polynomial(u, std::move(ts));
}

Monomial random_monomial(std::size_t nvars, std::mt19937_64& rng, int max_exp = 4) {
    Monomial m;
    for (std::size_t v = 0; v < nvars; ++v) {
        m.e[v] = static_cast<std::uint8_t>(rng() % (max_exp + 1));
        m.deg += m.e[v];
    }
    return m;
}

} // namespace

TEST_CASE("order comparisons on pinned cases") {
    // grevlex: x^2 vs x*y in two variables
    Monomial x2 = Monomial::var(0, 2);
    Monomial xy = Monomial::var(0) * Monomial::var(1);
    CHECK(compare(MonomialOrder::grevlex(), x2, xy, 2) > 0);

    // lex: x vs y^3
    CHECK(compare(MonomialOrder::lex(), Monomial::var(0), Monomial::var(1, 3), 2) > 0);

    // block_elim(1) on (t, x): t vs x^5
    CHECK(compare(MonomialOrder::block_elim(1), Monomial::var(0), Monomial::var(1, 5),
                  2) > 0);
}

TEST_CASE("orders are total, multiplicative, with 1 minimal") {
    std::mt19937_64 rng(42);
    const std::vector<MonomialOrder> orders = {
        MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::block_elim(2)};
    for (const auto& ord : orders) {
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t n = 4;
            Monomial a = random_monomial(n, rng), b = random_monomial(n, rng),
                     c = random_monomial(n, rng);
            // antisymmetry + totality
            CHECK(compare(ord, a, b, n) == -compare(ord, b, a, n));
            CHECK((compare(ord, a, b, n) == 0) == (a == b));
            // transitivity
            if (compare(ord, a, b, n) <= 0 && compare(ord, b, c, n) <= 0)
                CHECK(compare(ord, a, c, n) <= 0);
            // translation invariance
            CHECK(compare(ord, a * c, b * c, n) == compare(ord, a, b, n));
            // 1 minimal
            CHECK(compare(ord, Monomial::one(), a, n) <= 0);
        }
    }
}

TEST_CASE("polynomial ring laws on random instances") {
    auto u = make_universe({"x", "y", "z"});
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial f = random_poly(u, rng), g = random_poly(u, rng),
                   h = random_poly(u, rng);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f * g == g * f);
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f - f == Polynomial(u));
    }
}

TEST_CASE("parse/print round trip and canonical form") {
    auto u = structure_universe();
    const std::string s = "a_124*a_131 - a_121*a_134 + 2*a_122^2";
    Polynomial p = parse_polynomial(u, s);
    CHECK(p.term_count() == 3);
    CHECK(parse_polynomial(u, p.to_string()) == p);
    // whitespace-insensitive
    CHECK(parse_polynomial(u, "a_124 * a_131-a_121*a_134+2 * a_122 ^ 2") == p);
    CHECK(parse_polynomial(u, "0*a_121").is_zero());
    CHECK(Polynomial(u).to_string() == "0");
    CHECK_THROWS_AS(parse_polynomial(u, "b_12"), std::invalid_argument);
}

TEST_CASE("substitute is a ring homomorphism") {
    auto u = make_universe({"x", "y"});
    auto w = make_universe({"s", "t"});
    std::mt19937_64 rng(99);
    std::vector<Polynomial> images = {random_poly(w, rng, 4, 2),
                                      random_poly(w, rng, 4, 2)};
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial f = random_poly(u, rng, 4, 2), g = random_poly(u, rng, 4, 2);
        CHECK(substitute(f * g, images) == substitute(f, images) * substitute(g, images));
        CHECK(substitute(f + g, images) == substitute(f, images) + substitute(g, images));
    }
}

TEST_CASE("substitute: identity images leave f unchanged") {
    auto u = make_universe({"x", "y", "z"});
    std::vector<Polynomial> id;
    for (std::size_t i = 0; i < 3; ++i) id.push_back(Polynomial::variable(u, i));
    std::mt19937_64 rng(3);
    Polynomial f = random_poly(u, rng);
    CHECK(substitute(f, id) == f);
}

TEST_CASE("substitute C2 chart: a_124 maps to k5") {
    const StructureTensor& chart = c2_birational();
    auto pu = c2_param_universe();
    CHECK(chart.at(3, 0) == Polynomial::variable(pu, *pu->index_of("k5")));
    CHECK(chart.at(3, 1) == Polynomial::variable(pu, *pu->index_of("k6")));
}

TEST_CASE("theta entries vanish at the A_4 base point") {
    // theta_11 evaluated on the constant tensor A_4: a_121 = a_344 = 1.
    auto u = structure_universe();
    std::vector<Rat> point(24, Rat(0));
    point[structure_var_index(1, 2, 1)] = 1;
    point[structure_var_index(3, 4, 4)] = 1;
    for (const Polynomial& th : jacobi_quadrics())
        CHECK(th.evaluate(point) == 0);
}

TEST_CASE("normal_form examples") {
    auto u = make_universe({"x", "y"});
    Polynomial x = Polynomial::variable(u, 0), y = Polynomial::variable(u, 1);

    CHECK(normal_form(x * x, {x - y}, MonomialOrder::lex()) == y * y);
    Polynomial g = x * x + y;
    CHECK(normal_form(g, {g}, MonomialOrder::grevlex()).is_zero());
    Polynomial one = Polynomial::constant(u, 1);
    CHECK(normal_form(x * y, {x * x - one, y * y - one}, MonomialOrder::grevlex()) ==
          x * y);
}

TEST_CASE("normal_form is idempotent") {
    auto u = make_universe({"x", "y", "z"});
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial f = random_poly(u, rng);
        std::vector<Polynomial> G;
        for (int i = 0; i < 3; ++i) {
            Polynomial g = random_poly(u, rng, 3, 2);
            if (!g.is_zero()) G.push_back(g);
        }
        if (G.empty()) continue;
        Polynomial r = normal_form(f, G, MonomialOrder::grevlex());
        CHECK(normal_form(r, G, MonomialOrder::grevlex()) == r);
    }
}

TEST_CASE("multidegree of generators and inhomogeneous detection") {
    auto u = structure_universe();
    Polynomial a121 = Polynomial::variable(u, *u->index_of("a_121"));
    CHECK(multidegree(a121) == MultiDegree{0, 1, 0, 0});

    const PolyMatrix& th = jacobi_theta();
    CHECK(multidegree(th.at(0, 0)) == MultiDegree{1, 1, 1, -1});

    Polynomial mixed = Polynomial::variable(u, *u->index_of("a_122")) +
                       Polynomial::variable(u, *u->index_of("a_123"));
    CHECK(!multidegree(mixed).has_value());
}

TEST_CASE("all 16 Jacobi quadrics are Z4-homogeneous") {
    for (const Polynomial& th : jacobi_quadrics()) {
        CHECK(multidegree(th).has_value());
        CHECK(th.is_homogeneous());
        CHECK(th.total_degree() == 2);
    }
}
