#include "agl/multipoly.hpp"

#include <doctest.h>

#include <random>

using namespace agl;

namespace {

MultiPoly random_sparse(std::mt19937& rng, std::size_t nvars, int max_terms, unsigned max_exp) {
    std::uniform_int_distribution<int> terms(1, max_terms), coeff(-5, 5);
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    MultiPoly p(nvars);
    const int t = terms(rng);
    for (int i = 0; i < t; ++i) {
        MultiPoly::Exponents e(nvars);
        for (auto& x : e) x = exp(rng);
        int c = coeff(rng);
        if (c == 0) c = 1;
        p.set_coeff(e, p.coeff(e) + Rational(c));
    }
    return p;
}

} // namespace

TEST_CASE("parsing the term grammar") {
    const auto p = MultiPoly::parse("x*y + y*z + z*x");
    CHECK(p.num_vars() == 3);
    CHECK(p.terms().size() == 3);
    CHECK(p.coeff({1, 1, 0}) == Rational(1));

    // Juxtaposition and explicit indices mean the same thing.
    CHECK(MultiPoly::parse("xy + yz + zx") == p);
    CHECK(MultiPoly::parse("x1x2 + x2x3 + x3x1") == p);

    const auto q = MultiPoly::parse("X2X3 - X1 + 1");
    CHECK(q.num_vars() == 3);
    CHECK(q.coeff({0, 1, 1}) == Rational(1));
    CHECK(q.coeff({1, 0, 0}) == Rational(-1));
    CHECK(q.coeff({0, 0, 0}) == Rational(1));

    const auto r = MultiPoly::parse("-3/2*x^2 + x - 5", 1);
    CHECK(r.coeff({2}) == Rational(Integer(-3), Integer(2)));
    CHECK(r.coeff({1}) == Rational(1));
    CHECK(r.coeff({0}) == Rational(-5));

    CHECK(MultiPoly::parse("2x - x - x").is_zero());
    CHECK_THROWS_AS(MultiPoly::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(MultiPoly::parse("x +"), std::invalid_argument);
    CHECK_THROWS_AS(MultiPoly::parse("q"), std::invalid_argument);
    CHECK_THROWS_AS(MultiPoly::parse("x3", 2), std::invalid_argument);
}

TEST_CASE("printing round-trips through the parser") {
    std::mt19937 rng(3);
    for (int i = 0; i < 30; ++i) {
        const auto p = random_sparse(rng, 3, 5, 4);
        if (p.is_zero()) continue;
        CHECK(MultiPoly::parse(p.str(), 3) == p);
    }
}

TEST_CASE("evaluation and degrees") {
    const auto p = MultiPoly::parse("x^3*y + y^2");
    CHECK(p.degree_in(0) == 3);
    CHECK(p.degree_in(1) == 2);
    CHECK(p.total_degree() == 4);
    CHECK(p.eval({Rational(2), Rational(3)}) == Rational(33));
    CHECK(MultiPoly::constant(2, Rational(5)).eval({Rational(1), Rational(1)}) == Rational(5));
}

TEST_CASE("partial derivatives satisfy the product rule") {
    std::mt19937 rng(17);
    for (int i = 0; i < 25; ++i) {
        const auto p = random_sparse(rng, 3, 4, 3);
        const auto q = random_sparse(rng, 3, 4, 3);
        for (std::size_t v = 0; v < 3; ++v) {
            const auto lhs = (p * q).partial(v);
            const auto rhs = p * q.partial(v) + q * p.partial(v);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("substitution and univariate extraction") {
    const auto p = MultiPoly::parse("y^2 - x", 2);
    const auto at4 = p.substitute(0, Rational(4));
    const auto coeffs = at4.univariate_coeffs(1);
    REQUIRE(coeffs.size() == 3);
    CHECK(coeffs[0] == Rational(-4));
    CHECK(coeffs[1] == Rational(0));
    CHECK(coeffs[2] == Rational(1));
}

TEST_CASE("shift by direction expands exactly") {
    // P = x + y is constant along (1, -1): P(x + t, y - t) - P = 0.
    const auto p = MultiPoly::parse("x + y", 2);
    const auto shifted = p.shift_by_direction({Rational(1), Rational(-1)});
    CHECK(shifted == p.widen(3));

    // P = x^2: P(x + t v) = x^2 + 2 t v x + t^2 v^2.
    const auto q = MultiPoly::parse("x^2", 1);
    const auto s = q.shift_by_direction({Rational(3)});
    CHECK(s.coeff({2, 0}) == Rational(1));
    CHECK(s.coeff({1, 1}) == Rational(6));
    CHECK(s.coeff({0, 2}) == Rational(9));
}
