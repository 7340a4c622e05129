#include "agl/degeneracy.hpp"

#include "agl/errors.hpp"

#include <doctest.h>

#include <random>

using namespace agl;

namespace {

// Naive rational Gaussian elimination, kept independent of the library's
// fraction-free path, for cross-checking rank decisions.
std::size_t naive_rank(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][c].is_zero()) continue;
            const Rational f = m[i][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

MultiPoly random_sparse(std::mt19937& rng, std::size_t nvars) {
    std::uniform_int_distribution<int> terms(1, 5), coeff(-4, 4);
    std::uniform_int_distribution<unsigned> exp(0, 3);
    MultiPoly p(nvars);
    const int t = terms(rng);
    for (int i = 0; i < t; ++i) {
        MultiPoly::Exponents e(nvars);
        for (auto& x : e) x = exp(rng);
        int c = coeff(rng);
        if (c == 0) c = 2;
        p.set_coeff(e, p.coeff(e) + Rational(c));
    }
    return p;
}

} // namespace

TEST_CASE("ga degeneracy examples") {
    CHECK_FALSE(ga_degeneracy(MultiPoly::parse("xy + yz + zx")).has_value());

    const auto v = ga_degeneracy(MultiPoly::parse("x + y", 2));
    REQUIRE(v.has_value());
    REQUIRE(v->size() == 2);
    CHECK((*v)[0] == -(*v)[1]);
    CHECK(translation_invariance_certificate(MultiPoly::parse("x + y", 2), *v));

    CHECK_FALSE(ga_degeneracy(MultiPoly::parse("X2X3 - X1 + 1")).has_value());
    CHECK_THROWS_AS(ga_degeneracy(MultiPoly::parse("5", 2)), ConstantPolynomial);
}

TEST_CASE("gm degeneracy examples") {
    CHECK(gm_degeneracy(MultiPoly::parse("X2X3 - X1 + 1")));
    CHECK_FALSE(gm_degeneracy(MultiPoly::parse("xy + yz + zx")));
    CHECK(gm_degeneracy(MultiPoly::parse("x1x2", 2)));
    CHECK_THROWS_AS(gm_degeneracy(MultiPoly(3)), ZeroPolynomial);
}

TEST_CASE("hypersurface degree") {
    CHECK(hypersurface_degree(MultiPoly::parse("X2X3 - X1 + 1")) == 3);
    CHECK(hypersurface_degree(MultiPoly::parse("x^3y + y^2", 2)) == 5);
    CHECK(hypersurface_degree(MultiPoly::constant(3, Rational(9))) == 0);
}

TEST_CASE("translation invariance certificate") {
    CHECK(translation_invariance_certificate(MultiPoly::parse("x + y", 2), {Rational(1), Rational(-1)}));
    CHECK_FALSE(translation_invariance_certificate(MultiPoly::parse("xy + yz + zx"), {Rational(1), Rational(0), Rational(0)}));
    CHECK_THROWS_AS(translation_invariance_certificate(MultiPoly::parse("x + y", 2), {Rational(1)}), DimensionMismatch);
    CHECK_THROWS_AS(translation_invariance_certificate(MultiPoly::parse("x + y", 2), {Rational(0), Rational(0)}),
                    std::invalid_argument);
}

TEST_CASE("every returned direction certifies") {
    std::mt19937 rng(31);
    int directions_seen = 0;
    for (int i = 0; i < 40; ++i) {
        const std::size_t g = 2 + (i % 3);
        MultiPoly p = random_sparse(rng, g);
        if (i % 3 == 0 && g >= 2) {
            // Plant degeneracy: compose a univariate in (x1 + x2).
            const MultiPoly s = MultiPoly::variable(g, 0) + MultiPoly::variable(g, 1);
            p = s * s + s.scaled(Rational(3));
        }
        if (p.is_constant()) continue;
        if (const auto v = ga_degeneracy(p)) {
            ++directions_seen;
            CHECK(translation_invariance_certificate(p, *v));
        }
    }
    CHECK(directions_seen > 0);
}

TEST_CASE("gm rank contract against a naive oracle") {
    std::mt19937 rng(37);
    for (int i = 0; i < 20; ++i) {
        const std::size_t g = 2 + (i % 3);
        const MultiPoly p = random_sparse(rng, g);
        std::vector<std::vector<Rational>> rows;
        for (const auto& [e, c] : p.terms()) {
            std::vector<Rational> row;
            for (auto x : e) row.push_back(Rational(static_cast<long>(x)));
            rows.push_back(std::move(row));
        }
        CHECK(gm_degeneracy(p) == (naive_rank(rows) < g));
    }
}
