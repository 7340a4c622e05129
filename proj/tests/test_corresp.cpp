#include "agl/correspondence.hpp"

#include "agl/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace agl;

namespace {

const GroupDescriptor ga = GroupDescriptor::additive();
const GroupDescriptor gm = GroupDescriptor::multiplicative();

FiniteSet mul_set(const std::vector<Rational>& v) {
    std::vector<GroupElement> e;
    for (const auto& x : v) e.push_back(GroupElement::mul(x));
    return FiniteSet::from_elements(gm, e);
}

FiniteSet add_set(const std::vector<Rational>& v) {
    std::vector<GroupElement> e;
    for (const auto& x : v) e.push_back(GroupElement::add(x));
    return FiniteSet::from_elements(ga, e);
}

} // namespace

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(Correspondence::graph(gm, ga, MultiPoly::parse("3", 1)), std::invalid_argument);
    CHECK_THROWS_AS(Correspondence::graph(GroupDescriptor::elliptic(0, 1), ga, MultiPoly::parse("x", 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(Correspondence::coord_proj(gm, CoordAxis::X), std::invalid_argument);
    CHECK_THROWS_AS(Correspondence::implicit(gm, gm, MultiPoly::parse("x^2 - 1", 2)), std::invalid_argument);
}

TEST_CASE("fiber examples") {
    const auto sq = Correspondence::graph(gm, ga, MultiPoly::parse("x^2 + 1", 1));
    CHECK(sq.fiber(GroupElement::mul(2)) == add_set({5}));

    const auto root = Correspondence::square_shift(gm, Rational(0));
    CHECK(root.fiber(GroupElement::mul(4)) == add_set({2, -2}));
    CHECK(root.fiber(GroupElement::mul(2)).empty());

    const auto shifted_root = Correspondence::square_shift(ga, Rational(3));
    CHECK(shifted_root.fiber(GroupElement::add(4)) == add_set({-1, -5}));
    CHECK(shifted_root.fiber(GroupElement::add(0)) == add_set({-3}));

    const auto e = GroupDescriptor::elliptic(0, 1);
    const auto px = Correspondence::coord_proj(e, CoordAxis::X);
    CHECK(px.fiber(GroupElement::ec_affine(2, 3)) == add_set({2}));
    CHECK(px.fiber(GroupElement::ec_infinity()).empty());

    // A graph into Gm drops a zero value: the fiber point is not in the group.
    const auto to_gm = Correspondence::graph(gm, gm, MultiPoly::parse("x - 1", 1));
    CHECK(to_gm.fiber(GroupElement::mul(1)).empty());

    CHECK_THROWS_AS(sq.fiber(GroupElement::add(2)), MixedGroups);
}

TEST_CASE("image examples") {
    const auto e = GroupDescriptor::elliptic(0, 1);
    const auto px = Correspondence::coord_proj(e, CoordAxis::X);
    const auto pts = FiniteSet::from_elements(
        e, {GroupElement::ec_affine(2, 3), GroupElement::ec_affine(2, -3), GroupElement::ec_affine(0, 1)});
    CHECK(px.image(pts) == add_set({2, 0}));

    const auto cube = Correspondence::graph(gm, gm, MultiPoly::parse("x^3", 1));
    CHECK(cube.image(mul_set({1, 2, 3})) == mul_set({1, 8, 27}));

    const auto rel = Correspondence::implicit(gm, gm, MultiPoly::parse("y^2 - x", 2));
    CHECK(rel.image(mul_set({1, 4, 2})) == mul_set({1, -1, 2, -2}));
}

TEST_CASE("fibers land on the target group") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> val(1, 80);
    const auto rel = Correspondence::implicit(gm, gm, MultiPoly::parse("y^2 - x", 2));
    const auto root = Correspondence::square_shift(gm, Rational(Integer(1), Integer(2)));
    for (int i = 0; i < 40; ++i) {
        const auto p = GroupElement::mul(Rational(val(rng)));
        for (const auto& f : rel.fiber(p)) CHECK(on_group(gm, f));
        for (const auto& f : root.fiber(p)) CHECK(on_group(ga, f));
    }
}

TEST_CASE("image is independent of the thread count") {
    std::vector<Rational> vals;
    for (long i = 1; i <= 40; ++i) vals.push_back(Rational(i * i));
    const auto a = mul_set(vals);
    const auto root = Correspondence::square_shift(gm, Rational(1));
    CHECK(root.image(a, {}, 1) == root.image(a, {}, 4));
}

TEST_CASE("image cardinality bound |C(A)| <= d_source |A|") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<long> val(1, 200);
    const auto rel = Correspondence::implicit(gm, gm, MultiPoly::parse("y^2 - x", 2));
    const auto cube = Correspondence::graph(gm, gm, MultiPoly::parse("x^3 - x + 1", 1));
    for (int i = 0; i < 20; ++i) {
        std::vector<Rational> vals;
        for (int k = 0; k < 15; ++k) vals.push_back(Rational(val(rng)));
        const auto a = mul_set(vals);
        CHECK(rel.image(a).size() <= rel.d_source() * a.size());
        CHECK(cube.image(a).size() <= cube.d_source() * a.size());
    }
}

TEST_CASE("degree formula") {
    for (unsigned d = 1; d <= 5; ++d) {
        MultiPoly phi = MultiPoly::variable(1, 0);
        for (unsigned k = 1; k < d; ++k) phi = phi * MultiPoly::variable(1, 0);
        phi = phi + MultiPoly::constant(1, Rational(1)); // x^d + 1, degree d
        CHECK(Correspondence::graph(gm, gm, phi).degree() == d + 1);
    }
    const auto e = GroupDescriptor::elliptic(0, 1);
    CHECK(Correspondence::coord_proj(e, CoordAxis::X).degree() == 3);
    CHECK(Correspondence::coord_proj(e, CoordAxis::Y).degree() == 4);
    CHECK(Correspondence::graph(gm, ga, MultiPoly::parse("x", 1)).degree() == 2);
    CHECK(Correspondence::square_shift(gm, Rational(0)).degree() == 3);
    CHECK(Correspondence::implicit(gm, gm, MultiPoly::parse("y^2 - x", 2)).degree() == 3);
}

TEST_CASE("subgroup-translate classification") {
    CHECK(Correspondence::graph(gm, gm, MultiPoly::parse("5x^3", 1)).is_subgroup_translate());
    CHECK_FALSE(Correspondence::graph(gm, gm, MultiPoly::parse("x + 1", 1)).is_subgroup_translate());
    CHECK_FALSE(Correspondence::graph(gm, ga, MultiPoly::parse("x^2", 1)).is_subgroup_translate());
    CHECK(Correspondence::graph(ga, ga, MultiPoly::parse("2x + 7", 1)).is_subgroup_translate());
    CHECK_FALSE(Correspondence::graph(ga, ga, MultiPoly::parse("x^2", 1)).is_subgroup_translate());
    CHECK_FALSE(Correspondence::coord_proj(GroupDescriptor::elliptic(0, 1), CoordAxis::X).is_subgroup_translate());
    CHECK_FALSE(Correspondence::square_shift(gm, Rational(1)).is_subgroup_translate());
    CHECK_THROWS_AS(Correspondence::implicit(gm, gm, MultiPoly::parse("y^2 - x", 2)).is_subgroup_translate(),
                    Unsupported);
}

TEST_CASE("graph images distribute over unions") {
    const auto phi = Correspondence::graph(gm, ga, MultiPoly::parse("x^2 - 3x", 1));
    const auto a = mul_set({1, 2, 3, 5});
    const auto b = mul_set({2, 7, 11});
    std::vector<GroupElement> joint(a.elements());
    joint.insert(joint.end(), b.elements().begin(), b.elements().end());
    const auto u = FiniteSet::from_elements(gm, joint);
    const auto img = phi.image(u);
    for (const auto& x : phi.image(a)) CHECK(img.contains(x));
    for (const auto& x : phi.image(b)) CHECK(img.contains(x));
    CHECK(img.size() <= phi.image(a).size() + phi.image(b).size());
}

TEST_CASE("rational root finding") {
    // 6y^3 - y^2 - 5y + ... pick (2y - 1)(3y + 2)(y - 5) = 6y^3 - 17y^2 - 26y + 10... compute directly instead:
    const auto p = MultiPoly::parse("6y^3 - 5y^2 - 2y + 1", 2).substitute(0, Rational(1));
    // roots of 6t^3 - 5t^2 - 2t + 1: t = 1, t = 1/3, t = -1/2
    const auto roots = rational_roots(p.univariate_coeffs(1));
    REQUIRE(roots.size() == 3);
    CHECK(std::find(roots.begin(), roots.end(), Rational(1)) != roots.end());
    CHECK(std::find(roots.begin(), roots.end(), Rational(Integer(1), Integer(3))) != roots.end());
    CHECK(std::find(roots.begin(), roots.end(), Rational(Integer(-1), Integer(2))) != roots.end());

    CHECK(rational_roots({Rational(2), Rational(0), Rational(1)}).empty()); // y^2 + 2
    const auto zero_root = rational_roots({Rational(0), Rational(0), Rational(1)});
    CHECK(zero_root == std::vector<Rational>{Rational(0)});
    CHECK_THROWS_AS(rational_roots({Rational(0)}), std::invalid_argument);
}

TEST_CASE("factorization budget is loud") {
    // The constant term is a product of two large Mersenne primes; a tiny
    // budget cannot factor it.
    const Integer huge = (Integer(1) << 89) - 1;
    const Integer huge2 = (Integer(1) << 107) - 1;
    MultiPoly rel(2);
    rel.set_coeff({0, 3}, Rational(1));
    rel.set_coeff({1, 0}, Rational(Integer(huge * huge2)));
    const auto c = Correspondence::implicit(gm, gm, rel);
    FactorBudget tiny{1000, 8};
    CHECK_THROWS_AS(c.fiber(GroupElement::mul(1), tiny), FactorizationBudgetExceeded);
}

TEST_CASE("reducible relations with infinite fibers are refused") {
    // (x - 1)(y - 1) = 0 has an infinite fiber over x = 1.
    const auto c = Correspondence::implicit(gm, gm, MultiPoly::parse("xy - x - y + 1", 2));
    CHECK_THROWS_AS(c.fiber(GroupElement::mul(1)), Unsupported);
    CHECK(c.fiber(GroupElement::mul(2)) == mul_set({1}));
}
