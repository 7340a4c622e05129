#pragma once

#include "agl/factor.hpp"
#include "agl/finite_set.hpp"
#include "agl/multipoly.hpp"

#include <string>
#include <vector>

namespace agl {

enum class CoordAxis { X, Y };

/**
 * Algebraic correspondence between two 1-dimensional groups, evaluated
 * exactly over Q.  Fibers return the rational points only; a complex fiber
 * with no rational point comes back empty (the rationality contract of this
 * module).
 *
 * Variants:
 *   Graph        the closure of { (x, phi(x)) } for a non-constant
 *                univariate phi; source and target are Ga or Gm.
 *   CoordProj    (P, x(P)) or (P, y(P)) from an elliptic curve to Ga.
 *   SquareShift  { (x, z) : (u + z)^2 = x }, target Ga.
 *   Implicit     { (x, y) : P(x, y) = 0 } for a bivariate P depending on
 *                both variables.
 */
class Correspondence {
public:
    enum class Kind { Graph, CoordProj, SquareShift, Implicit };

    static Correspondence graph(const GroupDescriptor& source, const GroupDescriptor& target, MultiPoly phi);
    static Correspondence coord_proj(const GroupDescriptor& curve, CoordAxis axis);
    static Correspondence square_shift(const GroupDescriptor& source, const Rational& u);
    static Correspondence implicit(const GroupDescriptor& source, const GroupDescriptor& target, MultiPoly relation);

    Kind kind() const { return kind_; }
    const GroupDescriptor& source() const { return source_; }
    const GroupDescriptor& target() const { return target_; }
    /// Generic fiber size over a source point / over a target point.
    unsigned d_source() const { return d_source_; }
    unsigned d_target() const { return d_target_; }
    const MultiPoly& poly() const { return poly_; }
    CoordAxis axis() const { return axis_; }
    const Rational& shift() const { return shift_; }

    /**
     * All rational target elements related to p.  May be empty (no rational
     * point on the fiber).  Implicit fibers search rational roots with the
     * given factorization budget and can throw FactorizationBudgetExceeded.
     */
    FiniteSet fiber(const GroupElement& p, const FactorBudget& budget = {}) const;

    /// Union of fibers over A; |image| <= d_source * |A|.
    FiniteSet image(const FiniteSet& a, const FactorBudget& budget = {}, unsigned threads = 1) const;

    /**
     * Degree under the product line bundle:
     * d_source * deg(target closure) + d_target * deg(source closure); every
     * ambient closure here (P^1, or the curve with its origin bundle) has
     * degree 1.
     */
    unsigned degree() const;

    /**
     * Whether the correspondence is a translate of an algebraic subgroup:
     * a Gm->Gm graph iff phi = c x^n; a Ga->Ga graph iff phi is affine
     * linear; mixed-group graphs never (dominance rules out constants);
     * coordinate projections and square shifts never.  Throws Unsupported for
     * Implicit, where no decision procedure is available.
     */
    bool is_subgroup_translate() const;

    std::string str() const;

private:
    Correspondence(Kind k, GroupDescriptor s, GroupDescriptor t)
        : kind_(k), source_(std::move(s)), target_(std::move(t)) {}

    Kind kind_;
    GroupDescriptor source_;
    GroupDescriptor target_;
    MultiPoly poly_{1};
    CoordAxis axis_ = CoordAxis::X;
    Rational shift_ = Rational(0);
    unsigned d_source_ = 1;
    unsigned d_target_ = 1;
};

/**
 * C_1(A) + ... + C_g(A): the sumset, in the common target group, of the
 * correspondence images.  Extensionally this is the projection of the sum
 * variety over A^g.  Throws MixedGroups on inconsistent groups and
 * IrrationalFiber when some image over a non-empty A is empty (the sum then
 * exists over C but has no rational representative).
 */
FiniteSet image_sum(const std::vector<Correspondence>& cs, const FiniteSet& a,
                    const FactorBudget& budget = {}, unsigned threads = 1);

/// Rational roots of c0 + c1 y + ... + cd y^d (exact; factorization budgeted).
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs, const FactorBudget& budget = {});

} // namespace agl
