#pragma once

#include "agl/rational.hpp"

#include <string>

namespace agl {

enum class GroupKind { Additive, Multiplicative, Elliptic };

/**
 * One of the three kinds of connected 1-dimensional algebraic groups over Q:
 * the additive group, the multiplicative group, or an elliptic curve
 * y^2 = x^3 + a x + b in Weierstrass form.
 */
class GroupDescriptor {
public:
    static GroupDescriptor additive() { return GroupDescriptor(GroupKind::Additive, 0, 0); }
    static GroupDescriptor multiplicative() { return GroupDescriptor(GroupKind::Multiplicative, 0, 0); }
    /// Throws std::invalid_argument if the curve is singular (4a^3 + 27b^2 = 0).
    static GroupDescriptor elliptic(const Rational& a, const Rational& b);

    GroupKind kind() const { return kind_; }
    bool is_elliptic() const { return kind_ == GroupKind::Elliptic; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    friend bool operator==(const GroupDescriptor& g, const GroupDescriptor& h) {
        return g.kind_ == h.kind_ && g.a_ == h.a_ && g.b_ == h.b_;
    }
    friend bool operator!=(const GroupDescriptor& g, const GroupDescriptor& h) { return !(g == h); }

    std::string str() const;

private:
    GroupDescriptor(GroupKind k, Rational a, Rational b) : kind_(k), a_(std::move(a)), b_(std::move(b)) {}
    GroupKind kind_;
    Rational a_, b_;
};

enum class ElemKind { Add, Mul, EcInfinity, EcAffine };

/**
 * Tagged element of one of the three group kinds.  Elements are plain values;
 * whether an element actually satisfies its membership invariant (non-zero for
 * the multiplicative group, on-curve for elliptic points) is checked by
 * on_group, not by the constructor-like factories below.
 */
class GroupElement {
public:
    static GroupElement add(Rational v) { return GroupElement(ElemKind::Add, std::move(v), 0); }
    static GroupElement mul(Rational v) { return GroupElement(ElemKind::Mul, std::move(v), 0); }
    static GroupElement ec_infinity() { return GroupElement(ElemKind::EcInfinity, 0, 0); }
    static GroupElement ec_affine(Rational x, Rational y) { return GroupElement(ElemKind::EcAffine, std::move(x), std::move(y)); }

    ElemKind kind() const { return kind_; }
    bool is_infinity() const { return kind_ == ElemKind::EcInfinity; }

    /// Field value of an Add/Mul element.
    const Rational& value() const;
    const Rational& x() const;
    const Rational& y() const;

    friend bool operator==(const GroupElement& p, const GroupElement& q) {
        return p.kind_ == q.kind_ && p.x_ == q.x_ && p.y_ == q.y_;
    }
    friend bool operator!=(const GroupElement& p, const GroupElement& q) { return !(p == q); }

    std::string str() const;

private:
    GroupElement(ElemKind k, Rational x, Rational y) : kind_(k), x_(std::move(x)), y_(std::move(y)) {}
    ElemKind kind_;
    Rational x_, y_;
};

/**
 * Deterministic total order used for set dedup: variant tag first (EcInfinity
 * before EcAffine), then lexicographic on (numerator, denominator) pairs.
 */
int canonical_cmp(const GroupElement& p, const GroupElement& q);

struct CanonicalLess {
    bool operator()(const GroupElement& p, const GroupElement& q) const { return canonical_cmp(p, q) < 0; }
};

/// Identity element of the group.
GroupElement identity_element(const GroupDescriptor& g);

/// True iff p satisfies the membership invariant of g (exact check).
bool on_group(const GroupDescriptor& g, const GroupElement& p);

/**
 * The group operation: field addition on the additive group, field
 * multiplication on the multiplicative group, chord-tangent addition on an
 * elliptic curve (with the usual completions: doubling a 2-torsion point and
 * adding P to -P both give the point at infinity).
 *
 * Throws MixedGroups if an operand's variant does not match g.
 */
GroupElement op(const GroupDescriptor& g, const GroupElement& p, const GroupElement& q);

/// Inverse for the group law of g; op(g, p, inverse(g, p)) = identity.
GroupElement inverse(const GroupDescriptor& g, const GroupElement& p);

/// n-fold iterate of op via double-and-add; negative n through the inverse.
GroupElement scalar_mul(const GroupDescriptor& g, long long n, const GroupElement& p);

} // namespace agl
